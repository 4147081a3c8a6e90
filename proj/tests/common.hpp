#pragma once
#include "doctest.h"
#include "qdom/parse.hpp"
#include "qdom/suites.hpp"

using namespace qdom;

inline Scalar S(const char* s) { return Scalar::parse(s); }
inline NCPoly P(const Presentation& A, const char* s) { return parse_expr(s, A); }

// a report must pass; print the first failure otherwise
#define REQUIRE_REPORT(r)                              \
    do {                                               \
        Report rr_ = (r);                              \
        INFO(rr_.suite << ": " << rr_.first_failure()); \
        CHECK(rr_.ok());                               \
    } while (0)
