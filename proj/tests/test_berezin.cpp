#include "common.hpp"

static const Presentation& A() { return pol_disc_ref(); }

TEST_CASE("t-deformed normal ordering") {
    TPoly p = normal_order_t(A(), P(A(), "z'*z"), 2);
    CHECK(p.c[0] == A().normal_form(P(A(), "q^2*z*z' + 1 - q^2")));
    NCPoly y = NCPoly(1) - A().mul(A().g("z"), A().g("z'"));
    CHECK(p.c[1] == S("q^2*(1-q^2)") * A().mul(y, y));
    CHECK(normal_order_t(A(), A().g("z"), 3).c[0] == A().g("z"));
    CHECK(normal_order_t(A(), A().g("z"), 3).c[1].is_zero());
}

TEST_CASE("star product") {
    NCPoly z = A().g("z"), zs = A().g("z'"), one(1);
    CHECK(star(z, one, 3) == TPoly::constant(z, 3));
    CHECK(star(z, zs, 3) == TPoly::constant(A().mul(z, zs), 3));
    auto lhs = star_t([](auto& f, auto& g, int n) { return star(f, g, n); }, star(zs, z, 3), TPoly::constant(zs, 3));
    auto rhs = star_t([](auto& f, auto& g, int n) { return star(f, g, n); }, TPoly::constant(zs, 3), star(z, zs, 3));
    CHECK(lhs == rhs);
}

TEST_CASE("closed form agrees") {
    NCPoly z = A().g("z"), zs = A().g("z'"), zz = A().mul(z, zs);
    CHECK(star_closed(NCPoly(1), zz, 3) == TPoly::constant(zz, 3));
    CHECK(star_closed(zs, z, 2) == star(zs, z, 2));
    CHECK(star_closed(zz, zz, 1) == star(zz, zz, 1));
}

TEST_CASE("c_n series") {
    TSeries c1 = cn_series(1, CnMethod::Star, 4);
    TSeries expect = TSeries(4, {S("1-q^2"), Scalar(0)}) * TSeries(4, {Scalar(1), -Scalar::qpow(2)}).inverse();
    CHECK(c1 == expect);
    CHECK(cn_series(2, CnMethod::Star, 3)[0] == S("1-q^4"));
    CHECK(cn_series(3, CnMethod::Trivial, 3) == TSeries(3, S("1-q^6")));
    for (int n = 2; n <= 5; ++n)
        CHECK(cn_recurrence_holds(cn_series(n, CnMethod::Formula, 5), cn_series(n - 1, CnMethod::Formula, 5), n));
    CHECK(cn_series(3, CnMethod::Star, 3) == cn_series(3, CnMethod::Formula, 3));
}

TEST_CASE("reparametrization") {
    auto B = berezin_star(3);
    NCPoly z = A().g("z"), zs = A().g("z'");
    CHECK(reparametrize(B, TSeries::t(3), 3)(zs, z) == B(zs, z));
    TSeries two = TSeries::t(3).scaled(Scalar(2)), half = TSeries::t(3).scaled(Scalar::rational(1, 2));
    CHECK(reparametrize(reparametrize(B, two, 3), half, 3)(zs, z) == B(zs, z));
    TSeries c = TSeries(3, {Scalar(0), Scalar(1), Scalar(1)});
    TSeries got = cn_from(reparametrize(B, c, 3), 2);
    TSeries want = TSeries(3, S("1-q^4")) * (TSeries(3, Scalar(1)) - c.scaled(Scalar::qpow(4))).inverse();
    CHECK(got == want);
}

TEST_CASE("Bargmann norms") {
    CHECK(bargmann_norm_closed(0) == RatFunc(1));
    RatFunc s = RatFunc::var();
    CHECK(bargmann_norm_closed(1) == RatFunc(S("1-q^2")) / (RatFunc(1) - s * RatFunc(Scalar::qpow(2))));
    for (int m = 0; m <= 4; ++m) CHECK(bargmann_norm_closed(m) == bargmann_norm_integral(m));
    REQUIRE_REPORT(bargmann_check(5));
}

TEST_CASE("suites") {
    REQUIRE_REPORT(berezin_basics_check(3));
    REQUIRE_REPORT(berezin_assoc_check(3, 3));
    REQUIRE_REPORT(berezin_closed_check(2, 2));
}
