#include "common.hpp"

TEST_CASE("zeta plane reordering") {
    for (int a = -1; a <= 1; ++a)
        for (int b = -1; b <= 1; ++b)
            for (int c = -1; c <= 1; ++c)
                for (int d = -1; d <= 1; ++d) CHECK(zeta_factor_engine(a, b, c, d) == zeta_factor(b, c));
}

TEST_CASE("eta star on generators") {
    TensorSeries e = eta_star(UMono{1, 0, 0, 0}, 2);
    TensorSeries want(2);
    want.add(0, {1, 0}, tword({"t[1,1]"}), Scalar(1));
    want.add(0, {0, 1}, tword({"t[2,1]"}), Scalar(1));
    CHECK(e == want);
    CHECK_THROWS_AS(eta_star(UMono{-1, 0, 1, 1}, 2), PenroseError);
}

TEST_CASE("constant term") {
    TensorSeries x(2);
    x.add(0, {-1, -1}, tword({"t[1,1]"}), Scalar(3));
    x.add(0, {1, -1}, tword({"t[1,2]"}), Scalar(1));
    auto ct = constant_term(x);
    CHECK(collapse(ct) == NCPoly::of(tword({"t[1,1]"}), Scalar(3)));
    auto lm = constant_term(x, CtMode::LeftMultiply);
    CHECK(collapse(lm) == NCPoly::of(tword({"t[1,1]"}), Scalar(3) * Scalar::q()));
}

TEST_CASE("lowest weight transform") {
    CHECK(penrose_transform(UMono{0, 0, 1, 1}, 0).at(0) ==
          NCPoly::of(tword({"t[2,3]i", "t[1,4]i"}), Scalar::qpow(-1)));
    REQUIRE_REPORT(penrose_aux_check(4));
    REQUIRE_REPORT(penrose_lowest_check(3));
}

TEST_CASE("homomorphism") { REQUIRE_REPORT(penrose_eta_check(3)); }
