#include "common.hpp"

TEST_CASE("q-Pochhammer") {
    Scalar a = S("q^3+2");
    CHECK(qpoch(a, Scalar::q(), 0) == Scalar(1));
    CHECK(qpoch(a, Scalar::q(), 2) == (Scalar(1) - a) * (Scalar(1) - a * Scalar::q()));
    CHECK(qpoch(a, Scalar::qpow(2), -1) == (Scalar(1) - a * Scalar::qpow(-2)).inv());
}

TEST_CASE("Gauss binomials") {
    CHECK(gauss_binom(5, 0) == Scalar(1));
    CHECK(gauss_binom(2, 1) == S("1+q"));
    CHECK(gauss_binom(4, 2).evald(1.0) == doctest::Approx(6));
    for (int k = 1; k <= 6; ++k)
        for (int j = 1; j < k; ++j)
            CHECK(gauss_binom(k, j) == gauss_binom(k - 1, j - 1) + Scalar::qpow(j) * gauss_binom(k - 1, j));
}

TEST_CASE("q-Gamma") {
    CHECK(qgamma(1) == Scalar(1));
    CHECK(qgamma(2) == Scalar(1));
    CHECK(qgamma(3) == S("1+q^2"));
}

TEST_CASE("basic hypergeometric series") {
    CHECK(rphi({S("q")}, {}, Scalar::qpow(2), S("q"), 0) == Scalar(1));
    double a = 0.7, x = 0.3, b = 0.25;
    double lhs = rphi_numeric({a}, {}, b, x, 60);
    CHECK(lhs == doctest::Approx(qpoch_inf(a * x, b) / qpoch_inf(x, b)).epsilon(1e-10));
}

TEST_CASE("Jackson integral") {
    CHECK(jackson({Scalar(1)}) == Scalar(1));
    // alpha = beta = 2: t(1 - q^2 t)
    Scalar lhs = jackson({Scalar(0), Scalar(1), -Scalar::qpow(2)});
    CHECK(lhs == (S("1+q^2") * S("1+q^2+q^4")).inv());
    CHECK(lhs == qgamma(2) * qgamma(2) / qgamma(4));
    for (int b = 1; b <= 5; ++b) {
        std::vector<Scalar> t(b, Scalar(0));
        t[b - 1] = Scalar(1);
        CHECK(jackson(t) == qgamma(b) / qgamma(b + 1));
    }
}

TEST_CASE("suite") { REQUIRE_REPORT(qspecial_check(5)); }
