#include "common.hpp"

TEST_CASE("wave operator") {
    CHECK(wave_op(NCPoly(1)).is_zero());
    NCPoly c = mat2_c();
    CHECK(wave_op(c) == NCPoly(S("q^-2+1")));
    auto& B = mat2_algebra();
    CHECK(wave_op(B.mul(c, c)) == bq(2) * c);
}

TEST_CASE("b_q") {
    CHECK(bq(0).is_zero());
    CHECK(bq(1) == S("q^-2+1"));
    CHECK(bq(2).evald(0.9999) == doctest::Approx(6).epsilon(1e-2));
    REQUIRE_REPORT(su22_bq_check(4));
}

TEST_CASE("kernel of the wave operator") {
    auto d1 = ladder_dims(1), d2 = ladder_dims(2), d3 = ladder_dims(3);
    CHECK(d1.total == 4);
    CHECK(d1.kernel == 4);
    CHECK(d2.total == 10);
    CHECK(d2.kernel == 9);
    CHECK(d3.total == 20);
    CHECK(d3.kernel == 16);
}

TEST_CASE("Faraut-Koranyi coefficients") {
    Scalar u = S("q^5+3");
    CHECK(fk_coeff(0, 0, u) == Scalar(1));
    CHECK(fk_coeff(1, 0, u) == S("1-q^4") / (Scalar(1) - u));
    CHECK(fk_coeff(1, 1, u) ==
          S("(1-q^4)*(1-q^2)") / ((Scalar(1) - u) * (Scalar(1) - u * Scalar::qpow(-2))));
    CHECK_THROWS_AS(fk_coeff(1, 0, Scalar(1)), Su22Error);
    REQUIRE_REPORT(su22_schur_check(4));
}

TEST_CASE("eigenvalues of y1, y2") {
    auto e0 = y_eigs(0, 0);
    CHECK(e0.y1.is_zero());
    CHECK(e0.y2.is_zero());
    auto e1 = y_eigs(1, 0);
    CHECK(e1.eigenvector);
    CHECK(e1.y1 == S("1-q^2"));
    CHECK(e1.y2.is_zero());
    auto e2 = y_eigs(1, 1);
    CHECK(e2.y1 == S("(1-q^2)*(1+q^-2)"));
    CHECK(e2.y2 == S("q^-2*(1-q^2)*(1-q^4)"));
    REQUIRE_REPORT(su22_yspec_check(2));
}
