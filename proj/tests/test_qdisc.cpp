#include "common.hpp"

static Presentation pol() { return catalog("pol_disc"); }
static Presentation fun() { return catalog("fun_disc"); }

TEST_CASE("radial functions") {
    auto A = pol();
    auto d = to_psi(A, A.mul(A.g("z"), A.g("z'")));
    REQUIRE(d.poly[0].size() == 2);
    CHECK(d.poly[0][0] == Scalar(1));
    CHECK(d.poly[0][1] == Scalar(-1));
    auto e = to_psi(A, P(A, "z^2*z'^2"));
    // (1-y)(1-q^-2 y)
    REQUIRE(e.poly[0].size() == 3);
    CHECK(e.poly[0][1] == -(Scalar(1) + Scalar::qpow(-2)));
    CHECK(e.poly[0][2] == Scalar::qpow(-2));
    auto F = fun();
    auto f = to_psi(F, F.g("f0"));
    CHECK(f.finite());
    CHECK(f.fin[0].size() == 1);
    CHECK(f.fin[0][0] == Scalar(1));
}

TEST_CASE("integrals") {
    auto F = fun();
    CHECK(lebesgue(to_psi(F, F.g("f0"))) == S("1-q^2"));
    CHECK(lebesgue(to_psi(F, F.mul(F.g("z"), F.g("f0")))).is_zero());
    NCPoly y = y_elem(F);
    CHECK(lebesgue(to_psi(F, y)) == S("1+q^2").inv());
    CHECK(inv_integral(to_psi(F, F.g("f0"))) == S("1-q^2"));
    auto T = action_table("fun_disc");
    CHECK(inv_integral(to_psi(F, act(Eg(1), F.g("f0"), T))).is_zero());
    CHECK_THROWS_AS(inv_integral(to_psi(F, y)), DiscError);
}

TEST_CASE("Fock representation") {
    auto A = pol();
    auto y = rep_matrix(A, y_elem(A), 6);
    for (int k = 0; k < 6; ++k) CHECK(y.r(k, k) == Scalar::qpow(2 * k));
    CHECK(rep_matrix(A, A.g("z'"), 4).r(0, 0).is_zero());
    auto rel = rep_matrix(A, P(A, "z'*z - q^2*z*z'"), 6);
    for (int k = 0; k < 5; ++k) CHECK(rel.r(k, k) == S("1-q^2"));
    REQUIRE_REPORT(rep_oracle_check(A, 5, 12));
    REQUIRE_REPORT(star_rep_check(A, 4, 12));
}

TEST_CASE("spherical functions") {
    CHECK(lambda_l(0).is_zero());
    CHECK(lambda_l(1) == S("1+q^-2"));
    CHECK(lambda_l(2.0, 0.999) == doctest::Approx(6).epsilon(1e-2));
    CHECK(phi(0, 3) == Scalar(1));
    CHECK(phi(2, 0) == Scalar(1));
    CHECK(phi(1, 1) == S("1+q^-2-q^2"));
    CHECK(harish_c(0) == Scalar(1));
    CHECK(harish_c(1) == S("1+q^2"));
    double r = phi(1, 40).evald(0.5) * std::pow(0.25, 40) / harish_c(1).evald(0.5);
    CHECK(std::abs(r - 1) < 1e-6);
}

TEST_CASE("box and eigenfunctions") {
    CHECK(radial_box({Scalar(1), Scalar(1), Scalar(1)})[1].is_zero());
    REQUIRE_REPORT(eigen_check({1, 2, 3}, 12));
    REQUIRE_REPORT(stokes_radial_check({Scalar(0), Scalar(1)}));
    REQUIRE_REPORT(stokes_radial_check({Scalar(0), Scalar(0), Scalar(1)}));
}

TEST_CASE("numerics") {
    auto b = spectral_bounds(200, 0.5);
    CHECK(b.min_eig >= 4.0 / 9 - 1e-9);
    CHECK(b.max_eig <= 4.0 + 1e-9);
    auto F = fun();
    auto f0 = to_psi(F, F.g("f0"));
    CHECK(green_residual(f0, 40, 40, 60, 0.5) < 1e-6);
    CHECK(green_residual(f0, 1, 40, 60, 0.5) > 1e-2);
    CHECK(fourier_roundtrip(f0, 0.5, 60, 400) < 1e-3);
}

TEST_CASE("Clifford filtration") {
    auto dims = clifford_graded_dims(4);
    CHECK(!dims.empty());
    for (auto& d : dims)
        if (d.level + d.degree <= 4) CHECK(d.clifford == d.forms);
}
