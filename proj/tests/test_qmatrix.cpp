#include "common.hpp"

static Presentation cm(int m, int n) { return catalog("cmat", mat_params(m, n)); }

TEST_CASE("quantum minors") {
    auto A = cm(2, 2);
    CHECK(qminor({1}, {2}, A, 2, 2) == A.g("z[1,2]"));
    NCPoly c = qminor({1, 2}, {1, 2}, A, 2, 2);
    CHECK(c == A.normal_form(P(A, "z[1,1]*z[2,2] - q*z[1,2]*z[2,1]")));
    CHECK_THROWS_AS(qminor({1, 3}, {1, 2}, A, 2, 2), MatrixError);
    CHECK_THROWS_AS(qminor({1}, {1, 2}, A, 2, 2), MatrixError);
}

TEST_CASE("y from minors") {
    auto B = catalog("polmat", mat_params(1, 1));
    CHECK(det_y(1, 1) == NCPoly(1) - B.mul(B.g("z[1,1]"), B.g("z[1,1]'")));
    auto C = catalog("polmat", mat_params(2, 2));
    NCPoly y = det_y(2, 2);
    CHECK(C.normal_form(C.star_of(y)) == y);
    REQUIRE_REPORT(minors_y_check(2, 2));
}

TEST_CASE("partial derivatives") {
    auto A = cm(2, 2);
    NCPoly z11 = A.g("z[1,1]");
    CHECK(partial(A.g("z[2,1]"), 2, 1, 2, 2) == NCPoly(1));
    CHECK(partial(A.g("z[2,1]"), 1, 2, 2, 2).is_zero());
    CHECK(partial(A.mul(z11, z11), 1, 1, 2, 2) == A.g("z[1,1]", S("1+q^2")));
    REQUIRE_REPORT(partial_relations_check(2, 2, 3));
}

TEST_CASE("Fock inner product") {
    auto A = cm(2, 2);
    NCPoly one(1), z11 = A.g("z[1,1]"), z22 = A.g("z[2,2]");
    CHECK(fock_recursive(one, one, 2, 2) == Scalar(1));
    CHECK(fock_recursive(z11, z11, 2, 2) == Scalar(1));
    CHECK(fock_recursive(z11, z22, 2, 2).is_zero());
    CHECK(fock_vacuum(one, one, 2, 2) == Scalar(1));
    CHECK(fock_vacuum(z11, z11, 2, 2) == Scalar(1));
    CHECK(fock_vacuum(z11, z11, 2, 2, true) == S("1-q^2"));
    REQUIRE_REPORT(fock_two_ways_check(2, 2, 2));
    REQUIRE_REPORT(fock_invariance_check(2, 2, 2));
    CHECK_FALSE(fock_invariance_check(2, 2, 2, true).ok());
}

TEST_CASE("Bergman kernel") {
    auto A = cm(1, 1);
    Kernel K = bergman_kernel(1, 1, Scalar::qpow(4), 8);
    Kernel h = h_kernel(1, 1, 1, A), want, hk = Kernel::one();
    for (int k = 0; k <= 8; ++k) {
        Scalar c(0);
        for (int i = 0; i <= k; ++i) c += Scalar::qpow(2 * i);
        want += hk.scaled(c);
        hk = kernel_mul(A, hk, h, 8);
    }
    CHECK(K == want);
    CHECK(K.t.at({Word(), Word()}) == Scalar(1));
    REQUIRE_REPORT(bergman_check(8, 4));
}
