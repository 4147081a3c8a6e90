#include "common.hpp"

TEST_CASE("action on Pol(C)_q") {
    auto T = action_table("pol_disc");
    auto& A = T.A;
    CHECK(act(Fg(1), A.g("z"), T) == NCPoly(Scalar::qhalf(1)));
    CHECK(act(Fg(1), A.pow(A.g("z"), 2), T) == A.g("z", Scalar::qhalf(1) * S("1+q^-2")));
    NCPoly zz = A.mul(A.g("z"), A.g("z'"));
    CHECK(act(Kg(1), zz, T) == zz);
    CHECK(act(Kg(1), A.g("z"), T) == A.g("z", Scalar::qpow(2)));
    CHECK(act(Kig(1), A.g("z'"), T) == A.g("z'", Scalar::qpow(2)));
    CHECK(act(Eg(1), NCPoly(1), T).is_zero());
}

TEST_CASE("Drinfeld-Jimbo relations and module algebra") {
    REQUIRE_REPORT(check_dj_relations(action_table("pol_disc"), 4));
    REQUIRE_REPORT(check_module_algebra(action_table("pol_disc"), 4));
    REQUIRE_REPORT(check_involution_compat(action_table("pol_disc"), 3));
    REQUIRE_REPORT(check_dj_relations(action_table("cmat"), 3));
    REQUIRE_REPORT(check_module_algebra(action_table("fun_disc"), 3));
}

TEST_CASE("corrupted table is reported") {
    auto T = action_table("pol_disc");
    int z = T.A.at("z");
    T.F[1][z] = NCPoly(Scalar::q());
    CHECK_FALSE(check_dj_relations(T, 2).ok());
}

TEST_CASE("hidden symmetry on the small matrix ball") {
    REQUIRE_REPORT(hidden_symmetry_check(1, 1, 3));
}
