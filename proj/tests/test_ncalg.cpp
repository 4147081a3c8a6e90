#include "common.hpp"

TEST_CASE("normal forms in Pol(C)_q") {
    auto A = catalog("pol_disc");
    CHECK(A.rules.size() == 1);
    CHECK(A.normal_form(P(A, "z'*z")) == A.normal_form(P(A, "q^2*z*z' + 1 - q^2")));
    CHECK(A.normal_form(P(A, "z'*z^2")) == A.normal_form(P(A, "q^4*z^2*z' + (1-q^4)*z")));
    CHECK(A.mul(NCPoly(1), A.g("z")) == A.g("z"));
    // two terms, not three: z (z'z) z' = q^2 z^2 z'^2 + (1-q^2) z z'
    NCPoly zz = A.mul(A.g("z"), A.g("z'"));
    NCPoly sq = A.mul(zz, zz);
    CHECK(sq == A.normal_form(P(A, "q^2*z^2*z'^2 + (1-q^2)*z*z'")));
    CHECK(rep_equal_on(rep_matrix(A, sq, 10), rep_matrix(A, zz * zz, 10), 8));
}

TEST_CASE("involution") {
    auto A = catalog("pol_disc");
    NCPoly zz = A.mul(A.g("z"), A.g("z'"));
    CHECK(A.normal_form(A.star_of(zz)) == zz);
    CHECK(A.normal_form(A.star_of(P(A, "z^2"))) == A.normal_form(P(A, "z'^2")));
    auto F = catalog("fun_disc");
    CHECK(F.normal_form(F.star_of(F.g("f0"))) == F.g("f0"));
    CHECK(F.mul(F.g("f0"), F.g("z")).is_zero());
}

TEST_CASE("forms and Clifford relations") {
    auto W = catalog("omega_disc");
    CHECK(W.mul(W.g("dz"), W.g("dz")).is_zero());
    CHECK(W.normal_form(P(W, "dz'*dz + q^2*dz*dz'")).is_zero());
    auto C = catalog("clifford_disc");
    NCPoly y = NCPoly(1) - C.mul(C.g("z"), C.g("z'"));
    CHECK(C.normal_form(P(C, "dz'*dz + q^2*dz*dz'")) == C.mul(y, y));
}

TEST_CASE("confluence") {
    REQUIRE_REPORT(check_overlaps(catalog("pol_disc"), 4));
    REQUIRE_REPORT(check_overlaps(catalog("polmat"), 3));
    REQUIRE_REPORT(check_overlaps(catalog("mat24"), 3));
    CHECK_FALSE(check_overlaps(catalog("clifford_disc"), 4).ok());
}

TEST_CASE("corrupted rule constant is caught by the representation oracle") {
    auto A = catalog("pol_disc");
    REQUIRE_REPORT(rep_oracle_check(A, 4, 16));
    A.rules[0].rhs += NCPoly(S("q^2-q^3"));
    CHECK(A.rules[0].rhs.constant() == S("1-q^3"));
    CHECK(check_overlaps(A, 4).ok());
    CHECK_FALSE(rep_oracle_check(A, 4, 16).ok());
}

TEST_CASE("matrix catalog") {
    auto A = catalog("cmat");
    CHECK(A.ngens() == 4);
    NCPoly p = A.normal_form(P(A, "(1-q^2)*z[1,1]^2"));
    REQUIRE(p.size() == 1);
    CHECK(p.begin()->second == S("1-q^2"));
    CHECK_THROWS_AS(catalog("no_such_algebra"), CatalogError);
}

TEST_CASE("normal form is idempotent and multiplication associative") {
    for (auto name : {"pol_disc", "omega_disc", "weyl_disc", "zeta_plane"}) {
        auto A = catalog(name);
        auto ws = A.normal_words_upto(2);
        for (auto& a : ws)
            for (auto& b : ws) {
                NCPoly ab = A.mul(NCPoly::of(a), NCPoly::of(b));
                CHECK(A.normal_form(ab) == ab);
                for (auto& c : ws)
                    if (a.size() + b.size() + c.size() <= 3)
                        CHECK(A.mul(ab, NCPoly::of(c)) == A.mul(NCPoly::of(a), A.mul(NCPoly::of(b), NCPoly::of(c))));
            }
    }
}
