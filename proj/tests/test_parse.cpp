#include "common.hpp"

TEST_CASE("expression parser") {
    auto A = catalog("pol_disc");
    NCPoly p = P(A, "z'*z");
    REQUIRE(p.size() == 1);
    CHECK(p.begin()->first == word({A.at("z'"), A.at("z")}));
    CHECK_THROWS_AS(P(A, "z**"), ParseError);
    CHECK_THROWS_AS(P(A, "w"), ParseError);
    CHECK_THROWS_AS(P(A, "(z"), ParseError);
    auto T = catalog("mat24");
    CHECK(P(T, "t[1,4]^-1") == T.g("t[1,4]i"));
}

TEST_CASE("render then parse is the identity on normal forms") {
    for (auto name : {"pol_disc", "fun_disc", "omega_disc", "cmat", "pol_mat2", "mat24", "zeta_plane"}) {
        auto A = catalog(name);
        int d = A.ngens() > 6 ? 2 : 4;
        auto ws = A.normal_words_upto(d);
        for (size_t i = 0; i < ws.size(); ++i) {
            NCPoly p = NCPoly::of(ws[i], S("(1-q^2)/(1+q^{1/2})"));
            if (i + 1 < ws.size()) p += NCPoly::of(ws[i + 1], Scalar(-3));
            CHECK(A.normal_form(parse_expr(A.render(p), A)) == p);
        }
    }
}
