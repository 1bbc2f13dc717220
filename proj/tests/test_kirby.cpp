#include <catch2/catch.hpp>

#include "dtl/kirby.hpp"

using namespace dtl;

namespace {

MonoVec apply_z_coords(int n, const std::vector<Rational>& coords) {
    MonoVec out;
    for (int i = 0; i <= n; ++i) {
        if (coords[i].is_zero()) continue;
        for (const auto& [mask, c] : z_power_expand(n, i)) {
            out[mask] += coords[i] * c;
            if (out[mask].is_zero()) out.erase(mask);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("z-coordinate calculus matches the symbolic projector route") {
    // For small m the z-matrix of JW_n o X o JW_m must agree with pushing
    // expanded z-powers through pol(X) and the symbolic pol(JW_n).
    for (int m = 0; m <= 4; ++m) {
        DTLMorphism X = tensor(identity_morphism(m), cup(1));  // U-shape
        ZMorphism zm = z_matrix_of(m, m + 2, X);
        DTLMorphism jw_top = jones_wenzl(m + 2);
        for (int j = 0; j <= m; ++j) {
            std::vector<Rational> col(m + 3, Rational(0));
            for (int i = 0; i <= m + 2; ++i) col[i] = zm.mat[i][j];
            MonoVec lhs = apply_z_coords(m + 2, col);
            MonoVec rhs = pol_apply(jw_top, pol_apply(X, z_power_expand(m, j)));
            REQUIRE(lhs == rhs);
        }
    }
}

TEST_CASE("z-matrices of the generators satisfy the quiver relations") {
    for (int n = 0; n <= 9; ++n) {
        // z^{n+1} = 0, z^n != 0
        REQUIRE(z_power(z_gen_z(n), n + 1).is_zero());
        if (n >= 1) REQUIRE(!z_power(z_gen_z(n), n).is_zero());
        // z U = U z
        REQUIRE(z_compose(z_gen_z(n + 2), z_gen_U(n)) ==
                z_compose(z_gen_U(n), z_gen_z(n)));
        if (n >= 2) {
            // U_{n-2} D_n = -z_n^2 and D_n U_{n-2} = -z_{n-2}^2
            REQUIRE(z_compose(z_gen_U(n - 2), z_gen_D(n)) ==
                    z_power(z_gen_z(n), 2) * Rational(-1));
            REQUIRE(z_compose(z_gen_D(n), z_gen_U(n - 2)) ==
                    z_power(z_gen_z(n - 2), 2) * Rational(-1));
            REQUIRE(z_compose(z_gen_z(n - 2), z_gen_D(n)) ==
                    z_compose(z_gen_D(n), z_gen_z(n)));
        }
    }
}

TEST_CASE("z-matrices agree with symbolic KarMorphisms at small n") {
    for (int n = 0; n <= 3; ++n) {
        KarMorphism U = gen_U(n);
        ZMorphism zu = z_gen_U(n);
        for (int j = 0; j <= n; ++j) {
            MonoVec sym = pol_apply(U.f, z_power_expand(n, j));
            std::vector<Rational> col(n + 3);
            for (int i = 0; i <= n + 2; ++i) col[i] = zu.mat[i][j];
            REQUIRE(apply_z_coords(n + 2, col) == sym);
        }
    }
}

TEST_CASE("kirby_object truncations") {
    TruncIndObject w0 = kirby_object(0, 0);
    REQUIRE(w0.stages() == 1);
    REQUIRE(w0.strand_counts == std::vector<int>{0});
    REQUIRE(w0.shifts == std::vector<int>{0});
    REQUIRE(w0.transitions.empty());

    TruncIndObject w1 = kirby_object(1, 2);
    REQUIRE(w1.strand_counts == std::vector<int>{1, 3, 5});
    REQUIRE(w1.shifts == std::vector<int>{-1, -3, -5});
    REQUIRE(w1.transitions.size() == 2);
    REQUIRE(w1.transitions[0] == z_gen_U(1));

    // negative winding maps to |k|
    REQUIRE(kirby_object(-3, 1).strand_counts == std::vector<int>{3, 5});
}

TEST_CASE("shift isomorphism: dropping the first stage") {
    TruncIndObject a = kirby_object(3, 1);
    TruncIndObject b = kirby_object(1, 2);
    REQUIRE(std::vector<int>(b.strand_counts.begin() + 1, b.strand_counts.end()) ==
            a.strand_counts);
    REQUIRE(std::vector<int>(b.shifts.begin() + 1, b.shifts.end()) == a.shifts);
    REQUIRE(std::vector<ZMorphism>(b.transitions.begin() + 1, b.transitions.end()) ==
            a.transitions);
}

TEST_CASE("pol_of_kirby certified prefixes") {
    auto r = pol_of_kirby(0, 2);
    REQUIRE(r.transitions_full_rank);
    LaurentPoly expect;
    expect.add_coeff(0, Rational(1));
    expect.add_coeff(-2, Rational(1));
    expect.add_coeff(-4, Rational(1));
    REQUIRE(r.certified == expect);

    auto r1 = pol_of_kirby(1, 1);
    REQUIRE(r1.transitions_full_rank);
    LaurentPoly expect1;
    expect1.add_coeff(-1, Rational(1));
    expect1.add_coeff(-3, Rational(1));
    REQUIRE(r1.certified == expect1);

    auto r00 = pol_of_kirby(0, 0);
    REQUIRE(r00.certified == LaurentPoly(Rational(1)));

    // the top stage sees the full graded dimension q^{-M}[M+1]
    auto r2 = pol_of_kirby(0, 1);
    LaurentPoly last;
    last.add_coeff(0, Rational(1));
    last.add_coeff(-2, Rational(1));
    last.add_coeff(-4, Rational(1));
    REQUIRE(r2.last_stage == last);
}

TEST_CASE("end_kirby ladders and dimensions") {
    auto r = end_kirby(0, 4, 4);
    REQUIRE(r.basis.size() == 3);  // z^0, z^1, z^2
    for (int i = 0; i <= 4; ++i)
        REQUIRE(r.basis[0].components[i] == ZMorphism::identity(2 * i));
    REQUIRE(r.dimension_by_degree[0] == 1);
    REQUIRE(r.dimension_by_degree[1] == 0);
    REQUIRE(r.dimension_by_degree[2] == 1);
    REQUIRE(r.dimension_by_degree[3] == 0);
    REQUIRE(r.dimension_by_degree[4] == 1);

    auto r1 = end_kirby(1, 3, 4);
    REQUIRE(r1.dimension_by_degree[0] == 1);
    REQUIRE(r1.dimension_by_degree[2] == 1);
    REQUIRE(r1.dimension_by_degree[4] == 1);

    REQUIRE(r.basis[1].components[0] == z_gen_z(0));

    REQUIRE_THROWS_AS(end_kirby(0, 1, 4), std::invalid_argument);
}

TEST_CASE("a non-commuting ladder is rejected") {
    TruncIndObject w = kirby_object(0, 1);
    std::vector<ZMorphism> bad = {ZMorphism::identity(0) * Rational(2),
                                  ZMorphism::identity(2)};
    REQUIRE_THROWS_AS(kirby_endo_ladder(w, bad, 0), std::invalid_argument);
}

TEST_CASE("hom from kirby vanishes") {
    Report r = hom_from_kirby_vanishing(0, 0, 4, 6);
    for (const auto& c : r.checks) {
        INFO(c.id << " " << c.params);
        REQUIRE(c.pass);
    }
    Report rp = hom_from_kirby_vanishing(1, 0, 3, 4);
    for (const auto& c : rp.checks) REQUIRE(c.pass);
    Report r2 = hom_from_kirby_vanishing(0, 2, 4, 6);
    for (const auto& c : r2.checks) {
        INFO(c.id << " " << c.params);
        REQUIRE(c.pass);
    }
}

TEST_CASE("representability: Hom(c^s, w) stabilizes to Pol(c^s)^*") {
    for (int s = 0; s <= 3; ++s) {
        auto res = kirby_represents_pol(s, s / 2 + 2);
        INFO("s=" << s);
        REQUIRE(res.stabilized);
    }
    auto r0 = kirby_represents_pol(0, 2);
    REQUIRE(r0.stable_dims.size() == 1);
    REQUIRE(r0.stable_dims.at(0) == 1);
}
