#include <catch2/catch.hpp>

#include <random>

#include "dtl/polyrep.hpp"

using namespace dtl;

namespace {

DTLMorphism random_word(int m, int n, std::mt19937_64& rng, int length = 4) {
    // random morphism c^m -> c^n assembled from caps, cups and dots
    int cur = m;
    DTLMorphism f = identity_morphism(m);
    for (int step = 0; step < length; ++step) {
        int choice = (int)(rng() % 3);
        if (choice == 0 && cur >= 2) {
            int i = (int)(rng() % (cur - 1));
            DTLMorphism capm =
                tensor(tensor(identity_morphism(i), cap((int)(rng() % 2))),
                       identity_morphism(cur - 2 - i));
            f = compose(capm, f);
            cur -= 2;
        } else if (choice == 1) {
            int i = (int)(rng() % (cur + 1));
            DTLMorphism cupm = tensor(tensor(identity_morphism(i), cup((int)(rng() % 2))),
                                      identity_morphism(cur - i));
            f = compose(cupm, f);
            cur += 2;
        } else if (cur >= 1) {
            f = compose(dot_on_strand(cur, 1 + (int)(rng() % cur)), f);
        }
    }
    // pad to the requested codomain
    while (cur < n || (n - cur) % 2 != 0) {
        if (cur < n) {
            f = compose(tensor(identity_morphism(cur), cup(0)), f);
            cur += 2;
        } else {
            f = compose(tensor(identity_morphism(cur - 2), cap(0)), f);
            cur -= 2;
        }
    }
    while (cur > n) {
        f = compose(tensor(identity_morphism(cur - 2), cap(0)), f);
        cur -= 2;
    }
    return f;
}

}  // namespace

TEST_CASE("pol of cap and cup match their defining formulas") {
    SparseMatrix mc = pol(cap(0));
    MonomialSpace dom(2);
    // basis of dom: 1, x1, x2, x1x2
    REQUIRE(mc.entry(0, dom.index_of(0b01)) == Rational(1));  // x1 -> 1
    REQUIRE(mc.entry(0, dom.index_of(0b10)) == Rational(1));  // x2 -> 1
    REQUIRE(mc.entry(0, dom.index_of(0b00)) == Rational(0));
    REQUIRE(mc.entry(0, dom.index_of(0b11)) == Rational(0));

    SparseMatrix mu = pol(cup(0));
    MonomialSpace cod(2);
    REQUIRE(mu.entry(cod.index_of(0b01), 0) == Rational(1));
    REQUIRE(mu.entry(cod.index_of(0b10), 0) == Rational(1));
    REQUIRE(mu.entry(cod.index_of(0b00), 0) == Rational(0));
    REQUIRE(mu.entry(cod.index_of(0b11), 0) == Rational(0));
}

TEST_CASE("pol of z2 multiplies by x1 - x2") {
    SparseMatrix mz = pol(central_z(2));
    MonomialSpace s(2);
    // 1 -> x1 - x2
    REQUIRE(mz.entry(s.index_of(0b01), s.index_of(0)) == Rational(1));
    REQUIRE(mz.entry(s.index_of(0b10), s.index_of(0)) == Rational(-1));
    // x1 -> -x1 x2, x2 -> x1 x2, x1x2 -> 0
    REQUIRE(mz.entry(s.index_of(0b11), s.index_of(0b01)) == Rational(-1));
    REQUIRE(mz.entry(s.index_of(0b11), s.index_of(0b10)) == Rational(1));
    for (size_t r = 0; r < s.dim(); ++r) REQUIRE(mz.entry(r, s.index_of(0b11)) == Rational(0));
}

TEST_CASE("pol is functorial and monoidal on random words") {
    std::mt19937_64 rng(42);
    for (int iter = 0; iter < 60; ++iter) {
        int a = (int)(rng() % 4), b = (int)(rng() % 4);
        if ((a + b) % 2) b++;
        DTLMorphism g = random_word(a, b, rng, 3);
        int c = (int)(rng() % 4);
        if ((b + c) % 2) c++;
        DTLMorphism f = random_word(b, c, rng, 3);
        REQUIRE(pol(compose(f, g)) == pol(f) * pol(g));
        REQUIRE(pol(tensor(f, g)) == pol_tensor(pol(f), pol(g), f.sig(), g.sig()));
    }
}

TEST_CASE("faithfulness cross-check: reduce(w) = 0 iff pol(w) = 0") {
    std::mt19937_64 rng(43);
    int zeros = 0;
    for (int iter = 0; iter < 120; ++iter) {
        int a = (int)(rng() % 5), b = (int)(rng() % 5);
        if ((a + b) % 2) b++;
        DTLMorphism f = random_word(a, b, rng, 5);
        bool fz = f.is_zero();
        bool pz = pol(f).is_zero();
        REQUIRE(fz == pz);
        if (fz) ++zeros;
        // also: difference of a morphism with itself is zero both ways
        DTLMorphism d = f - f;
        REQUIRE(d.is_zero());
        REQUIRE(pol(d).is_zero());
    }
    REQUIRE(zeros > 0);  // the sample actually exercises the zero branch
}

TEST_CASE("pairing basis at k = 2") {
    auto basis = pairing_basis(2);
    REQUIRE(basis.size() == 2);
    // ascending proof order: the dotted cap (dual monomial 1) comes first
    REQUIRE(basis[0].dual_monomial == 0u);
    REQUIRE(basis[0].diagram.dots[0] == 1);
    REQUIRE(basis[1].dual_monomial == 0b01u);  // x1
    REQUIRE(basis[1].diagram.dots[0] == 0);
}

TEST_CASE("pairing basis at k = 0") {
    auto basis = pairing_basis(0);
    REQUIRE(basis.size() == 1);
    REQUIRE(basis[0].dual_monomial == 0u);
    REQUIRE(pairing_matrix(0).entry(0, 0) == Rational(1));
}

TEST_CASE("odd k has empty basis") { REQUIRE(pairing_basis(3).empty()); }

TEST_CASE("greedy reconstruction round-trips for k = 4 and k = 6") {
    for (int k : {2, 4, 6}) {
        auto basis = pairing_basis(k);
        for (const auto& el : basis) {
            REQUIRE(pairing_greedy(k, el.dual_monomial) == el.diagram);
        }
    }
}

TEST_CASE("pairing matrices are unitriangular for k = 0,2,4,6") {
    for (int k : {0, 2, 4, 6}) {
        REQUIRE(is_unitriangular(pairing_matrix(k)));
    }
}

TEST_CASE("pol_is_injective on small signatures") {
    REQUIRE(pol_is_injective(1, 1));
    REQUIRE(pol_is_injective(0, 0));
    REQUIRE(pol_is_injective(2, 4));
}

TEST_CASE("hom dimension equals basis count and matches rank") {
    // dim End(c^1) = 2 (identity and dot)
    REQUIRE(hom_dimension(1, 1) == 2);
    // dim Hom(c^0, c^2) = 2 (cup, dotted cup)
    REQUIRE(hom_dimension(0, 2) == 2);
    REQUIRE(hom_dimension(1, 2) == 0);
    // pairing matrix rank certifies the dimension
    auto m = pairing_matrix(4);
    REQUIRE(rank(m) == hom_dimension(2, 2));
}

TEST_CASE("graded dimension of Pol(c^n) is (q + q^-1)^n") {
    for (int n = 0; n <= 5; ++n) {
        MonomialSpace s(n);
        LaurentPoly expect(Rational(1));
        for (int i = 0; i < n; ++i) expect = expect * LaurentPoly::quantum_integer(2);
        REQUIRE(s.graded_space().graded_dimension() == expect);
    }
}

TEST_CASE("diagrammatic presentation relations of Pol hold") {
    // The alternative presentation of Pol is generated over the base line by
    // three local relations; each is the statement of a pol matrix entry.
    MonomialSpace s2(2);
    // (1) a floating cup equals dotted-strand + strand-dotted: 1 -> x1 + x2
    SparseMatrix mcup = pol(cup(0));
    REQUIRE(mcup.entry(s2.index_of(0b01), 0) == Rational(1));
    REQUIRE(mcup.entry(s2.index_of(0b10), 0) == Rational(1));
    REQUIRE(mcup.entry(s2.index_of(0b00), 0) == Rational(0));
    REQUIRE(mcup.entry(s2.index_of(0b11), 0) == Rational(0));
    // (2) an undotted cap on two plain strands from the line is zero
    REQUIRE(pol(cap(0)).entry(0, s2.index_of(0b00)) == Rational(0));
    // (3) a dotted cap on two plain strands is the empty configuration
    SparseMatrix mcapd = pol(cap(1));
    REQUIRE(mcapd.entry(0, s2.index_of(0b00)) == Rational(1));
    REQUIRE(mcapd.entry(0, s2.index_of(0b01)) == Rational(0));
    REQUIRE(mcapd.entry(0, s2.index_of(0b10)) == Rational(0));
    REQUIRE(mcapd.entry(0, s2.index_of(0b11)) == Rational(0));
}
