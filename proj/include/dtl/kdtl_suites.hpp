#pragma once

// Verification suites for the kappa-strand calculus: the defining
// relations, the secondary relations, the rung shorthand and its relations,
// the rewiring identities with their prefactors, the orthogonal-idempotent
// decomposition of kappa (x) kappa, and the kappa (x) c^n idempotents.

#include "dtl/kdtl.hpp"
#include "dtl/report.hpp"

namespace dtl {

namespace kdetail {

inline KWord blacks(int n) { return KWord(n, -1); }

inline KLayer kids(int n) {
    KLayer l;
    for (int i = 0; i < n; ++i) l.push_back(KFactor::make_kid());
    return l;
}

// n nested cups c^0 -> c^{2n}; optionally a dot on the outermost arc
inline DTLMorphism nested_cups(int n, bool dotted_outer) {
    NormalDiagram d;
    d.sig = {0, 2 * n};
    d.mate.assign(2 * n, -1);
    d.dots.assign(2 * n, 0);
    for (int j = 0; j < n; ++j) {
        d.mate[j] = 2 * n - 1 - j;
        d.mate[2 * n - 1 - j] = j;
    }
    if (n > 0 && dotted_outer) d.dots[0] = 1;
    return DTLMorphism(d);
}

// z_n^k as a dTL morphism
inline DTLMorphism z_pow_morphism(int n, int k) {
    DTLMorphism m = identity_morphism(n);
    for (int i = 0; i < k; ++i) m = compose(central_z(n), m);
    return m;
}

}  // namespace kdetail

// The "circle n" pink cup: 1 -> kappa_p (x) kappa_p, realized by n nested
// black cups with both leg bundles included, plus one dotted outer cup when
// the parities of n and p disagree.
inline std::vector<KLayer> pink_cup_circle_layers(int n, int leg_parity) {
    int np = (n % 2 == leg_parity % 2) ? n : n + 1;
    std::vector<KLayer> layers;
    layers.push_back({KFactor::make_black(kdetail::nested_cups(np, np != n))});
    layers.push_back({KFactor::make_iota(np), KFactor::make_iota(np)});
    return layers;
}

// sigma_n : kappa_{i+j} -> kappa_i (x) kappa_j  (split off along a circle-n cup)
inline KStack sigma_stack(int n, int j_parity) {
    KStack s;
    for (const auto& l : pink_cup_circle_layers(n, j_parity)) {
        KLayer with_id;
        with_id.push_back(KFactor::make_kid());
        for (const auto& f : l) with_id.push_back(f);
        s.layers.push_back(with_id);
    }
    s.layers.push_back({KFactor::make_mu(), KFactor::make_kid()});
    return s;
}

// pi_n : kappa_i (x) kappa_j -> kappa_{i+j}, with the n kappa-dots on the
// merged-in second factor; the prefactor (-1)^{C(n,2)}/n! is applied by the
// caller
inline KStack pi_stack(int n) {
    KStack s;
    for (int t = 0; t < n; ++t)
        s.layers.push_back({KFactor::make_kid(), KFactor::make_kdot()});
    s.layers.push_back({KFactor::make_mu()});
    return s;
}

inline KStack concat_stacks(const KStack& lower, const KStack& upper) {
    KStack s = lower;
    for (const auto& l : upper.layers) s.layers.push_back(l);
    return s;
}

// ---------------------------------------------------------------------------
// suite: defining relations of the kappa calculus
// ---------------------------------------------------------------------------

inline Report verify_kdtl_defining(int bound) {
    Report rep;
    rep.suite = "kdtl-defining";
    for (int i = 0; i <= 1; ++i) {
        // unit and associativity of mu
        {
            KExpr lhs = KExpr::single({i}, KStack{{{KFactor::make_iota(0), KFactor::make_kid()},
                                                   {KFactor::make_mu()}}});
            KExpr rhs = KExpr::single({i}, KStack{});
            rep.add("mu-unit-left", "i=" + std::to_string(i),
                    completed_equal(lhs, rhs, bound));
            KExpr lhs2 = KExpr::single({i}, KStack{{{KFactor::make_kid(), KFactor::make_iota(0)},
                                                    {KFactor::make_mu()}}});
            rep.add("mu-unit-right", "i=" + std::to_string(i),
                    completed_equal(lhs2, rhs, bound));
        }
        for (int j = 0; j <= 1; ++j) {
            for (int k = 0; k <= 1; ++k) {
                KExpr lhs = KExpr::single(
                    {i, j, k}, KStack{{{KFactor::make_mu(), KFactor::make_kid()},
                                       {KFactor::make_mu()}}});
                KExpr rhs = KExpr::single(
                    {i, j, k}, KStack{{{KFactor::make_kid(), KFactor::make_mu()},
                                       {KFactor::make_mu()}}});
                std::string w;
                bool ok = completed_equal(lhs, rhs, bound, 0, &w);
                rep.add("mu-associative",
                        "(" + std::to_string(i) + "," + std::to_string(j) + "," +
                            std::to_string(k) + ")",
                        ok, w);
            }
            // kappa-dot Leibniz slide with sign (-1)^i
            KExpr lhs = KExpr::single({i, j}, KStack{{{KFactor::make_mu()},
                                                      {KFactor::make_kdot()}}});
            KExpr rhs;
            rhs.source = {i, j};
            rhs.add(KStack{{{KFactor::make_kdot(), KFactor::make_kid()}, {KFactor::make_mu()}}},
                    Rational(1));
            rhs.add(KStack{{{KFactor::make_kid(), KFactor::make_kdot()}, {KFactor::make_mu()}}},
                    sign_pow(i));
            std::string w;
            bool ok = completed_equal(lhs, rhs, bound, 0, &w);
            rep.add("kdot-slide", "(" + std::to_string(i) + "," + std::to_string(j) + ")", ok, w);
        }
    }
    // kappa-dot on iota_n equals z_n below iota_n
    for (int n = 0; n <= bound; ++n) {
        KExpr lhs = KExpr::single(kdetail::blacks(n),
                                  KStack{{{KFactor::make_iota(n)}, {KFactor::make_kdot()}}});
        KExpr rhs = KExpr::single(
            kdetail::blacks(n),
            KStack{{{KFactor::make_black(central_z(n))}, {KFactor::make_iota(n)}}});
        rep.add("kdot-iota", "n=" + std::to_string(n), kdtl_equal_at(lhs, rhs, {}));
    }
    // relation c: cups into iota
    for (int i = 0; i + 2 <= bound + 2 && i <= 2; ++i) {
        for (int j = 0; j <= 2; ++j) {
            DTLMorphism plain = tensor(tensor(identity_morphism(i), cup(0)),
                                       identity_morphism(j));
            DTLMorphism dotted = tensor(tensor(identity_morphism(i), cup(1)),
                                        identity_morphism(j));
            KExpr kill = KExpr::single(kdetail::blacks(i + j),
                                       KStack{{{KFactor::make_black(plain)},
                                               {KFactor::make_iota(i + j + 2)}}});
            KExpr zero;
            zero.source = kdetail::blacks(i + j);
            rep.add("iota-kills-cup", "(i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")",
                    kdtl_equal_at(kill, zero, {}));
            KExpr absorb = KExpr::single(kdetail::blacks(i + j),
                                         KStack{{{KFactor::make_black(dotted)},
                                                 {KFactor::make_iota(i + j + 2)}}});
            KExpr target = KExpr::single(kdetail::blacks(i + j),
                                         KStack{{{KFactor::make_iota(i + j)}}});
            rep.add("iota-absorbs-dotted-cup",
                    "(i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")",
                    kdtl_equal_at(absorb, target, {}));
        }
    }
    // iota multiplicativity: mu o (iota_i (x) iota_j) = iota_{i+j}
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 3 - i + 1 && i + j <= 4; ++j) {
            KExpr lhs = KExpr::single(kdetail::blacks(i + j),
                                      KStack{{{KFactor::make_iota(i), KFactor::make_iota(j)},
                                              {KFactor::make_mu()}}});
            KExpr rhs = KExpr::single(kdetail::blacks(i + j),
                                      KStack{{{KFactor::make_iota(i + j)}}});
            rep.add("iota-multiplicative",
                    "(i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")",
                    kdtl_equal_at(lhs, rhs, {}));
        }
    rep.certified_range = "inclusion levels <= " + std::to_string(bound);
    return rep;
}

// ---------------------------------------------------------------------------
// suite: secondary relations
// ---------------------------------------------------------------------------

// attach one black strand into the pink line from the right: [kappa, c] -> [kappa]
inline KStack attach_right_stack() {
    return KStack{{{KFactor::make_kid(), KFactor::make_iota(1)}, {KFactor::make_mu()}}};
}
// from the left: [c, kappa] -> [kappa]
inline KStack attach_left_stack() {
    return KStack{{{KFactor::make_iota(1), KFactor::make_kid()}, {KFactor::make_mu()}}};
}

inline Report verify_secondary(int bound) {
    Report rep;
    rep.suite = "kdtl-secondary";
    for (int i = 0; i <= 1; ++i) {
        for (int j = 0; j <= 1; ++j) {
            // red-black associativity: a strand between the pinks may merge
            // into either factor before the product
            KExpr lhs = KExpr::single(
                {i, -1, j},
                KStack{{{KFactor::make_kid(), KFactor::make_iota(1), KFactor::make_kid()},
                        {KFactor::make_mu(), KFactor::make_kid()},
                        {KFactor::make_mu()}}});
            KExpr rhs = KExpr::single(
                {i, -1, j},
                KStack{{{KFactor::make_kid(), KFactor::make_iota(1), KFactor::make_kid()},
                        {KFactor::make_kid(), KFactor::make_mu()},
                        {KFactor::make_mu()}}});
            std::string w;
            bool ok = completed_equal(lhs, rhs, bound, 0, &w);
            rep.add("red-black-associativity",
                    "(" + std::to_string(i) + "," + std::to_string(j) + ")", ok, w);
            // a strand left of both pinks attaches before or after mu
            KExpr lhs2 = KExpr::single(
                {-1, i, j},
                KStack{{{KFactor::make_iota(1), KFactor::make_kid(), KFactor::make_kid()},
                        {KFactor::make_mu(), KFactor::make_kid()},
                        {KFactor::make_mu()}}});
            KExpr rhs2 = KExpr::single(
                {-1, i, j},
                KStack{{{KFactor::make_black(identity_morphism(1)), KFactor::make_mu()},
                        {KFactor::make_iota(1), KFactor::make_kid()},
                        {KFactor::make_mu()}}});
            bool ok2 = completed_equal(lhs2, rhs2, bound, 0, &w);
            rep.add("attach-before-or-after-mu",
                    "(" + std::to_string(i) + "," + std::to_string(j) + ")", ok2, w);
        }
        // more dot sliding: kdot above an attach from the right
        {
            KExpr lhs = KExpr::single({i, -1},
                                      concat_stacks(attach_right_stack(),
                                                    KStack{{{KFactor::make_kdot()}}}));
            KExpr rhs;
            rhs.source = {i, -1};
            rhs.add(concat_stacks(KStack{{{KFactor::make_kdot(), KFactor::make_black(
                                                                     identity_morphism(1))}}},
                                  attach_right_stack()),
                    Rational(1));
            rhs.add(concat_stacks(KStack{{{KFactor::make_kid(),
                                           KFactor::make_black(dot_on_strand(1, 1))}}},
                                  attach_right_stack()),
                    sign_pow(i));
            std::string w;
            bool ok = completed_equal(lhs, rhs, bound, 0, &w);
            rep.add("more-dotsliding", "i=" + std::to_string(i), ok, w);
            // reflected version: attach from the left, with the minus sign
            KExpr lhsr = KExpr::single({-1, i},
                                       concat_stacks(attach_left_stack(),
                                                     KStack{{{KFactor::make_kdot()}}}));
            KExpr rhsr;
            rhsr.source = {-1, i};
            rhsr.add(concat_stacks(KStack{{{KFactor::make_black(identity_morphism(1)),
                                            KFactor::make_kdot()}}},
                                   attach_left_stack()),
                     Rational(-1));
            rhsr.add(concat_stacks(KStack{{{KFactor::make_black(dot_on_strand(1, 1)),
                                            KFactor::make_kid()}}},
                                   attach_left_stack()),
                     Rational(1));
            bool okr = completed_equal(lhsr, rhsr, bound, 0, &w);
            rep.add("more-dotsliding-reflected", "i=" + std::to_string(i), okr, w);
        }
        // belly: a black cup with both legs on the pink line
        {
            KStack belly_plain{{{KFactor::make_kid(), KFactor::make_black(cup(0))},
                                {KFactor::make_kid(), KFactor::make_iota(1),
                                 KFactor::make_black(identity_morphism(1))},
                                {KFactor::make_mu(), KFactor::make_black(identity_morphism(1))},
                                {KFactor::make_kid(), KFactor::make_iota(1)},
                                {KFactor::make_mu()}}};
            KExpr lhs = KExpr::single({i}, belly_plain);
            KExpr zero;
            zero.source = {i};
            std::string w;
            rep.add("belly-kill", "i=" + std::to_string(i),
                    completed_equal(lhs, zero, bound, 0, &w), w);
            KStack belly_dot = belly_plain;
            belly_dot.layers[0] = {KFactor::make_kid(), KFactor::make_black(cup(1))};
            KExpr lhsd = KExpr::single({i}, belly_dot);
            KExpr id_expr = KExpr::single({i}, KStack{});
            rep.add("belly-absorb", "i=" + std::to_string(i),
                    completed_equal(lhsd, id_expr, bound, 0, &w), w);
        }
        // cap across the pink strand = two one-dotted double-attach terms
        {
            // source [kappa_i, c, c]: cap the strands vs attach both
            KExpr lhs = KExpr::single(
                {i, -1, -1},
                KStack{{{KFactor::make_kid(), KFactor::make_black(cap(0))}}});
            auto attach_two = [&](int dot_first, int dot_second) {
                KStack s;
                s.layers.push_back({KFactor::make_kid(),
                                    KFactor::make_black(compose(
                                        tensor(dot_first ? dot_on_strand(1, 1)
                                                         : identity_morphism(1),
                                               dot_second ? dot_on_strand(1, 1)
                                                          : identity_morphism(1)),
                                        identity_morphism(2)))});
                s.layers.push_back({KFactor::make_kid(), KFactor::make_iota(1),
                                    KFactor::make_black(identity_morphism(1))});
                s.layers.push_back({KFactor::make_mu(),
                                    KFactor::make_black(identity_morphism(1))});
                s.layers.push_back({KFactor::make_kid(), KFactor::make_iota(1)});
                s.layers.push_back({KFactor::make_mu()});
                return s;
            };
            KExpr rhs;
            rhs.source = {i, -1, -1};
            rhs.add(attach_two(1, 0), Rational(1));
            rhs.add(attach_two(0, 1), Rational(1));
            std::string w;
            bool ok = completed_equal(lhs, rhs, bound, 0, &w);
            rep.add("cap-across-pink", "i=" + std::to_string(i), ok, w);
        }
    }
    // dotted rung relations between two pink strands
    for (int i = 0; i <= 1; ++i)
        for (int j = 0; j <= 1; ++j) {
            auto rung = [&](int dotted) {
                KStack s;
                s.layers.push_back({KFactor::make_kid(), KFactor::make_black(cup(dotted)),
                                    KFactor::make_kid()});
                s.layers.push_back({KFactor::make_kid(), KFactor::make_iota(1),
                                    KFactor::make_iota(1), KFactor::make_kid()});
                s.layers.push_back({KFactor::make_mu(), KFactor::make_mu()});
                return s;
            };
            // two dotted rungs cancel
            KExpr two_dotted = KExpr::single({i, j}, concat_stacks(rung(1), rung(1)));
            KExpr idid = KExpr::single({i, j}, KStack{});
            std::string w;
            rep.add("double-dotted-rung",
                    "(" + std::to_string(i) + "," + std::to_string(j) + ")",
                    completed_equal(two_dotted, idid, bound, 0, &w), w);
            // dotted-above-plain plus plain-above-dotted is zero
            KExpr mixed;
            mixed.source = {i, j};
            mixed.add(concat_stacks(rung(0), rung(1)), Rational(1));
            mixed.add(concat_stacks(rung(1), rung(0)), Rational(1));
            KExpr zero;
            zero.source = {i, j};
            rep.add("mixed-rungs-vanish",
                    "(" + std::to_string(i) + "," + std::to_string(j) + ")",
                    completed_equal(mixed, zero, bound, 0, &w), w);
        }
    rep.certified_range = "inclusion levels <= " + std::to_string(bound);
    return rep;
}

// ---------------------------------------------------------------------------
// suite: rung shorthand relations
// ---------------------------------------------------------------------------

inline Report verify_rungs(int bound) {
    Report rep;
    rep.suite = "kdtl-rungs";
    // holes eat dots: a kappa-dot on the right leg of the circle-n cup
    // shrinks the hole; the left-leg dot differs by (-1)^{parity-1}
    for (int par = 0; par <= 1; ++par) {
        for (int n = 1; n <= 3; ++n) {
            KExpr right_dot;
            right_dot.source = {};
            {
                KStack s;
                for (const auto& l : pink_cup_circle_layers(n, par)) s.layers.push_back(l);
                s.layers.push_back({KFactor::make_kid(), KFactor::make_kdot()});
                right_dot.add(s, Rational(1));
            }
            KExpr smaller;
            smaller.source = {};
            {
                KStack s;
                for (const auto& l : pink_cup_circle_layers(n - 1, par)) s.layers.push_back(l);
                smaller.add(s, sign_pow(n - 1) * Rational(n));
            }
            std::string w;
            bool ok = completed_equal(right_dot, smaller, bound, 1, &w);
            rep.add("holes-eat-dots",
                    "n=" + std::to_string(n) + ",parity=" + std::to_string(par), ok, w);
            KExpr left_dot;
            left_dot.source = {};
            {
                KStack s;
                for (const auto& l : pink_cup_circle_layers(n, par)) s.layers.push_back(l);
                s.layers.push_back({KFactor::make_kdot(), KFactor::make_kid()});
                left_dot.add(s, sign_pow(par - 1));
            }
            bool ok2 = completed_equal(right_dot, left_dot, bound, 0, &w);
            rep.add("holes-eat-dots-sign",
                    "n=" + std::to_string(n) + ",parity=" + std::to_string(par), ok2, w);
        }
    }
    // dotted teardrop: circle-n cup closed by mu with m kappa-dots
    for (int par = 0; par <= 1; ++par)
        for (int n = 0; n <= 2; ++n)
            for (int m = 0; m <= 2; ++m) {
                KExpr teardrop;
                teardrop.source = {};
                {
                    KStack s;
                    for (const auto& l : pink_cup_circle_layers(n, par)) s.layers.push_back(l);
                    for (int t = 0; t < m; ++t)
                        s.layers.push_back({KFactor::make_kid(), KFactor::make_kdot()});
                    s.layers.push_back({KFactor::make_mu()});
                    teardrop.add(s, Rational(1));
                }
                KExpr rhs;
                rhs.source = {};
                if (n == m) {
                    rhs.add(KStack{{{KFactor::make_iota(0)}}},
                            sign_binom2(n) * Rational::factorial(n));
                }
                std::string w;
                bool ok = completed_equal(teardrop, rhs, bound, 1, &w);
                rep.add("dotted-teardrop",
                        "n=" + std::to_string(n) + ",m=" + std::to_string(m) +
                            ",parity=" + std::to_string(par),
                        ok, w);
            }
    // z on rungs: a z_n^{n-k} box across the n bridging strands
    for (int par = 0; par <= 1; ++par)
        for (int n = 1; n <= 3; ++n)
            for (int k = 0; k <= n; ++k) {
                if ((n - par) % 2 != 0) continue;  // plain n-strand bridge case
                KExpr lhs;
                lhs.source = {};
                {
                    KStack s;
                    s.layers.push_back({KFactor::make_black(kdetail::nested_cups(n, false))});
                    s.layers.push_back({KFactor::make_black(
                        tensor(kdetail::z_pow_morphism(n, n - k), identity_morphism(n)))});
                    s.layers.push_back({KFactor::make_iota(n), KFactor::make_iota(n)});
                    lhs.add(s, Rational(1));
                }
                KExpr rhs;
                rhs.source = {};
                {
                    KStack s;
                    for (const auto& l : pink_cup_circle_layers(k, par)) s.layers.push_back(l);
                    rhs.add(s, sign_binom2(n - k) * Rational::factorial(n) *
                                   Rational::factorial(k).inverse());
                }
                std::string w;
                bool ok = completed_equal(lhs, rhs, bound, 1, &w);
                rep.add("z-on-rungs-left",
                        "n=" + std::to_string(n) + ",k=" + std::to_string(k) +
                            ",parity=" + std::to_string(par),
                        ok, w);
                // and the right-leg version with the sign (-1)^{k(n-k)}
                KExpr rhs2;
                rhs2.source = {};
                {
                    KStack s;
                    s.layers.push_back({KFactor::make_black(kdetail::nested_cups(n, false))});
                    s.layers.push_back({KFactor::make_black(
                        tensor(identity_morphism(n), kdetail::z_pow_morphism(n, n - k)))});
                    s.layers.push_back({KFactor::make_iota(n), KFactor::make_iota(n)});
                    rhs2.add(s, sign_pow((long long)k * (n - k)));
                }
                bool ok2 = completed_equal(lhs, rhs2, bound, 0, &w);
                rep.add("z-on-rungs-sides",
                        "n=" + std::to_string(n) + ",k=" + std::to_string(k) +
                            ",parity=" + std::to_string(par),
                        ok2, w);
            }
    rep.certified_range = "inclusion levels <= " + std::to_string(bound);
    return rep;
}

// ---------------------------------------------------------------------------
// suites: rewiring, identity decomposition, kappa squared
// ---------------------------------------------------------------------------

inline Report verify_rewire(int bound) {
    Report rep;
    rep.suite = "kdtl-rewire";
    for (int i = 0; i <= 1; ++i)
        for (int j = 0; j <= 1; ++j)
            for (int k = 0; k <= 1; ++k) {
                // first form: merging j rightward into k equals the sum of
                // merges into i with an n-rung correction
                KExpr lhs = KExpr::single({i, j, k},
                                          KStack{{{KFactor::make_kid(), KFactor::make_mu()}}});
                KExpr rhs;
                rhs.source = {i, j, k};
                for (int n = 0; n <= bound; ++n) {
                    KStack s;
                    for (int t = 0; t < n; ++t)
                        s.layers.push_back({KFactor::make_kid(), KFactor::make_kdot(),
                                            KFactor::make_kid()});
                    s.layers.push_back({KFactor::make_mu(), KFactor::make_kid()});
                    for (const auto& l : pink_cup_circle_layers(n, j)) {
                        KLayer ll;
                        ll.push_back(KFactor::make_kid());
                        for (const auto& f : l) ll.push_back(f);
                        ll.push_back(KFactor::make_kid());
                        s.layers.push_back(ll);
                    }
                    s.layers.push_back({KFactor::make_mu(), KFactor::make_mu()});
                    rhs.add(s, sign_binom2(n) * Rational::factorial(n).inverse());
                }
                std::string w;
                bool ok = completed_equal(lhs, rhs, bound, 0, &w);
                rep.add("rewire",
                        "(" + std::to_string(i) + "," + std::to_string(j) + "," +
                            std::to_string(k) + ")",
                        ok, w);
                // reflected form with the extra sign (-1)^{n(n-j)}
                KExpr lhs2 = KExpr::single({k, j, i},
                                           KStack{{{KFactor::make_mu(), KFactor::make_kid()}}});
                KExpr rhs2;
                rhs2.source = {k, j, i};
                for (int n = 0; n <= bound; ++n) {
                    KStack s;
                    for (int t = 0; t < n; ++t)
                        s.layers.push_back({KFactor::make_kid(), KFactor::make_kdot(),
                                            KFactor::make_kid()});
                    s.layers.push_back({KFactor::make_kid(), KFactor::make_mu()});
                    for (const auto& l : pink_cup_circle_layers(n, j)) {
                        KLayer ll;
                        ll.push_back(KFactor::make_kid());
                        for (const auto& f : l) ll.push_back(f);
                        ll.push_back(KFactor::make_kid());
                        s.layers.push_back(ll);
                    }
                    s.layers.push_back({KFactor::make_mu(), KFactor::make_mu()});
                    rhs2.add(s, sign_binom2(n) * sign_pow((long long)n * (n - j)) *
                                    Rational::factorial(n).inverse());
                }
                bool ok2 = completed_equal(lhs2, rhs2, bound, 0, &w);
                rep.add("rewire-reflected",
                        "(" + std::to_string(i) + "," + std::to_string(j) + "," +
                            std::to_string(k) + ")",
                        ok2, w);
            }
    rep.certified_range = "inclusion levels <= " + std::to_string(bound);
    return rep;
}

// pi_n o sigma_m = delta_{nm} id and sum_n sigma_n pi_n = id, evaluated at
// all inclusion pairs up to the bound
inline Report kirby_square(int i, int j, int M) {
    Report rep;
    rep.suite = "kirby-square(i=" + std::to_string(i) + ",j=" + std::to_string(j) + ")";
    // orthogonality, including the teardrop constant cancellation
    for (int n = 0; n <= 2; ++n)
        for (int m = 0; m <= 2; ++m) {
            KExpr comp = KExpr::single({(i + j) % 2},
                                       concat_stacks(sigma_stack(m, j), pi_stack(n)));
            comp.terms[0].coeff = sign_binom2(n) * Rational::factorial(n).inverse();
            KExpr rhs;
            rhs.source = {(i + j) % 2};
            if (n == m) rhs.add(KStack{}, Rational(1));
            std::string w;
            bool ok = completed_equal(comp, rhs, M, 1, &w);
            rep.add("orthogonality", "pi_" + std::to_string(n) + " sigma_" + std::to_string(m),
                    ok, w);
        }
    // decomposition of the identity, truncating at n <= min(a, b)
    {
        KExpr lhs = KExpr::single({i, j}, KStack{});
        KExpr rhs;
        rhs.source = {i, j};
        for (int n = 0; n <= M; ++n) {
            rhs.add(concat_stacks(pi_stack(n), sigma_stack(n, j)),
                    sign_binom2(n) * Rational::factorial(n).inverse());
        }
        std::string w;
        bool ok = completed_equal(lhs, rhs, M, 0, &w);
        rep.add("decomp-of-identity", "sum over n <= " + std::to_string(M), ok, w);
    }
    rep.certified_range = "inclusion levels <= " + std::to_string(M);
    return rep;
}

// ---------------------------------------------------------------------------
// kappa (x) c^n decomposes by square-free monomials
// ---------------------------------------------------------------------------

// merge all n strands of [kappa, c^n] into the pink line, with a dot on
// strand s whenever mask has bit s-1 set; strands merge nearest-first
inline KStack merge_all_stack(int n, uint32_t dot_mask) {
    KStack s;
    DTLMorphism dots = identity_morphism(n);
    for (int t = 1; t <= n; ++t)
        if (dot_mask & (1u << (t - 1))) dots = compose(dot_on_strand(n, t), dots);
    KLayer first;
    first.push_back(KFactor::make_kid());
    first.push_back(KFactor::make_black(dots));
    s.layers.push_back(first);
    for (int t = 0; t < n; ++t) {
        KLayer io;
        io.push_back(KFactor::make_kid());
        io.push_back(KFactor::make_iota(1));
        if (n - 1 - t > 0) io.push_back(KFactor::make_black(identity_morphism(n - 1 - t)));
        s.layers.push_back(io);
        KLayer mu;
        mu.push_back(KFactor::make_mu());
        if (n - 1 - t > 0) mu.push_back(KFactor::make_black(identity_morphism(n - 1 - t)));
        s.layers.push_back(mu);
    }
    return s;
}

// split n strands back out of the pink line, with dots per mask applied to
// the emitted strands; the t-th split inserts next to the pink line
inline KStack split_all_stack(int n, uint32_t dot_mask) {
    KStack s;
    for (int t = n - 1; t >= 0; --t) {
        // emit the strand that will end up at position t+1 (1-based)
        int existing = n - 1 - t;  // strands already emitted, to the right
        KLayer cupl;
        cupl.push_back(KFactor::make_kid());
        cupl.push_back(KFactor::make_black(cup(0)));
        if (existing > 0) cupl.push_back(KFactor::make_black(identity_morphism(existing)));
        s.layers.push_back(cupl);
        KLayer io;
        io.push_back(KFactor::make_kid());
        io.push_back(KFactor::make_iota(1));
        io.push_back(KFactor::make_black(identity_morphism(1 + existing)));
        s.layers.push_back(io);
        KLayer mu;
        mu.push_back(KFactor::make_mu());
        mu.push_back(KFactor::make_black(identity_morphism(1 + existing)));
        s.layers.push_back(mu);
    }
    DTLMorphism dots = identity_morphism(n);
    for (int t = 1; t <= n; ++t)
        if (dot_mask & (1u << (t - 1))) dots = compose(dot_on_strand(n, t), dots);
    KLayer last;
    last.push_back(KFactor::make_kid());
    last.push_back(KFactor::make_black(dots));
    s.layers.push_back(last);
    return s;
}

// idempotent decomposition of kappa_i (x) c^n by square-free monomials f
// with complementary dual f-hat, plus pairwise orthogonality
inline Report tensor_with_kirby(int n, int bound) {
    Report rep;
    rep.suite = "tensor-with-kirby(n=" + std::to_string(n) + ")";
    uint32_t full = (n >= 32) ? 0u : ((1u << n) - 1);
    for (int i = 0; i <= 1; ++i) {
        KWord word;
        word.push_back(i);
        for (int t = 0; t < n; ++t) word.push_back(-1);
        // sum of the idempotents is the identity
        KExpr rhs;
        rhs.source = word;
        for (uint32_t f = 0; f <= full && n < 31; ++f) {
            rhs.add(concat_stacks(merge_all_stack(n, full & ~f), split_all_stack(n, f)),
                    Rational(1));
            if (n == 0) break;
        }
        KExpr lhs = KExpr::single(word, KStack{});
        std::string w;
        bool ok = completed_equal(lhs, rhs, bound, 0, &w);
        rep.add("idempotents-sum-to-identity", "i=" + std::to_string(i), ok, w);
        // orthogonality for n <= 2: T_f T_g = delta_{fg} T_f
        if (n <= 2) {
            for (uint32_t f = 0; f <= full; ++f) {
                for (uint32_t g = 0; g <= full; ++g) {
                    KExpr comp = KExpr::single(
                        word,
                        concat_stacks(
                            concat_stacks(merge_all_stack(n, full & ~f), split_all_stack(n, f)),
                            concat_stacks(merge_all_stack(n, full & ~g), split_all_stack(n, g))));
                    KExpr target;
                    target.source = word;
                    if (f == g)
                        target.add(concat_stacks(merge_all_stack(n, full & ~f),
                                                 split_all_stack(n, f)),
                                   Rational(1));
                    bool okk = completed_equal(comp, target, bound, 0, &w);
                    rep.add("idempotents-orthogonal",
                            "i=" + std::to_string(i) + ",f=" + std::to_string(f) +
                                ",g=" + std::to_string(g),
                            okk, w);
                    if (n == 0) break;
                }
                if (n == 0) break;
            }
        }
    }
    rep.certified_range = "inclusion levels <= " + std::to_string(bound);
    return rep;
}

// the projector decomposition: (id_kappa (x) JW_n) equals the signed sum of
// split-z^l after merge-z^k
inline Report pn_times_kirby_decomp(int n, int bound) {
    Report rep;
    rep.suite = "pn-times-kirby(n=" + std::to_string(n) + ")";
    for (int i = 0; i <= 1; ++i) {
        KWord word;
        word.push_back(i);
        for (int t = 0; t < n; ++t) word.push_back(-1);
        KExpr lhs = KExpr::single(
            word, KStack{{{KFactor::make_kid(), KFactor::make_black(jones_wenzl(n))}}});
        KExpr rhs;
        rhs.source = word;
        for (int k = 0; k <= n; ++k) {
            int l = n - k;
            KStack s;
            s.layers.push_back({KFactor::make_kid(),
                                KFactor::make_black(kdetail::z_pow_morphism(n, k))});
            KStack merged = merge_all_stack(n, 0);
            // skip merge_all's leading dot layer; splice its merge layers
            for (size_t li = 1; li < merged.layers.size(); ++li)
                s.layers.push_back(merged.layers[li]);
            KStack splits = split_all_stack(n, 0);
            for (size_t li = 0; li + 1 < splits.layers.size(); ++li)
                s.layers.push_back(splits.layers[li]);
            s.layers.push_back({KFactor::make_kid(),
                                KFactor::make_black(kdetail::z_pow_morphism(n, l))});
            rhs.add(s, sign_binom2(n) * Rational::factorial(n).inverse());
        }
        std::string w;
        bool ok = completed_equal(lhs, rhs, bound, 0, &w);
        rep.add("projector-decomposition", "i=" + std::to_string(i), ok, w);
    }
    rep.certified_range = "inclusion levels <= " + std::to_string(bound);
    return rep;
}

}  // namespace dtl
