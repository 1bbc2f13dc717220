#include <catch2/catch.hpp>

#include "dtl/kdtl_suites.hpp"

using namespace dtl;

namespace {

void require_report(const Report& rep) {
    for (const auto& c : rep.checks) {
        INFO(rep.suite << " :: " << c.id << " (" << c.params << ") " << c.witness);
        REQUIRE(c.pass);
    }
}

}  // namespace

TEST_CASE("phi of iota_0 at level 0 is the empty projector") {
    KExpr e = KExpr::single({}, KStack{{{KFactor::make_iota(0)}}});
    auto ev = evaluate_phi(e, {});
    REQUIRE(ev.size() == 1);
    REQUIRE(ev[0].D == identity_morphism(0));
    REQUIRE(ev[0].blocks.size() == 1);
    REQUIRE(ev[0].blocks[0].kappa);
    REQUIRE(ev[0].blocks[0].level == 0);
}

TEST_CASE("phi of mu at source levels (2,2) is the projector merge") {
    KExpr e = KExpr::single({0, 0}, KStack{{{KFactor::make_mu()}}});
    auto ev = evaluate_phi(e, {2, 2});
    REQUIRE(ev.size() == 1);
    DTLMorphism expect =
        compose(jones_wenzl(4), tensor(jones_wenzl(2), jones_wenzl(2)));
    REQUIRE(ev[0].D == expect);
}

TEST_CASE("mu at asymmetric inclusion levels is the combined inclusion") {
    // phi(mu) o (iota_0 (x) iota_2) = iota_2-class: the projector over both
    // windows at level 0 + 2
    KExpr e = KExpr::single({0, 0}, KStack{{{KFactor::make_mu()}}});
    auto ev = evaluate_phi(e, {0, 2});
    REQUIRE(ev.size() == 1);
    REQUIRE(ev[0].blocks[0].level == 2);
    REQUIRE(ev[0].D == jones_wenzl(2));
    // and the asymmetric value is colimit-equal to the equalized one: raising
    // the level-0 factor first gives the same class after one more raise
    KExpr raised = KExpr::single({0, 0}, KStack{{{KFactor::make_mu()}}});
    REQUIRE(kdtl_equal_at(e, raised, {0, 2}));
}

TEST_CASE("the rewriter factors through iota after a black morphism") {
    // iota_4 applied to a diagram with one dotted and one plain cup
    DTLMorphism X = tensor(tensor(cup(1), cup(0)), identity_morphism(0));
    KExpr e = KExpr::single({}, KStack{{{KFactor::make_black(X)},
                                        {KFactor::make_iota(4)}}});
    auto nf = kdtl_reduce(e);
    // the plain cup kills the term
    REQUIRE(nf.empty());

    DTLMorphism Y = tensor(cup(1), cup(1));
    KExpr e2 = KExpr::single({}, KStack{{{KFactor::make_black(Y)},
                                         {KFactor::make_iota(4)}}});
    auto nf2 = kdtl_reduce(e2);
    REQUIRE(nf2.size() == 1);
    REQUIRE(nf2[0].blocks[0].level == 0);  // both cups absorbed
    REQUIRE(nf2[0].D == identity_morphism(0));
}

TEST_CASE("rewriter soundness: phi(reduce(m)) = phi(m)") {
    // a mixed expression: dotted cup into iota, a kappa-dot, then a merge
    // with a freshly included pair of strands
    std::vector<KExpr> samples;
    samples.push_back(KExpr::single(
        {-1, -1},
        KStack{{{KFactor::make_black(tensor(identity_morphism(1), cup(1))),
                 KFactor::make_black(identity_morphism(1))},
                {KFactor::make_iota(3), KFactor::make_iota(1)},
                {KFactor::make_kdot(), KFactor::make_kid()},
                {KFactor::make_mu()}}}));
    samples.push_back(KExpr::single(
        {-1, -1, -1},
        KStack{{{KFactor::make_iota(2), KFactor::make_iota(1)},
                {KFactor::make_mu()},
                {KFactor::make_kdot()}}}));
    for (const auto& e : samples) {
        auto direct = evaluate_phi(e, {});
        auto reduced = kdtl_reduce(e);
        std::vector<KEval> via_phi;
        for (const auto& st : reduced) via_phi.push_back(phi_of_reduced(st));
        // raise everything to a common level and compare
        REQUIRE(!direct.empty());
        std::vector<KBlock> blocks = direct[0].blocks;
        std::vector<int> targets;
        for (size_t i = 0; i < blocks.size(); ++i) {
            if (!blocks[i].kappa) continue;
            int mx = 0;
            for (const auto& st : direct) mx = std::max(mx, st.blocks[i].level);
            for (const auto& st : via_phi) mx = std::max(mx, st.blocks[i].level);
            targets.push_back(mx);
        }
        std::vector<KBlock> tb = blocks;
        size_t ki = 0;
        for (auto& x : tb)
            if (x.kappa) x.level = targets[ki++];
        DTLMorphism a = kdtl_collect(direct, targets, tb);
        DTLMorphism b = kdtl_collect(via_phi, targets, tb);
        REQUIRE(a == b);
    }
}

TEST_CASE("defining relations of the kappa calculus, levels <= 2") {
    require_report(verify_kdtl_defining(2));
}

TEST_CASE("secondary relations, levels <= 2") { require_report(verify_secondary(2)); }

TEST_CASE("rung relations, levels <= 2") { require_report(verify_rungs(2)); }

TEST_CASE("rewiring identities, levels <= 2") { require_report(verify_rewire(2)); }

TEST_CASE("kappa squared decomposition, inclusion levels <= 2") {
    require_report(kirby_square(0, 0, 2));
    require_report(kirby_square(1, 0, 2));
}

TEST_CASE("kappa tensor c^n idempotents, n <= 2") {
    require_report(tensor_with_kirby(0, 2));
    require_report(tensor_with_kirby(1, 2));
    require_report(tensor_with_kirby(2, 2));
}

TEST_CASE("projector decomposition against the kirby strand") {
    require_report(pn_times_kirby_decomp(1, 2));
    require_report(pn_times_kirby_decomp(2, 2));
}

TEST_CASE("two representatives of zero agree in the completion") {
    // kappa-dot squared written two ways on kappa_0: z^2 after iota_2 versus
    // iota_2 after z^2 (both vanish only when... they are equal, and equal
    // to the kdot^2 expression)
    KExpr a = KExpr::single(kdetail::blacks(1),
                            KStack{{{KFactor::make_iota(1)},
                                    {KFactor::make_kdot()},
                                    {KFactor::make_kdot()}}});
    KExpr b = KExpr::single(
        kdetail::blacks(1),
        KStack{{{KFactor::make_black(kdetail::z_pow_morphism(1, 2))},
                {KFactor::make_iota(1)}}});
    REQUIRE(kdtl_equal_at(a, b, {}));
    // z_1^2 = 0, so both are representatives of the zero morphism
    KExpr zero;
    zero.source = kdetail::blacks(1);
    REQUIRE(kdtl_equal_at(a, zero, {}));
}
