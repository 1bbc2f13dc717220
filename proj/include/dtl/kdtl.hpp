#pragma once

// The diagrammatic category with Kirby-object strands adjoined.
//
// Objects are words over {black strand, kappa_0, kappa_1}. Morphisms are
// layered expressions in the generators: dTL morphisms on black strands,
// the inclusions iota_n : c^n -> kappa_{n mod 2}, the product
// mu : kappa_i (x) kappa_j -> kappa_{i+j}, and the degree-2 kappa-dot.
//
// Everything is computed by evaluating expressions bottom-to-top against a
// state (D, blocks): D is a dTL morphism out of the realized source and the
// blocks partition its top strands into black strands and kappa windows
// carrying a realization level. Two modes:
//   reduce: the rewriter. iota absorbs window cups (undotted kills the
//           term, dotted lowers the level), mu concatenates windows,
//           kappa-dot applies the alternating dot sum. The result is the
//           iota-after-diagram normal form.
//   phi:    the evaluation functor into the Karoubi envelope. iota inserts
//           a projector, mu raises both windows to a common excess via
//           dotted-cup transitions and applies the big projector.
// Equality in the completion is tested by evaluating against canonical
// source inclusions up to a level bound and comparing after raising to a
// common target realization.

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "dtl/diagram.hpp"
#include "dtl/karoubi.hpp"
#include "dtl/report.hpp"

namespace dtl {

// word letters: -1 = black strand, 0/1 = kappa_i
using KWord = std::vector<int>;

struct KFactor {
    enum Kind { Black, Iota, Mu, KDot, KappaId } kind = Black;
    DTLMorphism black;
    int n = 0;  // strands consumed by Iota

    static KFactor make_black(DTLMorphism m) {
        KFactor f;
        f.kind = Black;
        f.black = std::move(m);
        return f;
    }
    static KFactor make_iota(int n) {
        KFactor f;
        f.kind = Iota;
        f.n = n;
        return f;
    }
    static KFactor make_mu() {
        KFactor f;
        f.kind = Mu;
        return f;
    }
    static KFactor make_kdot() {
        KFactor f;
        f.kind = KDot;
        return f;
    }
    static KFactor make_kid() {
        KFactor f;
        f.kind = KappaId;
        return f;
    }
};

using KLayer = std::vector<KFactor>;

struct KStack {
    std::vector<KLayer> layers;  // bottom to top
};

struct KTerm {
    Rational coeff;
    KStack stack;
};

struct KExpr {
    KWord source;
    std::vector<KTerm> terms;

    static KExpr single(KWord src, KStack stack, Rational c = Rational(1)) {
        KExpr e;
        e.source = std::move(src);
        e.terms.push_back({std::move(c), std::move(stack)});
        return e;
    }
    KExpr& add(KStack stack, Rational c) {
        terms.push_back({std::move(c), std::move(stack)});
        return *this;
    }
};

struct KBlock {
    bool kappa = false;
    int level = 0;  // width for kappa windows; black blocks have width 1

    int width() const { return kappa ? level : 1; }
    bool operator==(const KBlock& o) const { return kappa == o.kappa && level == o.level; }
};

struct KEval {
    Rational coeff;
    DTLMorphism D;
    std::vector<KBlock> blocks;

    int top_width() const {
        int w = 0;
        for (const auto& b : blocks) w += b.width();
        return w;
    }
};

namespace kdetail {

inline DTLMorphism apply_on_range(const DTLMorphism& D, int lo, int total, const DTLMorphism& X) {
    // compose (id_lo (x) X (x) id_rest) o D
    int rest = total - lo - X.sig().bottom;
    if (rest < 0) throw std::logic_error("apply_on_range: window out of range");
    DTLMorphism layer = tensor(tensor(identity_morphism(lo), X), identity_morphism(rest));
    return compose(layer, D);
}

// the dotted-cup transition realizer U_a : c^a -> c^{a+2} with its projector
inline DTLMorphism u_realizer(int a) {
    return compose(jones_wenzl(a + 2), tensor(identity_morphism(a), cup(1)));
}

// Delete window-internal cups of a single diagram: undotted cups kill the
// term, dotted cups are absorbed. Returns false when the term dies;
// otherwise strips the cups from `d` and counts them in `absorbed`.
inline bool absorb_window_cups(NormalDiagram& d, int win_top_lo, int win_width, int& absorbed) {
    absorbed = 0;
    while (true) {
        int m = d.sig.bottom, n = d.sig.top;
        int width = win_width - 2 * absorbed;
        // bent coordinates of the window's top range [win_top_lo+1 .. +width]
        // top index j has bent coordinate m + n - j
        int bent_lo = m + n - (win_top_lo + width);
        int bent_hi = m + n - (win_top_lo + 1);
        int found = -1;
        for (int p = bent_lo; p <= bent_hi; ++p) {
            int q = d.mate[p];
            if (q == p + 1 && q <= bent_hi) {  // adjacent pair fully in window
                found = p;
                break;
            }
        }
        if (found < 0) return true;
        int dots = d.dots[found];
        if (dots == 0) return false;  // undotted cup into iota kills the term
        // delete the two points and renumber
        NormalDiagram nd;
        nd.sig = {d.sig.bottom, d.sig.top - 2};
        nd.mate.assign(d.points() - 2, -1);
        nd.dots.assign(d.points() - 2, 0);
        auto newpos = [&](int p) { return p < found ? p : p - 2; };
        for (int p = 0; p < d.points(); ++p) {
            if (p == found || p == found + 1) continue;
            int q = d.mate[p];
            if (q == found || q == found + 1) throw std::logic_error("absorb: dangling mate");
            if (q > p) {
                int u = newpos(p), v = newpos(q);
                nd.mate[u] = v;
                nd.mate[v] = u;
                nd.dots[std::min(u, v)] = d.dots[std::min(p, q)];
            }
        }
        d = nd;
        ++absorbed;
    }
}

}  // namespace kdetail

// raise a kappa window by one dotted-cup transition (phi semantics)
inline void kdtl_raise_block(KEval& st, size_t block_index) {
    int lo = 0;
    for (size_t i = 0; i < block_index; ++i) lo += st.blocks[i].width();
    int a = st.blocks[block_index].level;
    if (!st.blocks[block_index].kappa) throw std::invalid_argument("raise: not a kappa block");
    st.D = kdetail::apply_on_range(st.D, lo, st.top_width(), kdetail::u_realizer(a));
    st.blocks[block_index].level = a + 2;
}

// evaluate an expression; `source_levels` assigns a realization level to
// each kappa letter of the source word (parity must match)
inline std::vector<KEval> kdtl_evaluate(const KExpr& expr, const std::vector<int>& source_levels,
                                        bool phi_mode) {
    // initial blocks from the source word
    std::vector<KBlock> init_blocks;
    size_t kl = 0;
    int total = 0;
    for (int letter : expr.source) {
        if (letter < 0) {
            init_blocks.push_back({false, 1});
            total += 1;
        } else {
            if (kl >= source_levels.size())
                throw std::invalid_argument("kdtl_evaluate: missing source level");
            int lv = source_levels[kl++];
            if ((lv - letter) % 2 != 0)
                throw std::invalid_argument("kdtl_evaluate: source level parity mismatch");
            init_blocks.push_back({true, lv});
            total += lv;
        }
    }
    if (kl != source_levels.size())
        throw std::invalid_argument("kdtl_evaluate: too many source levels");

    std::vector<KEval> out;
    for (const auto& term : expr.terms) {
        std::vector<KEval> states;
        {
            KEval st;
            st.coeff = term.coeff;
            st.D = identity_morphism(total);
            st.blocks = init_blocks;
            // in phi mode the source inclusions carry their projectors
            if (phi_mode) {
                int lo = 0;
                for (const auto& b : st.blocks) {
                    if (b.kappa && b.level >= 2)
                        st.D = kdetail::apply_on_range(st.D, lo, total, jones_wenzl(b.level));
                    lo += b.width();
                }
            }
            states.push_back(std::move(st));
        }
        for (const auto& layer : term.stack.layers) {
            std::vector<KEval> next;
            for (auto& st : states) {
                if (st.D.is_zero()) continue;
                // assemble the layer as one tensor; iota windows in reduce
                // mode are handled afterwards. phi(mu) at realization levels
                // (a, b) is the class of the inclusion at level a+b, by the
                // multiplicativity of the inclusions, so mu simply projects
                // the concatenated windows.
                DTLMorphism layer_m = identity_morphism(0);
                std::vector<KBlock> new_blocks;
                struct PendingIota {
                    int top_lo;
                    int width;
                    size_t block_index;
                };
                std::vector<PendingIota> pending;
                size_t bi = 0;
                int in_lo = 0, out_lo = 0;
                for (const auto& f : layer) {
                    switch (f.kind) {
                        case KFactor::Black: {
                            int consume = f.black.sig().bottom;
                            for (int s = 0; s < consume; ++s) {
                                if (bi >= st.blocks.size() || st.blocks[bi].kappa)
                                    throw std::invalid_argument("black factor on kappa block");
                                ++bi;
                            }
                            layer_m = tensor(layer_m, f.black);
                            for (int s = 0; s < f.black.sig().top; ++s)
                                new_blocks.push_back({false, 1});
                            in_lo += consume;
                            out_lo += f.black.sig().top;
                            break;
                        }
                        case KFactor::Iota: {
                            for (int s = 0; s < f.n; ++s) {
                                if (bi >= st.blocks.size() || st.blocks[bi].kappa)
                                    throw std::invalid_argument("iota factor on kappa block");
                                ++bi;
                            }
                            if (phi_mode && f.n >= 2) {
                                layer_m = tensor(layer_m, jones_wenzl(f.n));
                            } else {
                                layer_m = tensor(layer_m, identity_morphism(f.n));
                            }
                            if (!phi_mode)
                                pending.push_back({out_lo, f.n, new_blocks.size()});
                            new_blocks.push_back({true, f.n});
                            in_lo += f.n;
                            out_lo += f.n;
                            break;
                        }
                        case KFactor::Mu: {
                            if (bi + 1 >= st.blocks.size() || !st.blocks[bi].kappa ||
                                !st.blocks[bi + 1].kappa)
                                throw std::invalid_argument("mu: needs two kappa blocks");
                            int a = st.blocks[bi].level, b = st.blocks[bi + 1].level;
                            if (phi_mode) {
                                layer_m = tensor(layer_m, jones_wenzl(a + b));
                            } else {
                                layer_m = tensor(layer_m, identity_morphism(a + b));
                            }
                            new_blocks.push_back({true, a + b});
                            bi += 2;
                            in_lo += a + b;
                            out_lo += a + b;
                            break;
                        }
                        case KFactor::KDot: {
                            if (bi >= st.blocks.size() || !st.blocks[bi].kappa)
                                throw std::invalid_argument("kdot: needs a kappa block");
                            int a = st.blocks[bi].level;
                            layer_m = tensor(layer_m, central_z(a));
                            new_blocks.push_back({true, a});
                            bi += 1;
                            in_lo += a;
                            out_lo += a;
                            break;
                        }
                        case KFactor::KappaId: {
                            if (bi >= st.blocks.size() || !st.blocks[bi].kappa)
                                throw std::invalid_argument("kappa id: needs a kappa block");
                            int a = st.blocks[bi].level;
                            layer_m = tensor(layer_m, identity_morphism(a));
                            new_blocks.push_back({true, a});
                            bi += 1;
                            in_lo += a;
                            out_lo += a;
                            break;
                        }
                    }
                }
                if (bi != st.blocks.size())
                    throw std::invalid_argument("layer does not cover the object");
                KEval ns;
                ns.coeff = st.coeff;
                ns.D = compose(layer_m, st.D);
                ns.blocks = new_blocks;
                if (pending.empty()) {
                    next.push_back(std::move(ns));
                } else {
                    // reduce-mode iota: absorb window cups term by term,
                    // splitting states by the resulting levels
                    std::map<std::vector<int>, KEval> grouped;
                    for (const auto& [d, c] : ns.D.terms()) {
                        NormalDiagram cur = d;
                        std::vector<int> levels;
                        bool alive = true;
                        int shift = 0;
                        for (const auto& p : pending) {
                            int absorbed = 0;
                            if (!kdetail::absorb_window_cups(cur, p.top_lo - shift, p.width,
                                                             absorbed)) {
                                alive = false;
                                break;
                            }
                            levels.push_back(p.width - 2 * absorbed);
                            shift += 2 * absorbed;
                        }
                        if (!alive) continue;
                        auto it = grouped.find(levels);
                        if (it == grouped.end()) {
                            KEval g;
                            g.coeff = ns.coeff;
                            g.blocks = ns.blocks;
                            for (size_t pi = 0; pi < pending.size(); ++pi)
                                g.blocks[pending[pi].block_index].level = levels[pi];
                            g.D = DTLMorphism(cur.sig);
                            g.D.add_term(cur, c);
                            grouped.emplace(levels, std::move(g));
                        } else {
                            it->second.D.add_term(cur, c);
                        }
                    }
                    for (auto& [lv, g] : grouped) {
                        (void)lv;
                        if (!g.D.is_zero()) next.push_back(std::move(g));
                    }
                }
            }
            states = std::move(next);
        }
        for (auto& st : states)
            if (!st.D.is_zero()) out.push_back(std::move(st));
    }
    return out;
}

// the rewriter: normal form iota o D for a finite-source expression
inline std::vector<KEval> kdtl_reduce(const KExpr& expr) {
    for (int letter : expr.source)
        if (letter >= 0)
            throw std::invalid_argument(
                "kdtl_reduce: infinite-source expression; evaluate against inclusions instead");
    return kdtl_evaluate(expr, {}, false);
}

inline std::vector<KEval> evaluate_phi(const KExpr& expr, const std::vector<int>& levels) {
    return kdtl_evaluate(expr, levels, true);
}

// wrap a reduce-mode state with its window projectors (phi of the normal form)
inline KEval phi_of_reduced(const KEval& st) {
    KEval r = st;
    int lo = 0;
    for (const auto& b : st.blocks) {
        if (b.kappa && b.level >= 2)
            r.D = kdetail::apply_on_range(r.D, lo, r.top_width(), jones_wenzl(b.level));
        lo += b.width();
    }
    return r;
}

// Sum evaluated states into a single dTL morphism after raising every kappa
// window to the prescribed target levels.
inline DTLMorphism kdtl_collect(std::vector<KEval> states, const std::vector<int>& target_levels,
                                const std::vector<KBlock>& target_blocks) {
    int total = 0;
    for (const auto& b : target_blocks) total += b.width();
    DTLMorphism sum(Signature{0, 0});
    bool first = true;
    for (auto& st : states) {
        if (st.blocks.size() != target_blocks.size())
            throw std::invalid_argument("kdtl_collect: block structure mismatch");
        size_t ki = 0;
        for (size_t i = 0; i < st.blocks.size(); ++i) {
            if (st.blocks[i].kappa != target_blocks[i].kappa)
                throw std::invalid_argument("kdtl_collect: block kind mismatch");
            if (st.blocks[i].kappa) {
                int want = target_levels[ki++];
                while (st.blocks[i].level < want) kdtl_raise_block(st, i);
                if (st.blocks[i].level != want)
                    throw std::invalid_argument("kdtl_collect: cannot reach target level");
            }
        }
        DTLMorphism v = st.D * st.coeff;
        if (first) {
            sum = v;
            first = false;
        } else {
            sum += v;
        }
    }
    if (first) {
        // no surviving states: the zero morphism onto the target realization
        Signature sig{0, total};
        return DTLMorphism(sig);
    }
    return sum;
}

// Compare two expressions evaluated at fixed source levels: raise both
// sides' targets to a common realization (plus optional slack) and compare
// the resulting dTL morphisms exactly.
inline bool kdtl_equal_at(const KExpr& a, const KExpr& b, const std::vector<int>& source_levels,
                          int slack = 0, std::string* why = nullptr) {
    auto ea = evaluate_phi(a, source_levels);
    auto eb = evaluate_phi(b, source_levels);
    // determine the common block structure
    std::vector<KBlock> blocks;
    if (!ea.empty()) {
        blocks = ea[0].blocks;
    } else if (!eb.empty()) {
        blocks = eb[0].blocks;
    } else {
        return true;  // both evaluate to zero
    }
    for (const auto& st : ea)
        if (st.blocks.size() != blocks.size()) {
            if (why) *why = "block structure mismatch";
            return false;
        }
    for (const auto& st : eb)
        if (st.blocks.size() != blocks.size()) {
            if (why) *why = "block structure mismatch";
            return false;
        }
    std::vector<int> targets;
    for (size_t i = 0; i < blocks.size(); ++i) {
        if (!blocks[i].kappa) continue;
        int mx = 0;
        for (const auto& st : ea) mx = std::max(mx, st.blocks[i].level);
        for (const auto& st : eb) mx = std::max(mx, st.blocks[i].level);
        targets.push_back(mx + 2 * slack);
    }
    std::vector<KBlock> tb = blocks;
    {
        size_t ki = 0;
        for (auto& x : tb)
            if (x.kappa) x.level = targets[ki++];
    }
    DTLMorphism va = kdtl_collect(ea, targets, tb);
    DTLMorphism vb = kdtl_collect(eb, targets, tb);
    if (va.sig() != vb.sig()) {
        // one side may be the zero morphism with unknown width
        if (va.is_zero() && vb.is_zero()) return true;
        if (why) *why = "signature mismatch";
        return false;
    }
    bool eq = (va == vb);
    if (!eq && why) *why = "morphisms differ at the common realization";
    return eq;
}

// enumerate all parity-matching source level assignments <= bound and
// compare; this is equality in the completed category through the bound
inline bool completed_equal(const KExpr& a, const KExpr& b, int level_bound, int slack = 0,
                            std::string* witness = nullptr) {
    std::vector<int> kappas;
    for (int letter : a.source)
        if (letter >= 0) kappas.push_back(letter);
    std::vector<int> levels(kappas.size());
    std::function<bool(size_t)> go = [&](size_t i) -> bool {
        if (i == kappas.size()) {
            std::string why;
            if (!kdtl_equal_at(a, b, levels, slack, &why)) {
                if (witness) {
                    *witness = "levels (";
                    for (size_t t = 0; t < levels.size(); ++t)
                        *witness += (t ? "," : "") + std::to_string(levels[t]);
                    *witness += "): " + why;
                }
                return false;
            }
            return true;
        }
        for (int lv = kappas[i]; lv <= level_bound; lv += 2) {
            levels[i] = lv;
            if (!go(i + 1)) return false;
        }
        return true;
    };
    return go(0);
}

}  // namespace dtl
