#pragma once

// The polynomial representation Pol: c^n is sent to the space of square-free
// monomials in x_1..x_n (each of degree 2, with a global shift of -n), a dot
// acts by multiplication, the cap kills 1 and x_1x_2 and sends either single
// variable to 1, and the cup sends 1 to x_1 + x_2. Pol is faithful; the
// pairing-basis machinery below certifies this at any finite size by
// exhibiting a unitriangular pairing matrix, and doubles as an independent
// oracle for the diagram rewriter.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "dtl/diagram.hpp"
#include "dtl/graded.hpp"

namespace dtl {

// Square-free monomials on n variables, encoded as bitmasks (bit i-1 is
// x_i). Basis order: by cardinality, then lexicographic on sorted index
// lists. Degree of a monomial with t variables is 2t - n.
class MonomialSpace {
public:
    explicit MonomialSpace(int n) : n_(n) {
        basis_.resize(size_t(1) << n);
        std::iota(basis_.begin(), basis_.end(), 0u);
        std::stable_sort(basis_.begin(), basis_.end(), [](uint32_t a, uint32_t b) {
            int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
            if (pa != pb) return pa < pb;
            return index_list(a) < index_list(b);
        });
        index_of_.assign(size_t(1) << n, 0);
        for (size_t i = 0; i < basis_.size(); ++i) index_of_[basis_[i]] = i;
    }

    int vars() const { return n_; }
    size_t dim() const { return basis_.size(); }
    uint32_t mask_at(size_t i) const { return basis_[i]; }
    size_t index_of(uint32_t mask) const { return index_of_[mask]; }
    int degree_of_mask(uint32_t mask) const { return 2 * __builtin_popcount(mask) - n_; }

    static std::vector<int> index_list(uint32_t mask) {
        std::vector<int> v;
        for (int i = 0; mask; ++i, mask >>= 1)
            if (mask & 1) v.push_back(i + 1);
        return v;
    }

    static std::string monomial_name(uint32_t mask) {
        if (mask == 0) return "1";
        std::string s;
        for (int i = 0; (1u << i) <= mask; ++i) {
            if (mask & (1u << i)) {
                if (!s.empty()) s += "*";
                s += "x" + std::to_string(i + 1);
            }
        }
        return s;
    }

    GradedSpace graded_space() const {
        GradedSpace g;
        g.labels.reserve(dim());
        g.degrees.reserve(dim());
        for (uint32_t m : basis_) {
            g.labels.push_back(monomial_name(m));
            g.degrees.push_back(degree_of_mask(m));
        }
        return g;
    }

private:
    int n_;
    std::vector<uint32_t> basis_;
    std::vector<size_t> index_of_;
};

namespace detail {

// Evaluate one basis diagram on one input monomial, distributing over
// undotted cups; calls sink(output_mask) once per branch (coefficient +1).
template <typename Sink>
inline void pol_apply_diagram(const NormalDiagram& d, uint32_t input, Sink&& sink) {
    int m = d.sig.bottom, n = d.sig.top;
    // classify arcs once
    uint32_t out_base = 0;
    std::vector<std::pair<int, int>> cup_choices;  // (top j1, top j2) for undotted cups
    for (int p = 0; p < d.points(); ++p) {
        if (d.mate[p] <= p) continue;
        int q = d.mate[p];
        int dot = d.dots[p];
        bool p_bot = p < m, q_bot = q < m;
        auto top_index = [&](int bent) { return n - (bent - m); };  // 1-based
        if (p_bot && q_bot) {
            int t = ((input >> p) & 1) + ((input >> q) & 1) + dot;
            if (t != 1) return;  // cap evaluates to zero on this branch
        } else if (p_bot != q_bot) {
            int bot = p_bot ? p : q;
            int top = p_bot ? q : p;
            int e = ((input >> bot) & 1) + dot;
            if (e >= 2) return;
            if (e == 1) out_base |= 1u << (top_index(top) - 1);
        } else {
            int j1 = top_index(p), j2 = top_index(q);
            if (dot >= 2) return;
            if (dot == 1) {
                out_base |= (1u << (j1 - 1)) | (1u << (j2 - 1));
            } else {
                cup_choices.push_back({j1, j2});
            }
        }
    }
    size_t branches = size_t(1) << cup_choices.size();
    for (size_t b = 0; b < branches; ++b) {
        uint32_t out = out_base;
        for (size_t i = 0; i < cup_choices.size(); ++i) {
            int j = (b >> i) & 1 ? cup_choices[i].second : cup_choices[i].first;
            out |= 1u << (j - 1);
        }
        sink(out);
    }
}

}  // namespace detail

// The matrix of Pol(f) with respect to the canonical monomial bases.
inline SparseMatrix pol(const DTLMorphism& f) {
    MonomialSpace dom(f.sig().bottom), cod(f.sig().top);
    SparseMatrix mat(dom.graded_space(), cod.graded_space());
    for (const auto& [d, c] : f.terms()) {
        for (size_t col = 0; col < dom.dim(); ++col) {
            uint32_t input = dom.mask_at(col);
            detail::pol_apply_diagram(d, input, [&](uint32_t out) {
                mat.add_entry(cod.index_of(out), col, c);
            });
        }
    }
    int deg;
    if (f.homogeneous(&deg)) mat.assert_degree(deg);
    return mat;
}

// Kronecker product of pol matrices expressed in the combined monomial
// basis, under the canonical identification Pol(m1+m2) = Pol(m1) (x) Pol(m2)
// with the second factor's variables shifted up by m1.
inline SparseMatrix pol_tensor(const SparseMatrix& a, const SparseMatrix& b, Signature sa,
                               Signature sb) {
    MonomialSpace da(sa.bottom), ca(sa.top), db(sb.bottom), cb(sb.top);
    MonomialSpace dom(sa.bottom + sb.bottom), cod(sa.top + sb.top);
    SparseMatrix out(dom.graded_space(), cod.graded_space());
    for (const auto& [rc1, v1] : a.entries()) {
        uint32_t r1 = ca.mask_at(rc1.first), c1 = da.mask_at(rc1.second);
        for (const auto& [rc2, v2] : b.entries()) {
            uint32_t r2 = cb.mask_at(rc2.first), c2 = db.mask_at(rc2.second);
            out.set_entry(cod.index_of(r1 | (r2 << sa.top)),
                          dom.index_of(c1 | (c2 << sa.bottom)), v1 * v2);
        }
    }
    if (a.degree() && b.degree()) out.assert_degree(*a.degree() + *b.degree());
    return out;
}

// Evaluate a closed morphism c^k -> c^0 on a single monomial.
inline Rational pol_evaluate_closed(const DTLMorphism& f, uint32_t input) {
    if (f.sig().top != 0) throw std::invalid_argument("pol_evaluate_closed: target not c^0");
    Rational total(0);
    for (const auto& [d, c] : f.terms()) {
        detail::pol_apply_diagram(d, input, [&](uint32_t) { total += c; });
    }
    return total;
}

// ---------------------------------------------------------------------------
// the pairing basis
// ---------------------------------------------------------------------------

struct PairingElement {
    NormalDiagram diagram;   // element of the basis B of Hom(c^k, c^0)
    uint32_t dual_monomial;  // its dual square-free monomial, as a bitmask
};

namespace detail {

inline void enumerate_matchings(int k, std::vector<int>& mate, std::vector<char>& used,
                                std::vector<std::vector<int>>& out) {
    int first = -1;
    for (int i = 0; i < k; ++i)
        if (!used[i]) {
            first = i;
            break;
        }
    if (first < 0) {
        out.push_back(mate);
        return;
    }
    used[first] = 1;
    for (int j = first + 1; j < k; ++j) {
        if (used[j] || (j - first) % 2 == 0) continue;
        // partner must leave both enclosed and outside regions even and
        // unentangled; planarity is guaranteed by the recursion structure
        used[j] = 1;
        mate[first] = j;
        mate[j] = first;
        enumerate_matchings(k, mate, used, out);
        used[j] = 0;
    }
    used[first] = 0;
}

}  // namespace detail

// Enumerate the basis B of Hom(c^k, c^0): non-crossing perfect matchings
// with dots on a subset of the outermost arcs. For each element the dual
// monomial takes x_a for every undotted cap with endpoints a < b, nothing
// for dotted caps. Pairs are returned in increasing order of the proof's
// total order (monomial degree, then lexicographic with x1 > x2 > ...).
inline std::vector<PairingElement> pairing_basis(int k) {
    std::vector<PairingElement> result;
    if (k % 2 != 0 || k < 0) return result;
    if (k == 0) {
        NormalDiagram d;
        d.sig = {0, 0};
        result.push_back({d, 0});
        return result;
    }
    std::vector<std::vector<int>> matchings;
    std::vector<int> mate(k, -1);
    std::vector<char> used(k, 0);
    detail::enumerate_matchings(k, mate, used, matchings);
    for (const auto& mm : matchings) {
        NormalDiagram base;
        base.sig = {k, 0};
        base.mate = mm;
        base.dots.assign(k, 0);
        RawDiagram raw{base.sig, base.mate, std::vector<int>(k, 0), {}};
        if (!raw.planar()) continue;
        std::vector<int> depth = raw.arc_depths();
        std::vector<int> outer;
        for (int p = 0; p < k; ++p)
            if (mm[p] > p && depth[p] == 0) outer.push_back(p);
        for (size_t s = 0; s < (size_t(1) << outer.size()); ++s) {
            NormalDiagram d = base;
            for (size_t i = 0; i < outer.size(); ++i)
                if ((s >> i) & 1) d.dots[outer[i]] = 1;
            uint32_t mono = 0;
            for (int p = 0; p < k; ++p)
                if (mm[p] > p && !d.dots[p]) mono |= 1u << p;  // x_{p+1}
            result.push_back({d, mono});
        }
    }
    // Order: by degree, then descending in the proof's monomial order
    // (x1 > x2 > ...), which is ascending lex on sorted index lists. A
    // nonzero pairing d_i(dual_j) forces deg = deg and dual_i >= dual_j in
    // the monomial order, so this listing makes the matrix unitriangular
    // with zeros below the diagonal.
    std::sort(result.begin(), result.end(), [](const PairingElement& a, const PairingElement& b) {
        int da = __builtin_popcount(a.dual_monomial), db = __builtin_popcount(b.dual_monomial);
        if (da != db) return da < db;
        return MonomialSpace::index_list(a.dual_monomial) <
               MonomialSpace::index_list(b.dual_monomial);
    });
    return result;
}

// Greedy reconstruction of a basis diagram from its dual monomial: repeatedly
// place an undotted cap (j, j+1) at the largest remaining variable index,
// then fill the leftover points with unnested dotted caps.
inline NormalDiagram pairing_greedy(int k, uint32_t mono) {
    NormalDiagram d;
    d.sig = {k, 0};
    d.mate.assign(k, -1);
    d.dots.assign(k, 0);
    std::vector<char> free_point(k, 1);
    auto vars = MonomialSpace::index_list(mono);
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
        int a = *it - 1;  // 0-based boundary point
        if (a < 0 || a >= k || !free_point[a])
            throw std::invalid_argument("pairing_greedy: monomial not admissible");
        int b = a + 1;
        while (b < k && !free_point[b]) ++b;
        if (b >= k) throw std::invalid_argument("pairing_greedy: monomial not admissible");
        d.mate[a] = b;
        d.mate[b] = a;
        free_point[a] = free_point[b] = 0;
    }
    // remaining points get dotted caps, none nested: match consecutively
    int prev = -1;
    for (int p = 0; p < k; ++p) {
        if (!free_point[p]) continue;
        if (prev < 0) {
            prev = p;
        } else {
            d.mate[prev] = p;
            d.mate[p] = prev;
            d.dots[prev] = 1;
            free_point[prev] = free_point[p] = 0;
            prev = -1;
        }
    }
    if (prev >= 0) throw std::invalid_argument("pairing_greedy: odd leftover");
    RawDiagram raw{d.sig, d.mate, std::vector<int>(d.dots.begin(), d.dots.end()), {}};
    if (!raw.planar()) throw std::logic_error("pairing_greedy: reconstruction not planar");
    return d;
}

// The matrix (d_i(dual_j)) over the proof's total order.
inline SparseMatrix pairing_matrix(int k) {
    auto basis = pairing_basis(k);
    size_t N = basis.size();
    GradedSpace idx;
    idx.labels.assign(N, "");
    idx.degrees.assign(N, 0);
    for (size_t i = 0; i < N; ++i) idx.labels[i] = std::to_string(i);
    SparseMatrix m(idx, idx);
    for (size_t i = 0; i < N; ++i) {
        DTLMorphism di(basis[i].diagram);
        for (size_t j = 0; j < N; ++j) {
            Rational v = pol_evaluate_closed(di, basis[j].dual_monomial);
            if (!v.is_zero()) m.set_entry(i, j, v);
        }
    }
    return m;
}

inline bool is_unitriangular(const SparseMatrix& m) {
    size_t N = m.rows();
    if (m.cols() != N) return false;
    for (size_t i = 0; i < N; ++i)
        if (m.entry(i, i) != Rational(1)) return false;
    for (const auto& [rc, v] : m.entries()) {
        (void)v;
        if (rc.first > rc.second) return false;
    }
    return true;
}

// Faithfulness certificate: Hom(c^m, c^n) -> matrices is injective iff the
// pairing matrix for k = m + n is unitriangular under the proof's order.
inline bool pol_is_injective(int m, int n) {
    if ((m + n) % 2 != 0) return true;  // zero space
    return is_unitriangular(pairing_matrix(m + n));
}

// dim Hom(c^m, c^n) = |B(m+n)|
inline size_t hom_dimension(int m, int n) {
    if ((m + n) % 2 != 0) return 0;
    return pairing_basis(m + n).size();
}

}  // namespace dtl
