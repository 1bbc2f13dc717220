#pragma once

// Polynomial-representation calculus in z-power coordinates.
//
// Pol(P_n) is the subspace of K[x_1..x_n]/(x_i^2) spanned by the powers of
// z = x_1 - x_2 + ... +- x_n, so morphisms between projector objects act on
// (n+1)-dimensional spaces. Two closed forms make this effective at sizes
// where the projectors themselves are far too large to expand:
//   expand:  z^j = j! sum_{|S|=j} sgn(S) x_S, with sgn(S) = (-1)^{sum (i-1)}
//   project: pol(JW_n)(x_S) = sgn(S) ((n-j)!/n!) z^j  for |S| = j.
// Sandwiched morphisms JW_n o X o JW_m are then represented by small
// matrices acting on z-powers, computed by expanding, applying pol(X), and
// projecting. Since Pol is faithful, equality of these matrices certifies
// equality of the morphisms.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "dtl/diagram.hpp"
#include "dtl/polyrep.hpp"

namespace dtl {

// sparse element of K[x_1..x_m]/(x_i^2)
using MonoVec = std::map<uint32_t, Rational>;

inline int mask_sign_exponent(uint32_t mask) {
    int e = 0;
    for (int i = 0; mask; ++i, mask >>= 1)
        if (mask & 1) e += i;  // x_{i+1} contributes i
    return e;
}

// z_m^j expanded in the monomial basis
inline MonoVec z_power_expand(int m, int j) {
    MonoVec v;
    if (j < 0 || j > m) return v;
    Rational jf = Rational::factorial(j);
    uint32_t mask = (j == 0) ? 0u : ((1u << j) - 1);
    if (j == 0) {
        v[0] = Rational(1);
        return v;
    }
    // iterate over all size-j subsets of {0..m-1}
    while (true) {
        v[mask] = jf * sign_pow(mask_sign_exponent(mask));
        // Gosper's hack for the next subset of the same size
        uint32_t c = mask & (~mask + 1);
        uint32_t r = mask + c;
        uint32_t next = (((r ^ mask) >> 2) / c) | r;
        if (next >= (1u << m)) break;
        mask = next;
    }
    return v;
}

// project through pol(JW_m) and express in z-power coordinates
inline std::vector<Rational> jw_project(int m, const MonoVec& v) {
    std::vector<Rational> out(m + 1, Rational(0));
    Rational mf = Rational::factorial(m);
    for (const auto& [mask, c] : v) {
        int j = __builtin_popcount(mask);
        if (j > m) throw std::invalid_argument("jw_project: mask out of range");
        out[j] += c * sign_pow(mask_sign_exponent(mask)) * Rational::factorial(m - j) *
                  mf.inverse();
    }
    return out;
}

// apply pol of a dTL morphism to a sparse polynomial vector
inline MonoVec pol_apply(const DTLMorphism& f, const MonoVec& v) {
    MonoVec out;
    for (const auto& [mask, coeff] : v) {
        for (const auto& [d, c] : f.terms()) {
            Rational w = coeff * c;
            detail::pol_apply_diagram(d, mask, [&](uint32_t res) {
                auto it = out.find(res);
                if (it == out.end()) {
                    out[res] = w;
                } else {
                    it->second += w;
                    if (it->second.is_zero()) out.erase(it);
                }
            });
        }
    }
    return out;
}

// A morphism P_m -> P_n in z-power coordinates: a (n+1) x (m+1) matrix
// acting on z-powers, together with the raw q-degree of the underlying
// morphism (shifts are bookkept by the callers).
struct ZMorphism {
    int src_n = 0;
    int tgt_n = 0;
    int degree = 0;
    std::vector<std::vector<Rational>> mat;  // mat[i][j]: z^j -> mat[i][j] z^i

    ZMorphism() {}
    ZMorphism(int s, int t, int deg)
        : src_n(s), tgt_n(t), degree(deg),
          mat(t + 1, std::vector<Rational>(s + 1, Rational(0))) {}

    static ZMorphism identity(int n) {
        ZMorphism z(n, n, 0);
        for (int i = 0; i <= n; ++i) z.mat[i][i] = Rational(1);
        return z;
    }

    bool is_zero() const {
        for (const auto& row : mat)
            for (const auto& v : row)
                if (!v.is_zero()) return false;
        return true;
    }

    bool operator==(const ZMorphism& o) const {
        return src_n == o.src_n && tgt_n == o.tgt_n && mat == o.mat;
    }
    bool operator!=(const ZMorphism& o) const { return !(*this == o); }

    ZMorphism operator*(const Rational& c) const {
        ZMorphism r = *this;
        for (auto& row : r.mat)
            for (auto& v : row) v = v * c;
        return r;
    }

    ZMorphism operator+(const ZMorphism& o) const {
        if (src_n != o.src_n || tgt_n != o.tgt_n)
            throw std::invalid_argument("ZMorphism: shape mismatch");
        ZMorphism r = *this;
        for (int i = 0; i <= tgt_n; ++i)
            for (int j = 0; j <= src_n; ++j) r.mat[i][j] += o.mat[i][j];
        return r;
    }

    std::vector<Rational> apply(const std::vector<Rational>& v) const {
        std::vector<Rational> out(tgt_n + 1, Rational(0));
        for (int i = 0; i <= tgt_n; ++i)
            for (int j = 0; j <= src_n; ++j)
                if (!mat[i][j].is_zero() && !v[j].is_zero()) out[i] += mat[i][j] * v[j];
        return out;
    }
};

inline ZMorphism z_compose(const ZMorphism& f, const ZMorphism& g) {
    if (f.src_n != g.tgt_n) throw std::invalid_argument("z_compose: shape mismatch");
    ZMorphism r(g.src_n, f.tgt_n, f.degree + g.degree);
    for (int i = 0; i <= f.tgt_n; ++i)
        for (int k = 0; k <= f.src_n; ++k) {
            if (f.mat[i][k].is_zero()) continue;
            for (int j = 0; j <= g.src_n; ++j)
                if (!g.mat[k][j].is_zero()) r.mat[i][j] += f.mat[i][k] * g.mat[k][j];
        }
    return r;
}

// The z-matrix of JW_n o X o JW_m for a (small) dTL morphism X: expand each
// z-power, push it through pol(X), and project. X need not be sandwiched.
inline ZMorphism z_matrix_of(int m, int n, const DTLMorphism& X) {
    if (X.sig().bottom != m || X.sig().top != n)
        throw std::invalid_argument("z_matrix_of: signature mismatch");
    int deg;
    if (!X.homogeneous(&deg)) throw std::invalid_argument("z_matrix_of: inhomogeneous");
    ZMorphism out(m, n, deg);
    // raw polynomial degrees shift by (n - m) on top of the morphism degree,
    // matching the q^{-n} normalization of Pol(c^n)
    for (int j = 0; j <= m; ++j) {
        MonoVec zj = z_power_expand(m, j);
        std::vector<Rational> col = jw_project(n, pol_apply(X, zj));
        for (int i = 0; i <= n; ++i) {
            out.mat[i][j] = col[i];
            if (!col[i].is_zero() && 2 * i != 2 * j + deg + (n - m))
                throw std::logic_error("z_matrix_of: homogeneity violated");
        }
    }
    return out;
}

// transition U_m : P_m -> P_{m+2} (dotted cup under the projector)
inline ZMorphism z_gen_U(int m) {
    return z_matrix_of(m, m + 2, tensor(identity_morphism(m), cup(1)));
}

// D_m : P_m -> P_{m-2} with prefactor m(m-1)
inline ZMorphism z_gen_D(int m) {
    if (m < 2) throw std::invalid_argument("z_gen_D: requires m >= 2");
    return z_matrix_of(m, m - 2, tensor(identity_morphism(m - 2), cap(1))) *
           Rational((long long)m * (m - 1));
}

// z as an endomorphism of P_m: the shift z^j -> z^{j+1}
inline ZMorphism z_gen_z(int m) {
    ZMorphism out(m, m, 2);
    for (int j = 0; j + 1 <= m; ++j) out.mat[j + 1][j] = Rational(1);
    return out;
}

inline ZMorphism z_power(const ZMorphism& f, int k) {
    ZMorphism acc = ZMorphism::identity(f.src_n);
    for (int i = 0; i < k; ++i) acc = z_compose(f, acc);
    return acc;
}

// rank of the z-matrix (full rank = min shape when it equals that)
inline size_t z_rank(const ZMorphism& f) {
    GradedSpace dom, cod;
    dom.labels.assign(f.src_n + 1, "");
    dom.degrees.assign(f.src_n + 1, 0);
    cod.labels.assign(f.tgt_n + 1, "");
    cod.degrees.assign(f.tgt_n + 1, 0);
    SparseMatrix m(dom, cod);
    for (int i = 0; i <= f.tgt_n; ++i)
        for (int j = 0; j <= f.src_n; ++j)
            if (!f.mat[i][j].is_zero()) m.set_entry(i, j, f.mat[i][j]);
    return rank(m);
}

// Morphisms c^s -> P_n in z-coordinates: a (n+1) x 2^s matrix indexed by
// monomial masks of the source. Used for Hom(X, kirby-truncation) tables.
struct ZFromFree {
    int src_vars = 0;
    int tgt_n = 0;
    int degree = 0;
    std::vector<std::vector<Rational>> mat;  // (tgt_n+1) x 2^src_vars

    ZFromFree() {}
    ZFromFree(int s, int t, int deg)
        : src_vars(s), tgt_n(t), degree(deg),
          mat(t + 1, std::vector<Rational>(size_t(1) << s, Rational(0))) {}
};

// JW_n o X for X : c^s -> c^n, in mixed coordinates
inline ZFromFree z_from_free(int s, int n, const DTLMorphism& X) {
    if (X.sig().bottom != s || X.sig().top != n)
        throw std::invalid_argument("z_from_free: signature mismatch");
    int deg;
    if (!X.homogeneous(&deg)) throw std::invalid_argument("z_from_free: inhomogeneous");
    ZFromFree out(s, n, deg);
    for (uint32_t mask = 0; mask < (1u << s); ++mask) {
        MonoVec v;
        v[mask] = Rational(1);
        std::vector<Rational> col = jw_project(n, pol_apply(X, v));
        for (int i = 0; i <= n; ++i) out.mat[i][mask] = col[i];
    }
    return out;
}

inline ZFromFree z_compose_free(const ZMorphism& f, const ZFromFree& g) {
    if (f.src_n != g.tgt_n) throw std::invalid_argument("z_compose_free: shape mismatch");
    ZFromFree r(g.src_vars, f.tgt_n, f.degree + g.degree);
    for (int i = 0; i <= f.tgt_n; ++i)
        for (int k = 0; k <= f.src_n; ++k) {
            if (f.mat[i][k].is_zero()) continue;
            for (size_t j = 0; j < g.mat[k].size(); ++j)
                if (!g.mat[k][j].is_zero()) r.mat[i][j] += f.mat[i][k] * g.mat[k][j];
        }
    return r;
}

}  // namespace dtl
