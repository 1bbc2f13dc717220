#pragma once

// Jones-Wenzl projectors, Karoubi-envelope objects (n, e) and morphisms,
// the U/D/z generators between the projector objects P_n, and the Hom-space
// bases they span.

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "dtl/diagram.hpp"
#include "dtl/graded.hpp"
#include "dtl/laurent.hpp"
#include "dtl/polyrep.hpp"
#include "dtl/report.hpp"

namespace dtl {

enum class JWMethod { Recursion, Symmetrizer };

// Jones-Wenzl projector on n strands, at circle value 2. The recursion
//   JW_n = (JW_{n-1} (x) 1) - ((n-1)/n) (JW_{n-1} (x) 1) e_{n-1} (JW_{n-1} (x) 1)
// is used by default; the symmetrizer (1/n!) sum over S_n is retained as a
// cross-check for small n (it has n! terms).
inline DTLMorphism jones_wenzl(int n, JWMethod method = JWMethod::Recursion) {
    if (n < 0) throw std::invalid_argument("jones_wenzl: negative n");
    if (method == JWMethod::Symmetrizer) {
        // sum over permutations, each evaluated through the braiding
        DTLMorphism acc(Signature{n, n});
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        do {
            // reduced word by bubble sorting the permutation
            std::vector<int> word;
            std::vector<int> p = perm;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j + 1 < n; ++j)
                    if (p[j] > p[j + 1]) {
                        std::swap(p[j], p[j + 1]);
                        word.push_back(j + 1);
                    }
            acc += permutation_morphism(n, word);
        } while (std::next_permutation(perm.begin(), perm.end()));
        return acc * Rational::factorial(n).inverse();
    }

    static std::map<int, DTLMorphism> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    DTLMorphism result;
    if (n == 0) {
        result = identity_morphism(0);
    } else if (n == 1) {
        result = identity_morphism(1);
    } else {
        DTLMorphism prev = jones_wenzl(n - 1);
        DTLMorphism wide = tensor(prev, identity_morphism(1));
        DTLMorphism mid = compose(wide, compose(turnback(n, n - 1), wide));
        result = wide - mid * Rational(n - 1, n);
    }
    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(n, result);
    return result;
}

// signed dot: (-1)^{i-1} x_i
inline DTLMorphism signed_dot(int n, int i) { return dot_on_strand(n, i) * sign_pow(i - 1); }

struct KarObject {
    int n = 0;
    DTLMorphism e;

    KarObject() {}
    KarObject(int strands, DTLMorphism idem, bool check = true)
        : n(strands), e(std::move(idem)) {
        if (e.sig().bottom != n || e.sig().top != n)
            throw std::invalid_argument("KarObject: idempotent signature mismatch");
        if (check && compose(e, e) != e)
            throw std::invalid_argument("KarObject: not an idempotent");
    }

    static KarObject P(int n) { return KarObject(n, jones_wenzl(n), false); }

    bool operator==(const KarObject& o) const { return n == o.n && e == o.e; }
};

struct KarMorphism {
    KarObject src;
    KarObject tgt;
    DTLMorphism f;

    KarMorphism() {}
    KarMorphism(KarObject s, KarObject t, DTLMorphism m, bool check = true)
        : src(std::move(s)), tgt(std::move(t)), f(std::move(m)) {
        if (f.sig().bottom != src.n || f.sig().top != tgt.n)
            throw std::invalid_argument("KarMorphism: signature mismatch");
        if (check && compose(tgt.e, compose(f, src.e)) != f)
            throw std::invalid_argument("KarMorphism: sandwich condition violated");
    }

    // sandwich an arbitrary dTL morphism between the idempotents
    static KarMorphism sandwich(const KarObject& s, const KarObject& t, const DTLMorphism& m) {
        return KarMorphism(s, t, compose(t.e, compose(m, s.e)), false);
    }

    static KarMorphism identity(const KarObject& x) { return KarMorphism(x, x, x.e, false); }

    bool is_zero() const { return f.is_zero(); }
    bool operator==(const KarMorphism& o) const {
        return src == o.src && tgt == o.tgt && f == o.f;
    }
    bool operator!=(const KarMorphism& o) const { return !(*this == o); }

    KarMorphism operator+(const KarMorphism& o) const {
        if (!(src == o.src) || !(tgt == o.tgt))
            throw std::invalid_argument("KarMorphism: object mismatch");
        return KarMorphism(src, tgt, f + o.f, false);
    }
    KarMorphism operator*(const Rational& c) const { return KarMorphism(src, tgt, f * c, false); }
};

inline KarMorphism kar_compose(const KarMorphism& f, const KarMorphism& g) {
    if (!(f.src == g.tgt)) throw std::invalid_argument("kar_compose: object mismatch");
    return KarMorphism(g.src, f.tgt, compose(f.f, g.f), false);
}

// U_n : P_n -> P_{n+2}, a dotted cup under the big projector; degree 2
inline KarMorphism gen_U(int n) {
    DTLMorphism m = compose(jones_wenzl(n + 2),
                            compose(tensor(identity_morphism(n), cup(1)), jones_wenzl(n)));
    return KarMorphism(KarObject::P(n), KarObject::P(n + 2), m, false);
}

// D_n : P_n -> P_{n-2}, a dotted cap over the big projector with the
// normalizing prefactor n(n-1); degree 2
inline KarMorphism gen_D(int n) {
    if (n < 2) throw std::invalid_argument("gen_D: requires n >= 2");
    DTLMorphism m = compose(jones_wenzl(n - 2),
                            compose(tensor(identity_morphism(n - 2), cap(1)), jones_wenzl(n)));
    return KarMorphism(KarObject::P(n), KarObject::P(n - 2),
                       m * Rational((long long)n * (n - 1)), false);
}

// z_n as an endomorphism of P_n; degree 2
inline KarMorphism gen_z(int n) {
    return KarMorphism(KarObject::P(n), KarObject::P(n),
                       compose(central_z(n), jones_wenzl(n)), false);
}

// iterated composition f^k of an endomorphism
inline KarMorphism kar_power(const KarMorphism& f, int k) {
    KarMorphism acc = KarMorphism::identity(f.src);
    for (int i = 0; i < k; ++i) acc = kar_compose(f, acc);
    return acc;
}

// ---------------------------------------------------------------------------
// Hom-space bases between projector objects
// ---------------------------------------------------------------------------

struct HomBasis {
    std::vector<KarMorphism> elements;  // the words U...U z^k or z^k D...D
    std::vector<int> degrees;
    LaurentPoly graded_dimension;
};

// Basis {U_{n-2}...U_m z^k | 0 <= k <= m} of Hom(P_m, P_n) for m <= n (and
// the D-word version for m >= n). Graded dimension q^{|m-n|} (1 + q^2 + ...
// + q^{2 min(m,n)}).
inline HomBasis hom_basis(int m, int n) {
    HomBasis out;
    if ((m - n) % 2 != 0) return out;
    int lo = std::min(m, n);
    for (int k = 0; k <= lo; ++k) {
        KarMorphism word = kar_power(gen_z(m), k);  // z^k at the bottom
        if (m <= n) {
            for (int r = m; r < n; r += 2) word = kar_compose(gen_U(r), word);
        } else {
            for (int r = m; r > n; r -= 2) word = kar_compose(gen_D(r), word);
        }
        out.elements.push_back(word);
        int deg = std::abs(m - n) + 2 * k;
        out.degrees.push_back(deg);
        out.graded_dimension.add_coeff(deg, Rational(1));
    }
    return out;
}

// Certify linear independence of a family of KarMorphisms by flattening
// their pol matrices; returns the rank of the family.
inline size_t pol_rank_of_family(const std::vector<KarMorphism>& fam) {
    if (fam.empty()) return 0;
    std::vector<SparseMatrix> mats;
    mats.reserve(fam.size());
    for (const auto& k : fam) mats.push_back(pol(k.f));
    size_t R = mats[0].rows() * mats[0].cols();
    GradedSpace dom, cod;
    dom.labels.assign(fam.size(), "");
    dom.degrees.assign(fam.size(), 0);
    cod.labels.assign(R, "");
    cod.degrees.assign(R, 0);
    SparseMatrix flat(dom, cod);
    for (size_t j = 0; j < mats.size(); ++j)
        for (const auto& [rc, v] : mats[j].entries())
            flat.set_entry(rc.first * mats[0].cols() + rc.second, j, v);
    return rank(flat);
}

// ---------------------------------------------------------------------------
// identity suites
// ---------------------------------------------------------------------------

// partial trace closing the last strand with a dotted loop on the right
inline DTLMorphism dotted_partial_trace(const DTLMorphism& f) {
    int n = f.sig().bottom;
    if (f.sig().top != n || n < 1) throw std::invalid_argument("dotted_partial_trace");
    DTLMorphism capd = tensor(identity_morphism(n - 1), cap(1));
    DTLMorphism cupp = tensor(identity_morphism(n - 1), cup(0));
    return compose(capd, compose(tensor(f, identity_morphism(1)), cupp));
}

// the product x_1 x_2 ... x_k on c^n
inline DTLMorphism dot_product_word(int n, int k) {
    DTLMorphism m = identity_morphism(n);
    for (int i = 1; i <= k; ++i) m = compose(dot_on_strand(n, i), m);
    return m;
}

// Verify the Jones-Wenzl relation suite at a single n: idempotence,
// turnback-killing, permutation absorption, the symmetrizer cross-check,
// the sandwich relations, the dotted-cup slide, the dotted partial trace,
// and projector absorption.
inline Report verify_jw_identities(int n, bool include_symmetrizer = true) {
    Report rep;
    rep.suite = "jwrels(n=" + std::to_string(n) + ")";
    DTLMorphism jw = jones_wenzl(n);
    DTLMorphism id = identity_morphism(n);

    rep.add("idempotent", "JW^2 = JW", compose(jw, jw) == jw);
    rep.add("nonzero", "JW != 0", !jw.is_zero());

    for (int i = 1; i < n; ++i) {
        DTLMorphism capi = tensor(tensor(identity_morphism(i - 1), cap(0)),
                                  identity_morphism(n - i - 1));
        rep.add("kills-turnbacks", "cap at " + std::to_string(i),
                compose(capi, jw).is_zero());
        rep.add("absorbs-transpositions", "sigma at " + std::to_string(i),
                compose(braid_generator(n, i), jw) == jw &&
                    compose(jw, braid_generator(n, i)) == jw);
    }

    if (include_symmetrizer)
        rep.add("symmetrizer", "recursion = symmetrizer",
                jw == jones_wenzl(n, JWMethod::Symmetrizer));

    // JW x_i JW = -JW x_{i+1} JW
    for (int i = 1; i < n; ++i) {
        DTLMorphism lhs = compose(jw, compose(dot_on_strand(n, i), jw));
        DTLMorphism rhs = compose(jw, compose(dot_on_strand(n, i + 1), jw)) * Rational(-1);
        rep.add("PxP", "i=" + std::to_string(i), lhs == rhs);
    }

    // JW x_1...x_k JW = (-1)^{C(k,2)} (n-k)!/n! z^k JW
    for (int k = 0; k <= n; ++k) {
        DTLMorphism lhs = compose(jw, compose(dot_product_word(n, k), jw));
        DTLMorphism zk = id;
        for (int i = 0; i < k; ++i) zk = compose(central_z(n), zk);
        Rational coeff = sign_binom2(k) * Rational::factorial(n - k) *
                         Rational::factorial(n).inverse();
        rep.add("PxxxP", "k=" + std::to_string(k), lhs == compose(zk, jw) * coeff);
    }

    // dotted cup slides under the projector, and its vertical reflection
    for (int k = 0; k + 3 <= n; ++k) {
        DTLMorphism below1 = tensor(tensor(identity_morphism(k), cup(1)),
                                    identity_morphism(n - k - 2));
        DTLMorphism below2 = tensor(tensor(identity_morphism(k + 1), cup(1)),
                                    identity_morphism(n - k - 3));
        rep.add("dAwd", "k=" + std::to_string(k),
                compose(jw, below1) == compose(jw, below2));
        DTLMorphism above1 = tensor(tensor(identity_morphism(k), cap(1)),
                                    identity_morphism(n - k - 2));
        DTLMorphism above2 = tensor(tensor(identity_morphism(k + 1), cap(1)),
                                    identity_morphism(n - k - 3));
        rep.add("dAwd-reflected", "k=" + std::to_string(k),
                compose(above1, jw) == compose(above2, jw));
    }

    // dotted partial trace: ptr(JW_n) = (-1)^{n-1}/n z_{n-1} JW_{n-1}
    if (n >= 1) {
        DTLMorphism lhs = dotted_partial_trace(jw);
        DTLMorphism rhs = compose(central_z(n - 1), jones_wenzl(n - 1)) *
                          (sign_pow(n - 1) * Rational(1, n));
        rep.add("tracedot", "", lhs == rhs);
    }

    // absorption of smaller projectors in every position
    for (int l = 1; l <= n; ++l) {
        for (int i = 1; i + l - 1 <= n; ++i) {
            DTLMorphism inner = tensor(tensor(identity_morphism(i - 1), jones_wenzl(l)),
                                       identity_morphism(n - i - l + 1));
            rep.add("absorb", "l=" + std::to_string(l) + ",i=" + std::to_string(i),
                    compose(inner, jw) == jw && compose(jw, inner) == jw);
        }
    }

    // signed-variable sandwich: JW f(sx) JW invariant under permuting the sx_i
    if (n >= 2) {
        DTLMorphism lhs = compose(jw, compose(signed_dot(n, 1), jw));
        for (int i = 2; i <= n; ++i) {
            rep.add("signed-x-sandwich", "i=" + std::to_string(i),
                    lhs == compose(jw, compose(signed_dot(n, i), jw)));
        }
    }
    return rep;
}

// Verify the quiver relations of the U/D/z generators at level n.
inline Report verify_kar_relations(int n) {
    Report rep;
    rep.suite = "karrels(n=" + std::to_string(n) + ")";
    // z^{n+1} = 0, z^n != 0
    rep.add("z-nilpotent", "z^{n+1} = 0", kar_power(gen_z(n), n + 1).is_zero());
    if (n >= 1) rep.add("z-order", "z^n != 0", !kar_power(gen_z(n), n).is_zero());
    if (n >= 2) {
        // U_{n-2} D_n = -z_n^2 on P_n
        KarMorphism lhs = kar_compose(gen_U(n - 2), gen_D(n));
        KarMorphism rhs = kar_power(gen_z(n), 2) * Rational(-1);
        rep.add("UD", "U_{n-2} D_n = -z_n^2", lhs == rhs);
        // D_n U_{n-2} = -z_{n-2}^2 on P_{n-2}
        KarMorphism lhs2 = kar_compose(gen_D(n), gen_U(n - 2));
        KarMorphism rhs2 = kar_power(gen_z(n - 2), 2) * Rational(-1);
        rep.add("DU", "D_n U_{n-2} = -z_{n-2}^2", lhs2 == rhs2);
    }
    // z U = U z and z D = D z
    rep.add("zU", "z_{n+2} U_n = U_n z_n",
            kar_compose(gen_z(n + 2), gen_U(n)) == kar_compose(gen_U(n), gen_z(n)));
    if (n >= 2)
        rep.add("zD", "z_{n-2} D_n = D_n z_n",
                kar_compose(gen_z(n - 2), gen_D(n)) == kar_compose(gen_D(n), gen_z(n)));
    return rep;
}

// Center of the category at finite level: families of degree-2
// endomorphisms of the P_n, n <= N of a fixed parity, commuting with all
// U-transitions. The solution space should be exactly the span of z.
inline size_t center_degree2_dimension(int parity, int N) {
    // unknowns: coefficient c_n of z_n for each level with z_n != 0
    std::vector<int> levels;
    for (int n = parity; n <= N; n += 2) levels.push_back(n);
    // constraints: c_n z U - c_{n+2} U z = 0, i.e. (c_n - c_{n+2}) (U z) = 0
    // build the constraint matrix over the unknowns where U z != 0
    GradedSpace dom, cod;
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i + 1 < levels.size(); ++i) {
        int n = levels[i];
        KarMorphism Uz = kar_compose(gen_U(n), gen_z(n));
        if (!Uz.is_zero()) pairs.push_back({i, i + 1});
    }
    size_t unknowns = 0;
    std::vector<long long> var_of_level(levels.size(), -1);
    for (size_t i = 0; i < levels.size(); ++i) {
        if (levels[i] >= 1) {  // z_0 = 0: no unknown at level 0
            var_of_level[i] = (long long)unknowns++;
        }
    }
    dom.labels.assign(unknowns, "");
    dom.degrees.assign(unknowns, 0);
    cod.labels.assign(pairs.size(), "");
    cod.degrees.assign(pairs.size(), 0);
    SparseMatrix constraints(dom, cod);
    for (size_t r = 0; r < pairs.size(); ++r) {
        auto [i, j] = pairs[r];
        if (var_of_level[i] >= 0) constraints.set_entry(r, (size_t)var_of_level[i], Rational(1));
        if (var_of_level[j] >= 0) constraints.set_entry(r, (size_t)var_of_level[j], Rational(-1));
    }
    return gauss(constraints).kernel.size();
}

}  // namespace dtl
