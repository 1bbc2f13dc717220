#pragma once

// Dotted Temperley-Lieb diagrams and their reduction to a canonical basis.
//
// A morphism c^m -> c^n is a rational linear combination of dotted planar
// matchings. We store matchings in "bent" coordinates: the n top points are
// rotated around to the right of the m bottom points (top points reversed),
// so every diagram becomes a dotted cap diagram on k = m+n linearly ordered
// points. In bent form the canonical basis consists of non-crossing perfect
// matchings whose dotted arcs are outermost (not nested inside any other
// arc), i.e. adjacent to the unbounded region. Reduction rewrites arbitrary
// dotted diagrams into this basis using
//   (i)   undotted closed loop   -> factor 2
//   (ii)  once-dotted loop       -> 0
//   (iii) arc with >= 2 dots     -> 0
//   (iv)  the dot-slide surgery: a dot on an arc nested directly inside a
//         parent arc is rewritten as (minus the dot on the parent) plus two
//         reconnected diagrams, each with the dot on one of the new arcs.
// The total nesting depth of dotted arcs strictly drops in every term of
// (iv), which gives termination; confluence is a consequence of the basis
// being linearly independent and is exercised by randomized tests.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dtl/rational.hpp"

namespace dtl {

struct Signature {
    int bottom = 0;
    int top = 0;

    bool operator==(const Signature& o) const { return bottom == o.bottom && top == o.top; }
    bool operator!=(const Signature& o) const { return !(*this == o); }
    bool operator<(const Signature& o) const {
        return bottom != o.bottom ? bottom < o.bottom : top < o.top;
    }
    int points() const { return bottom + top; }
    // Hom(c^m, c^n) = 0 unless m = n mod 2
    bool admissible() const { return (bottom + top) % 2 == 0; }
};

// Bent coordinate of a boundary point. Bottom points B1..Bm map to 0..m-1,
// top points T1..Tn map to m+n-1 .. m (reversed).
inline int bent_of_bottom(const Signature& s, int i) { return i - 1; }
inline int bent_of_top(const Signature& s, int j) { return s.bottom + (s.top - j); }

// A dotted planar matching in bent coordinates, possibly with closed loops.
// Dots are stored per arc at the smaller endpoint. Loops carry dot counts.
struct RawDiagram {
    Signature sig;
    std::vector<int> mate;
    std::vector<int> dots;  // dots[p] counts dots on arc (p, mate[p]) when p < mate[p]
    std::vector<int> loops;

    int points() const { return sig.points(); }

    bool planar() const {
        std::vector<int> stack;
        int k = points();
        if ((int)mate.size() != k) return false;
        for (int p = 0; p < k; ++p) {
            if (mate[p] == p || mate[p] < 0 || mate[p] >= k || mate[mate[p]] != p) return false;
            if (mate[p] > p) {
                stack.push_back(p);
            } else {
                if (stack.empty() || stack.back() != mate[p]) return false;
                stack.pop_back();
            }
        }
        return stack.empty();
    }

    // nesting depth of each arc, indexed by smaller endpoint
    std::vector<int> arc_depths() const {
        std::vector<int> depth(points(), 0);
        int d = 0;
        for (int p = 0; p < points(); ++p) {
            if (mate[p] > p) {
                depth[p] = d;
                ++d;
            } else {
                --d;
            }
        }
        return depth;
    }
};

// A canonical-basis diagram: planar matching, dots in {0,1}, every dotted
// arc outermost, no loops.
struct NormalDiagram {
    Signature sig;
    std::vector<int> mate;
    std::vector<char> dots;

    int points() const { return sig.points(); }
    int total_dots() const {
        int t = 0;
        for (char c : dots) t += c;
        return t;
    }
    int degree() const { return 2 * total_dots(); }

    bool operator<(const NormalDiagram& o) const {
        if (sig != o.sig) return sig < o.sig;
        if (mate != o.mate) return mate < o.mate;
        return dots < o.dots;
    }
    bool operator==(const NormalDiagram& o) const {
        return sig == o.sig && mate == o.mate && dots == o.dots;
    }

    static NormalDiagram identity(int n) {
        NormalDiagram d;
        d.sig = {n, n};
        d.mate.resize(2 * n);
        d.dots.assign(2 * n, 0);
        for (int i = 1; i <= n; ++i) {
            int b = bent_of_bottom(d.sig, i), t = bent_of_top(d.sig, i);
            d.mate[b] = t;
            d.mate[t] = b;
        }
        return d;
    }
};

class DTLMorphism {
public:
    DTLMorphism() {}
    explicit DTLMorphism(Signature s) : sig_(s) {}
    DTLMorphism(const NormalDiagram& d, const Rational& c = Rational(1)) : sig_(d.sig) {
        if (!c.is_zero()) terms_[d] = c;
    }

    const Signature& sig() const { return sig_; }
    const std::map<NormalDiagram, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    void add_term(const NormalDiagram& d, const Rational& c) {
        if (d.sig != sig_) throw std::invalid_argument("DTLMorphism: signature mismatch");
        auto it = terms_.find(d);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_[d] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    DTLMorphism operator+(const DTLMorphism& o) const {
        require_sig(o);
        DTLMorphism r = *this;
        for (const auto& [d, c] : o.terms_) r.add_term(d, c);
        return r;
    }
    DTLMorphism operator-(const DTLMorphism& o) const { return *this + o * Rational(-1); }
    DTLMorphism operator*(const Rational& s) const {
        DTLMorphism r(sig_);
        if (s.is_zero()) return r;
        for (const auto& [d, c] : terms_) r.terms_[d] = c * s;
        return r;
    }
    DTLMorphism& operator+=(const DTLMorphism& o) {
        require_sig(o);
        for (const auto& [d, c] : o.terms_) add_term(d, c);
        return *this;
    }

    bool operator==(const DTLMorphism& o) const { return sig_ == o.sig_ && terms_ == o.terms_; }
    bool operator!=(const DTLMorphism& o) const { return !(*this == o); }

    // true when every term has the same degree; degree of the zero morphism
    // is reported as 0
    bool homogeneous(int* deg_out = nullptr) const {
        int deg = 0;
        bool first = true;
        for (const auto& [d, c] : terms_) {
            (void)c;
            if (first) {
                deg = d.degree();
                first = false;
            } else if (d.degree() != deg) {
                return false;
            }
        }
        if (deg_out) *deg_out = deg;
        return true;
    }

    DTLMorphism graded_component(int deg) const {
        DTLMorphism r(sig_);
        for (const auto& [d, c] : terms_)
            if (d.degree() == deg) r.terms_[d] = c;
        return r;
    }

private:
    void require_sig(const DTLMorphism& o) const {
        if (sig_ != o.sig_) throw std::invalid_argument("DTLMorphism: signature mismatch");
    }

    Signature sig_;
    std::map<NormalDiagram, Rational> terms_;
};

namespace detail {

// Apply loop evaluation and the two-dot kill, then slide dots outward.
// `pick` chooses which nested dotted arc to surger next (used by the
// confluence property test); the default takes the first by left endpoint.
inline void reduce_into(const RawDiagram& raw, const Rational& coeff, DTLMorphism& out,
                        const std::function<size_t(const std::vector<int>&)>& pick) {
    if (coeff.is_zero()) return;
    Rational c = coeff;
    for (int ld : raw.loops) {
        if (ld == 0) {
            c *= Rational(2);
        } else {
            return;  // dotted loop = 0
        }
    }
    int k = raw.points();
    for (int p = 0; p < k; ++p)
        if (raw.mate[p] > p && raw.dots[p] >= 2) return;

    std::vector<int> depth = raw.arc_depths();
    std::vector<int> nested_dotted;
    for (int p = 0; p < k; ++p)
        if (raw.mate[p] > p && raw.dots[p] == 1 && depth[p] > 0) nested_dotted.push_back(p);

    if (nested_dotted.empty()) {
        NormalDiagram nd;
        nd.sig = raw.sig;
        nd.mate = raw.mate;
        nd.dots.assign(k, 0);
        for (int p = 0; p < k; ++p)
            if (raw.mate[p] > p && raw.dots[p] == 1) nd.dots[p] = 1;
        out.add_term(nd, c);
        return;
    }

    int a = nested_dotted[pick ? pick(nested_dotted) : 0];
    int b = raw.mate[a];
    // direct parent: innermost arc covering (a,b)
    int pa = -1, pb = -1;
    for (int p = 0; p < k; ++p) {
        if (raw.mate[p] > p && p < a && raw.mate[p] > b) {
            if (pa == -1 || p > pa) {
                pa = p;
                pb = raw.mate[p];
            }
        }
    }
    if (pa < 0) throw std::logic_error("reduce: nested arc without parent");
    int parent_dots = raw.dots[pa];

    // term 1: minus the dot moved onto the parent
    if (parent_dots == 0) {
        RawDiagram t = raw;
        t.dots[a] = 0;
        t.dots[pa] = 1;
        reduce_into(t, -c, out, pick);
    }
    // reconnection (pa,a), (b,pb)
    RawDiagram s = raw;
    s.mate[pa] = a;
    s.mate[a] = pa;
    s.mate[b] = pb;
    s.mate[pb] = b;
    s.dots[pa] = 0;
    s.dots[a] = 0;
    s.dots[b] = 0;
    s.dots[std::min(pa, a)] = 0;
    // term 2: dot on the (pa,a) arc, parent's old dots ride on (b,pb)
    {
        RawDiagram t = s;
        t.dots[std::min(pa, a)] = 1;
        t.dots[std::min(b, pb)] = parent_dots;
        reduce_into(t, c, out, pick);
    }
    // term 3: dot on the (b,pb) arc
    if (parent_dots == 0) {
        RawDiagram t = s;
        t.dots[std::min(pa, a)] = 0;
        t.dots[std::min(b, pb)] = 1;
        reduce_into(t, c, out, pick);
    }
}

}  // namespace detail

inline DTLMorphism reduce(const RawDiagram& raw, const Rational& coeff = Rational(1),
                          const std::function<size_t(const std::vector<int>&)>& pick = nullptr) {
    if (!raw.planar()) throw std::invalid_argument("reduce: matching is not planar");
    DTLMorphism out(raw.sig);
    detail::reduce_into(raw, coeff, out, pick);
    return out;
}

// ---------------------------------------------------------------------------
// composition and tensor
// ---------------------------------------------------------------------------

namespace detail {

// Stack one diagram on top of another, tracing strands through the
// interface. f : c^b -> c^c sits on top of g : c^a -> c^b. Node ids:
// g-bottoms 0..a-1, interface points a..a+b-1, f-tops a+b..a+b+c-1.
// Interface nodes carry exactly one g-edge and one f-edge; strands and
// loops alternate between the two layers.
inline RawDiagram stack_diagrams(const NormalDiagram& f, const NormalDiagram& g) {
    int a = g.sig.bottom, b = g.sig.top, c = f.sig.top;
    auto g_node = [&](int bent) {
        if (bent < a) return bent;      // bottom point of g
        int j = b - (bent - a);         // top point T_j of g
        return a + (j - 1);             // interface j
    };
    auto f_node = [&](int bent) {
        if (bent < b) return a + bent;  // bottom point of f = interface
        int j = c - (bent - b);         // top point T_j of f
        return a + b + (j - 1);
    };
    int total = a + b + c;
    // edge[0] = g-layer, edge[1] = f-layer: (other endpoint, dots)
    std::vector<std::pair<int, int>> edge[2];
    edge[0].assign(total, {-1, 0});
    edge[1].assign(total, {-1, 0});
    for (int p = 0; p < g.points(); ++p) {
        if (g.mate[p] > p) {
            int u = g_node(p), v = g_node(g.mate[p]);
            edge[0][u] = {v, g.dots[p]};
            edge[0][v] = {u, g.dots[p]};
        }
    }
    for (int p = 0; p < f.points(); ++p) {
        if (f.mate[p] > p) {
            int u = f_node(p), v = f_node(f.mate[p]);
            edge[1][u] = {v, f.dots[p]};
            edge[1][v] = {u, f.dots[p]};
        }
    }
    auto is_ext = [&](int node) { return node < a || node >= a + b; };
    auto ext_bent = [&](int node) {
        // the composite has signature (a, c)
        if (node < a) return node;
        int j = node - a - b + 1;
        return a + (c - j);
    };

    RawDiagram out;
    out.sig = {a, c};
    out.mate.assign(a + c, -1);
    out.dots.assign(a + c, 0);

    std::vector<char> visited(total, 0);
    for (int start = 0; start < total; ++start) {
        if (visited[start] || !is_ext(start)) continue;
        int cur = start;
        int side = (start < a) ? 0 : 1;
        int dots = 0;
        visited[start] = 1;
        while (true) {
            auto [nxt, d] = edge[side][cur];
            dots += d;
            visited[nxt] = 1;
            if (is_ext(nxt)) {
                int u = ext_bent(start), v = ext_bent(nxt);
                out.mate[u] = v;
                out.mate[v] = u;
                out.dots[std::min(u, v)] = dots;
                break;
            }
            cur = nxt;
            side ^= 1;
        }
    }
    // remaining interface nodes form closed loops
    for (int start = a; start < a + b; ++start) {
        if (visited[start]) continue;
        int cur = start;
        int side = 0;
        int dots = 0;
        do {
            visited[cur] = 1;
            auto [nxt, d] = edge[side][cur];
            dots += d;
            cur = nxt;
            side ^= 1;
        } while (!(cur == start && side == 0));
        out.loops.push_back(dots);
    }
    return out;
}

// Relabel a diagram's arcs into a larger bent coordinate system via a
// point map; used by tensor.
inline void place_arcs(const NormalDiagram& d, const std::vector<int>& point_map,
                       RawDiagram& out) {
    for (int p = 0; p < d.points(); ++p) {
        if (d.mate[p] > p) {
            int u = point_map[p], v = point_map[d.mate[p]];
            out.mate[u] = v;
            out.mate[v] = u;
            out.dots[std::min(u, v)] = d.dots[p];
        }
    }
}

}  // namespace detail

// f o g with f : c^b -> c^c and g : c^a -> c^b
inline DTLMorphism compose(const DTLMorphism& f, const DTLMorphism& g) {
    if (f.sig().bottom != g.sig().top)
        throw std::invalid_argument("compose: signature mismatch");
    DTLMorphism out(Signature{g.sig().bottom, f.sig().top});
    for (const auto& [df, cf] : f.terms()) {
        for (const auto& [dg, cg] : g.terms()) {
            RawDiagram raw = detail::stack_diagrams(df, dg);
            detail::reduce_into(raw, cf * cg, out, nullptr);
        }
    }
    return out;
}

// horizontal juxtaposition, f on the left
inline DTLMorphism tensor(const DTLMorphism& f, const DTLMorphism& g) {
    int m1 = f.sig().bottom, n1 = f.sig().top;
    int m2 = g.sig().bottom, n2 = g.sig().top;
    Signature sig{m1 + m2, n1 + n2};
    DTLMorphism out(sig);
    // bent point maps into the combined diagram
    std::vector<int> fmap(m1 + n1), gmap(m2 + n2);
    for (int p = 0; p < m1; ++p) fmap[p] = p;
    for (int j = 1; j <= n1; ++j) fmap[bent_of_top({m1, n1}, j)] = bent_of_top(sig, j);
    for (int p = 0; p < m2; ++p) gmap[p] = m1 + p;
    for (int j = 1; j <= n2; ++j) gmap[bent_of_top({m2, n2}, j)] = bent_of_top(sig, n1 + j);
    for (const auto& [df, cf] : f.terms()) {
        for (const auto& [dg, cg] : g.terms()) {
            RawDiagram raw;
            raw.sig = sig;
            raw.mate.assign(sig.points(), -1);
            raw.dots.assign(sig.points(), 0);
            detail::place_arcs(df, fmap, raw);
            detail::place_arcs(dg, gmap, raw);
            detail::reduce_into(raw, cf * cg, out, nullptr);
        }
    }
    return out;
}

// mirror image across a vertical axis
inline DTLMorphism reflect(const DTLMorphism& f) {
    int m = f.sig().bottom, n = f.sig().top;
    DTLMorphism out(f.sig());
    for (const auto& [d, c] : f.terms()) {
        RawDiagram raw;
        raw.sig = d.sig;
        raw.mate.assign(d.points(), -1);
        raw.dots.assign(d.points(), 0);
        auto mirror = [&](int p) { return p < m ? m - 1 - p : 2 * m + n - 1 - p; };
        for (int p = 0; p < d.points(); ++p) {
            if (d.mate[p] > p) {
                int u = mirror(p), v = mirror(d.mate[p]);
                raw.mate[u] = v;
                raw.mate[v] = u;
                raw.dots[std::min(u, v)] = d.dots[p];
            }
        }
        detail::reduce_into(raw, c, out, nullptr);
    }
    return out;
}

// ---------------------------------------------------------------------------
// generators
// ---------------------------------------------------------------------------

inline DTLMorphism identity_morphism(int n) { return DTLMorphism(NormalDiagram::identity(n)); }

// cup : c^0 -> c^2, optionally dotted
inline DTLMorphism cup(int dotted = 0) {
    NormalDiagram d;
    d.sig = {0, 2};
    d.mate = {1, 0};
    d.dots = {(char)dotted, 0};
    return DTLMorphism(d);
}

// cap : c^2 -> c^0, optionally dotted
inline DTLMorphism cap(int dotted = 0) {
    NormalDiagram d;
    d.sig = {2, 0};
    d.mate = {1, 0};
    d.dots = {(char)dotted, 0};
    return DTLMorphism(d);
}

// dot on strand i of id_{c^n}, 1-indexed
inline DTLMorphism dot_on_strand(int n, int i) {
    if (i < 1 || i > n) throw std::out_of_range("dot_on_strand: index out of range");
    NormalDiagram d = NormalDiagram::identity(n);
    RawDiagram raw;
    raw.sig = d.sig;
    raw.mate = d.mate;
    raw.dots.assign(d.points(), 0);
    int b = bent_of_bottom(d.sig, i), t = bent_of_top(d.sig, i);
    raw.dots[std::min(b, t)] = 1;
    return reduce(raw);
}

// turnback e_i = cup over cap at strands (i, i+1) of c^n
inline DTLMorphism turnback(int n, int i) {
    if (i < 1 || i >= n) throw std::out_of_range("turnback: index out of range");
    NormalDiagram d;
    d.sig = {n, n};
    d.mate.assign(2 * n, -1);
    d.dots.assign(2 * n, 0);
    auto join = [&](int u, int v) {
        d.mate[u] = v;
        d.mate[v] = u;
    };
    for (int s = 1; s <= n; ++s) {
        if (s == i)
            join(bent_of_bottom(d.sig, i), bent_of_bottom(d.sig, i + 1));
        else if (s == i + 1)
            join(bent_of_top(d.sig, i), bent_of_top(d.sig, i + 1));
        else
            join(bent_of_bottom(d.sig, s), bent_of_top(d.sig, s));
    }
    if (!RawDiagram{d.sig, d.mate, std::vector<int>(d.dots.begin(), d.dots.end()), {}}.planar())
        throw std::logic_error("turnback: construction not planar");
    return DTLMorphism(d);
}

// symmetric group generator: sigma_i = id - e_i
inline DTLMorphism braid_generator(int n, int i) {
    return identity_morphism(n) - turnback(n, i);
}

// central element z_n = sum_i (-1)^{i-1} (dot on strand i)
inline DTLMorphism central_z(int n) {
    DTLMorphism z(Signature{n, n});
    for (int i = 1; i <= n; ++i) z += dot_on_strand(n, i) * sign_pow(i - 1);
    return z;
}

// central element s_n = (-1)^n id
inline DTLMorphism central_s(int n) { return identity_morphism(n) * sign_pow(n); }

// evaluate a permutation (as a product of the sigma_i read left to right)
// through the symmetric group action
inline DTLMorphism permutation_morphism(int n, const std::vector<int>& word) {
    DTLMorphism m = identity_morphism(n);
    for (int i : word) m = compose(braid_generator(n, i), m);
    return m;
}

// ---------------------------------------------------------------------------
// text format
// ---------------------------------------------------------------------------

// `m n ; arc(P,Q,d) ...` with P, Q in {B1..Bm, T1..Tn} and d in {0,1}.
inline std::string diagram_to_text(const NormalDiagram& d) {
    std::ostringstream os;
    os << d.sig.bottom << " " << d.sig.top << " ;";
    auto point_name = [&](int bent) {
        if (bent < d.sig.bottom) return "B" + std::to_string(bent + 1);
        return "T" + std::to_string(d.sig.top - (bent - d.sig.bottom));
    };
    for (int p = 0; p < d.points(); ++p) {
        if (d.mate[p] > p)
            os << " arc(" << point_name(p) << "," << point_name(d.mate[p]) << ","
               << (int)d.dots[p] << ")";
    }
    return os.str();
}

inline NormalDiagram diagram_from_text(const std::string& text) {
    std::istringstream is(text);
    int m, n;
    std::string sep;
    if (!(is >> m >> n >> sep) || sep != ";")
        throw std::invalid_argument("diagram parse: expected 'm n ;'");
    NormalDiagram d;
    d.sig = {m, n};
    d.mate.assign(m + n, -1);
    d.dots.assign(m + n, 0);
    std::string tok;
    auto parse_point = [&](const std::string& s) {
        if (s.size() < 2 || (s[0] != 'B' && s[0] != 'T'))
            throw std::invalid_argument("diagram parse: bad point " + s);
        int idx = std::stoi(s.substr(1));
        if (s[0] == 'B') {
            if (idx < 1 || idx > m) throw std::invalid_argument("diagram parse: bad point " + s);
            return bent_of_bottom(d.sig, idx);
        }
        if (idx < 1 || idx > n) throw std::invalid_argument("diagram parse: bad point " + s);
        return bent_of_top(d.sig, idx);
    };
    while (is >> tok) {
        if (tok.substr(0, 4) != "arc(" || tok.back() != ')')
            throw std::invalid_argument("diagram parse: bad arc token " + tok);
        std::string body = tok.substr(4, tok.size() - 5);
        auto c1 = body.find(',');
        auto c2 = body.find(',', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw std::invalid_argument("diagram parse: bad arc token " + tok);
        int u = parse_point(body.substr(0, c1));
        int v = parse_point(body.substr(c1 + 1, c2 - c1 - 1));
        int dot = std::stoi(body.substr(c2 + 1));
        if (dot != 0 && dot != 1) throw std::invalid_argument("diagram parse: dot not in {0,1}");
        if (d.mate[u] != -1 || d.mate[v] != -1 || u == v)
            throw std::invalid_argument("diagram parse: point used twice");
        d.mate[u] = v;
        d.mate[v] = u;
        d.dots[std::min(u, v)] = (char)dot;
    }
    for (int p = 0; p < d.points(); ++p)
        if (d.mate[p] == -1) throw std::invalid_argument("diagram parse: unmatched point");
    RawDiagram raw{d.sig, d.mate, std::vector<int>(d.dots.begin(), d.dots.end()), {}};
    if (!raw.planar()) throw std::invalid_argument("diagram parse: crossing matching rejected");
    return d;
}

inline std::string morphism_to_text(const DTLMorphism& f) {
    if (f.is_zero())
        return "0 * " + std::to_string(f.sig().bottom) + " " + std::to_string(f.sig().top) + " ;";
    std::string s;
    for (const auto& [d, c] : f.terms()) {
        if (!s.empty()) s += "\n";
        s += c.to_string() + " * " + diagram_to_text(d);
    }
    return s;
}

}  // namespace dtl
