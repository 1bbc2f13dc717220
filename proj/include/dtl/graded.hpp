#pragma once

// Graded vector spaces with labeled bases, sparse exact matrices between
// them, and exact Gaussian elimination over the rationals.
//
// Matrices optionally assert a homogeneity degree d: every nonzero entry
// must connect basis elements whose degrees differ by exactly d. Composites
// then carry the sum of the degrees, which is checked on construction.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dtl/laurent.hpp"
#include "dtl/rational.hpp"

namespace dtl {

struct GradedSpace {
    std::vector<std::string> labels;
    std::vector<int> degrees;

    GradedSpace() {}
    GradedSpace(std::vector<std::string> l, std::vector<int> d)
        : labels(std::move(l)), degrees(std::move(d)) {
        if (labels.size() != degrees.size())
            throw std::invalid_argument("GradedSpace: label/degree mismatch");
    }

    size_t dim() const { return labels.size(); }

    LaurentPoly graded_dimension() const {
        LaurentPoly p;
        for (int d : degrees) p.add_coeff(d, Rational(1));
        return p;
    }

    bool operator==(const GradedSpace& o) const {
        return labels == o.labels && degrees == o.degrees;
    }
};

class SparseMatrix {
public:
    SparseMatrix() {}
    SparseMatrix(GradedSpace domain, GradedSpace codomain)
        : domain_(std::move(domain)), codomain_(std::move(codomain)) {}

    const GradedSpace& domain() const { return domain_; }
    const GradedSpace& codomain() const { return codomain_; }
    size_t rows() const { return codomain_.dim(); }
    size_t cols() const { return domain_.dim(); }

    // Entries are stored in a canonically sorted (row, col) map so that
    // serialization is byte-stable across runs.
    const std::map<std::pair<size_t, size_t>, Rational>& entries() const { return entries_; }

    Rational entry(size_t r, size_t c) const {
        auto it = entries_.find({r, c});
        return it == entries_.end() ? Rational(0) : it->second;
    }

    void set_entry(size_t r, size_t c, const Rational& v) {
        if (r >= rows() || c >= cols())
            throw std::out_of_range("SparseMatrix: index out of range");
        if (v.is_zero()) {
            entries_.erase({r, c});
        } else {
            entries_[{r, c}] = v;
        }
    }

    void add_entry(size_t r, size_t c, const Rational& v) { set_entry(r, c, entry(r, c) + v); }

    bool is_zero() const { return entries_.empty(); }

    void assert_degree(int d) {
        for (const auto& [rc, v] : entries_) {
            (void)v;
            if (codomain_.degrees[rc.first] - domain_.degrees[rc.second] != d)
                throw std::logic_error("SparseMatrix: homogeneity violated");
        }
        degree_ = d;
    }

    std::optional<int> degree() const { return degree_; }

    static SparseMatrix identity(const GradedSpace& s) {
        SparseMatrix m(s, s);
        for (size_t i = 0; i < s.dim(); ++i) m.set_entry(i, i, Rational(1));
        m.degree_ = 0;
        return m;
    }

    SparseMatrix operator+(const SparseMatrix& o) const {
        require_same_shape(o);
        SparseMatrix m = *this;
        for (const auto& [rc, v] : o.entries_) m.add_entry(rc.first, rc.second, v);
        m.degree_ = (degree_ == o.degree_) ? degree_ : std::nullopt;
        return m;
    }

    SparseMatrix operator-(const SparseMatrix& o) const { return *this + (o * Rational(-1)); }

    SparseMatrix operator*(const Rational& s) const {
        SparseMatrix m(domain_, codomain_);
        if (s.is_zero()) return m;
        m.entries_ = entries_;
        for (auto& [rc, v] : m.entries_) {
            (void)rc;
            v = v * s;
        }
        m.degree_ = degree_;
        return m;
    }

    // matrix product: (*this) o other
    SparseMatrix operator*(const SparseMatrix& o) const {
        if (o.codomain_.dim() != domain_.dim())
            throw std::invalid_argument("SparseMatrix: composition shape mismatch");
        SparseMatrix m(o.domain_, codomain_);
        // group our entries by column for the join
        std::vector<std::vector<std::pair<size_t, Rational>>> by_col(cols());
        for (const auto& [rc, v] : entries_) by_col[rc.second].push_back({rc.first, v});
        for (const auto& [rc, v] : o.entries_) {
            for (const auto& [r2, v2] : by_col[rc.first]) {
                m.add_entry(r2, rc.second, v2 * v);
            }
        }
        if (degree_ && o.degree_) m.degree_ = *degree_ + *o.degree_;
        return m;
    }

    // Kronecker product with degree-additive bases; labels are joined with
    // "|". Index order: (i, j) -> i * dim(other) + j.
    SparseMatrix tensor(const SparseMatrix& o) const {
        GradedSpace dom = tensor_space(domain_, o.domain_);
        GradedSpace cod = tensor_space(codomain_, o.codomain_);
        SparseMatrix m(dom, cod);
        for (const auto& [rc1, v1] : entries_)
            for (const auto& [rc2, v2] : o.entries_)
                m.set_entry(rc1.first * o.rows() + rc2.first,
                            rc1.second * o.cols() + rc2.second, v1 * v2);
        if (degree_ && o.degree_) m.degree_ = *degree_ + *o.degree_;
        return m;
    }

    static GradedSpace tensor_space(const GradedSpace& a, const GradedSpace& b) {
        GradedSpace t;
        t.labels.reserve(a.dim() * b.dim());
        t.degrees.reserve(a.dim() * b.dim());
        for (size_t i = 0; i < a.dim(); ++i)
            for (size_t j = 0; j < b.dim(); ++j) {
                t.labels.push_back(a.labels[i] + "|" + b.labels[j]);
                t.degrees.push_back(a.degrees[i] + b.degrees[j]);
            }
        return t;
    }

    SparseMatrix transpose() const {
        SparseMatrix m(codomain_, domain_);
        for (const auto& [rc, v] : entries_) m.set_entry(rc.second, rc.first, v);
        return m;
    }

    bool operator==(const SparseMatrix& o) const {
        return rows() == o.rows() && cols() == o.cols() && entries_ == o.entries_;
    }
    bool operator!=(const SparseMatrix& o) const { return !(*this == o); }

    std::string to_json() const {
        std::string s = "{\"rows\":" + std::to_string(rows()) +
                        ",\"cols\":" + std::to_string(cols()) + ",\"entries\":[";
        bool first = true;
        for (const auto& [rc, v] : entries_) {
            if (!first) s += ",";
            first = false;
            s += "[" + std::to_string(rc.first) + "," + std::to_string(rc.second) + ",\"" +
                 v.to_string() + "\"]";
        }
        s += "]}";
        return s;
    }

private:
    void require_same_shape(const SparseMatrix& o) const {
        if (rows() != o.rows() || cols() != o.cols())
            throw std::invalid_argument("SparseMatrix: shape mismatch");
    }

    GradedSpace domain_;
    GradedSpace codomain_;
    std::map<std::pair<size_t, size_t>, Rational> entries_;
    std::optional<int> degree_;
};

struct GaussResult {
    size_t rank = 0;
    // column vectors spanning the kernel, each of length cols
    std::vector<std::vector<Rational>> kernel;
    // column vectors spanning the image, each of length rows
    std::vector<std::vector<Rational>> image;
    std::vector<size_t> pivot_cols;
};

// Exact row reduction over the rationals. The pivoting rule is fixed (first
// nonzero entry in row-major order) so results are deterministic; parallel
// variants must reproduce this result bit for bit.
inline GaussResult gauss(const SparseMatrix& m) {
    size_t R = m.rows(), C = m.cols();
    std::vector<std::vector<Rational>> a(R, std::vector<Rational>(C, Rational(0)));
    for (const auto& [rc, v] : m.entries()) a[rc.first][rc.second] = v;

    GaussResult res;
    std::vector<size_t> pivot_row_of_col(C, SIZE_MAX);
    size_t row = 0;
    for (size_t col = 0; col < C && row < R; ++col) {
        size_t pr = SIZE_MAX;
        for (size_t r = row; r < R; ++r) {
            if (!a[r][col].is_zero()) {
                pr = r;
                break;
            }
        }
        if (pr == SIZE_MAX) continue;
        std::swap(a[row], a[pr]);
        Rational inv = a[row][col].inverse();
        for (size_t c = col; c < C; ++c)
            if (!a[row][c].is_zero()) a[row][c] = a[row][c] * inv;
        for (size_t r = 0; r < R; ++r) {
            if (r != row && !a[r][col].is_zero()) {
                Rational f = a[r][col];
                for (size_t c = col; c < C; ++c)
                    if (!a[row][c].is_zero()) a[r][c] = a[r][c] - f * a[row][c];
            }
        }
        pivot_row_of_col[col] = row;
        res.pivot_cols.push_back(col);
        ++row;
    }
    res.rank = row;

    // kernel: one vector per free column, read off the RREF
    for (size_t col = 0; col < C; ++col) {
        if (pivot_row_of_col[col] != SIZE_MAX) continue;
        std::vector<Rational> v(C, Rational(0));
        v[col] = Rational(1);
        for (size_t pc = 0; pc < C; ++pc) {
            size_t r = pivot_row_of_col[pc];
            if (r != SIZE_MAX && !a[r][col].is_zero()) v[pc] = -a[r][col];
        }
        res.kernel.push_back(std::move(v));
    }
    // image: the original columns at the pivot positions
    for (size_t col : res.pivot_cols) {
        std::vector<Rational> v(R, Rational(0));
        for (size_t r = 0; r < R; ++r) v[r] = m.entry(r, col);
        res.image.push_back(std::move(v));
    }
    return res;
}

inline size_t rank(const SparseMatrix& m) { return gauss(m).rank; }

// Graded rank: for a homogeneous-degree matrix, the rank of each degree
// block, reported as a Laurent polynomial in the codomain degrees.
inline LaurentPoly graded_rank(const SparseMatrix& m) {
    std::map<int, std::vector<size_t>> cols_by_deg;
    for (size_t c = 0; c < m.cols(); ++c)
        cols_by_deg[m.domain().degrees[c]].push_back(c);
    LaurentPoly out;
    for (const auto& [dd, cols] : cols_by_deg) {
        // collect the submatrix rows touched by these columns
        std::map<size_t, size_t> row_index;
        GradedSpace sub_dom, sub_cod;
        std::vector<size_t> rows_touched;
        for (const auto& [rc, v] : m.entries()) {
            (void)v;
            if (m.domain().degrees[rc.second] == dd) {
                if (!row_index.count(rc.first)) {
                    row_index[rc.first] = rows_touched.size();
                    rows_touched.push_back(rc.first);
                }
            }
        }
        sub_dom.labels.assign(cols.size(), "");
        sub_dom.degrees.assign(cols.size(), dd);
        sub_cod.labels.assign(rows_touched.size(), "");
        sub_cod.degrees.assign(rows_touched.size(), 0);
        SparseMatrix sub(sub_dom, sub_cod);
        std::map<size_t, size_t> col_index;
        for (size_t i = 0; i < cols.size(); ++i) col_index[cols[i]] = i;
        for (const auto& [rc, v] : m.entries()) {
            auto it = col_index.find(rc.second);
            if (it != col_index.end()) sub.set_entry(row_index[rc.first], it->second, v);
        }
        size_t r = rank(sub);
        if (r > 0) {
            int out_deg = dd;
            if (m.degree()) out_deg = dd + *m.degree();
            out.add_coeff(out_deg, Rational((long long)r));
        }
    }
    return out;
}

}  // namespace dtl
