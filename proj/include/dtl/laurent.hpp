#pragma once

// Laurent polynomials in the grading variable q, with Rational coefficients.
// Used for graded dimensions, quantum integers, and serialized CLI output.

#include <map>
#include <string>

#include "dtl/rational.hpp"

namespace dtl {

class LaurentPoly {
public:
    LaurentPoly() {}
    explicit LaurentPoly(const Rational& c) {
        if (!c.is_zero()) coeffs_[0] = c;
    }

    static LaurentPoly monomial(int exp, const Rational& c = Rational(1)) {
        LaurentPoly p;
        if (!c.is_zero()) p.coeffs_[exp] = c;
        return p;
    }

    // quantum integer [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}
    static LaurentPoly quantum_integer(int n) {
        LaurentPoly p;
        for (int e = n - 1; e >= 1 - n; e -= 2) p.coeffs_[e] = Rational(1);
        return p;
    }

    const std::map<int, Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Rational coeff(int exp) const {
        auto it = coeffs_.find(exp);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    void set_coeff(int exp, const Rational& c) {
        if (c.is_zero()) {
            coeffs_.erase(exp);
        } else {
            coeffs_[exp] = c;
        }
    }

    void add_coeff(int exp, const Rational& c) { set_coeff(exp, coeff(exp) + c); }

    LaurentPoly operator+(const LaurentPoly& o) const {
        LaurentPoly r = *this;
        for (const auto& [e, c] : o.coeffs_) r.add_coeff(e, c);
        return r;
    }

    LaurentPoly operator-(const LaurentPoly& o) const {
        LaurentPoly r = *this;
        for (const auto& [e, c] : o.coeffs_) r.add_coeff(e, -c);
        return r;
    }

    LaurentPoly operator*(const LaurentPoly& o) const {
        LaurentPoly r;
        for (const auto& [e1, c1] : coeffs_)
            for (const auto& [e2, c2] : o.coeffs_) r.add_coeff(e1 + e2, c1 * c2);
        return r;
    }

    LaurentPoly shifted(int k) const {
        LaurentPoly r;
        for (const auto& [e, c] : coeffs_) r.coeffs_[e + k] = c;
        return r;
    }

    bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // Serialization per the external interface: a map from exponent to
    // rational, both as strings, with exponents in increasing order.
    std::string to_json() const {
        std::string s = "{";
        bool first = true;
        for (const auto& [e, c] : coeffs_) {
            if (!first) s += ",";
            first = false;
            s += "\"" + std::to_string(e) + "\":\"" + c.to_string() + "\"";
        }
        s += "}";
        return s;
    }

    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::string s;
        bool first = true;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            const auto& [e, c] = *it;
            std::string term;
            if (e == 0) {
                term = c.to_string();
            } else {
                std::string qp = (e == 1) ? "q" : "q^" + std::to_string(e);
                if (c == Rational(1)) term = qp;
                else if (c == Rational(-1)) term = "-" + qp;
                else term = c.to_string() + "*" + qp;
            }
            if (!first && term[0] != '-') s += "+";
            s += term;
            first = false;
        }
        return s;
    }

private:
    std::map<int, Rational> coeffs_;
};

}  // namespace dtl
