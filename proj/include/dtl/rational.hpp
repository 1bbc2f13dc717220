#pragma once

// Arbitrary-precision integers and rationals.
//
// All arithmetic in this library is exact: identities between diagram
// morphisms are tested with zero tolerance, so the scalar type must never
// round. BigInt is a simple sign-magnitude bignum (base 2^32) and Rational
// keeps numerator/denominator in lowest terms with a positive denominator.

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace dtl {

class BigInt {
public:
    BigInt() : sign_(0) {}

    BigInt(long long v) : sign_(0) {
        if (v < 0) {
            sign_ = -1;
        } else if (v > 0) {
            sign_ = 1;
        }
        unsigned long long m = (v < 0) ? -(unsigned long long)v : (unsigned long long)v;
        while (m != 0) {
            mag_.push_back(static_cast<uint32_t>(m & 0xffffffffu));
            m >>= 32;
        }
    }

    static BigInt from_string(const std::string& s) {
        BigInt r;
        size_t i = 0;
        int sign = 1;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
            if (s[i] == '-') sign = -1;
            ++i;
        }
        if (i == s.size()) throw std::invalid_argument("BigInt: empty numeral");
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
            r.mul_small_inplace(10);
            r.add_small_inplace(static_cast<uint32_t>(s[i] - '0'));
        }
        r.sign_ = r.mag_.empty() ? 0 : sign;
        return r;
    }

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    bool operator==(const BigInt& o) const { return sign_ == o.sign_ && mag_ == o.mag_; }
    bool operator!=(const BigInt& o) const { return !(*this == o); }

    bool operator<(const BigInt& o) const {
        if (sign_ != o.sign_) return sign_ < o.sign_;
        int c = cmp_mag(mag_, o.mag_);
        return sign_ >= 0 ? c < 0 : c > 0;
    }
    bool operator>(const BigInt& o) const { return o < *this; }
    bool operator<=(const BigInt& o) const { return !(o < *this); }
    bool operator>=(const BigInt& o) const { return !(*this < o); }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    BigInt operator+(const BigInt& o) const {
        if (sign_ == 0) return o;
        if (o.sign_ == 0) return *this;
        BigInt r;
        if (sign_ == o.sign_) {
            r.mag_ = add_mag(mag_, o.mag_);
            r.sign_ = sign_;
        } else {
            int c = cmp_mag(mag_, o.mag_);
            if (c == 0) return BigInt();
            if (c > 0) {
                r.mag_ = sub_mag(mag_, o.mag_);
                r.sign_ = sign_;
            } else {
                r.mag_ = sub_mag(o.mag_, mag_);
                r.sign_ = o.sign_;
            }
        }
        return r;
    }

    BigInt operator-(const BigInt& o) const { return *this + (-o); }

    BigInt operator*(const BigInt& o) const {
        if (sign_ == 0 || o.sign_ == 0) return BigInt();
        BigInt r;
        r.mag_.assign(mag_.size() + o.mag_.size(), 0);
        for (size_t i = 0; i < mag_.size(); ++i) {
            uint64_t carry = 0;
            uint64_t a = mag_[i];
            for (size_t j = 0; j < o.mag_.size(); ++j) {
                uint64_t cur = r.mag_[i + j] + a * o.mag_[j] + carry;
                r.mag_[i + j] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
            }
            size_t k = i + o.mag_.size();
            while (carry != 0) {
                uint64_t cur = r.mag_[k] + carry;
                r.mag_[k] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
                ++k;
            }
        }
        r.trim();
        r.sign_ = sign_ * o.sign_;
        return r;
    }

    // Truncated division (quotient rounds toward zero, remainder has the
    // sign of the dividend), as in C integer semantics.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
        int c = cmp_mag(a.mag_, b.mag_);
        if (c < 0) {
            q = BigInt();
            r = a;
            return;
        }
        if (b.mag_.size() == 1) {
            std::vector<uint32_t> qm;
            uint32_t rem = divmod_mag_small(a.mag_, b.mag_[0], qm);
            q.mag_ = std::move(qm);
            q.trim();
            q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
            r = BigInt();
            if (rem != 0) {
                r.mag_.push_back(rem);
                r.sign_ = a.sign_;
            }
            return;
        }
        divmod_knuth(a.mag_, b.mag_, q.mag_, r.mag_);
        q.trim();
        r.trim();
        q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
        r.sign_ = r.mag_.empty() ? 0 : a.sign_;
    }

    BigInt operator/(const BigInt& o) const {
        BigInt q, r;
        divmod(*this, o, q, r);
        return q;
    }
    BigInt operator%(const BigInt& o) const {
        BigInt q, r;
        divmod(*this, o, q, r);
        return r;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a.sign_ = a.mag_.empty() ? 0 : 1;
        b.sign_ = b.mag_.empty() ? 0 : 1;
        while (!b.is_zero()) {
            BigInt q, r;
            divmod(a, b, q, r);
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    bool fits_longlong() const {
        if (mag_.size() > 2) return false;
        unsigned long long v = to_ull();
        if (sign_ >= 0) return v <= 0x7fffffffffffffffull;
        return v <= 0x8000000000000000ull;
    }

    long long to_longlong() const {
        unsigned long long v = to_ull();
        return sign_ < 0 ? -(long long)v : (long long)v;
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::vector<uint32_t> m = mag_;
        std::string digits;
        while (!m.empty()) {
            std::vector<uint32_t> q;
            uint32_t rem = divmod_mag_small(m, 1000000000u, q);
            while (!q.empty() && q.back() == 0) q.pop_back();
            m = std::move(q);
            std::string chunk = std::to_string(rem);
            if (!m.empty()) chunk = std::string(9 - chunk.size(), '0') + chunk;
            digits = chunk + digits;
        }
        return (sign_ < 0 ? "-" : "") + digits;
    }

    size_t hash() const {
        size_t h = static_cast<size_t>(sign_ + 1);
        for (uint32_t w : mag_) h = h * 1000003u + w;
        return h;
    }

private:
    void trim() {
        while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
        if (mag_.empty()) sign_ = 0;
    }

    unsigned long long to_ull() const {
        unsigned long long v = 0;
        if (mag_.size() > 0) v = mag_[0];
        if (mag_.size() > 1) v |= (unsigned long long)mag_[1] << 32;
        return v;
    }

    void mul_small_inplace(uint32_t f) {
        uint64_t carry = 0;
        for (auto& w : mag_) {
            uint64_t cur = (uint64_t)w * f + carry;
            w = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) mag_.push_back(static_cast<uint32_t>(carry));
    }

    void add_small_inplace(uint32_t v) {
        uint64_t carry = v;
        for (size_t i = 0; carry && i < mag_.size(); ++i) {
            uint64_t cur = mag_[i] + carry;
            mag_[i] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) mag_.push_back(static_cast<uint32_t>(carry));
    }

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        }
        return 0;
    }

    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& sml = a.size() >= b.size() ? b : a;
        std::vector<uint32_t> r = big;
        uint64_t carry = 0;
        for (size_t i = 0; i < sml.size(); ++i) {
            uint64_t cur = (uint64_t)r[i] + sml[i] + carry;
            r[i] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        for (size_t i = sml.size(); carry && i < r.size(); ++i) {
            uint64_t cur = (uint64_t)r[i] + carry;
            r[i] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) r.push_back(static_cast<uint32_t>(carry));
        return r;
    }

    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r = a;
        int64_t borrow = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            int64_t cur = (int64_t)r[i] - borrow - (i < b.size() ? b[i] : 0);
            if (cur < 0) {
                cur += ((int64_t)1 << 32);
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    static uint32_t divmod_mag_small(const std::vector<uint32_t>& a, uint32_t d,
                                     std::vector<uint32_t>& q) {
        q.assign(a.size(), 0);
        uint64_t rem = 0;
        for (size_t i = a.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | a[i];
            q[i] = static_cast<uint32_t>(cur / d);
            rem = cur % d;
        }
        return static_cast<uint32_t>(rem);
    }

    // Knuth algorithm D on magnitudes; requires |a| >= |b|, b.size() >= 2.
    static void divmod_knuth(const std::vector<uint32_t>& a_in,
                             const std::vector<uint32_t>& b_in,
                             std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
        int shift = 0;
        uint32_t top = b_in.back();
        while ((top & 0x80000000u) == 0) {
            top <<= 1;
            ++shift;
        }
        std::vector<uint32_t> u = shl_bits(a_in, shift);
        std::vector<uint32_t> v = shl_bits(b_in, shift);
        size_t n = v.size();
        size_t m = u.size() - n;
        u.push_back(0);
        q.assign(m + 1, 0);
        for (size_t j = m + 1; j-- > 0;) {
            uint64_t num = ((uint64_t)u[j + n] << 32) | u[j + n - 1];
            uint64_t qhat = num / v[n - 1];
            uint64_t rhat = num % v[n - 1];
            while (qhat > 0xffffffffull ||
                   qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
                --qhat;
                rhat += v[n - 1];
                if (rhat > 0xffffffffull) break;
            }
            // multiply-subtract
            int64_t borrow = 0;
            uint64_t carry = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t p = qhat * v[i] + carry;
                carry = p >> 32;
                int64_t t = (int64_t)u[i + j] - (int64_t)(uint32_t)p - borrow;
                if (t < 0) {
                    t += ((int64_t)1 << 32);
                    borrow = 1;
                } else {
                    borrow = 0;
                }
                u[i + j] = static_cast<uint32_t>(t);
            }
            int64_t t = (int64_t)u[j + n] - (int64_t)carry - borrow;
            if (t < 0) {
                // qhat was one too large: add back
                t += ((int64_t)1 << 32);
                --qhat;
                uint64_t carry2 = 0;
                for (size_t i = 0; i < n; ++i) {
                    uint64_t cur = (uint64_t)u[i + j] + v[i] + carry2;
                    u[i + j] = static_cast<uint32_t>(cur);
                    carry2 = cur >> 32;
                }
                t += (int64_t)carry2;
            }
            u[j + n] = static_cast<uint32_t>(t);
            q[j] = static_cast<uint32_t>(qhat);
        }
        u.resize(n);
        r = shr_bits(u, shift);
    }

    static std::vector<uint32_t> shl_bits(const std::vector<uint32_t>& a, int s) {
        if (s == 0) return a;
        std::vector<uint32_t> r(a.size() + 1, 0);
        for (size_t i = 0; i < a.size(); ++i) {
            r[i] |= a[i] << s;
            r[i + 1] = a[i] >> (32 - s);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    static std::vector<uint32_t> shr_bits(const std::vector<uint32_t>& a, int s) {
        std::vector<uint32_t> r = a;
        if (s != 0) {
            for (size_t i = 0; i < r.size(); ++i) {
                r[i] >>= s;
                if (i + 1 < r.size()) r[i] |= r[i + 1] << (32 - s);
            }
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    int sign_;
    std::vector<uint32_t> mag_;
};

// Exact rational number, always in lowest terms with positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { reduce(); }
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    static Rational from_string(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(BigInt::from_string(s), BigInt(1));
        return Rational(BigInt::from_string(s.substr(0, slash)),
                        BigInt::from_string(s.substr(slash + 1)));
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == BigInt(1); }
    int sign() const { return num_.sign(); }

    Rational operator+(const Rational& o) const {
        return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return Rational(num_ * o.num_, den_ * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(num_ * o.den_, den_ * o.num_);
    }
    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return (num_ * o.den_) < (o.num_ * den_); }

    Rational inverse() const { return Rational(1) / *this; }

    std::string to_string() const {
        if (is_integer()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

    size_t hash() const { return num_.hash() * 31 + den_.hash(); }

    static Rational factorial(int n) {
        Rational r(1);
        for (int i = 2; i <= n; ++i) r *= Rational(i);
        return r;
    }

    static Rational binomial(int n, int k) {
        if (k < 0 || k > n) return Rational(0);
        Rational r(1);
        for (int i = 0; i < k; ++i) r = r * Rational(n - i) / Rational(i + 1);
        return r;
    }

private:
    void reduce() {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        if (den_.sign() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = BigInt::gcd(num_, den_);
        if (g != BigInt(1)) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }

    BigInt num_;
    BigInt den_;
};

inline Rational operator*(long long a, const Rational& b) { return Rational(a) * b; }

// (-1)^k as a rational, used pervasively in sign bookkeeping.
inline Rational sign_pow(long long k) { return (k % 2 == 0) ? Rational(1) : Rational(-1); }

// binomial(n,2) mod 2 sign: (-1)^{C(n,2)}
inline Rational sign_binom2(int n) { return sign_pow((long long)n * (n - 1) / 2); }

}  // namespace dtl
