#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "netlap/errors.hpp"

namespace netlap {

// Signed arbitrary-precision integer, sign + magnitude in base 2^32.
// Exact elimination and division-free characteristic-polynomial
// intermediates overflow 64-bit machine words around order 13, so every
// exact path in the library runs on this type.
class Bigint {
public:
    Bigint() = default;

    Bigint(long long v) {
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        std::uint64_t m = v < 0 ? 0ULL - static_cast<std::uint64_t>(v)
                                : static_cast<std::uint64_t>(v);
        mag_.push_back(static_cast<std::uint32_t>(m));
        if (m >> 32) mag_.push_back(static_cast<std::uint32_t>(m >> 32));
    }
    Bigint(int v) : Bigint(static_cast<long long>(v)) {}

    static Bigint from_string(std::string_view s) {
        if (s.empty()) throw input_error("Bigint: empty string");
        int sign = 1;
        std::size_t i = 0;
        if (s[0] == '-' || s[0] == '+') {
            sign = s[0] == '-' ? -1 : 1;
            i = 1;
        }
        if (i == s.size()) throw input_error("Bigint: no digits");
        Bigint r;
        while (i < s.size()) {
            std::size_t take = std::min<std::size_t>(9, s.size() - i);
            std::uint32_t chunk = 0;
            std::uint32_t pow = 1;
            for (std::size_t j = 0; j < take; ++j) {
                char c = s[i + j];
                if (c < '0' || c > '9') throw input_error("Bigint: bad digit");
                chunk = chunk * 10 + static_cast<std::uint32_t>(c - '0');
                pow *= 10;
            }
            r = r * Bigint(static_cast<long long>(pow)) + Bigint(static_cast<long long>(chunk));
            i += take;
        }
        if (sign < 0) r = -r;
        return r;
    }

    int signum() const { return sign_; }
    bool is_zero() const { return sign_ == 0; }

    Bigint abs() const {
        Bigint r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    bool fits_longlong() const {
        if (mag_.size() > 2) return false;
        std::uint64_t m = mag_u64();
        if (sign_ >= 0) return m <= 0x7fffffffffffffffULL;
        return m <= 0x8000000000000000ULL;
    }

    long long as_longlong() const {
        std::uint64_t m = mag_u64();
        return sign_ < 0 ? -static_cast<long long>(m - 1) - 1
                         : static_cast<long long>(m);
    }

    double to_double() const {
        double d = 0.0;
        for (std::size_t i = mag_.size(); i-- > 0;)
            d = d * 4294967296.0 + static_cast<double>(mag_[i]);
        return sign_ < 0 ? -d : d;
    }

    std::string str() const {
        if (sign_ == 0) return "0";
        std::vector<std::uint32_t> m = mag_;
        std::vector<std::uint32_t> chunks;
        while (!m.empty()) {
            std::uint64_t rem = 0;
            for (std::size_t i = m.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | m[i];
                m[i] = static_cast<std::uint32_t>(cur / 1000000000ULL);
                rem = cur % 1000000000ULL;
            }
            chunks.push_back(static_cast<std::uint32_t>(rem));
            while (!m.empty() && m.back() == 0) m.pop_back();
        }
        std::string out = sign_ < 0 ? "-" : "";
        out += std::to_string(chunks.back());
        for (std::size_t i = chunks.size() - 1; i-- > 0;) {
            std::string part = std::to_string(chunks[i]);
            out += std::string(9 - part.size(), '0') + part;
        }
        return out;
    }

    friend bool operator==(const Bigint& a, const Bigint& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }
    friend bool operator!=(const Bigint& a, const Bigint& b) { return !(a == b); }
    friend bool operator<(const Bigint& a, const Bigint& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
        int c = cmp_mag(a.mag_, b.mag_);
        return a.sign_ >= 0 ? c < 0 : c > 0;
    }
    friend bool operator>(const Bigint& a, const Bigint& b) { return b < a; }
    friend bool operator<=(const Bigint& a, const Bigint& b) { return !(b < a); }
    friend bool operator>=(const Bigint& a, const Bigint& b) { return !(a < b); }

    Bigint operator-() const {
        Bigint r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    friend Bigint operator+(const Bigint& a, const Bigint& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        if (a.sign_ == b.sign_) return make(a.sign_, add_mag(a.mag_, b.mag_));
        int c = cmp_mag(a.mag_, b.mag_);
        if (c == 0) return Bigint();
        return c > 0 ? make(a.sign_, sub_mag(a.mag_, b.mag_))
                     : make(b.sign_, sub_mag(b.mag_, a.mag_));
    }

    friend Bigint operator-(const Bigint& a, const Bigint& b) { return a + (-b); }

    friend Bigint operator*(const Bigint& a, const Bigint& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return Bigint();
        return make(a.sign_ * b.sign_, mul_mag(a.mag_, b.mag_));
    }

    // Truncated division: q = trunc(a/b), r = a - q*b, |r| < |b|, sign(r) = sign(a).
    static std::pair<Bigint, Bigint> divrem(const Bigint& a, const Bigint& b) {
        if (b.sign_ == 0) throw numeric_error("Bigint: division by zero");
        if (a.sign_ == 0) return {Bigint(), Bigint()};
        auto [qm, rm] = divrem_mag(a.mag_, b.mag_);
        Bigint q = make(a.sign_ * b.sign_, std::move(qm));
        Bigint r = make(a.sign_, std::move(rm));
        return {q, r};
    }

    friend Bigint operator/(const Bigint& a, const Bigint& b) { return divrem(a, b).first; }
    friend Bigint operator%(const Bigint& a, const Bigint& b) { return divrem(a, b).second; }

    // Division known to be exact; throws numeric_error on a nonzero remainder.
    // Fraction-free elimination relies on this as a built-in tripwire.
    static Bigint exact_div(const Bigint& a, const Bigint& b) {
        auto [q, r] = divrem(a, b);
        if (!r.is_zero()) throw numeric_error("Bigint: inexact division where exact was required");
        return q;
    }

    Bigint& operator+=(const Bigint& o) { return *this = *this + o; }
    Bigint& operator-=(const Bigint& o) { return *this = *this - o; }
    Bigint& operator*=(const Bigint& o) { return *this = *this * o; }

    friend std::ostream& operator<<(std::ostream& os, const Bigint& v) { return os << v.str(); }

private:
    int sign_ = 0;                    // -1, 0, +1
    std::vector<std::uint32_t> mag_;  // little-endian, no leading zero limbs, empty iff zero

    std::uint64_t mag_u64() const {
        std::uint64_t m = 0;
        if (mag_.size() > 1) m = static_cast<std::uint64_t>(mag_[1]) << 32;
        if (!mag_.empty()) m |= mag_[0];
        return m;
    }

    static Bigint make(int sign, std::vector<std::uint32_t> mag) {
        Bigint r;
        r.mag_ = std::move(mag);
        trim(r.mag_);
        r.sign_ = r.mag_.empty() ? 0 : sign;
        return r;
    }

    static void trim(std::vector<std::uint32_t>& m) {
        while (!m.empty() && m.back() == 0) m.pop_back();
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<std::uint32_t> r(big.size() + 1, 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < big.size(); ++i) {
            std::uint64_t s = carry + big[i] + (i < small.size() ? small[i] : 0);
            r[i] = static_cast<std::uint32_t>(s);
            carry = s >> 32;
        }
        r[big.size()] = static_cast<std::uint32_t>(carry);
        trim(r);
        return r;
    }

    // Requires |a| >= |b|.
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(a.size(), 0);
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow -
                             (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
            if (d < 0) {
                d += 1LL << 32;
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<std::uint32_t>(d);
        }
        trim(r);
        return r;
    }

    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(a.size() + b.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.size(); ++j) {
                std::uint64_t cur = static_cast<std::uint64_t>(a[i]) * b[j] + r[i + j] + carry;
                r[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            std::size_t k = i + b.size();
            while (carry) {
                std::uint64_t cur = r[k] + carry;
                r[k] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
                ++k;
            }
        }
        trim(r);
        return r;
    }

    static int nlz32(std::uint32_t x) {
        int n = 0;
        while (!(x & 0x80000000u)) {
            x <<= 1;
            ++n;
        }
        return n;
    }

    // Knuth algorithm D on 32-bit limbs; returns (quotient, remainder) magnitudes.
    static std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>
    divrem_mag(const std::vector<std::uint32_t>& u, const std::vector<std::uint32_t>& v) {
        if (cmp_mag(u, v) < 0) return {{}, u};
        if (v.size() == 1) {
            std::vector<std::uint32_t> q(u.size(), 0);
            std::uint64_t rem = 0;
            for (std::size_t i = u.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | u[i];
                q[i] = static_cast<std::uint32_t>(cur / v[0]);
                rem = cur % v[0];
            }
            trim(q);
            std::vector<std::uint32_t> r;
            if (rem) r.push_back(static_cast<std::uint32_t>(rem));
            return {q, r};
        }

        const int s = nlz32(v.back());
        const std::size_t n = v.size();
        const std::size_t m = u.size() - n;

        std::vector<std::uint32_t> vn(n);
        for (std::size_t i = n; i-- > 1;)
            vn[i] = s ? (v[i] << s) | (v[i - 1] >> (32 - s)) : v[i];
        vn[0] = v[0] << s;

        std::vector<std::uint32_t> un(u.size() + 1, 0);
        un[u.size()] = s ? u.back() >> (32 - s) : 0;
        for (std::size_t i = u.size(); i-- > 1;)
            un[i] = s ? (u[i] << s) | (u[i - 1] >> (32 - s)) : u[i];
        un[0] = u[0] << s;

        std::vector<std::uint32_t> q(m + 1, 0);
        const std::uint64_t B = 1ULL << 32;
        for (std::size_t j = m + 1; j-- > 0;) {
            std::uint64_t top = (static_cast<std::uint64_t>(un[j + n]) << 32) | un[j + n - 1];
            std::uint64_t qhat = top / vn[n - 1];
            std::uint64_t rhat = top % vn[n - 1];
            while (qhat >= B ||
                   qhat * vn[n - 2] > ((rhat << 32) | un[j + n - 2])) {
                --qhat;
                rhat += vn[n - 1];
                if (rhat >= B) break;
            }
            // multiply-subtract qhat * vn from un[j .. j+n]
            std::int64_t borrow = 0;
            std::uint64_t carry = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t p = qhat * vn[i] + carry;
                carry = p >> 32;
                std::int64_t t = static_cast<std::int64_t>(un[i + j]) -
                                 static_cast<std::int64_t>(p & 0xffffffffULL) - borrow;
                if (t < 0) {
                    t += static_cast<std::int64_t>(B);
                    borrow = 1;
                } else {
                    borrow = 0;
                }
                un[i + j] = static_cast<std::uint32_t>(t);
            }
            std::int64_t t = static_cast<std::int64_t>(un[j + n]) -
                             static_cast<std::int64_t>(carry) - borrow;
            if (t < 0) {
                // qhat was one too large: add back
                t += static_cast<std::int64_t>(B);
                --qhat;
                std::uint64_t c2 = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    std::uint64_t sum = static_cast<std::uint64_t>(un[i + j]) + vn[i] + c2;
                    un[i + j] = static_cast<std::uint32_t>(sum);
                    c2 = sum >> 32;
                }
                t += static_cast<std::int64_t>(c2);
            }
            un[j + n] = static_cast<std::uint32_t>(t);
            q[j] = static_cast<std::uint32_t>(qhat);
        }

        std::vector<std::uint32_t> r(n);
        for (std::size_t i = 0; i < n - 1; ++i)
            r[i] = s ? (un[i] >> s) | (un[i + 1] << (32 - s)) : un[i];
        r[n - 1] = un[n - 1] >> s;
        trim(q);
        trim(r);
        return {q, r};
    }
};

}  // namespace netlap
