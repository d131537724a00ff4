#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "crossfield/errors.hpp"

namespace crossfield {

// Exact non-negative rational. All publication-share arithmetic stays in
// integer numerator/denominator form; conversion to double happens only at
// the reporting boundary, so symmetry and partition identities can be
// asserted exactly.
class Ratio {
  public:
    constexpr Ratio() = default;

    Ratio(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0) throw DomainError("ratio with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        normalize();
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // Exact (a + b) / 2.
    static Ratio half_sum(const Ratio& a, const Ratio& b) {
        __int128 num = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
        __int128 den = static_cast<__int128>(a.den_) * b.den_ * 2;
        return from_wide(num, den);
    }

    friend bool operator==(const Ratio& a, const Ratio& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;  // both normalized
    }
    friend bool operator!=(const Ratio& a, const Ratio& b) { return !(a == b); }
    friend bool operator<(const Ratio& a, const Ratio& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator>(const Ratio& a, const Ratio& b) { return b < a; }
    friend bool operator<=(const Ratio& a, const Ratio& b) { return !(b < a); }
    friend bool operator>=(const Ratio& a, const Ratio& b) { return !(a < b); }

  private:
    static Ratio from_wide(__int128 num, __int128 den) {
        bool neg = (num < 0) != (den < 0) && num != 0;
        __int128 n = num < 0 ? -num : num;
        __int128 d = den < 0 ? -den : den;
        while (d > 0 && (n > INT64_MAX || d > INT64_MAX)) {
            // reduce first; fall back to refusing silently-lossy values
            __int128 g = gcd_wide(n, d);
            if (g <= 1) throw DomainError("ratio overflow");
            n /= g;
            d /= g;
        }
        Ratio r;
        r.num_ = static_cast<std::int64_t>(neg ? -n : n);
        r.den_ = static_cast<std::int64_t>(d);
        if (r.den_ == 0) throw DomainError("ratio with zero denominator");
        r.normalize();
        return r;
    }

    static __int128 gcd_wide(__int128 a, __int128 b) {
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    void normalize() {
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        num_ /= g;
        den_ /= g;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

// "66.7%": percent with `decimals` fraction digits, round half away from
// zero, computed in integer arithmetic so the rendered digit never depends
// on floating-point rounding.
std::string percent_string(const Ratio& r, int decimals = 1);

// "0.666667": fixed six-decimal rendering used by raw CSV columns and the
// graph export.
std::string raw_string(const Ratio& r);

}  // namespace crossfield
