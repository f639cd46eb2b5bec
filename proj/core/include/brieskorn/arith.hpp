#pragma once

// Exact integer utilities: checked 128-bit arithmetic, reduced rationals,
// Hirzebruch-Jung (negative) continued fractions and Fibonacci numbers.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "brieskorn/error.hpp"

namespace brieskorn {

using i128 = __int128;

i128 checked_add(i128 a, i128 b);
i128 checked_sub(i128 a, i128 b);
i128 checked_mul(i128 a, i128 b);

/// Narrows to int64, throwing Errc::overflow if the value does not fit.
std::int64_t narrow64(i128 v);

std::string to_string(i128 v);
std::ostream& operator<<(std::ostream& os, i128 v);

/// Greatest common divisor of two nonnegative integers, not both zero.
std::int64_t gcd(std::int64_t a, std::int64_t b);
i128 gcd(i128 a, i128 b);

/// Floor division for a positive divisor.
i128 floor_div(i128 a, i128 b);

/// Exact rational in lowest terms with a positive denominator.
class Rational {
public:
    constexpr Rational() = default;
    Rational(i128 num) : num_(num), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(i128 num, i128 den);

    i128 num() const noexcept { return num_; }
    i128 den() const noexcept { return den_; }

    bool is_integer() const noexcept { return den_ == 1; }
    i128 floor() const { return floor_div(num_, den_); }
    Rational abs() const { return num_ < 0 ? Rational(-num_, den_) : *this; }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { return Rational(-num_, den_); }

    friend bool operator==(const Rational& a, const Rational& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    std::string str() const;

private:
    i128 num_ = 0;
    i128 den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Canonical Hirzebruch-Jung expansion t1 - 1/(t2 - 1/(... - 1/tm)), every ti <= -2.
struct NegContFrac {
    std::vector<std::int64_t> coefficients;

    /// Exact value of the expansion.
    Rational evaluate() const;

    friend bool operator==(const NegContFrac&, const NegContFrac&) = default;
};

/// Expands -num/den; requires 0 < den < num and gcd(num, den) = 1.
NegContFrac neg_cont_frac(std::int64_t num, std::int64_t den);

/// F_m with F_1 = F_2 = 1. Throws Errc::overflow past the 128-bit range.
i128 fibonacci(int m);

}  // namespace brieskorn
