#include "brieskorn/arith.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <ostream>

namespace brieskorn {

std::string_view to_string(Errc code) noexcept {
    switch (code) {
        case Errc::invalid_input: return "invalid-input";
        case Errc::out_of_range: return "out-of-range";
        case Errc::non_integral_r: return "non-integral-r";
        case Errc::not_coprime: return "not-coprime";
        case Errc::even_p: return "even-p";
        case Errc::odd_p: return "odd-p";
        case Errc::not_in_lattice: return "not-in-lattice";
        case Errc::not_almost_simple: return "not-almost-simple";
        case Errc::parity: return "parity";
        case Errc::domain: return "domain";
        case Errc::no_closed_form: return "no-closed-form";
        case Errc::overflow: return "overflow";
        case Errc::budget: return "budget";
        case Errc::integrity: return "integrity";
    }
    return "unknown";
}

i128 checked_add(i128 a, i128 b) {
    i128 out;
    if (__builtin_add_overflow(a, b, &out)) throw Error(Errc::overflow, "128-bit overflow in addition");
    return out;
}

i128 checked_sub(i128 a, i128 b) {
    i128 out;
    if (__builtin_sub_overflow(a, b, &out)) throw Error(Errc::overflow, "128-bit overflow in subtraction");
    return out;
}

i128 checked_mul(i128 a, i128 b) {
    i128 out;
    if (__builtin_mul_overflow(a, b, &out)) throw Error(Errc::overflow, "128-bit overflow in multiplication");
    return out;
}

std::int64_t narrow64(i128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw Error(Errc::overflow, "value " + to_string(v) + " does not fit in 64 bits");
    return static_cast<std::int64_t>(v);
}

std::string to_string(i128 v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    // work in unsigned space so that the minimum value negates cleanly
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    std::string s;
    while (u != 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

std::ostream& operator<<(std::ostream& os, i128 v) { return os << to_string(v); }

std::int64_t gcd(std::int64_t a, std::int64_t b) {
    if (a < 0 || b < 0) throw Error(Errc::invalid_input, "gcd requires nonnegative arguments");
    if (a == 0 && b == 0) throw Error(Errc::invalid_input, "gcd(0, 0) is undefined");
    return std::gcd(a, b);
}

i128 gcd(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    constexpr i128 limit = std::numeric_limits<std::uint64_t>::max();
    while (b != 0) {
        if (a <= limit && b <= limit)
            return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
        i128 r = a % b;
        a = b;
        b = r;
    }
    return a;
}

i128 floor_div(i128 a, i128 b) {
    i128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Rational::Rational(i128 num, i128 den) {
    if (den == 0) throw Error(Errc::invalid_input, "rational with zero denominator");
    if (den < 0) {
        num = checked_sub(0, num);
        den = checked_sub(0, den);
    }
    i128 g = gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return Rational(checked_add(a.num_, b.num_), a.den_);
    return Rational(checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                    checked_mul(a.den_, b.den_));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    // cross-reduce first to keep intermediates small
    i128 g1 = gcd(a.num_, b.den_);
    i128 g2 = gcd(b.num_, a.den_);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    return Rational(checked_mul(a.num_ / g1, b.num_ / g2), checked_mul(a.den_ / g2, b.den_ / g1));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw Error(Errc::invalid_input, "division by zero rational");
    return a * Rational(b.den_, b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return checked_mul(a.num_, b.den_) <=> checked_mul(b.num_, a.den_);
}

std::string Rational::str() const {
    return den_ == 1 ? to_string(num_) : to_string(num_) + "/" + to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational NegContFrac::evaluate() const {
    if (coefficients.empty()) throw Error(Errc::invalid_input, "empty continued fraction");
    // fold from the innermost term outwards
    Rational acc(coefficients.back());
    for (auto it = coefficients.rbegin() + 1; it != coefficients.rend(); ++it)
        acc = Rational(*it) - Rational(1) / acc;
    return acc;
}

NegContFrac neg_cont_frac(std::int64_t num, std::int64_t den) {
    if (den <= 0 || den >= num)
        throw Error(Errc::invalid_input, "neg_cont_frac requires 0 < den < num");
    if (std::gcd(num, den) != 1)
        throw Error(Errc::invalid_input, "neg_cont_frac requires coprime arguments");

    // -num/den = t - 1/x with t = -ceil(num/den); recurse on x = -den/(ceil*den - num)
    NegContFrac out;
    while (den != 0) {
        std::int64_t c = (num + den - 1) / den;
        out.coefficients.push_back(-c);
        std::int64_t next = c * den - num;
        num = den;
        den = next;
    }
    return out;
}

i128 fibonacci(int m) {
    if (m < 1) throw Error(Errc::invalid_input, "fibonacci index must be >= 1");
    i128 a = 1;  // F_1
    i128 b = 1;  // F_2
    for (int i = 2; i < m; ++i) {
        i128 c = checked_add(a, b);
        a = b;
        b = c;
    }
    return m == 1 ? a : b;
}

}  // namespace brieskorn
