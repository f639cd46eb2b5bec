#include "brieskorn/dinv.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace brieskorn {

namespace {

void require_odd(const Triple& t, const char* op) {
    if (!t.odd_p()) throw Error(Errc::even_p, std::string(op) + " requires odd p");
}

// 4 F(a, m) as A + B m + C m^2 for fixed a.
struct Quadratic4F {
    i128 A;
    i128 B;
    i128 C;

    Quadratic4F(const Triple& t, i128 a) {
        const i128 qr = checked_add(t.q(), t.r());
        A = checked_sub(qr, checked_mul(qr, checked_mul(a, a)));
        B = checked_sub(checked_mul(checked_mul(4, t.q()), a), 4);
        C = -4 * static_cast<i128>(t.q() - t.p());
    }

    i128 operator()(i128 m) const { return checked_add(checked_add(A, checked_mul(B, m)), checked_mul(C, checked_mul(m, m))); }
};

std::int64_t checked_d_value(i128 value4, const Triple& t) {
    if (value4 % 4 != 0) throw Error(Errc::integrity, "4F at the maximizer is not divisible by 4");
    const std::int64_t v = narrow64(value4 / 4);
    if (v % 2 != 0 || v < 0) {
        std::ostringstream os;
        os << "d-invariant " << v << " of " << t << " is not a nonnegative even integer";
        throw Error(Errc::integrity, os.str());
    }
    return v;
}

}  // namespace

std::string DResult::method_tag() const {
    switch (method) {
        case Method::even_closed_form: return "even-closed-form";
        case Method::refined: return "refined";
        case Method::full_oracle: return "full-oracle";
        case Method::family_closed_form: return "family-closed-form:" + closed_form;
    }
    return "unknown";
}

i128 f_eval(const Triple& t, i128 x, i128 y) {
    const i128 qr = checked_add(t.q(), t.r());
    i128 v = checked_mul(-qr, checked_mul(x, x));
    v = checked_add(v, checked_mul(checked_mul(4, t.q()), checked_mul(x, y)));
    v = checked_sub(v, checked_mul(checked_mul(4, t.q() - t.p()), checked_mul(y, y)));
    return checked_sub(v, checked_mul(4, y));
}

i128 F4_eval(const Triple& t, i128 x, i128 y) {
    return checked_add(f_eval(t, x, y), checked_add(t.q(), t.r()));
}

Rational F_eval(const Triple& t, i128 x, i128 y) { return Rational(F4_eval(t, x, y), 4); }

i128 F_factored_numerator(const Triple& t, i128 a, i128 m) {
    const i128 l = t.q() - t.p();
    const i128 u = checked_add(checked_sub(checked_mul(checked_mul(2, l), m), checked_mul(a, t.q())), 1);
    const i128 v = checked_sub(t.q(), a);
    return checked_sub(checked_mul(v, v), checked_mul(u, u));
}

Rational F_factored(const Triple& t, i128 a, i128 m) {
    return Rational(F_factored_numerator(t, a, m), checked_mul(4, t.q() - t.p()));
}

bool in_lattice(const Triple& t, std::int64_t a, std::int64_t m) {
    if (!t.odd_p()) return false;
    const std::int64_t n_p = (t.p() - 1) / 2;
    return a % 2 != 0 && a >= -t.p() && a <= t.p() && m >= 0 && m <= n_p;
}

bool lattice_R_member(const Triple& t, std::int64_t a, std::int64_t m) {
    require_odd(t, "lattice_R_member");
    if (!in_lattice(t, a, m)) throw Error(Errc::not_in_lattice, "point is outside L_p");
    return F4_eval(t, a, m) >= F4_eval(t, 1, 1);
}

std::vector<LatticePoint> set_M(const Triple& t) {
    const Decomposition dec = decompose(t);
    const i128 threshold = F4_eval(t, 1, 1);
    std::vector<LatticePoint> out{{1, dec.t + 1}};
    for (std::int64_t a = 3; a < dec.n_p; a += 2) {
        const Quadratic4F f(t, a);
        for (std::int64_t m = a + 1; m <= dec.n_p; ++m)
            if (f(m) >= threshold) out.push_back({a, m});
    }
    return out;
}

DResult d_full(const Triple& t) {
    require_odd(t, "d_full");
    const std::int64_t n_p = (t.p() - 1) / 2;
    const i128 threshold = F4_eval(t, 1, 1);
    i128 best = threshold;
    LatticePoint witness{1, 1};
    for (std::int64_t a = 1; a <= t.p(); a += 2) {
        const Quadratic4F f(t, a);
        for (std::int64_t m = 1; m <= n_p; ++m) {
            const i128 v = f(m);
            if (v > best) {
                best = v;
                witness = {a, m};
            }
        }
    }
    return DResult{checked_d_value(best, t), witness, Method::full_oracle, {}};
}

DResult d_refined(const Triple& t) {
    const Decomposition dec = decompose(t);
    const i128 threshold = F4_eval(t, 1, 1);
    LatticePoint witness{1, dec.t + 1};
    i128 best = F4_eval(t, 1, dec.t + 1);

    const i128 two_l = 2 * static_cast<i128>(dec.l);
    for (std::int64_t a = 3; a < dec.n_p; a += 2) {
        // F(a, .) is concave in m with vertex (a q - 1) / (2 l)
        const Quadratic4F f(t, a);
        const i128 lo = a + 1;
        const i128 hi = dec.n_p;
        const i128 vertex_floor = floor_div(checked_sub(checked_mul(a, t.q()), 1), two_l);
        const i128 c0 = std::clamp(vertex_floor, lo, hi);
        const i128 c1 = std::clamp(vertex_floor + 1, lo, hi);
        i128 m_best = c0;
        i128 v_best = f(c0);
        if (c1 != c0) {
            const i128 v1 = f(c1);
            if (v1 > v_best) {
                v_best = v1;
                m_best = c1;
            }
        }
        if (v_best >= threshold && v_best > best) {
            best = v_best;
            witness = {a, static_cast<std::int64_t>(m_best)};
        }
    }
    return DResult{checked_d_value(best, t), witness, Method::refined, {}};
}

DResult d_even(const Triple& t) {
    if (t.odd_p()) throw Error(Errc::odd_p, "d_even requires even p");
    const i128 p = t.p(), q = t.q(), r = t.r();
    const i128 qr = q + r;
    if (qr % 4 != 0) throw Error(Errc::integrity, "q + r is not divisible by 4");
    // (q+r)/4 = (r^2-1)/(4(r-p)) = (q^2-1)/(4(q-p)), compared by cross-multiplication
    if (checked_sub(checked_mul(r, r), 1) != checked_mul(qr, r - p) ||
        checked_sub(checked_mul(q, q), 1) != checked_mul(qr, q - p))
        throw Error(Errc::integrity, "even-p closed forms disagree");
    const std::int64_t v = narrow64(qr / 4);
    if (v % 2 != 0) throw Error(Errc::integrity, "even-p d-invariant is odd");
    return DResult{v, std::nullopt, Method::even_closed_form, {}};
}

std::int64_t D_invariant(const Triple& t) {
    if (!t.odd_p()) return d_even(t).value;
    const Decomposition dec = decompose(t);
    return narrow64(checked_mul(dec.t + 1, static_cast<i128>(dec.n_p) + dec.alpha));
}

Rational chi(std::int64_t l, std::int64_t alpha) {
    if (l < 1 || alpha < 0 || alpha > l) throw Error(Errc::invalid_input, "chi requires l >= 1 and 0 <= alpha <= l");
    const i128 L = l, A = alpha;
    return Rational(checked_mul(L, L), 4) + Rational(checked_add(checked_sub(checked_mul(A, A), checked_mul(A + 1, L)), 2));
}

bool SemigroupData::contains(std::int64_t s) const {
    if (s < 0) return false;
    if (s >= 2 * g) return true;
    return members[static_cast<std::size_t>(s)];
}

SemigroupData semigroup(std::int64_t p, std::int64_t q) {
    if (p < 1 || q < 1) throw Error(Errc::invalid_input, "semigroup generators must be positive");
    if (std::gcd(p, q) != 1) throw Error(Errc::not_coprime, "semigroup generators must be coprime");
    SemigroupData sg;
    sg.p = p;
    sg.q = q;
    sg.g = narrow64(checked_mul(p - 1, q - 1) / 2);
    constexpr std::int64_t max_bits = std::int64_t{1} << 32;
    if (2 * sg.g > max_bits) throw Error(Errc::budget, "semigroup table too large");
    sg.members.assign(static_cast<std::size_t>(2 * sg.g), false);
    for (std::int64_t s = 0; s < 2 * sg.g; ++s) {
        const auto i = static_cast<std::size_t>(s);
        sg.members[i] = s == 0 || (s >= p && sg.members[i - static_cast<std::size_t>(p)]) ||
                        (s >= q && sg.members[i - static_cast<std::size_t>(q)]);
    }
    return sg;
}

std::int64_t d_semigroup_minus(std::int64_t p, std::int64_t q, std::int64_t n) {
    if (!(1 < p && p < q)) throw Error(Errc::invalid_input, "d_semigroup_minus requires 1 < p < q");
    if (n < 1) throw Error(Errc::invalid_input, "d_semigroup_minus requires n >= 1");
    const SemigroupData sg = semigroup(p, q);
    std::int64_t gaps = 0;
    for (std::int64_t s = sg.g; s < 2 * sg.g; ++s)
        if (!sg.contains(s)) ++gaps;
    return 2 * gaps;
}

std::int64_t d_semigroup_plus(std::int64_t p, std::int64_t q, std::int64_t n) {
    if (p < 1 || q < 1 || n < 1) throw Error(Errc::invalid_input, "d_semigroup_plus requires positive arguments");
    if (std::gcd(p, q) != 1) throw Error(Errc::not_coprime, "d_semigroup_plus requires coprime p, q");
    return 0;
}

double Prop48Data::t_frak() const {
    if (!t_frak_sq) return std::nan("");
    return std::sqrt(static_cast<double>(t_frak_sq->num()) / static_cast<double>(t_frak_sq->den()));
}

Prop48Data prop48_conditions(const Triple& t, std::int64_t a, std::int64_t m) {
    require_odd(t, "prop48_conditions");
    if (!in_lattice(t, a, m)) throw Error(Errc::not_in_lattice, "point is outside L_p");
    const i128 qr = checked_add(t.q(), t.r());

    Prop48Data out;
    out.is_one_one = a == 1 && m == 1;
    out.cond_m_ge_2 = m >= 2;
    const i128 diff = checked_sub(2 * static_cast<i128>(m), qr);
    out.delta = checked_sub(checked_mul(4, checked_mul(diff, diff)), checked_mul(checked_mul(16, qr), t.p() - 1));
    out.cond_delta_nonneg = out.delta >= 0;

    out.c = Rational(checked_mul(2 * static_cast<i128>(t.q()), m), qr);
    i128 below = out.c.floor();
    if (below % 2 == 0) below -= 1;  // largest odd integer <= c
    out.d_frak = std::min(out.c - Rational(below), Rational(below + 2) - out.c);

    if (out.cond_delta_nonneg) {
        out.t_frak_sq = Rational(out.delta, checked_mul(4, checked_mul(qr, qr)));
        out.cond_d_le_t = out.d_frak * out.d_frak <= *out.t_frak_sq;
    }
    out.cond_nearest_odd = (out.c - Rational(a)).abs() == out.d_frak;
    out.in_R = F4_eval(t, a, m) >= F4_eval(t, 1, 1);
    return out;
}

}  // namespace brieskorn
