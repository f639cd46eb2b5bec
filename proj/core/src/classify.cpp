#include <cmath>

#include "brieskorn/dinv.hpp"

namespace brieskorn {

std::string to_string(SRegime r) {
    switch (r) {
        case SRegime::none: return "none";
        case SRegime::below_one: return "s<1";
        case SRegime::one: return "s=1";
        case SRegime::two_u_over_u_plus_one: return "s=2u/(u+1)";
        case SRegime::irregular: return "irregular";
        case SRegime::two: return "s=2";
    }
    return "unknown";
}

std::optional<std::int64_t> su_parameter(const Rational& s) {
    // s = 2u/(u+1)  <=>  u = s / (2 - s)
    if (s <= Rational(0) || s >= Rational(2)) return std::nullopt;
    const Rational u = s / (Rational(2) - s);
    if (!u.is_integer() || u.num() < 1) return std::nullopt;
    return narrow64(u.num());
}

bool ClassificationReport::applies(const std::string& id) const {
    for (const auto& hit : theorems)
        if (hit.id == id) return true;
    return false;
}

namespace {

// p <= l + 3 + 2 sqrt(2 (l + 2)), decided in integers
bool below_sqrt_bound(std::int64_t p, std::int64_t l) {
    const i128 x = static_cast<i128>(p) - l - 3;
    return x <= 0 || checked_mul(x, x) <= checked_mul(8, static_cast<i128>(l) + 2);
}

}  // namespace

ClassificationReport classify(const Triple& t) {
    ClassificationReport rep{t, std::nullopt, 0, SRegime::none, std::nullopt, {}, false, false};
    const std::int64_t p = t.p();

    if (!t.odd_p()) {
        rep.D = d_even(t).value;
        rep.theorems.push_back({"even-closed-form", "even p: d = (q + r)/4", rep.D, true});
        rep.d_eq_D_guaranteed = true;
        rep.D_eq_p_minus_1 = rep.D == p - 1;
        return rep;
    }

    const Decomposition dec = decompose(t);
    rep.decomposition = dec;
    rep.D = D_invariant(t);
    rep.D_eq_p_minus_1 = dec.l >= dec.n_p;
    if (rep.D_eq_p_minus_1 != (rep.D == p - 1))
        throw Error(Errc::integrity, "D = p - 1 does not match l >= n_p");

    const std::int64_t n = dec.n_p;
    const std::int64_t l = dec.l;
    const Rational& s = dec.s;
    rep.su_u = su_parameter(s);
    if (s < Rational(1)) rep.regime = SRegime::below_one;
    else if (s == Rational(1)) rep.regime = SRegime::one;
    else if (s == Rational(2)) rep.regime = SRegime::two;
    else if (rep.su_u) rep.regime = SRegime::two_u_over_u_plus_one;
    else rep.regime = SRegime::irregular;

    auto& hits = rep.theorems;
    if (l <= 19) hits.push_back({"thm-1-19", "l <= 19: d = D", rep.D, true});
    if (dec.alpha == 0) hits.push_back({"alpha0", "alpha = 0: d = (t + 1) n_p", (dec.t + 1) * n, true});
    if (l == 2 * n) hits.push_back({"ks20-1", "l = 2 n_p: d = p - 1", p - 1, true});
    if (l == n + 1) hits.push_back({"ks20-2", "l = n_p + 1: d = p - 1", p - 1, true});
    if (l == n) hits.push_back({"ks20-3", "l = n_p: d = p - 1", p - 1, true});
    if (p >= 7 && n % 2 == 1 && l == (n + 1) / 2) {
        const std::int64_t k = (p - 3) / 4;
        hits.push_back({"ks20-4", "p = 4n + 3, l = n + 1: d = 6n + 2", 6 * k + 2, true});
    }
    if (l == 1) hits.push_back({"ks20-5", "l = 1: d = n_p^2 + n_p", narrow64(checked_mul(n, n + 1)), true});
    if (rep.su_u) hits.push_back({"su-thm", "s = 2u/(u+1): d = p - 1", p - 1, true});
    if (p <= 23 && l >= n) hits.push_back({"p-le-23", "p <= 23, l >= n_p: d = p - 1", p - 1, true});
    if (dec.t == 1 && dec.alpha == 1) hits.push_back({"t1-alpha1", "t = alpha = 1: d = p + 1", p + 1, true});
    if (Rational(p) >= chi(l, dec.alpha)) hits.push_back({"chi-suff", "p >= chi(l, alpha): d = D", rep.D, true});
    if (s > Rational(1) && p <= 2 * l + 1 && below_sqrt_bound(p, l))
        hits.push_back({"chi-suff-2", "s > 1, p <= min(l + 3 + 2 sqrt(2(l + 2)), 2l + 1): d = D", rep.D, true});

    for (const auto& hit : hits) {
        if (hit.predicted_d != rep.D)
            throw Error(Errc::integrity, "closed form " + hit.id + " disagrees with D");
        rep.d_eq_D_guaranteed = rep.d_eq_D_guaranteed || hit.guarantees_d_eq_D;
    }
    return rep;
}

DResult d(const Triple& t, DMethod method) {
    switch (method) {
        case DMethod::full:
            return d_full(t);
        case DMethod::refined:
            return d_refined(t);
        case DMethod::automatic:
        case DMethod::closed_form: {
            if (!t.odd_p()) return d_even(t);
            const ClassificationReport rep = classify(t);
            if (rep.theorems.empty()) {
                if (method == DMethod::closed_form)
                    throw Error(Errc::no_closed_form, "no closed form applies to this triple");
                return d_refined(t);
            }
            const Decomposition& dec = *rep.decomposition;
            const TheoremHit& hit = rep.theorems.front();
            return DResult{hit.predicted_d, LatticePoint{1, dec.t + 1}, Method::family_closed_form, hit.id};
        }
    }
    throw Error(Errc::invalid_input, "unknown method");
}

}  // namespace brieskorn
