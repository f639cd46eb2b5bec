#pragma once

// d-invariants of Brieskorn spheres Sigma(p, q, r) with pq + pr - qr = 1.
//
// For odd p the invariant is the maximum of the quadratic form
//
//     F(a, m) = (-(q+r) a^2 + 4 q a m - 4 (q-p) m^2 - 4 m + q + r) / 4
//
// over lattice points (a, m), a odd, |a| <= p, 0 <= m <= n_p, with
// F(a, m) >= F(1, 1). d_full sweeps that whole region; d_refined only
// inspects the seed (1, t+1) and points with 3 <= a < m <= n_p, using the
// concavity of F in m to pick one candidate per a. For even p the value is
// the closed form (q + r) / 4.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "brieskorn/arith.hpp"
#include "brieskorn/triples.hpp"

namespace brieskorn {

struct LatticePoint {
    std::int64_t a;
    std::int64_t m;

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

enum class Method { even_closed_form, refined, full_oracle, family_closed_form };

struct DResult {
    std::int64_t value = 0;
    std::optional<LatticePoint> witness;  // absent for even p
    Method method = Method::refined;
    std::string closed_form;               // theorem id when method == family_closed_form

    /// "even-closed-form", "refined", "full-oracle" or "family-closed-form:<id>".
    std::string method_tag() const;
};

// --- the quadratic form -----------------------------------------------------

/// f(x, y) = -(q+r) x^2 + 4 q x y - 4 (q-p) y^2 - 4 y.
i128 f_eval(const Triple& t, i128 x, i128 y);

/// 4 F(x, y) = f(x, y) + q + r, always an integer.
i128 F4_eval(const Triple& t, i128 x, i128 y);

/// F(x, y) as an exact rational.
Rational F_eval(const Triple& t, i128 x, i128 y);

/// Numerator N of the completed-square form F(a, m) = N / (4 (q - p)),
/// N = -((2 (q-p) m - a q + 1)^2 - (q - a)^2).
i128 F_factored_numerator(const Triple& t, i128 a, i128 m);
Rational F_factored(const Triple& t, i128 a, i128 m);

// --- lattice sets -------------------------------------------------------------

/// Whether (a, m) lies in L_p: a odd, |a| <= p, 0 <= m <= n_p.
bool in_lattice(const Triple& t, std::int64_t a, std::int64_t m);

/// F(a, m) >= F(1, 1) for (a, m) in L_p. Throws Errc::not_in_lattice otherwise.
bool lattice_R_member(const Triple& t, std::int64_t a, std::int64_t m);

/// Seed (1, t+1) followed by every (a, m) with a odd, 3 <= a < m <= n_p and
/// F(a, m) >= F(1, 1), in lexicographic order.
std::vector<LatticePoint> set_M(const Triple& t);

// --- d-invariant routes -------------------------------------------------------

/// Exhaustive maximum over a odd in [1, p], m in [1, n_p] restricted to R.
/// Lexicographically smallest witness among maximizers.
DResult d_full(const Triple& t);

/// Maximum of F over set_M(t), computed in O(p).
DResult d_refined(const Triple& t);

/// (q + r) / 4 for even p; checks the two alternative closed forms agree.
DResult d_even(const Triple& t);

/// (t + 1)(n_p + alpha) for odd p, d_even for even p.
std::int64_t D_invariant(const Triple& t);

/// l^2/4 - (alpha + 1) l + alpha^2 + 2, for l >= 1 and 0 <= alpha <= l.
Rational chi(std::int64_t l, std::int64_t alpha);

// --- torus-knot surgeries -----------------------------------------------------

struct SemigroupData {
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::int64_t g = 0;          // (p - 1)(q - 1) / 2
    std::vector<bool> members;   // members[s] for 0 <= s < 2g; everything >= 2g is a member

    bool contains(std::int64_t s) const;
};

/// Numerical semigroup generated by coprime p < q.
SemigroupData semigroup(std::int64_t p, std::int64_t q);

/// d(Sigma(p, q, pqn - 1)) = 2 #{ s >= g : s not in S(p, q) }.
std::int64_t d_semigroup_minus(std::int64_t p, std::int64_t q, std::int64_t n);

/// d(Sigma(p, q, pqn + 1)) = 0.
std::int64_t d_semigroup_plus(std::int64_t p, std::int64_t q, std::int64_t n);

// --- membership diagnostics -----------------------------------------------------

/// Evaluates the four-condition characterisation of R at (a, m). Condition (3)
/// compares d_frak against t_frak = sqrt(Delta) / (2 (q + r)). That bound is a
/// guess, so condition (3) is reported but never used to decide membership.
struct Prop48Data {
    bool is_one_one = false;
    bool cond_m_ge_2 = false;
    i128 delta = 0;                     // 4 (2m - (q+r))^2 - 16 (q+r)(p-1)
    bool cond_delta_nonneg = false;
    Rational c;                         // 2 q m / (q + r)
    Rational d_frak;                    // distance from c to the nearest odd integer
    std::optional<Rational> t_frak_sq;  // t_frak^2, present when delta >= 0
    std::optional<bool> cond_d_le_t;    // assumes the undefined bound equals t_frak
    bool cond_nearest_odd = false;      // |c - a| == d_frak
    bool in_R = false;                  // by the definition F(a, m) >= F(1, 1)

    double t_frak() const;
};

Prop48Data prop48_conditions(const Triple& t, std::int64_t a, std::int64_t m);

// --- classification -------------------------------------------------------------

enum class SRegime { none, below_one, one, two_u_over_u_plus_one, irregular, two };

std::string to_string(SRegime r);

/// If s = 2u/(u+1) for a positive integer u, returns u.
std::optional<std::int64_t> su_parameter(const Rational& s);

struct TheoremHit {
    std::string id;
    std::string statement;
    std::int64_t predicted_d = 0;
    bool guarantees_d_eq_D = true;
};

struct ClassificationReport {
    Triple triple;
    std::optional<Decomposition> decomposition;
    std::int64_t D = 0;
    SRegime regime = SRegime::none;
    std::optional<std::int64_t> su_u;
    std::vector<TheoremHit> theorems;   // every applicable closed form
    bool d_eq_D_guaranteed = false;
    bool D_eq_p_minus_1 = false;        // D = p - 1 exactly when l >= n_p

    bool applies(const std::string& id) const;
};

ClassificationReport classify(const Triple& t);

enum class DMethod { automatic, full, refined, closed_form };

/// auto: even closed form, then an applicable odd closed form, then refined.
DResult d(const Triple& t, DMethod method = DMethod::automatic);

}  // namespace brieskorn
