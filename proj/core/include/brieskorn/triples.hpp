#pragma once

// Brieskorn triples (p, q, r) with pq + pr - qr = 1.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <limits>
#include <optional>
#include <vector>

#include "brieskorn/arith.hpp"

namespace brieskorn {

/// A validated triple: 1 < p < q < r, pairwise coprime, pq + pr - qr = 1.
/// Only make_triple produces instances.
class Triple {
public:
    std::int64_t p() const noexcept { return p_; }
    std::int64_t q() const noexcept { return q_; }
    std::int64_t r() const noexcept { return r_; }

    bool odd_p() const noexcept { return p_ % 2 != 0; }

    friend bool operator==(const Triple&, const Triple&) = default;
    friend auto operator<=>(const Triple&, const Triple&) = default;

private:
    friend Triple make_triple(std::int64_t p, std::int64_t q);
    Triple(std::int64_t p, std::int64_t q, std::int64_t r) : p_(p), q_(q), r_(r) {}

    std::int64_t p_;
    std::int64_t q_;
    std::int64_t r_;
};

std::ostream& operator<<(std::ostream& os, const Triple& t);

/// Builds the unique triple with the given p, q; r = (pq - 1)/(q - p).
/// Errors: Errc::out_of_range, Errc::not_coprime, Errc::non_integral_r.
Triple make_triple(std::int64_t p, std::int64_t q);

/// Builds a triple from all three entries and checks r matches.
Triple make_triple(std::int64_t p, std::int64_t q, std::int64_t r);

/// Derived data for odd p: n_p = t * l + alpha with 0 <= alpha < l.
struct Decomposition {
    std::int64_t n_p;
    std::int64_t l;
    std::int64_t t;
    std::int64_t alpha;
    Rational s;  // l / n_p

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Throws Errc::even_p for even p.
Decomposition decompose(const Triple& t);

struct LRange {
    std::int64_t min = 1;
    std::int64_t max = std::numeric_limits<std::int64_t>::max();
};

/// Calls `fn` for every valid triple with p <= p_max, ordered by (p, q).
void for_each_triple(std::int64_t p_max, const std::function<void(const Triple&)>& fn,
                     std::optional<LRange> l_filter = std::nullopt);

/// Collects the same stream as for_each_triple.
std::vector<Triple> enumerate(std::int64_t p_max, std::optional<LRange> l_filter = std::nullopt);

/// All valid triples sharing this p, ordered by q.
std::vector<Triple> triples_with_p(std::int64_t p);

/// Sorted positive divisors of n (n >= 1).
std::vector<std::int64_t> divisors(std::int64_t n);

}  // namespace brieskorn
