#include "brieskorn/triples.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <string>

namespace brieskorn {

namespace {

std::string triple_str(std::int64_t p, std::int64_t q) {
    return "(p, q) = (" + std::to_string(p) + ", " + std::to_string(q) + ")";
}

void factor_into(std::int64_t n, std::map<std::int64_t, int>& out) {
    for (std::int64_t d = 2; d * d <= n; ++d) {
        while (n % d == 0) {
            ++out[d];
            n /= d;
        }
    }
    if (n > 1) ++out[n];
}

std::vector<std::int64_t> divisors_from(const std::map<std::int64_t, int>& factors, std::int64_t cap) {
    std::vector<std::int64_t> divs{1};
    for (auto [prime, exp] : factors) {
        const std::size_t n = divs.size();
        std::int64_t pk = 1;
        for (int e = 1; e <= exp; ++e) {
            if (pk > cap / prime) break;
            pk *= prime;
            for (std::size_t i = 0; i < n; ++i)
                if (divs[i] <= cap / pk) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const Triple& t) {
    return os << '(' << t.p() << ", " << t.q() << ", " << t.r() << ')';
}

Triple make_triple(std::int64_t p, std::int64_t q) {
    if (p < 2) throw Error(Errc::out_of_range, "p must be at least 2, got " + triple_str(p, q));
    if (q < p + 1 || q > 2 * p - 1)
        throw Error(Errc::out_of_range, "q must lie in [p+1, 2p-1], got " + triple_str(p, q));
    if (std::gcd(p, q) != 1) throw Error(Errc::not_coprime, "gcd(p, q) != 1 for " + triple_str(p, q));

    const i128 numer = checked_sub(checked_mul(p, q), 1);
    const i128 l = q - p;
    if (numer % l != 0)
        throw Error(Errc::non_integral_r, "q - p does not divide p^2 - 1 for " + triple_str(p, q));
    const std::int64_t r = narrow64(numer / l);
    if (std::gcd(q, r) != 1 || std::gcd(p, r) != 1)
        throw Error(Errc::not_coprime, "r is not coprime to p and q for " + triple_str(p, q));
    // pq + pr - qr = 1 holds by construction of r; recheck in wide arithmetic
    const i128 lhs = checked_sub(checked_add(checked_mul(p, q), checked_mul(p, r)), checked_mul(q, r));
    if (lhs != 1) throw Error(Errc::integrity, "pq + pr - qr != 1 for " + triple_str(p, q));
    return Triple(p, q, r);
}

Triple make_triple(std::int64_t p, std::int64_t q, std::int64_t r) {
    Triple t = make_triple(p, q);
    if (t.r() != r)
        throw Error(Errc::not_almost_simple, "pq + pr - qr != 1 for (" + std::to_string(p) + ", " +
                                                 std::to_string(q) + ", " + std::to_string(r) + ")");
    return t;
}

Decomposition decompose(const Triple& t) {
    if (!t.odd_p()) throw Error(Errc::even_p, "decompose requires odd p");
    Decomposition d{};
    d.n_p = (t.p() - 1) / 2;
    d.l = t.q() - t.p();
    d.t = d.n_p / d.l;
    d.alpha = d.n_p % d.l;
    d.s = Rational(d.l, d.n_p);
    return d;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    if (n < 1) throw Error(Errc::invalid_input, "divisors requires n >= 1");
    std::map<std::int64_t, int> f;
    factor_into(n, f);
    return divisors_from(f, n);
}

std::vector<Triple> triples_with_p(std::int64_t p) {
    std::vector<Triple> out;
    if (p < 2) return out;
    // p^2 - 1 = (p - 1)(p + 1); factor the two halves separately
    std::map<std::int64_t, int> f;
    factor_into(p - 1, f);
    factor_into(p + 1, f);
    for (std::int64_t l : divisors_from(f, p - 1)) {
        const std::int64_t q = p + l;
        if (std::gcd(p, q) != 1) continue;
        out.push_back(make_triple(p, q));
    }
    return out;
}

void for_each_triple(std::int64_t p_max, const std::function<void(const Triple&)>& fn,
                     std::optional<LRange> l_filter) {
    for (std::int64_t p = 2; p <= p_max; ++p) {
        for (const Triple& t : triples_with_p(p)) {
            const std::int64_t l = t.q() - t.p();
            if (l_filter && (l < l_filter->min || l > l_filter->max)) continue;
            fn(t);
        }
    }
}

std::vector<Triple> enumerate(std::int64_t p_max, std::optional<LRange> l_filter) {
    std::vector<Triple> out;
    for_each_triple(p_max, [&](const Triple& t) { out.push_back(t); }, l_filter);
    return out;
}

}  // namespace brieskorn
