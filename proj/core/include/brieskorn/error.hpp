#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace brieskorn {

enum class Errc {
    invalid_input,   // malformed arguments (non-coprime, bad ranges, empty graph)
    out_of_range,    // q outside [p+1, 2p-1], p < 2
    non_integral_r,  // (q - p) does not divide p^2 - 1
    not_coprime,
    even_p,          // odd-p machinery called with even p
    odd_p,           // even-p closed form called with odd p
    not_in_lattice,  // (a, m) outside the lattice L_p
    not_almost_simple,
    parity,          // pretzel interpretation needs odd p, q, r
    domain,          // family parameters outside the family's domain
    no_closed_form,
    overflow,
    budget,
    integrity,       // a guaranteed identity failed: bug or corrupt input
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace brieskorn
