#pragma once

// Parametric triple families with predicted d-invariants, theorem
// verification suites, cobordism comparison and pretzel helpers.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "brieskorn/dinv.hpp"
#include "brieskorn/triples.hpp"

namespace brieskorn {

using Params = std::map<std::string, std::int64_t>;

enum class PredictionKind { exact, lower_bound };

std::string to_string(PredictionKind k);

struct ParamSpec {
    std::string name;
    std::int64_t min = 1;
};

struct FamilyDescriptor {
    std::string name;
    std::vector<ParamSpec> params;
    std::string triple_formula;
    std::string prediction_formula;
    std::string domain;               // human-readable constraint list
    PredictionKind kind;
    bool asserts_strict = false;      // verification requires d > p - 1 (or d > D)
    bool odd_entries = false;         // pretzel families: p, q, r all odd

    std::vector<std::string> param_names() const;
};

/// Registry in a fixed order.
const std::vector<FamilyDescriptor>& families();

/// Throws Errc::invalid_input for an unknown name.
const FamilyDescriptor& family(std::string_view name);

struct Prediction {
    PredictionKind kind = PredictionKind::exact;
    std::int64_t value = 0;                     // exact d, or the lower bound
    std::optional<std::int64_t> strict_over;    // d must exceed this
    std::optional<std::int64_t> f34;            // F(3, 4) evaluated on the triple
    std::optional<std::int64_t> f34_closed;     // F(3, 4) from the family's closed form
};

struct FamilyInstance {
    Triple triple;
    Prediction prediction;
};

/// Errors: Errc::domain naming the violated constraint, Errc::invalid_input
/// for missing or unknown parameters.
FamilyInstance family_instance(std::string_view name, const Params& params);

/// Parameter points excluded from a family's domain whose values are known
/// exactly: exm1 (2,1), exm2 (3,2) and (4,1). Prediction is d = D.
FamilyInstance exceptional_instance(std::string_view name, const Params& params);

struct ExceptionalCase {
    std::string family;
    Params params;
};

const std::vector<ExceptionalCase>& exceptional_cases();

// --- verification -------------------------------------------------------------

struct InstanceRecord {
    std::string label;                  // parameters or a short description
    std::optional<Triple> triple;
    std::string relation;               // e.g. "d == D", "d > p-1"
    std::int64_t expected = 0;
    std::int64_t actual = 0;
    std::optional<std::int64_t> d_full; // oracle value when computed
    std::optional<std::int64_t> f34;
    bool pass = true;
    std::string note;
};

struct VerificationReport {
    std::string suite;
    std::string range;
    std::vector<InstanceRecord> records;
    std::size_t passed = 0;
    std::vector<InstanceRecord> counterexamples;
    std::vector<std::string> skipped;   // grid points outside the domain
    std::size_t refined_only = 0;       // instances above the oracle budget
    bool truncated = false;
    std::string truncation;
    bool informational = false;         // never fails (asymptotic statements)
    std::vector<std::string> notes;

    bool ok() const { return informational || counterexamples.empty(); }
};

struct VerifyOptions {
    std::int64_t oracle_max_p = 2000;
    unsigned jobs = 1;
};

/// Inclusive range per parameter. Missing parameters default to [min, 10].
using ParamGrid = std::map<std::string, std::pair<std::int64_t, std::int64_t>>;

VerificationReport verify_family(std::string_view name, const ParamGrid& grid, const VerifyOptions& opt = {});

/// Suite names in a fixed order.
const std::vector<std::string>& theorem_suites();

/// Enumerates triples with p <= bound and checks the suite's conclusion.
/// A bound above opt.oracle_max_p is clamped and the report marked truncated.
VerificationReport verify_theorem(std::string_view name, std::int64_t bound, const VerifyOptions& opt = {});

// --- single-purpose helpers -------------------------------------------------------

struct FibonacciCase {
    int k = 0;
    Triple triple;
    DResult d;
    std::int64_t D = 0;
    std::string expectation;  // "d=F/4", "d=D" or "d>D"
    bool verdict = false;     // computed d meets the expectation
};

/// (F_{2k+1}, F_{2k+2}, F_{2k+3}) for k >= 2.
FibonacciCase fibonacci_case(int k);

struct CobordismVerdict {
    Triple a;
    Triple b;
    std::int64_t d_a = 0;
    std::int64_t d_b = 0;

    bool distinguished() const { return d_a != d_b; }
    std::string verdict() const { return distinguished() ? "distinguished" : "inconclusive"; }
};

CobordismVerdict compare_cobordism(const Triple& a, const Triple& b);

/// -pq + qr - rp == -1. Throws Errc::parity unless p, q, r are all odd.
bool pretzel_alexander_trivial(std::int64_t p, std::int64_t q, std::int64_t r);
bool pretzel_alexander_trivial(const Triple& t);

}  // namespace brieskorn
