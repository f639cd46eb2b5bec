#pragma once

// Seifert invariants, plumbing trees for Sigma(p, q, r), the intersection
// form determinant and graph export.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "brieskorn/arith.hpp"
#include "brieskorn/triples.hpp"

namespace brieskorn {

/// Pairwise coprime 1 < p < q < r. `almost_simple` records pq + pr - qr = 1.
struct SeifertTriple {
    std::int64_t p;
    std::int64_t q;
    std::int64_t r;
    bool almost_simple;
};

/// Relaxed constructor accepting any pairwise coprime 1 < p < q < r.
SeifertTriple seifert_triple(std::int64_t p, std::int64_t q, std::int64_t r);
SeifertTriple seifert_triple(const Triple& t);

/// e0 pqr + p' qr + p q' r + p q r' = -1 with 0 < p' < p, 0 < q' < q, 0 < r' < r.
struct SeifertData {
    std::int64_t e0;
    std::int64_t p1;
    std::int64_t q1;
    std::int64_t r1;

    friend bool operator==(const SeifertData&, const SeifertData&) = default;
};

SeifertData seifert_data(const SeifertTriple& s);
SeifertData seifert_data(const Triple& t);

enum class GraphShape { star, almost_simple_linear };

std::string to_string(GraphShape s);

struct PlumbingGraph {
    std::vector<std::int64_t> weights;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    GraphShape shape = GraphShape::star;

    std::size_t size() const noexcept { return weights.size(); }

    friend bool operator==(const PlumbingGraph&, const PlumbingGraph&) = default;
};

/// Nonempty, connected, |E| = |V| - 1, no self loops or out-of-range endpoints.
bool is_tree(const PlumbingGraph& g);

/// Central vertex e0 with three legs from the expansions of -p/p', -q/q', -r/r'.
PlumbingGraph star_graph(const SeifertTriple& s);
PlumbingGraph star_graph(const Triple& t);

/// Chain of q + r - 1 vertices weighted -2 with a -p vertex attached to the
/// chain vertex at 0-based index q - 1.
PlumbingGraph almost_simple_linear_graph(const Triple& t);

/// Exact determinant of the intersection matrix (weights on the diagonal,
/// 1 for adjacent vertices). Throws Errc::invalid_input unless g is a tree.
i128 determinant(const PlumbingGraph& g);

enum class GraphFormat { dot, json };

/// Throws Errc::invalid_input for an empty graph.
std::string export_graph(const PlumbingGraph& g, GraphFormat format);

/// Inverse of export_graph(g, GraphFormat::json).
PlumbingGraph graph_from_json(std::string_view text);

}  // namespace brieskorn
