#include "brieskorn/plumbing.hpp"

#include <nlohmann/json.hpp>

#include <numeric>
#include <sstream>

namespace brieskorn {

namespace {

// x with a x == 1 (mod m), 0 < x < m; a and m coprime, m >= 2.
i128 mod_inverse(i128 a, i128 m) {
    i128 old_r = ((a % m) + m) % m, r = m;
    i128 old_s = 1, s = 0;
    while (r != 0) {
        const i128 quot = old_r / r;
        i128 tmp = old_r - quot * r;
        old_r = r;
        r = tmp;
        tmp = old_s - quot * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) throw Error(Errc::integrity, "modular inverse does not exist");
    return ((old_s % m) + m) % m;
}

// -(b c)^{-1} mod a, in (0, a)
std::int64_t seifert_coefficient(std::int64_t a, std::int64_t b, std::int64_t c) {
    const i128 bc = checked_mul(b % a, c % a) % a;
    const i128 inv = mod_inverse(bc, a);
    return static_cast<std::int64_t>((a - inv) % a);
}

void add_leg(PlumbingGraph& g, std::size_t center, const NegContFrac& cf) {
    std::size_t prev = center;
    for (std::int64_t w : cf.coefficients) {
        g.weights.push_back(w);
        const std::size_t v = g.weights.size() - 1;
        g.edges.emplace_back(prev, v);
        prev = v;
    }
}

std::vector<std::vector<std::size_t>> adjacency(const PlumbingGraph& g) {
    std::vector<std::vector<std::size_t>> adj(g.size());
    for (auto [a, b] : g.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

}  // namespace

SeifertTriple seifert_triple(std::int64_t p, std::int64_t q, std::int64_t r) {
    if (!(1 < p && p < q && q < r)) throw Error(Errc::invalid_input, "Seifert triple requires 1 < p < q < r");
    if (std::gcd(p, q) != 1 || std::gcd(p, r) != 1 || std::gcd(q, r) != 1)
        throw Error(Errc::not_coprime, "Seifert triple entries must be pairwise coprime");
    const i128 lhs = checked_sub(checked_add(checked_mul(p, q), checked_mul(p, r)), checked_mul(q, r));
    return SeifertTriple{p, q, r, lhs == 1};
}

SeifertTriple seifert_triple(const Triple& t) { return SeifertTriple{t.p(), t.q(), t.r(), true}; }

SeifertData seifert_data(const SeifertTriple& s) {
    const std::int64_t p1 = seifert_coefficient(s.p, s.q, s.r);
    const std::int64_t q1 = seifert_coefficient(s.q, s.p, s.r);
    const std::int64_t r1 = seifert_coefficient(s.r, s.p, s.q);
    const i128 pqr = checked_mul(checked_mul(s.p, s.q), s.r);
    i128 rest = -1;
    rest = checked_sub(rest, checked_mul(p1, checked_mul(s.q, s.r)));
    rest = checked_sub(rest, checked_mul(q1, checked_mul(s.p, s.r)));
    rest = checked_sub(rest, checked_mul(r1, checked_mul(s.p, s.q)));
    if (p1 <= 0 || q1 <= 0 || r1 <= 0 || rest % pqr != 0)
        throw Error(Errc::integrity, "no Seifert invariants in range");
    const SeifertData out{narrow64(rest / pqr), p1, q1, r1};
    if (s.almost_simple && out != SeifertData{-2, 1, s.q - 1, s.r - 1})
        throw Error(Errc::integrity, "almost simple triple with unexpected Seifert invariants");
    return out;
}

SeifertData seifert_data(const Triple& t) { return seifert_data(seifert_triple(t)); }

std::string to_string(GraphShape s) { return s == GraphShape::star ? "star" : "almost-simple-linear"; }

bool is_tree(const PlumbingGraph& g) {
    const std::size_t n = g.size();
    if (n == 0 || g.edges.size() != n - 1) return false;
    for (auto [a, b] : g.edges)
        if (a >= n || b >= n || a == b) return false;
    const auto adj = adjacency(g);
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == n;
}

PlumbingGraph star_graph(const SeifertTriple& s) {
    const SeifertData sd = seifert_data(s);
    PlumbingGraph g;
    g.shape = GraphShape::star;
    g.weights.push_back(sd.e0);
    add_leg(g, 0, neg_cont_frac(s.p, sd.p1));
    add_leg(g, 0, neg_cont_frac(s.q, sd.q1));
    add_leg(g, 0, neg_cont_frac(s.r, sd.r1));
    return g;
}

PlumbingGraph star_graph(const Triple& t) { return star_graph(seifert_triple(t)); }

PlumbingGraph almost_simple_linear_graph(const Triple& t) {
    const std::size_t chain = static_cast<std::size_t>(t.q() + t.r() - 1);
    PlumbingGraph g;
    g.shape = GraphShape::almost_simple_linear;
    g.weights.assign(chain, -2);
    for (std::size_t i = 0; i + 1 < chain; ++i) g.edges.emplace_back(i, i + 1);
    g.weights.push_back(-t.p());
    g.edges.emplace_back(static_cast<std::size_t>(t.q() - 1), chain);
    return g;
}

i128 determinant(const PlumbingGraph& g) {
    if (!is_tree(g)) throw Error(Errc::invalid_input, "determinant requires a nonempty tree");
    const std::size_t n = g.size();
    const auto adj = adjacency(g);

    // preorder from vertex 0; reversed, it visits children before parents
    std::vector<std::size_t> order;
    std::vector<std::size_t> parent(n, n);
    order.reserve(n);
    std::vector<std::size_t> stack{0};
    parent[0] = 0;
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (std::size_t w : adj[v])
            if (parent[w] == n) {
                parent[w] = v;
                stack.push_back(w);
            }
    }

    // A[v]: determinant of the subtree at v; B[v]: same with v deleted
    std::vector<i128> A(n), B(n);
    std::vector<i128> prefix;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const std::size_t v = *it;
        std::vector<std::size_t> kids;
        for (std::size_t w : adj[v])
            if (w != parent[v]) kids.push_back(w);  // the root is its own parent
        const std::size_t k = kids.size();
        prefix.assign(k + 1, 1);
        for (std::size_t i = 0; i < k; ++i) prefix[i + 1] = checked_mul(prefix[i], A[kids[i]]);
        i128 suffix = 1;
        i128 sum = 0;
        for (std::size_t i = k; i-- > 0;) {
            sum = checked_add(sum, checked_mul(B[kids[i]], checked_mul(prefix[i], suffix)));
            suffix = checked_mul(suffix, A[kids[i]]);
        }
        B[v] = prefix[k];
        A[v] = checked_sub(checked_mul(g.weights[v], prefix[k]), sum);
    }
    return A[0];
}

std::string export_graph(const PlumbingGraph& g, GraphFormat format) {
    if (g.weights.empty()) throw Error(Errc::invalid_input, "cannot export an empty graph");
    if (format == GraphFormat::json) {
        nlohmann::ordered_json j;
        j["vertices"] = g.weights;
        j["edges"] = nlohmann::ordered_json::array();
        for (auto [a, b] : g.edges) j["edges"].push_back({a, b});
        j["shape"] = to_string(g.shape);
        return j.dump();
    }
    std::ostringstream os;
    os << "graph plumbing {\n";
    for (std::size_t i = 0; i < g.size(); ++i) os << "  v" << i << " [label=\"" << g.weights[i] << "\"];\n";
    for (auto [a, b] : g.edges) os << "  v" << a << " -- v" << b << ";\n";
    os << "}\n";
    return os.str();
}

PlumbingGraph graph_from_json(std::string_view text) {
    try {
        const auto j = nlohmann::json::parse(text);
        PlumbingGraph g;
        g.weights = j.at("vertices").get<std::vector<std::int64_t>>();
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw Error(Errc::invalid_input, "edge must be a pair");
            g.edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
        }
        const std::string shape = j.value("shape", std::string("star"));
        if (shape == "star") g.shape = GraphShape::star;
        else if (shape == "almost-simple-linear") g.shape = GraphShape::almost_simple_linear;
        else throw Error(Errc::invalid_input, "unknown shape " + shape);
        if (!is_tree(g)) throw Error(Errc::invalid_input, "graph is not a nonempty tree");
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::invalid_input, std::string("malformed graph JSON: ") + e.what());
    }
}

}  // namespace brieskorn
