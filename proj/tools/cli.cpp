#include "cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>

#include "brieskorn/detail/parallel.hpp"
#include "brieskorn/dinv.hpp"
#include "brieskorn/families.hpp"
#include "brieskorn/plumbing.hpp"

namespace brieskorn::cli {

namespace {

using Json = nlohmann::ordered_json;

std::int64_t parse_int(const std::string& text, const std::string& what) {
    std::int64_t v = 0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (text.empty() || ec != std::errc() || ptr != end)
        throw Error(Errc::invalid_input, what + " must be a decimal integer, got '" + text + "'");
    return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(text);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    return out;
}

std::pair<std::int64_t, std::int64_t> parse_pair(const std::string& text, const std::string& what) {
    const auto parts = split(text, ',');
    if (parts.size() != 2) throw Error(Errc::invalid_input, what + " must be P,Q");
    return {parse_int(parts[0], what), parse_int(parts[1], what)};
}

Params parse_params(const std::string& text) {
    Params out;
    for (const auto& item : split(text, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw Error(Errc::invalid_input, "parameter '" + item + "' must be K=V");
        out[item.substr(0, eq)] = parse_int(item.substr(eq + 1), item.substr(0, eq));
    }
    return out;
}

// "k=1..5,t=3" -> {k: [1, 5], t: [3, 3]}
ParamGrid parse_grid(const std::string& text) {
    ParamGrid out;
    if (text.empty()) return out;
    for (const auto& item : split(text, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw Error(Errc::invalid_input, "grid entry '" + item + "' must be K=A..B");
        const std::string key = item.substr(0, eq);
        const std::string range = item.substr(eq + 1);
        const auto dots = range.find("..");
        if (dots == std::string::npos) {
            const auto v = parse_int(range, key);
            out[key] = {v, v};
        } else {
            out[key] = {parse_int(range.substr(0, dots), key), parse_int(range.substr(dots + 2), key)};
        }
    }
    return out;
}

DMethod parse_method(const std::string& m) {
    if (m == "auto") return DMethod::automatic;
    if (m == "full") return DMethod::full;
    if (m == "refined") return DMethod::refined;
    if (m == "closed-form") return DMethod::closed_form;
    throw Error(Errc::invalid_input, "unknown method " + m);
}

struct Row {
    Triple triple;
    DResult d;
    ClassificationReport report;
};

Row compute_row(const Triple& t, DMethod method, std::int64_t oracle_max_p) {
    if (method == DMethod::full && t.p() > oracle_max_p)
        throw Error(Errc::budget, "p = " + std::to_string(t.p()) + " exceeds --oracle-max-p " + std::to_string(oracle_max_p));
    DResult r = (method == DMethod::full && !t.odd_p()) ? d_even(t) : d(t, method);
    return Row{t, std::move(r), classify(t)};
}

Json nullable(const std::optional<std::int64_t>& v) { return v ? Json(*v) : Json(nullptr); }

Json row_json(const Row& row) {
    const auto& dec = row.report.decomposition;
    Json j;
    j["p"] = row.triple.p();
    j["q"] = row.triple.q();
    j["r"] = row.triple.r();
    j["n_p"] = dec ? Json(dec->n_p) : Json(nullptr);
    j["l"] = dec ? Json(dec->l) : Json(nullptr);
    j["t"] = dec ? Json(dec->t) : Json(nullptr);
    j["alpha"] = dec ? Json(dec->alpha) : Json(nullptr);
    j["s_num"] = dec ? Json(static_cast<std::int64_t>(dec->s.num())) : Json(nullptr);
    j["s_den"] = dec ? Json(static_cast<std::int64_t>(dec->s.den())) : Json(nullptr);
    j["D"] = row.report.D;
    j["d"] = row.d.value;
    j["witness_a"] = row.d.witness ? Json(row.d.witness->a) : Json(nullptr);
    j["witness_m"] = row.d.witness ? Json(row.d.witness->m) : Json(nullptr);
    j["method"] = row.d.method_tag();
    j["d_equals_D"] = row.d.value == row.report.D;
    Json ids = Json::array();
    for (const auto& hit : row.report.theorems) ids.push_back(hit.id);
    j["applicable_theorems"] = ids;
    return j;
}

constexpr const char* csv_header = "p,q,r,n_p,l,t,alpha,s_num,s_den,D,d,witness_a,witness_m,method,d_equals_D";

std::string row_csv(const Row& row) {
    const auto& dec = row.report.decomposition;
    auto opt = [](bool present, auto v) { return present ? std::to_string(v) : std::string(); };
    std::ostringstream os;
    os << row.triple.p() << ',' << row.triple.q() << ',' << row.triple.r() << ',' << opt(dec.has_value(), dec ? dec->n_p : 0)
       << ',' << opt(dec.has_value(), dec ? dec->l : 0) << ',' << opt(dec.has_value(), dec ? dec->t : 0) << ','
       << opt(dec.has_value(), dec ? dec->alpha : 0) << ',' << (dec ? to_string(dec->s.num()) : "") << ','
       << (dec ? to_string(dec->s.den()) : "") << ',' << row.report.D << ',' << row.d.value << ','
       << opt(row.d.witness.has_value(), row.d.witness ? row.d.witness->a : 0) << ','
       << opt(row.d.witness.has_value(), row.d.witness ? row.d.witness->m : 0) << ',' << row.d.method_tag() << ','
       << (row.d.value == row.report.D ? "true" : "false");
    return os.str();
}

Json triple_json(const Triple& t) { return Json{{"p", t.p()}, {"q", t.q()}, {"r", t.r()}}; }

Json record_json(const InstanceRecord& rec) {
    Json j;
    j["label"] = rec.label;
    j["triple"] = rec.triple ? triple_json(*rec.triple) : Json(nullptr);
    j["relation"] = rec.relation;
    j["expected"] = rec.expected;
    j["actual"] = rec.actual;
    j["d_full"] = nullable(rec.d_full);
    j["f34"] = nullable(rec.f34);
    j["pass"] = rec.pass;
    j["note"] = rec.note;
    return j;
}

Json report_json(const VerificationReport& rep, bool brief) {
    Json j;
    j["suite"] = rep.suite;
    j["range"] = rep.range;
    j["ok"] = rep.ok();
    j["informational"] = rep.informational;
    j["total"] = rep.records.size();
    j["passed"] = rep.passed;
    j["truncated"] = rep.truncated;
    j["truncation"] = rep.truncation;
    j["refined_only"] = rep.refined_only;
    j["skipped"] = rep.skipped;
    j["notes"] = rep.notes;
    Json ce = Json::array();
    for (const auto& rec : rep.counterexamples) ce.push_back(record_json(rec));
    j["counterexamples"] = ce;
    if (!brief) {
        Json all = Json::array();
        for (const auto& rec : rep.records) all.push_back(record_json(rec));
        j["records"] = all;
    }
    return j;
}

Json prediction_json(const Prediction& pr) {
    return Json{{"kind", to_string(pr.kind)},
                {"value", pr.value},
                {"strict_over", nullable(pr.strict_over)},
                {"f34", nullable(pr.f34)},
                {"f34_closed", nullable(pr.f34_closed)}};
}

int exit_code_for(Errc code) {
    switch (code) {
        case Errc::out_of_range:
        case Errc::non_integral_r:
        case Errc::not_coprime:
        case Errc::not_almost_simple:
        case Errc::even_p:
        case Errc::odd_p:
            return exit_invalid_triple;
        case Errc::overflow:
        case Errc::budget:
            return exit_overflow;
        case Errc::integrity:
            return exit_internal;
        default:
            return exit_invalid_args;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"d-invariants of Brieskorn spheres Sigma(p, q, r) with pq + pr - qr = 1", "brieskorn"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string oracle_max_p_s = "2000";
    unsigned jobs = 1;
    app.add_option("--oracle-max-p", oracle_max_p_s, "Largest p for the exhaustive oracle");
    app.add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 1024u));

    std::string p_s, q_s, r_s, method_s = "auto", format_s, p_max_s, l_max_s, suite, grid_s, name, params_s;
    std::string k_min_s = "2", k_max_s = "8", a_s, b_s, shape_s = "almost-simple-linear";
    bool exceptional = false, brief = false;

    auto* compute = app.add_subcommand("compute", "d-invariant of one triple");
    compute->add_option("--p", p_s)->required();
    compute->add_option("--q", q_s)->required();
    compute->add_option("--method", method_s, "auto|full|refined|closed-form");

    auto* enumerate_cmd = app.add_subcommand("enumerate", "all triples with p <= p-max");
    enumerate_cmd->add_option("--p-max", p_max_s)->required();
    enumerate_cmd->add_option("--l-max", l_max_s);
    enumerate_cmd->add_option("--format", format_s, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    enumerate_cmd->add_option("--method", method_s, "auto|full|refined|closed-form");

    auto* classify_cmd = app.add_subcommand("classify", "regime and applicable closed forms");
    classify_cmd->add_option("--p", p_s)->required();
    classify_cmd->add_option("--q", q_s)->required();

    auto* verify = app.add_subcommand("verify", "run a theorem suite or a family grid");
    verify->add_option("--suite", suite)->required();
    verify->add_option("--p-max", p_max_s, "Bound for theorem suites (default 500)");
    verify->add_option("--grid", grid_s, "Family grid, e.g. t=1..5,k=1..5");
    verify->add_flag("--brief", brief, "Omit per-instance records");

    auto* family_cmd = app.add_subcommand("family", "one family instance");
    family_cmd->add_option("--name", name)->required();
    family_cmd->add_option("--params", params_s)->required();
    family_cmd->add_flag("--exceptional", exceptional, "Allow the documented exceptional points");

    auto* fib = app.add_subcommand("fib", "Fibonacci triples");
    fib->add_option("--k-min", k_min_s);
    fib->add_option("--k-max", k_max_s);

    auto* plumbing = app.add_subcommand("plumbing", "plumbing graph of a triple");
    plumbing->add_option("--p", p_s)->required();
    plumbing->add_option("--q", q_s)->required();
    plumbing->add_option("--r", r_s, "Any pairwise coprime r (star graph only)");
    plumbing->add_option("--format", format_s, "dot|json")->check(CLI::IsMember({"dot", "json"}));
    plumbing->add_option("--shape", shape_s, "star|almost-simple-linear")
        ->check(CLI::IsMember({"star", "almost-simple-linear"}));

    auto* compare = app.add_subcommand("compare", "compare two triples up to homology cobordism");
    compare->add_option("--a", a_s, "P1,Q1")->required();
    compare->add_option("--b", b_s, "P2,Q2")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_invalid_args;
    }

    try {
        const std::int64_t oracle_max_p = parse_int(oracle_max_p_s, "--oracle-max-p");

        if (*compute) {
            const Triple t = make_triple(parse_int(p_s, "--p"), parse_int(q_s, "--q"));
            out << row_json(compute_row(t, parse_method(method_s), oracle_max_p)).dump() << '\n';
            return exit_ok;
        }

        if (*enumerate_cmd) {
            const DMethod method = parse_method(method_s);
            const std::int64_t p_max = parse_int(p_max_s, "--p-max");
            if (method == DMethod::full && p_max > oracle_max_p)
                throw Error(Errc::budget, "--p-max exceeds --oracle-max-p for the full method");
            std::optional<LRange> filter;
            if (!l_max_s.empty()) filter = LRange{1, parse_int(l_max_s, "--l-max")};
            const bool csv = format_s != "json";
            if (csv) out << csv_header << '\n';

            // buffered in batches so output order stays canonical
            std::vector<Triple> batch;
            auto flush = [&] {
                std::vector<std::optional<Row>> rows(batch.size());
                detail::parallel_for(batch.size(), jobs,
                                     [&](std::size_t i) { rows[i] = compute_row(batch[i], method, oracle_max_p); });
                for (const auto& row : rows) out << (csv ? row_csv(*row) : row_json(*row).dump()) << '\n';
                batch.clear();
            };
            for_each_triple(
                p_max,
                [&](const Triple& t) {
                    batch.push_back(t);
                    if (batch.size() >= 4096) flush();
                },
                filter);
            flush();
            return exit_ok;
        }

        if (*classify_cmd) {
            const Triple t = make_triple(parse_int(p_s, "--p"), parse_int(q_s, "--q"));
            const ClassificationReport rep = classify(t);
            Json j;
            j["triple"] = triple_json(t);
            if (rep.decomposition) {
                const auto& dec = *rep.decomposition;
                j["n_p"] = dec.n_p;
                j["l"] = dec.l;
                j["t"] = dec.t;
                j["alpha"] = dec.alpha;
                j["s"] = dec.s.str();
            }
            j["D"] = rep.D;
            j["regime"] = to_string(rep.regime);
            j["su_u"] = nullable(rep.su_u);
            Json hits = Json::array();
            for (const auto& h : rep.theorems)
                hits.push_back(Json{{"id", h.id}, {"statement", h.statement}, {"predicted_d", h.predicted_d}});
            j["theorems"] = hits;
            j["d_eq_D_guaranteed"] = rep.d_eq_D_guaranteed;
            j["D_eq_p_minus_1"] = rep.D_eq_p_minus_1;
            out << j.dump() << '\n';
            return exit_ok;
        }

        if (*verify) {
            const VerifyOptions opt{oracle_max_p, jobs};
            const auto& suites = theorem_suites();
            VerificationReport rep;
            if (std::find(suites.begin(), suites.end(), suite) != suites.end()) {
                if (!grid_s.empty()) throw Error(Errc::invalid_input, "--grid applies to family suites only");
                rep = verify_theorem(suite, p_max_s.empty() ? 500 : parse_int(p_max_s, "--p-max"), opt);
            } else {
                if (!p_max_s.empty()) throw Error(Errc::invalid_input, "--p-max applies to theorem suites only");
                rep = verify_family(suite, parse_grid(grid_s), opt);
            }
            out << report_json(rep, brief).dump() << '\n';
            return rep.ok() ? exit_ok : exit_counterexample;
        }

        if (*family_cmd) {
            const Params params = parse_params(params_s);
            const FamilyInstance inst = exceptional ? exceptional_instance(name, params) : family_instance(name, params);
            Json j;
            j["family"] = name;
            j["params"] = params;
            j["triple"] = triple_json(inst.triple);
            j["prediction"] = prediction_json(inst.prediction);
            j["record"] = row_json(compute_row(inst.triple, DMethod::automatic, oracle_max_p));
            out << j.dump() << '\n';
            return exit_ok;
        }

        if (*fib) {
            const std::int64_t lo = parse_int(k_min_s, "--k-min");
            const std::int64_t hi = parse_int(k_max_s, "--k-max");
            if (lo > hi) throw Error(Errc::invalid_input, "--k-min exceeds --k-max");
            bool all_ok = true;
            for (std::int64_t k = lo; k <= hi; ++k) {
                const FibonacciCase fc = fibonacci_case(static_cast<int>(k));
                Json j;
                j["k"] = k;
                j["p"] = fc.triple.p();
                j["q"] = fc.triple.q();
                j["r"] = fc.triple.r();
                j["d"] = fc.d.value;
                j["D"] = fc.D;
                j["method"] = fc.d.method_tag();
                j["witness_a"] = fc.d.witness ? Json(fc.d.witness->a) : Json(nullptr);
                j["witness_m"] = fc.d.witness ? Json(fc.d.witness->m) : Json(nullptr);
                j["expectation"] = fc.expectation;
                j["verdict"] = fc.verdict;
                out << j.dump() << '\n';
                all_ok = all_ok && fc.verdict;
            }
            return all_ok ? exit_ok : exit_counterexample;
        }

        if (*plumbing) {
            const std::int64_t p = parse_int(p_s, "--p");
            const std::int64_t q = parse_int(q_s, "--q");
            PlumbingGraph g;
            if (!r_s.empty()) {
                if (shape_s != "star") throw Error(Errc::invalid_input, "--r requires --shape star");
                g = star_graph(seifert_triple(p, q, parse_int(r_s, "--r")));
            } else {
                const Triple t = make_triple(p, q);
                g = shape_s == "star" ? star_graph(t) : almost_simple_linear_graph(t);
            }
            const std::string text = export_graph(g, format_s == "json" ? GraphFormat::json : GraphFormat::dot);
            out << text;
            if (text.back() != '\n') out << '\n';
            return exit_ok;
        }

        if (*compare) {
            const auto [p1, q1] = parse_pair(a_s, "--a");
            const auto [p2, q2] = parse_pair(b_s, "--b");
            const CobordismVerdict v = compare_cobordism(make_triple(p1, q1), make_triple(p2, q2));
            Json j;
            j["a"] = triple_json(v.a);
            j["a"]["d"] = v.d_a;
            j["b"] = triple_json(v.b);
            j["b"]["d"] = v.d_b;
            j["verdict"] = v.verdict();
            out << j.dump() << '\n';
            return exit_ok;
        }
    } catch (const Error& e) {
        err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
        return exit_code_for(e.code());
    }
    return exit_invalid_args;
}

}  // namespace brieskorn::cli
