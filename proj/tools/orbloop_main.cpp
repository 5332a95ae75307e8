// Command-line front end: conjugacy classes, group-algebra centers, orbifold
// loop homology ring assembly, hypothesis checks, and the self-verification
// suite, over JSON catalog/problem files.

#include "orbloop/catalog.hpp"
#include "orbloop/linalg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

using nlohmann::json;
using namespace orbloop;

namespace {

constexpr int kSchemaVersion = 1;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitHypothesesFail = 2;

struct CommonOpts {
    std::vector<std::string> catalog_paths;
    std::string problem_path;
    std::vector<int> window;  // empty or {lo, hi}
    std::string format = "text";
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_problem) {
    cmd->add_option("--catalog", opts.catalog_paths, "catalog file (repeatable)");
    if (with_problem)
        cmd->add_option("--problem", opts.problem_path, "problem file")->required();
    cmd->add_option("--window", opts.window, "degree window LO HI")->expected(2);
    cmd->add_option("--format", opts.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
}

std::optional<std::pair<int, int>> window_of(const CommonOpts& opts) {
    if (opts.window.empty()) return std::nullopt;
    if (opts.window[0] > opts.window[1])
        throw std::invalid_argument("window bounds reversed");
    return std::make_pair(opts.window[0], opts.window[1]);
}

Catalog load_catalogs(const CommonOpts& opts) {
    Catalog cat;
    for (const auto& path : opts.catalog_paths) cat.merge_file(path);
    return cat;
}

OrbifoldProblem load_problem(const CommonOpts& opts) {
    return parse_problem(load_json_file(opts.problem_path), load_catalogs(opts));
}

void emit(const CommonOpts& opts, const json& doc, const std::string& text) {
    if (opts.format == "json") {
        json out = doc;
        out["schema_version"] = kSchemaVersion;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

// ---- classes / center / class-constants -------------------------------

// group-command input: either a bare group spec or {"group":..., "field":...}
std::pair<FiniteGroup, FieldSpec> load_group_input(const std::string& path) {
    const json j = load_json_file(path);
    if (j.contains("group"))
        return {parse_group(j.at("group")),
                j.contains("field") ? parse_field(j.at("field")) : FieldSpec(0)};
    return {parse_group(j), FieldSpec(0)};
}

int run_classes(const CommonOpts& opts, const std::string& input) {
    auto [G, field] = load_group_input(input);
    const ConjugacyClassSet cs = conjugacy_classes(G);

    json doc;
    doc["group"] = {{"name", G.name()}, {"order", G.order()}};
    doc["class_count"] = cs.count();
    std::string text = "group: " + G.name() + "  order " + std::to_string(G.order()) + "\n" +
                       "conjugacy classes: " + std::to_string(cs.count()) + "\n";
    json rows = json::array();
    for (int c = 0; c < cs.count(); ++c) {
        rows.push_back({{"representative", G.label(cs.representative[c])},
                        {"size", cs.size_of(c)},
                        {"centralizer_order", cs.centralizer_order[c]}});
        text += "  class " + std::to_string(c) + ": rep " + G.label(cs.representative[c]) +
                "  size " + std::to_string(cs.size_of(c)) + "  centralizer " +
                std::to_string(cs.centralizer_order[c]) + "\n";
    }
    doc["classes"] = rows;
    emit(opts, doc, text);
    return kExitOk;
}

int run_center(const CommonOpts& opts, const std::string& input) {
    auto [G, field] = load_group_input(input);
    const CenterBasis basis = class_sums(G, field);

    json doc;
    doc["group"] = {{"name", G.name()}, {"order", G.order()}};
    doc["field"] = field.describe();
    doc["dimension"] = basis.classes.count();
    std::string text = "Z(k[G]) for " + G.name() + " over " + field.describe() + "\n" +
                       "dimension (= c(G)): " + std::to_string(basis.classes.count()) + "\n";
    json sums = json::array();
    for (int c = 0; c < basis.classes.count(); ++c) {
        json members = json::array();
        std::string line = "  z_" + std::to_string(c) + " =";
        for (int g : basis.classes.classes[c]) {
            members.push_back(G.label(g));
            line += " " + G.label(g) + (g == basis.classes.classes[c].back() ? "" : " +");
        }
        sums.push_back({{"representative", G.label(basis.classes.representative[c])},
                        {"members", members}});
        text += line + "\n";
    }
    doc["class_sums"] = sums;
    if (field.algebraically_closed && field.is_coprime_to(G.order())) {
        doc["wedderburn_split"] = true;
        text += "Z(k[G]) = k^" + std::to_string(basis.classes.count()) +
                " (field declared algebraically closed, char coprime to |G|)\n";
    }
    emit(opts, doc, text);
    return kExitOk;
}

int run_class_constants(const CommonOpts& opts, const std::string& input) {
    auto [G, field] = load_group_input(input);
    const ConjugacyClassSet cs = conjugacy_classes(G);
    const ClassConstants cc = class_constants(G);

    json doc;
    doc["group"] = {{"name", G.name()}, {"order", G.order()}};
    doc["class_count"] = cs.count();
    std::string text = "class multiplication constants for " + G.name() + " (z_C z_D = sum_E c[C][D][E] z_E)\n";
    json rows = json::array();
    for (int C = 0; C < cs.count(); ++C)
        for (int D = 0; D < cs.count(); ++D)
            for (int E = 0; E < cs.count(); ++E) {
                if (cc.at(C, D, E) == 0) continue;
                rows.push_back({{"C", C}, {"D", D}, {"E", E}, {"c", cc.at(C, D, E)}});
                text += "  c[" + std::to_string(C) + "][" + std::to_string(D) + "][" +
                        std::to_string(E) + "] = " + std::to_string(cc.at(C, D, E)) + "\n";
            }
    doc["constants"] = rows;
    emit(opts, doc, text);
    return kExitOk;
}

// ---- ring / check ------------------------------------------------------

json report_to_json(const OrbifoldReport& rep, const OrbifoldProblem& problem) {
    json doc;
    doc["manifold"] = problem.manifold.name;
    doc["ambient"] = problem.ambient.name;
    doc["group"] = {{"name", problem.group.name()}, {"order", problem.group.order()}};
    doc["field"] = problem.field.describe();
    doc["coprime_ok"] = rep.coprime_ok;
    doc["triviality"] = to_string(rep.triviality);
    doc["applicable"] = rep.applicable;
    doc["reason"] = rep.reason;
    doc["window"] = {rep.window_lo, rep.window_hi};
    if (!rep.notes.empty()) doc["notes"] = rep.notes;
    if (rep.applicable) {
        doc["class_count"] = rep.class_count;
        doc["wedderburn_split"] = rep.wedderburn_split;
        doc["loop_ring"] = rep.algebra->name();
        doc["provenance"] = rep.algebra_provenance;
        json dims = json::object();
        for (const auto& [d, n] : rep.dimension_table) dims[std::to_string(d)] = n;
        doc["dimension_table"] = dims;
    }
    return doc;
}

std::string report_to_text(const OrbifoldReport& rep, const OrbifoldProblem& problem,
                           bool with_ring) {
    std::string text;
    text += "orbifold [" + problem.manifold.name + " / " + problem.group.name() + "], ambient " +
            problem.ambient.name + ", k = " + problem.field.describe() + "\n";
    text += "  char coprime to |G| = " + std::to_string(problem.group.order()) + ": " +
            (rep.coprime_ok ? "yes" : "NO") + "\n";
    text += "  Pontrjagin action: " + to_string(rep.triviality) + "\n";
    text += std::string("  theorem applicable: ") + (rep.applicable ? "yes" : "NO") +
            "  (" + rep.reason + ")\n";
    if (!rep.notes.empty()) text += "  note: " + rep.notes + "\n";
    if (rep.applicable && with_ring) {
        text += "  loop homology ring: (" + rep.algebra->name() + ") (x) Z(k[G]),  c(G) = " +
                std::to_string(rep.class_count) + "\n";
        if (rep.wedderburn_split)
            text += "  Z(k[G]) = k^" + std::to_string(rep.class_count) +
                    " (field declared algebraically closed)\n";
        if (!rep.algebra_provenance.empty())
            text += "  ring provenance: " + rep.algebra_provenance + "\n";
        text += "  dimensions over window [" + std::to_string(rep.window_lo) + ", " +
                std::to_string(rep.window_hi) + "]:\n";
        for (const auto& [d, n] : rep.dimension_table)
            text += "    degree " + std::to_string(d) + ": " + std::to_string(n) + "\n";
    }
    return text;
}

int run_ring(const CommonOpts& opts, bool check_only) {
    const OrbifoldProblem problem = load_problem(opts);
    const OrbifoldReport rep = assemble(problem, window_of(opts));
    emit(opts, report_to_json(rep, problem), report_to_text(rep, problem, !check_only));
    return rep.applicable ? kExitOk : kExitHypothesesFail;
}

// ---- verify ------------------------------------------------------------

int run_verify(const CommonOpts& opts) {
    const OrbifoldProblem problem = load_problem(opts);
    const auto window = window_of(opts);
    const int lo = window ? window->first : -2 * problem.manifold.dim;
    const int hi = window ? window->second : 4 * problem.manifold.dim;

    const FiniteGroup& G = problem.group;
    const FieldSpec& k = problem.field;
    std::string text;
    json checks = json::array();
    bool all_ok = true;
    auto record = [&](const std::string& name, bool ok, const std::string& detail = "") {
        all_ok = all_ok && ok;
        checks.push_back({{"check", name}, {"pass", ok}, {"detail", detail}});
        text += std::string(ok ? "  [pass] " : "  [FAIL] ") + name +
                (detail.empty() ? "" : "  (" + detail + ")") + "\n";
    };

    text += "verification suite for [" + problem.manifold.name + " / " + G.name() + "] over " +
            k.describe() + ", window [" + std::to_string(lo) + ", " + std::to_string(hi) + "]\n";

    // 1. center oracle equivalence
    {
        const CenterBasis basis = class_sums(G, k);
        const auto oracle = center_brute_force(G, k);
        bool ok = oracle.size() == basis.class_sums.size();
        RowReducer span_sums(k, G.order());
        for (const auto& z : basis.class_sums) span_sums.add_row(z.coefficients());
        RowReducer span_oracle(k, G.order());
        for (const auto& x : oracle) span_oracle.add_row(x.coefficients());
        for (const auto& z : basis.class_sums) ok = ok && span_oracle.in_span(z.coefficients());
        for (const auto& x : oracle) ok = ok && span_sums.in_span(x.coefficients());
        record("center: class-sum span = brute-force commutant span", ok,
               "dimension " + std::to_string(basis.class_sums.size()));
    }

    if (!k.is_coprime_to(G.order())) {
        record("transfer available (char coprime to |G|)", false, "char divides |G|");
        emit(opts, json{{"checks", checks}, {"pass", false}}, text);
        return kExitHypothesesFail;
    }

    const LoopRingEntry* ring = problem.manifold.loop_ring_for(k.characteristic);
    if (!ring) {
        record("loop ring catalog data available", false,
               "no entry for char " + std::to_string(k.characteristic));
        emit(opts, json{{"checks", checks}, {"pass", false}}, text);
        return kExitHypothesesFail;
    }
    const GradedPresentation& A = *ring->presentation;

    {
        const ValidationReport v = validate_presentation(A, k, lo, hi);
        record("catalog presentation is a graded-commutative algebra", v.ok, v.message);
    }

    SectorSpace space(G, A, k);

    // 2. transfer identities
    {
        bool ok = true;
        const Scalar order = Scalar::of(k, G.order());
        for (const auto& m : A.basis(lo, hi))
            for (int C = 0; C < space.classes().count() && ok; ++C) {
                QuotientElement q(space);
                q.add_term(C, m, Scalar::one(k));
                ok = space.projection_p(space.transfer_mu(q)) == q.scaled(order);
            }
        record("transfer: p o mu = |G| id on quotient basis", ok);

        // span(Im mu) = invariant span, by exact rank computations
        const auto invariants = space.invariant_basis(lo, hi);
        const auto monomials = A.basis(lo, hi);
        std::map<SectorElement::Key, std::size_t> coords;
        for (const auto& m : monomials)
            for (int g = 0; g < G.order(); ++g)
                coords.emplace(SectorElement::Key{g, m}, coords.size());
        auto to_vec = [&](const SectorElement& x) {
            std::vector<Scalar> v(coords.size(), Scalar::zero(k));
            for (const auto& [key, c] : x.terms()) v[coords.at(key)] = c;
            return v;
        };
        RowReducer image_span(k, coords.size());
        for (const auto& m : monomials)
            for (int C = 0; C < space.classes().count(); ++C) {
                QuotientElement q(space);
                q.add_term(C, m, Scalar::one(k));
                image_span.add_row(to_vec(space.transfer_mu(q)));
            }
        RowReducer inv_span(k, coords.size());
        bool spans_ok = true;
        for (const auto& v : invariants) {
            spans_ok = spans_ok && image_span.in_span(to_vec(v));
            inv_span.add_row(to_vec(v));
        }
        spans_ok = spans_ok && image_span.rank() == inv_span.rank();
        record("transfer: span(Im mu) = invariant span", spans_ok,
               "rank " + std::to_string(image_span.rank()));
    }

    // 3. theorem verification
    {
        const TheoremReport thm = space.verify_theorem(lo, hi);
        record("theorem: phi(x o y) = phi(x) phi(y) on all basis pairs", thm.pass,
               thm.pass ? std::to_string(thm.pairs_checked) + " pairs" : thm.counterexample);
    }

    emit(opts, json{{"checks", checks}, {"pass", all_ok}}, text);
    return all_ok ? kExitOk : kExitError;
}

// ---- poincare ----------------------------------------------------------

int run_poincare(const CommonOpts& opts, const std::string& input) {
    const json j = load_json_file(input);
    std::shared_ptr<GradedPresentation> pres;
    int default_lo = -8, default_hi = 16;
    if (j.contains("generators")) {
        pres = std::make_shared<GradedPresentation>(parse_presentation(j));
    } else {
        const Catalog cat = load_catalogs(opts);
        const OrbifoldProblem problem = parse_problem(j, cat);
        const LoopRingEntry* ring =
            problem.manifold.loop_ring_for(problem.field.characteristic);
        if (!ring)
            throw std::runtime_error("no loop ring catalog data for this characteristic");
        pres = ring->presentation;
        default_lo = -2 * problem.manifold.dim;
        default_hi = 4 * problem.manifold.dim;
    }
    const auto window = window_of(opts);
    const int lo = window ? window->first : default_lo;
    const int hi = window ? window->second : default_hi;

    const auto dims = pres->poincare_series(lo, hi);
    json doc;
    doc["presentation"] = pres->name();
    json jd = json::object();
    std::string text = "dimensions of " + pres->name() + " over [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "]\n";
    for (const auto& [d, n] : dims) {
        jd[std::to_string(d)] = n;
        text += "  degree " + std::to_string(d) + ": " + std::to_string(n) + "\n";
    }
    doc["dimensions"] = jd;
    emit(opts, doc, text);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"loop homology of global quotient orbifolds"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string input_path;

    auto* classes = app.add_subcommand("classes", "conjugacy class table of a group");
    classes->add_option("input", input_path, "group spec file")->required();
    add_common(classes, opts, false);

    auto* center = app.add_subcommand("center", "center of the group algebra k[G]");
    center->add_option("input", input_path, "group (+ optional field) spec file")->required();
    add_common(center, opts, false);

    auto* constants = app.add_subcommand("class-constants",
                                         "structure constants of Z(k[G]) on class sums");
    constants->add_option("input", input_path, "group spec file")->required();
    add_common(constants, opts, false);

    auto* ring = app.add_subcommand("ring", "assemble the orbifold loop homology ring");
    add_common(ring, opts, true);

    auto* check = app.add_subcommand("check", "hypothesis report only");
    add_common(check, opts, true);

    auto* verify = app.add_subcommand("verify", "oracle and identity suite on one instance");
    add_common(verify, opts, true);

    auto* poincare = app.add_subcommand("poincare", "dimension table of a presentation");
    poincare->add_option("input", input_path, "presentation or problem file")->required();
    add_common(poincare, opts, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (classes->parsed()) return run_classes(opts, input_path);
        if (center->parsed()) return run_center(opts, input_path);
        if (constants->parsed()) return run_class_constants(opts, input_path);
        if (ring->parsed()) return run_ring(opts, false);
        if (check->parsed()) return run_ring(opts, true);
        if (verify->parsed()) return run_verify(opts);
        if (poincare->parsed()) return run_poincare(opts, input_path);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
