#include "orbloop/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <stdexcept>

namespace orbloop {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
    throw std::invalid_argument(where + ": " + what);
}

const json& require(const json& j, const std::string& field, const std::string& where) {
    if (!j.contains(field)) schema_error(where, "missing field '" + field + "'");
    return j.at(field);
}

}  // namespace

FieldSpec parse_field(const json& j) {
    const std::string where = "field spec";
    if (!j.is_object()) schema_error(where, "expected an object");
    const std::int64_t ch = require(j, "char", where).get<std::int64_t>();
    const bool alg = j.value("alg_closed", false);
    return FieldSpec(ch, alg);
}

FiniteGroup parse_group(const json& j) {
    const std::string where = "group spec";
    const std::string type = require(j, "type", where).get<std::string>();
    if (type == "permutation") {
        const json& gens = require(j, "generators", where);
        int domain = j.value("points", 0);
        for (const auto& gen : gens)
            for (const auto& cycle : gen)
                for (const auto& pt : cycle)
                    domain = std::max(domain, pt.get<int>());
        if (domain == 0) domain = 1;  // empty generator list: trivial group on one point
        std::vector<Permutation> perms;
        for (const auto& gen : gens) {
            Permutation p(domain);
            for (int i = 0; i < domain; ++i) p[i] = i;
            for (const auto& cycle : gen) {
                std::vector<int> pts;
                for (const auto& pt : cycle) {
                    const int v = pt.get<int>();
                    if (v < 1 || v > domain) schema_error(where, "cycle point out of range");
                    pts.push_back(v - 1);
                }
                for (std::size_t i = 0; i < pts.size(); ++i)
                    p[pts[i]] = pts[(i + 1) % pts.size()];
            }
            perms.push_back(std::move(p));
        }
        return FiniteGroup::from_permutations(perms, domain);
    }
    if (type == "matrix_sl2")
        return FiniteGroup::special_linear_2(require(j, "p", where).get<std::int64_t>());
    if (type == "named")
        return FiniteGroup::named(require(j, "name", where).get<std::string>());
    if (type == "table")
        return FiniteGroup::from_table(
            require(j, "mult", where).get<std::vector<std::vector<int>>>());
    schema_error(where, "unknown group type '" + type + "'");
}

GradedPresentation parse_presentation(const json& j) {
    const std::string where = "presentation";
    const std::string name = j.value("name", "A");
    const json& jgens = require(j, "generators", where);
    std::vector<GradedGenerator> gens;
    for (const auto& jg : jgens) {
        GradedGenerator g;
        g.name = require(jg, "name", where + " generator").get<std::string>();
        g.degree = require(jg, "deg", where + " generator '" + g.name + "'").get<int>();
        if (jg.contains("bound")) g.bound = jg.at("bound").get<int>();
        if (jg.contains("top_rewrite"))
            for (const auto& jt : jg.at("top_rewrite")) {
                RewriteTerm t;
                t.monomial = require(jt, "exps", where).get<Monomial>();
                t.coefficient = require(jt, "coeff", where).get<std::int64_t>();
                g.rewrite.push_back(std::move(t));
            }
        gens.push_back(std::move(g));
    }
    return GradedPresentation(name, std::move(gens), j.value("provenance", ""));
}

namespace {

TnczRule parse_tncz_rule(const json& j, const std::string& where) {
    TnczRule rule;
    const std::string type = require(j, "type", where).get<std::string>();
    if (type == "euler_mod_p") rule.kind = TnczRule::Kind::EulerModP;
    else if (type == "always") rule.kind = TnczRule::Kind::Always;
    else if (type == "never") rule.kind = TnczRule::Kind::Never;
    else if (type == "so_stiefel") {
        rule.kind = TnczRule::Kind::SoStiefel;
        rule.m = require(j, "m", where).get<int>();
        rule.n = require(j, "n", where).get<int>();
    } else {
        schema_error(where, "unknown tncz rule '" + type + "'");
    }
    return rule;
}

// Load-time validation needs a concrete characteristic matching the entry's
// predicate; probe a few small ones.
std::optional<std::int64_t> sample_characteristic(const CharPredicate& pred) {
    for (std::int64_t c : {0, 2, 3, 5, 7, 11, 13, 17, 19, 23})
        if (pred.matches(c)) return c;
    return std::nullopt;
}

}  // namespace

ManifoldEntry parse_manifold(const json& j) {
    ManifoldEntry e;
    e.name = require(j, "name", "manifold").get<std::string>();
    const std::string where = "manifold '" + e.name + "'";
    e.dim = require(j, "dim_M", where).get<int>();
    if (e.dim < 1) schema_error(where, "dim_M must be positive");
    e.simply_connected = j.value("simply_connected", false);
    e.euler_characteristic = j.value("euler_characteristic", std::int64_t{0});
    if (j.contains("cohomology_free_graded_commutative"))
        e.cohomology_free_graded_commutative =
            j.at("cohomology_free_graded_commutative").get<bool>();
    if (j.contains("tncz_rule")) e.tncz_rule = parse_tncz_rule(j.at("tncz_rule"), where);
    if (j.contains("h_top_rank"))
        for (const auto& jr : j.at("h_top_rank"))
            e.h_top_rank.push_back(
                {CharPredicate::parse(require(jr, "char_condition", where).get<std::string>()),
                 require(jr, "rank", where).get<int>()});
    if (j.contains("loop_ring"))
        for (const auto& jr : j.at("loop_ring")) {
            LoopRingEntry entry;
            entry.condition =
                CharPredicate::parse(require(jr, "char_condition", where).get<std::string>());
            entry.presentation = std::make_shared<GradedPresentation>(parse_presentation(jr));
            entry.provenance = jr.value("provenance", "");
            if (auto c = sample_characteristic(entry.condition)) {
                const ValidationReport v = validate_presentation(
                    *entry.presentation, FieldSpec(*c), -2 * e.dim, 4 * e.dim);
                if (!v.ok)
                    schema_error(where, "loop ring presentation fails validation (char " +
                                            std::to_string(*c) + "): " + v.message);
            }
            e.loop_ring.push_back(std::move(entry));
        }
    // no two entries may claim the same characteristic
    for (std::int64_t c : {0, 2, 3, 5, 7, 11, 13}) (void)e.loop_ring_for(c);
    return e;
}

AmbientGroupEntry parse_ambient(const json& j) {
    AmbientGroupEntry e;
    e.name = require(j, "name", "ambient group").get<std::string>();
    const std::string where = "ambient group '" + e.name + "'";
    e.simply_connected = j.value("simply_connected", false);
    const json& pi1 = require(j, "pi1_order", where);
    if (pi1.is_string()) {
        if (pi1.get<std::string>() != "infinite")
            schema_error(where, "pi1_order must be a positive integer or \"infinite\"");
    } else {
        e.pi1_order = pi1.get<std::int64_t>();
        if (*e.pi1_order < 1) schema_error(where, "pi1_order must be positive");
    }
    if (e.simply_connected != (e.pi1_order && *e.pi1_order == 1))
        schema_error(where, "simply_connected must agree with pi1_order == 1");
    e.provenance = j.value("provenance", "");
    return e;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open file");
    try {
        return json::parse(in);
    } catch (const json::parse_error& err) {
        throw std::runtime_error(path + ": " + err.what());
    }
}

void Catalog::merge_file(const std::string& path) {
    const json j = load_json_file(path);
    try {
        if (j.contains("manifolds"))
            for (const auto& jm : j.at("manifolds")) {
                ManifoldEntry e = parse_manifold(jm);
                if (!manifolds.emplace(e.name, std::move(e)).second)
                    throw std::invalid_argument("duplicate manifold '" + jm.at("name").get<std::string>() + "'");
            }
        if (j.contains("ambient_groups"))
            for (const auto& ja : j.at("ambient_groups")) {
                AmbientGroupEntry e = parse_ambient(ja);
                if (!ambient_groups.emplace(e.name, std::move(e)).second)
                    throw std::invalid_argument("duplicate ambient group '" + ja.at("name").get<std::string>() + "'");
            }
    } catch (const std::exception& err) {
        throw std::runtime_error(path + ": " + err.what());
    }
}

const ManifoldEntry& Catalog::manifold(const std::string& name) const {
    auto it = manifolds.find(name);
    if (it == manifolds.end())
        throw std::invalid_argument("unknown manifold '" + name + "' (not in any loaded catalog)");
    return it->second;
}

const AmbientGroupEntry& Catalog::ambient(const std::string& name) const {
    auto it = ambient_groups.find(name);
    if (it == ambient_groups.end())
        throw std::invalid_argument("unknown ambient group '" + name +
                                    "' (not in any loaded catalog)");
    return it->second;
}

OrbifoldProblem parse_problem(const json& j, const Catalog& catalog) {
    const std::string where = "problem";
    const json& jm = require(j, "manifold", where);
    const json& ja = require(j, "ambient", where);
    ManifoldEntry manifold =
        jm.is_string() ? catalog.manifold(jm.get<std::string>()) : parse_manifold(jm);
    AmbientGroupEntry ambient =
        ja.is_string() ? catalog.ambient(ja.get<std::string>()) : parse_ambient(ja);
    FiniteGroup group = parse_group(require(j, "group", where));
    FieldSpec field = parse_field(require(j, "field", where));
    return OrbifoldProblem{std::move(manifold), std::move(ambient), std::move(group), field};
}

}  // namespace orbloop
