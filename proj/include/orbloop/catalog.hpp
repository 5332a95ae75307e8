#pragma once

#include "orbloop/condition_checker.hpp"

#include <json.hpp>

#include <map>
#include <string>

namespace orbloop {

FieldSpec parse_field(const nlohmann::json& j);

/// Group input schema: {"type":"permutation","generators":[[[1,2],[3,4]],...]}
/// (cycles on 1-based points), {"type":"matrix_sl2","p":5},
/// {"type":"named","name":"Q8"}, {"type":"table","mult":[[...]]}.
FiniteGroup parse_group(const nlohmann::json& j);

GradedPresentation parse_presentation(const nlohmann::json& j);

ManifoldEntry parse_manifold(const nlohmann::json& j);

AmbientGroupEntry parse_ambient(const nlohmann::json& j);

/// Catalog entries loadable from one or more files; later files may add
/// entries but not silently replace earlier ones.
struct Catalog {
    std::map<std::string, ManifoldEntry> manifolds;
    std::map<std::string, AmbientGroupEntry> ambient_groups;

    void merge_file(const std::string& path);

    const ManifoldEntry& manifold(const std::string& name) const;
    const AmbientGroupEntry& ambient(const std::string& name) const;
};

/// Problem file: catalog references plus inline group and field specs.
OrbifoldProblem parse_problem(const nlohmann::json& j, const Catalog& catalog);

nlohmann::json load_json_file(const std::string& path);

}  // namespace orbloop
