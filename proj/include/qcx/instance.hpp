#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "qcx/group.hpp"

namespace qcx {

/// Problem instance as stored on disk:
///   { "group": {"family": "symmetric", "n": 4},
///     "generators": ["(1 2)", "(1 2 3 4)"],
///     "irrep": "(3,1)",            // optional
///     "seed": 42,                  // optional
///     "tol": 1e-8 }                // optional
struct Instance {
  GroupSpec group;
  GeneratorSet generators;
  std::optional<std::string> irrep;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
};

nlohmann::json group_spec_to_json(const GroupSpec& spec);
GroupSpec group_spec_from_json(const nlohmann::json& j);

nlohmann::json instance_to_json(const Instance& inst);
Instance instance_from_json(const nlohmann::json& j);
Instance load_instance(const std::string& path);

}  // namespace qcx
