#include "qcx/instance.hpp"

#include <fstream>
#include <stdexcept>

namespace qcx {

nlohmann::json group_spec_to_json(const GroupSpec& spec) {
  nlohmann::json j;
  switch (spec.family) {
    case GroupFamily::Symmetric:
      j["family"] = "symmetric";
      j["n"] = spec.n;
      break;
    case GroupFamily::Cyclic:
      j["family"] = "cyclic";
      j["n"] = spec.n;
      break;
    case GroupFamily::Dihedral:
      j["family"] = "dihedral";
      j["n"] = spec.n;
      break;
    case GroupFamily::Product: {
      j["family"] = "product";
      nlohmann::json factors = nlohmann::json::array();
      for (const auto& f : spec.factors) factors.push_back(group_spec_to_json(f));
      j["factors"] = factors;
      break;
    }
  }
  return j;
}

GroupSpec group_spec_from_json(const nlohmann::json& j) {
  const std::string family = j.at("family").get<std::string>();
  if (family == "symmetric") return GroupSpec::symmetric(j.at("n").get<std::int64_t>());
  if (family == "cyclic") return GroupSpec::cyclic(j.at("n").get<std::int64_t>());
  if (family == "dihedral") return GroupSpec::dihedral(j.at("n").get<std::int64_t>());
  if (family == "product") {
    std::vector<GroupSpec> factors;
    for (const auto& f : j.at("factors")) factors.push_back(group_spec_from_json(f));
    return GroupSpec::product(std::move(factors));
  }
  throw std::invalid_argument("unknown group family: " + family);
}

nlohmann::json instance_to_json(const Instance& inst) {
  nlohmann::json j;
  j["group"] = group_spec_to_json(inst.group);
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : inst.generators.elements) gens.push_back(format_element(g));
  j["generators"] = gens;
  if (inst.irrep) j["irrep"] = *inst.irrep;
  if (inst.seed) j["seed"] = *inst.seed;
  if (inst.tol) j["tol"] = *inst.tol;
  return j;
}

Instance instance_from_json(const nlohmann::json& j) {
  GroupSpec group = group_spec_from_json(j.at("group"));
  std::vector<GroupElement> elements;
  for (const auto& text : j.at("generators"))
    elements.push_back(parse_element(group, text.get<std::string>()));
  Instance inst{group, make_generator_set(group, std::move(elements)), std::nullopt, std::nullopt,
                std::nullopt};
  if (j.contains("irrep")) inst.irrep = j.at("irrep").get<std::string>();
  if (j.contains("seed")) inst.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("tol")) inst.tol = j.at("tol").get<double>();
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  nlohmann::json j;
  in >> j;
  return instance_from_json(j);
}

}  // namespace qcx
