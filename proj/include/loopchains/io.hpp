#pragma once

#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "loopchains/homology.hpp"
#include "loopchains/simplicial.hpp"

namespace loopchains {

struct ComplexFile {
  Complex complex;
  std::optional<Complex> collapse;
};

/// Read a complex description:
///   { "name": "...", "maximal_simplices": [[0,1,2], ...],
///     "collapse": [[0,1,3], ...] }   (collapse optional)
inline ComplexFile read_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
  if (!j.contains("maximal_simplices") || !j["maximal_simplices"].is_array())
    throw std::invalid_argument(path + ": missing \"maximal_simplices\" array");
  std::string name = j.value("name", std::string("complex"));
  std::vector<std::vector<int>> maximals;
  for (const auto& m : j["maximal_simplices"]) maximals.push_back(m.get<std::vector<int>>());

  ComplexFile out;
  out.complex = Complex::from_maximals(name, maximals);
  if (j.contains("collapse")) {
    std::vector<std::vector<int>> coll;
    for (const auto& m : j["collapse"]) coll.push_back(m.get<std::vector<int>>());
    out.collapse = Complex::from_maximals(name + "_collapse", coll);
  }
  return out;
}

}  // namespace loopchains
