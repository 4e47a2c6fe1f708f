#pragma once

#include "fpltri/matrix.hpp"
#include "fpltri/numbers.hpp"
#include "json.hpp"

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

// Loaders for the golden data committed under tests/fixtures.
namespace fixture {

inline nlohmann::json load(const std::string& name) {
  std::string path = std::string(FPLTRI_FIXTURES_DIR) + "/" + name;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture " + path);
  return nlohmann::json::parse(in);
}

// Fixture entries are decimal strings, matching the CLI output schema.
inline fpltri::Int as_int(const nlohmann::json& x) {
  return fpltri::Int(x.get<std::string>());
}

inline fpltri::Mat<fpltri::Int> as_matrix(const nlohmann::json& rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  fpltri::Mat<fpltri::Int> m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = as_int(rows[i][j]);
  return m;
}

inline std::vector<fpltri::Int> as_vector(const nlohmann::json& v) {
  std::vector<fpltri::Int> r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(as_int(x));
  return r;
}

}  // namespace fixture
