// Copyright 2026 The gksl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gksl/matrix_json.hpp"

#include <string>

namespace gksl {

nlohmann::json matrix_to_json(const CMatrix& m) {
  require_square(m, "matrix_to_json");
  const Index n = m.rows();
  std::vector<double> re;
  std::vector<double> im;
  re.reserve(static_cast<std::size_t>(n * n));
  im.reserve(static_cast<std::size_t>(n * n));
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      re.push_back(m(i, j).real());
      im.push_back(m(i, j).imag());
    }
  }
  return nlohmann::json{{"dim", n}, {"re", re}, {"im", im}};
}

CMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw DimensionError("matrix: expected an object {dim, re, im}");
  for (const auto& [key, value] : j.items()) {
    if (key != "dim" && key != "re" && key != "im") {
      throw DimensionError("matrix: unknown key '" + key + "'");
    }
  }
  if (!j.contains("dim") || !j.at("dim").is_number_integer()) {
    throw DimensionError("matrix: missing integer 'dim'");
  }
  const auto n = j.at("dim").get<long long>();
  if (n < 1) throw DimensionError("matrix: dim must be >= 1");
  const auto count = static_cast<std::size_t>(n * n);
  auto read = [&](const char* key, bool required) {
    std::vector<double> values;
    if (!j.contains(key)) {
      if (required) throw DimensionError(std::string("matrix: missing '") + key + "'");
      values.assign(count, 0.0);
      return values;
    }
    const auto& arr = j.at(key);
    if (!arr.is_array()) throw DimensionError(std::string("matrix: '") + key + "' must be an array");
    for (const auto& x : arr) {
      if (!x.is_number()) throw DimensionError(std::string("matrix: '") + key + "' has non-numeric entries");
      values.push_back(x.get<double>());
    }
    if (values.size() != count) {
      throw DimensionError(std::string("matrix: '") + key + "' has " + std::to_string(values.size()) +
                           " entries, expected " + std::to_string(count));
    }
    return values;
  };
  const std::vector<double> re = read("re", true);
  const std::vector<double> im = read("im", false);
  CMatrix m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index k = 0; k < n; ++k) {
      const auto idx = static_cast<std::size_t>(i * n + k);
      m(i, k) = Complex(re[idx], im[idx]);
    }
  return m;
}

}  // namespace gksl
