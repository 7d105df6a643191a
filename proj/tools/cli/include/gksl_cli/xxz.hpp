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

// Boundary-driven anisotropic Heisenberg chain,
//
//   H = J sum_k (sigma^x_k sigma^x_{k+1} + sigma^y_k sigma^y_{k+1} + Delta sigma^z_k sigma^z_{k+1}),
//
// with one polarizing channel at each end. The channel targeting Bloch
// direction n is sqrt(gamma) |+n><-n|, the lowering operator of the frame
// rotated so that +z maps to n.

#pragma once

#include <array>
#include <vector>

#include "gksl/liouvillian.hpp"

namespace gksl::cli {

using Direction = std::array<double, 3>;

struct XxzOptions {
  int sites = 4;
  double exchange = 1.0;
  double delta = 0.5;
  double gamma_left = 1.0;
  double gamma_right = 1.0;
  Direction left{0.0, 0.0, 1.0};
  Direction right{1.0, 0.0, 0.0};
};

// |+n><-n| for the normalized direction n.
CMatrix polarizing_lowering(const Direction& n);

LindbladModel xxz_model(const XxzOptions& options);

// Current of spin component a across bond (k, k+1), k 1-based:
// (i/2) [h_{k,k+1}, sigma^a_{k+1} - sigma^a_k]. For a = z this is the
// conserved-charge current 2J (x_k y_{k+1} - y_k x_{k+1}).
CMatrix spin_current_operator(const XxzOptions& options, int bond, int component);

struct XxzReport {
  std::vector<std::array<double, 3>> currents; // per bond, (x, y, z)
  std::array<double, 3> flatness{};            // max - min over bonds, per component
  std::vector<std::array<double, 3>> magnetization; // per site <sigma^a>
  bool unique = true;
  double residual = 0.0;
};

// Exact steady state through steady_state(); the superoperator limit caps
// the chain at six sites.
XxzReport xxz_ness_experiment(const XxzOptions& options);

}  // namespace gksl::cli
