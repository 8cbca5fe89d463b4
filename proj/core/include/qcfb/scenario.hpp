// Copyright 2026 The qcfb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Concrete synthesis problems built around the atom-in-cavity plant, and the
// mapping between flat decision vectors and controller realizations.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcfb/closed_loop.hpp"

namespace qcfb {

enum class ScenarioId { A, B, C };

const char* to_string(ScenarioId id);
/// Accepts "A"/"a", "B"/"b", "C"/"c".
ScenarioId parse_scenario_id(std::string_view text);

/// A contiguous run of decision entries feeding one named quantity.
/// Matrix slices are read row-major.
struct LayoutSlice {
  std::string name;
  Eigen::Index offset = 0;
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;

  Eigen::Index size() const { return rows * cols; }
};

struct DecisionLayout {
  std::vector<LayoutSlice> slices;

  Eigen::Index size() const;
  /// Throws std::out_of_range for an unknown name.
  const LayoutSlice& slice(std::string_view name) const;
  bool contains(std::string_view name) const;
};

struct ScenarioDefaults {
  double alpha = 10.0;
  int rounds = 20;
};

struct ScenarioSpec {
  ScenarioId id = ScenarioId::A;
  PlantModel plant;
  DecisionLayout layout;
  Coupling coupling = Coupling::Indirect;
  ScenarioDefaults defaults;
  /// Squeezing parameters are saturated to [-limit, limit]; ln 10 keeps every
  /// squeezer diagonal inside [0.1, 10].
  double squeeze_limit = 0.0;
};

/// Atom trapped in a three-mirror cavity after adiabatic elimination, with
/// detuning 0.1 and all three coupling rates 0.01; z = x + beta_u.
PlantModel build_atom_cavity_plant();

/// A: Indirect, 16 entries (A_K, C_K, B_K2, B_Ky).
/// B: DirectIndirect, 20 entries (+ B_12).
/// C: DirectIndirectSqueezed, 24 entries (+ r_u, r_y, r_wK1, r_wK2).
ScenarioSpec make_scenario(ScenarioId id);

/// Builds the controller a decision vector describes. B_K1 and B_21 are
/// derived, never read from the vector. Throws ConfigurationError on a
/// length mismatch.
ControllerRealization decode(std::span<const double> decision, const ScenarioSpec& spec);
ControllerRealization decode(const Vector& decision, const ScenarioSpec& spec);

/// Inverse of decode for the searched quantities.
Vector encode(const ControllerRealization& ctrl, const ScenarioSpec& spec);

}  // namespace qcfb
