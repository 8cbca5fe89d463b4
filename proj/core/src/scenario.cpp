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

#include "qcfb/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qcfb {

namespace {

constexpr double kDetuning = 0.1;
constexpr double kCoupling1 = 1e-2;
constexpr double kCoupling2 = 1e-2;
constexpr double kCoupling3 = 1e-2;

DecisionLayout layout_for(ScenarioId id) {
  DecisionLayout layout;
  Eigen::Index offset = 0;
  auto add = [&](std::string name, Eigen::Index rows, Eigen::Index cols) {
    layout.slices.push_back(LayoutSlice{std::move(name), offset, rows, cols});
    offset += rows * cols;
  };
  add("A_K", 2, 2);
  add("C_K", 2, 2);
  add("B_K2", 2, 2);
  add("B_Ky", 2, 2);
  if (id != ScenarioId::A) add("B_12", 2, 2);
  if (id == ScenarioId::C) add("squeezing", 1, 4);
  return layout;
}

Matrix read_block(std::span<const double> decision, const LayoutSlice& s) {
  Matrix m(s.rows, s.cols);
  for (Eigen::Index r = 0; r < s.rows; ++r) {
    for (Eigen::Index c = 0; c < s.cols; ++c) {
      m(r, c) = decision[static_cast<std::size_t>(s.offset + r * s.cols + c)];
    }
  }
  return m;
}

void write_block(Vector& out, const LayoutSlice& s, const Matrix& m) {
  if (m.rows() != s.rows || m.cols() != s.cols) {
    throw DimensionError(s.name + " does not match its layout slice");
  }
  for (Eigen::Index r = 0; r < s.rows; ++r) {
    for (Eigen::Index c = 0; c < s.cols; ++c) out(s.offset + r * s.cols + c) = m(r, c);
  }
}

}  // namespace

const char* to_string(ScenarioId id) {
  switch (id) {
    case ScenarioId::A:
      return "A";
    case ScenarioId::B:
      return "B";
    case ScenarioId::C:
      return "C";
  }
  return "?";
}

ScenarioId parse_scenario_id(std::string_view text) {
  if (text == "A" || text == "a") return ScenarioId::A;
  if (text == "B" || text == "b") return ScenarioId::B;
  if (text == "C" || text == "c") return ScenarioId::C;
  throw ConfigurationError("unknown scenario '" + std::string(text) + "' (expected A, B or C)");
}

Eigen::Index DecisionLayout::size() const {
  Eigen::Index total = 0;
  for (const auto& s : slices) total += s.size();
  return total;
}

const LayoutSlice& DecisionLayout::slice(std::string_view name) const {
  for (const auto& s : slices) {
    if (s.name == name) return s;
  }
  throw std::out_of_range("no layout slice named " + std::string(name));
}

bool DecisionLayout::contains(std::string_view name) const {
  return std::any_of(slices.begin(), slices.end(),
                     [&](const LayoutSlice& s) { return s.name == name; });
}

PlantModel build_atom_cavity_plant() {
  PlantModel p;
  p.A.resize(2, 2);
  p.A << 0.0, kDetuning, -kDetuning, 0.0;
  p.B.resize(2, 2);
  p.B << 0.0, 0.0, 0.0, -2.0 * std::sqrt(kCoupling1);
  p.B_w = Matrix::Zero(2, 4);
  p.B_w(1, 1) = -2.0 * std::sqrt(kCoupling2);
  p.B_w(1, 3) = -2.0 * std::sqrt(kCoupling3);
  p.C = Matrix::Zero(2, 2);
  p.C(0, 0) = 2.0 * std::sqrt(kCoupling2);
  p.D_w = Matrix::Zero(2, 4);
  p.D_w.leftCols(2).setIdentity();
  p.C_z = Matrix::Identity(2, 2);
  p.D_z = Matrix::Identity(2, 2);
  p.theta = CommutationMatrix::canonical(2);
  p.noise = NoiseModel::quantum(4);
  return p;
}

ScenarioSpec make_scenario(ScenarioId id) {
  ScenarioSpec spec;
  spec.id = id;
  spec.plant = build_atom_cavity_plant();
  spec.layout = layout_for(id);
  switch (id) {
    case ScenarioId::A:
      spec.coupling = Coupling::Indirect;
      spec.defaults = {10.0, 20};
      break;
    case ScenarioId::B:
      spec.coupling = Coupling::DirectIndirect;
      spec.defaults = {10.0, 20};
      break;
    case ScenarioId::C:
      spec.coupling = Coupling::DirectIndirectSqueezed;
      spec.defaults = {1000.0, 30};
      spec.squeeze_limit = std::log(10.0);
      break;
  }
  return spec;
}

ControllerRealization decode(std::span<const double> decision, const ScenarioSpec& spec) {
  const auto expected = static_cast<std::size_t>(spec.layout.size());
  if (decision.size() != expected) {
    throw ConfigurationError("decision vector has " + std::to_string(decision.size()) +
                             " entries, scenario " + to_string(spec.id) + " expects " +
                             std::to_string(expected));
  }
  const auto& layout = spec.layout;
  std::optional<Matrix> b_12;
  if (layout.contains("B_12")) b_12 = read_block(decision, layout.slice("B_12"));

  std::optional<SqueezerSet> squeezers;
  if (layout.contains("squeezing")) {
    const auto& s = layout.slice("squeezing");
    const double lim = spec.squeeze_limit;
    auto r = [&](Eigen::Index i) {
      return std::clamp(decision[static_cast<std::size_t>(s.offset + i)], -lim, lim);
    };
    squeezers = SqueezerSet{r(0), r(1), r(2), r(3)};
  }

  return ControllerRealization::build(
      read_block(decision, layout.slice("A_K")), read_block(decision, layout.slice("C_K")),
      read_block(decision, layout.slice("B_K2")), read_block(decision, layout.slice("B_Ky")),
      CommutationMatrix::canonical(spec.plant.n()), std::move(b_12), squeezers);
}

ControllerRealization decode(const Vector& decision, const ScenarioSpec& spec) {
  return decode(std::span<const double>(decision.data(), static_cast<std::size_t>(decision.size())),
                spec);
}

Vector encode(const ControllerRealization& ctrl, const ScenarioSpec& spec) {
  const auto& layout = spec.layout;
  Vector out = Vector::Zero(layout.size());
  write_block(out, layout.slice("A_K"), ctrl.a_k());
  write_block(out, layout.slice("C_K"), ctrl.c_k());
  write_block(out, layout.slice("B_K2"), ctrl.b_k2());
  write_block(out, layout.slice("B_Ky"), ctrl.b_ky());
  if (layout.contains("B_12")) {
    if (!ctrl.b_12()) throw ConfigurationError("scenario layout needs B_12");
    write_block(out, layout.slice("B_12"), *ctrl.b_12());
  }
  if (layout.contains("squeezing")) {
    if (!ctrl.squeezers()) throw ConfigurationError("scenario layout needs squeezers");
    const auto& s = layout.slice("squeezing");
    const SqueezerSet& sq = *ctrl.squeezers();
    out(s.offset + 0) = sq.r_u;
    out(s.offset + 1) = sq.r_y;
    out(s.offset + 2) = sq.r_wk1;
    out(s.offset + 3) = sq.r_wk2;
  }
  return out;
}

}  // namespace qcfb
