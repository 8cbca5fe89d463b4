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

// The single evaluation pipeline the optimizer calls: decision vector ->
// controller -> closed loop -> Lyapunov -> (J, h, k) -> violation and
// penalized fitness.

#include "qcfb/closed_loop.hpp"
#include "qcfb/scenario.hpp"

namespace qcfb {

/// Objective reported for candidates whose closed loop is not Hurwitz.
inline constexpr double kUnstableObjective = 1e12;
/// Violation floor for non-Hurwitz candidates; the spectral abscissa is added
/// on top so that less unstable candidates still rank ahead.
inline constexpr double kInfeasibilityFloor = 1e6;
inline constexpr double kDefaultPhi = 1e-6;
inline constexpr double kDefaultDelta = 0.01;

struct EvaluationResult {
  double j_inf = kUnstableObjective;
  double h = -1.0;  // lambda_min(P)
  double k = 0.0;   // ||M||_max
  double violation = kInfeasibilityFloor;
  double fitness = kUnstableObjective;
  bool stable = false;
  double spectral_abscissa = 0.0;

  bool feasible() const { return violation == 0.0; }
};

/// Tr(C P C^T).
double j_infinity(const ClosedLoopSystem& cl, const Matrix& p);

/// max(0, phi - h) + max(0, k - delta).
double violation(double h, double k, double phi, double delta);

/// j + k * rho.
double fitness(double j_inf, double k, double rho);

/// Evaluates an explicit controller against a plant.
EvaluationResult evaluate_controller(const ControllerRealization& ctrl, const PlantModel& plant,
                                     Coupling mode, double rho, double phi = kDefaultPhi,
                                     double delta = kDefaultDelta);

/// Decodes then evaluates. Only a layout mismatch throws; numerical
/// infeasibility is reported through the result.
EvaluationResult evaluate(std::span<const double> decision, const ScenarioSpec& scenario,
                          double rho, double phi = kDefaultPhi, double delta = kDefaultDelta);
EvaluationResult evaluate(const Vector& decision, const ScenarioSpec& scenario, double rho,
                          double phi = kDefaultPhi, double delta = kDefaultDelta);

}  // namespace qcfb
