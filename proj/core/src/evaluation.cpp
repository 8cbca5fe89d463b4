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

#include "qcfb/evaluation.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "qcfb/lyapunov.hpp"

namespace qcfb {

double j_infinity(const ClosedLoopSystem& cl, const Matrix& p) {
  if (p.rows() != cl.A.rows() || p.cols() != cl.A.cols() || cl.C.cols() != p.rows()) {
    throw DimensionError("P does not match the closed-loop state dimension");
  }
  return (cl.C * p * cl.C.transpose()).trace();
}

double violation(double h, double k, double phi, double delta) {
  return std::max(0.0, -h + phi) + std::max(0.0, k - delta);
}

double fitness(double j_inf, double k, double rho) { return j_inf + k * rho; }

EvaluationResult evaluate_controller(const ControllerRealization& ctrl, const PlantModel& plant,
                                     Coupling mode, double rho, double phi, double delta) {
  EvaluationResult out;
  out.k = pr_residual(ctrl).k;

  const ClosedLoopSystem cl = assemble(plant, ctrl, mode);
  auto unstable = [&](double abscissa) {
    out.stable = false;
    out.spectral_abscissa = abscissa;
    out.j_inf = kUnstableObjective;
    out.h = -1.0;
    out.violation = kInfeasibilityFloor + std::max(0.0, abscissa);
    out.fitness = fitness(out.j_inf, out.k, rho);
    return out;
  };

  if (!cl.A.allFinite() || !cl.B.allFinite() || !cl.C.allFinite() || !std::isfinite(out.k)) {
    out.k = std::isfinite(out.k) ? out.k : kUnstableObjective;
    return unstable(kUnstableObjective);
  }

  double abscissa = 0.0;
  try {
    abscissa = spectral_abscissa(cl.A);
  } catch (const SolverError&) {
    return unstable(kUnstableObjective);
  }
  if (!(abscissa < 0.0)) return unstable(abscissa);

  Matrix p;
  try {
    p = solve_lyapunov(cl.A, cl.B * cl.B.transpose());
  } catch (const StabilityError&) {
    // The two eigen-solvers can disagree at the stability margin.
    return unstable(std::max(abscissa, 0.0));
  } catch (const SolverError&) {
    return unstable(std::max(abscissa, 0.0));
  }

  Eigen::SelfAdjointEigenSolver<Matrix> eig(p, Eigen::EigenvaluesOnly);
  out.stable = true;
  out.spectral_abscissa = abscissa;
  out.j_inf = j_infinity(cl, p);
  out.h = eig.eigenvalues().minCoeff();
  out.violation = violation(out.h, out.k, phi, delta);
  out.fitness = fitness(out.j_inf, out.k, rho);
  if (!std::isfinite(out.j_inf) || !std::isfinite(out.h)) return unstable(std::max(abscissa, 0.0));
  return out;
}

EvaluationResult evaluate(std::span<const double> decision, const ScenarioSpec& scenario,
                          double rho, double phi, double delta) {
  const ControllerRealization ctrl = decode(decision, scenario);
  return evaluate_controller(ctrl, scenario.plant, scenario.coupling, rho, phi, delta);
}

EvaluationResult evaluate(const Vector& decision, const ScenarioSpec& scenario, double rho,
                          double phi, double delta) {
  return evaluate(
      std::span<const double>(decision.data(), static_cast<std::size_t>(decision.size())),
      scenario, rho, phi, delta);
}

}  // namespace qcfb
