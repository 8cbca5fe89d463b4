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

// Linear quantum stochastic systems in real quadrature form: commutation
// matrices, Ito noise models, plant/controller realizations and the
// physical-realizability algebra.

#include <complex>
#include <optional>

#include <Eigen/Dense>

#include "qcfb/errors.hpp"

namespace qcfb {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// The 2x2 symplectic block [[0, 1], [-1, 0]].
Matrix symplectic_j();

/// diag(J, ..., J) of size n x n. Throws DimensionError for odd or
/// nonpositive n.
Matrix block_diag_j(Eigen::Index n);

enum class CommutationForm { Canonical, DegenerateCanonical };

/// Real antisymmetric matrix Theta with [x_j, x_k] = 2i Theta_jk.
///
/// Only the two structured forms are constructible, so antisymmetry holds
/// exactly rather than up to a numerical check.
class CommutationMatrix {
 public:
  /// diag(J, ..., J); n_vars must be even and >= 2.
  static CommutationMatrix canonical(Eigen::Index n_vars);
  /// diag(0_{n'}, J, ..., J); n_classical in (0, n_vars], n_vars - n_classical even.
  static CommutationMatrix degenerate(Eigen::Index n_vars, Eigen::Index n_classical);

  Eigen::Index size() const { return matrix_.rows(); }
  CommutationForm form() const { return form_; }
  Eigen::Index classical_vars() const { return classical_; }
  const Matrix& matrix() const { return matrix_; }

 private:
  CommutationMatrix(CommutationForm form, Eigen::Index classical, Matrix m)
      : form_(form), classical_(classical), matrix_(std::move(m)) {}

  CommutationForm form_;
  Eigen::Index classical_;
  Matrix matrix_;
};

CommutationMatrix make_canonical_theta(Eigen::Index n_vars);

/// Ito table F = S + T of a self-adjoint noise vector, stored as its real
/// symmetric part S and the imaginary part of the antisymmetric T.
struct NoiseModel {
  Eigen::Index dim = 0;
  Matrix symmetric;         // S
  Matrix commutation_imag;  // Im(T); T = i * commutation_imag

  /// dim/2 conjugate pairs of vacuum quantum noise: S = I, T = i diag(J).
  static NoiseModel quantum(Eigen::Index dim);
  /// Splits a nonnegative Hermitian Ito matrix into S and T.
  static NoiseModel from_ito(const Eigen::MatrixXcd& ito);

  Eigen::MatrixXcd ito() const;
};

/// Plant with control input:
///   dx = A x dt + B du + B_w dw,  dy = C x dt + D_w dw,  z = C_z x + D_z beta_u.
struct PlantModel {
  Matrix A;
  Matrix B;
  Matrix B_w;
  Matrix C;
  Matrix D_w;
  Matrix C_z;
  Matrix D_z;
  CommutationMatrix theta = CommutationMatrix::canonical(2);
  NoiseModel noise;

  Eigen::Index n() const { return A.rows(); }
  Eigen::Index n_u() const { return B.cols(); }
  Eigen::Index n_w() const { return B_w.cols(); }
  Eigen::Index n_y() const { return C.rows(); }
  Eigen::Index n_z() const { return C_z.rows(); }

  /// Throws DimensionError when shapes disagree or a channel count is odd.
  void validate() const;
};

/// Ideal squeezers on the four controller-side channels. Each parameter r
/// induces S = diag(e^{-r}, e^{r}).
struct SqueezerSet {
  double r_u = 0.0;
  double r_y = 0.0;
  double r_wk1 = 0.0;
  double r_wk2 = 0.0;

  static Matrix matrix(double r);
  /// Inverse of matrix(): r from a printed diagonal pair, using both entries.
  static double parameter_from_diagonal(double s0, double s1);

  Matrix s_u() const { return matrix(r_u); }
  Matrix s_y() const { return matrix(r_y); }
  Matrix s_wk1() const { return matrix(r_wk1); }
  Matrix s_wk2() const { return matrix(r_wk2); }

  bool operator==(const SqueezerSet&) const = default;
};

/// B_K1 = Theta_K C_K^T diag(J).
Matrix derive_bk1(const Matrix& c_k, const CommutationMatrix& theta_k);
/// B_21 = Theta_K B_12^T diag(J).
Matrix derive_b21(const Matrix& b_12, const CommutationMatrix& theta_k);
/// Recovers B_12 from a given B_21, the algebraic inverse of derive_b21.
Matrix invert_b21_to_b12(const Matrix& b_21, const CommutationMatrix& theta_k);

/// Coherent controller
///   dxi = A_K xi dt + B_21 dx + B_K1 dw_K1 + B_K2 dw_K2 + B_Ky dy,
///   du  = C_K xi dt + dw_K1.
///
/// B_K1 and B_21 are never free: they are derived from C_K and B_12 when the
/// realization is built, so the corresponding equality constraints hold
/// identically.
class ControllerRealization {
 public:
  static ControllerRealization build(Matrix a_k, Matrix c_k, Matrix b_k2, Matrix b_ky,
                                     CommutationMatrix theta_k,
                                     std::optional<Matrix> b_12 = std::nullopt,
                                     std::optional<SqueezerSet> squeezers = std::nullopt);

  const Matrix& a_k() const { return a_k_; }
  const Matrix& b_k1() const { return b_k1_; }
  const Matrix& b_k2() const { return b_k2_; }
  const Matrix& b_ky() const { return b_ky_; }
  const Matrix& c_k() const { return c_k_; }
  const CommutationMatrix& theta_k() const { return theta_k_; }
  const std::optional<Matrix>& b_12() const { return b_12_; }
  const std::optional<Matrix>& b_21() const { return b_21_; }
  const std::optional<SqueezerSet>& squeezers() const { return squeezers_; }

  Eigen::Index n() const { return a_k_.rows(); }

 private:
  ControllerRealization(CommutationMatrix theta_k) : theta_k_(std::move(theta_k)) {}

  Matrix a_k_, b_k1_, b_k2_, b_ky_, c_k_;
  CommutationMatrix theta_k_;
  std::optional<Matrix> b_12_, b_21_;
  std::optional<SqueezerSet> squeezers_;
};

struct PrResidual {
  Matrix M;
  double k = 0.0;  // max_{jk} |M_jk|
};

/// M = A_K Th + Th A_K^T + sum_{B in {B_K1, B_K2, B_Ky}} B diag(J) B^T.
PrResidual pr_residual(const ControllerRealization& ctrl);

/// Physical realizability of the plant, applied to the concatenated input
/// [B_w, B] with D_w as the output feedthrough. All three conditions must
/// hold entrywise within tol.
bool plant_pr_check(const PlantModel& plant, double tol = 1e-9);

}  // namespace qcfb
