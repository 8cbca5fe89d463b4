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

#include "qcfb/qls.hpp"

#include <cmath>
#include <string>

namespace qcfb {

namespace {

void require_even_positive(Eigen::Index n, const char* what) {
  if (n <= 0 || n % 2 != 0) {
    throw DimensionError(std::string(what) + " must be even and positive, got " +
                         std::to_string(n));
  }
}

void require_shape(const Matrix& m, Eigen::Index rows, Eigen::Index cols, const char* name) {
  if (m.rows() != rows || m.cols() != cols) {
    throw DimensionError(std::string(name) + " is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", expected " + std::to_string(rows) + "x" +
                         std::to_string(cols));
  }
}

// Adds B diag(J) B^T without forming diag(J): each J block contributes
// b_odd b_even^T - b_even b_odd^T.
void add_symplectic_form(const Matrix& b, Matrix& acc) {
  for (Eigen::Index c = 0; c + 1 < b.cols(); c += 2) {
    acc.noalias() += b.col(c) * b.col(c + 1).transpose();
    acc.noalias() -= b.col(c + 1) * b.col(c).transpose();
  }
}

}  // namespace

Matrix symplectic_j() {
  Matrix j(2, 2);
  j << 0.0, 1.0, -1.0, 0.0;
  return j;
}

Matrix block_diag_j(Eigen::Index n) {
  require_even_positive(n, "diag(J) size");
  Matrix m = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; i += 2) {
    m(i, i + 1) = 1.0;
    m(i + 1, i) = -1.0;
  }
  return m;
}

CommutationMatrix CommutationMatrix::canonical(Eigen::Index n_vars) {
  require_even_positive(n_vars, "number of system variables");
  return CommutationMatrix(CommutationForm::Canonical, 0, block_diag_j(n_vars));
}

CommutationMatrix CommutationMatrix::degenerate(Eigen::Index n_vars, Eigen::Index n_classical) {
  if (n_classical <= 0 || n_classical > n_vars || (n_vars - n_classical) % 2 != 0) {
    throw DimensionError("degenerate commutation matrix needs 0 < n' <= n with n - n' even");
  }
  Matrix m = Matrix::Zero(n_vars, n_vars);
  for (Eigen::Index i = n_classical; i < n_vars; i += 2) {
    m(i, i + 1) = 1.0;
    m(i + 1, i) = -1.0;
  }
  return CommutationMatrix(CommutationForm::DegenerateCanonical, n_classical, std::move(m));
}

CommutationMatrix make_canonical_theta(Eigen::Index n_vars) {
  return CommutationMatrix::canonical(n_vars);
}

NoiseModel NoiseModel::quantum(Eigen::Index dim) {
  require_even_positive(dim, "noise dimension");
  return NoiseModel{dim, Matrix::Identity(dim, dim), block_diag_j(dim)};
}

NoiseModel NoiseModel::from_ito(const Eigen::MatrixXcd& ito) {
  if (ito.rows() != ito.cols() || ito.rows() == 0) {
    throw DimensionError("Ito matrix must be square and nonempty");
  }
  const Eigen::MatrixXcd s = (ito + ito.transpose()) / 2.0;
  const Eigen::MatrixXcd t = (ito - ito.transpose()) / 2.0;
  return NoiseModel{ito.rows(), s.real(), t.imag()};
}

Eigen::MatrixXcd NoiseModel::ito() const {
  return symmetric.cast<std::complex<double>>() +
         std::complex<double>(0.0, 1.0) * commutation_imag.cast<std::complex<double>>();
}

void PlantModel::validate() const {
  const Eigen::Index nx = A.rows();
  require_even_positive(nx, "plant state dimension");
  require_shape(A, nx, nx, "A");
  require_even_positive(B.cols(), "control channel count");
  require_shape(B, nx, B.cols(), "B");
  require_even_positive(B_w.cols(), "noise channel count");
  require_shape(B_w, nx, B_w.cols(), "B_w");
  require_even_positive(C.rows(), "measurement channel count");
  require_shape(C, C.rows(), nx, "C");
  require_shape(D_w, C.rows(), B_w.cols(), "D_w");
  require_shape(C_z, C_z.rows(), nx, "C_z");
  require_shape(D_z, C_z.rows(), B.cols(), "D_z");
  if (theta.size() != nx) {
    throw DimensionError("plant commutation matrix does not match the state dimension");
  }
  if (noise.dim != B_w.cols()) {
    throw DimensionError("noise model dimension does not match B_w");
  }
}

Matrix SqueezerSet::matrix(double r) {
  Matrix s = Matrix::Zero(2, 2);
  s(0, 0) = std::exp(-r);
  s(1, 1) = std::exp(r);
  return s;
}

double SqueezerSet::parameter_from_diagonal(double s0, double s1) {
  if (!(s0 > 0.0) || !(s1 > 0.0)) {
    throw DimensionError("squeezer diagonal entries must be strictly positive");
  }
  return 0.5 * (std::log(s1) - std::log(s0));
}

Matrix derive_bk1(const Matrix& c_k, const CommutationMatrix& theta_k) {
  if (c_k.cols() != theta_k.size()) {
    throw DimensionError("C_K column count must match Theta_K");
  }
  return theta_k.matrix() * c_k.transpose() * block_diag_j(c_k.rows());
}

Matrix derive_b21(const Matrix& b_12, const CommutationMatrix& theta_k) {
  if (b_12.rows() != b_12.cols() || b_12.rows() != theta_k.size()) {
    throw DimensionError("B_12 must be square and match Theta_K");
  }
  return theta_k.matrix() * b_12.transpose() * block_diag_j(b_12.rows());
}

Matrix invert_b21_to_b12(const Matrix& b_21, const CommutationMatrix& theta_k) {
  if (b_21.rows() != b_21.cols() || b_21.rows() != theta_k.size()) {
    throw DimensionError("B_21 must be square and match Theta_K");
  }
  if (theta_k.form() != CommutationForm::Canonical) {
    throw SolverError("degenerate Theta_K is singular; B_12 cannot be recovered from B_21");
  }
  // diag(J)^{-1} = -diag(J), so the inverse is an exact signed permutation.
  const Matrix j_inv = -block_diag_j(b_21.rows());
  return (j_inv * b_21 * j_inv).transpose();
}

ControllerRealization ControllerRealization::build(Matrix a_k, Matrix c_k, Matrix b_k2,
                                                   Matrix b_ky, CommutationMatrix theta_k,
                                                   std::optional<Matrix> b_12,
                                                   std::optional<SqueezerSet> squeezers) {
  const Eigen::Index nk = theta_k.size();
  require_shape(a_k, nk, nk, "A_K");
  require_even_positive(c_k.rows(), "controller output channel count");
  require_shape(c_k, c_k.rows(), nk, "C_K");
  require_even_positive(b_k2.cols(), "w_K2 channel count");
  require_shape(b_k2, nk, b_k2.cols(), "B_K2");
  require_even_positive(b_ky.cols(), "controller measurement channel count");
  require_shape(b_ky, nk, b_ky.cols(), "B_Ky");

  ControllerRealization ctrl(std::move(theta_k));
  ctrl.b_k1_ = derive_bk1(c_k, ctrl.theta_k_);
  if (b_12) {
    ctrl.b_21_ = derive_b21(*b_12, ctrl.theta_k_);
    ctrl.b_12_ = std::move(b_12);
  }
  ctrl.a_k_ = std::move(a_k);
  ctrl.c_k_ = std::move(c_k);
  ctrl.b_k2_ = std::move(b_k2);
  ctrl.b_ky_ = std::move(b_ky);
  ctrl.squeezers_ = squeezers;
  return ctrl;
}

PrResidual pr_residual(const ControllerRealization& ctrl) {
  const Matrix& theta = ctrl.theta_k().matrix();
  Matrix m = ctrl.a_k() * theta;
  m.noalias() += theta * ctrl.a_k().transpose();
  add_symplectic_form(ctrl.b_k1(), m);
  add_symplectic_form(ctrl.b_k2(), m);
  add_symplectic_form(ctrl.b_ky(), m);
  const double k = m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
  return PrResidual{std::move(m), k};
}

bool plant_pr_check(const PlantModel& plant, double tol) {
  try {
    plant.validate();
  } catch (const DimensionError&) {
    return false;
  }
  const Eigen::Index ny = plant.n_y();
  const Eigen::Index nw = plant.n_w();
  const Matrix& theta = plant.theta.matrix();

  // i A Th + i Th A^T + B_full T B_full^T = 0 with T = i Im(T): divide by i.
  Matrix b_full(plant.n(), nw + plant.n_u());
  b_full << plant.B_w, plant.B;
  Matrix t_full = Matrix::Zero(nw + plant.n_u(), nw + plant.n_u());
  t_full.topLeftCorner(nw, nw) = plant.noise.commutation_imag;
  t_full.bottomRightCorner(plant.n_u(), plant.n_u()) = block_diag_j(plant.n_u());
  const Matrix first = plant.A * theta + theta * plant.A.transpose() +
                       b_full * t_full * b_full.transpose();
  if (first.cwiseAbs().maxCoeff() > tol) return false;

  // B_w [I; 0] = Th C^T diag(J): the measured channels are the leading ny.
  const Matrix second = plant.B_w.leftCols(ny) - theta * plant.C.transpose() * block_diag_j(ny);
  if (second.cwiseAbs().maxCoeff() > tol) return false;

  Matrix d_expected = Matrix::Zero(ny, nw);
  d_expected.leftCols(ny).setIdentity();
  return (plant.D_w - d_expected).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace qcfb
