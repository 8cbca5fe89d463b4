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

#include "qcfb/lyapunov.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>

namespace qcfb {

namespace {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

void require_square(const Matrix& m, const char* name) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw DimensionError(std::string(name) + " must be square and nonempty");
  }
}

}  // namespace

double spectral_abscissa(const Matrix& a) {
  require_square(a, "A");
  if (!a.allFinite()) {
    throw SolverError("spectral abscissa of a non-finite matrix");
  }
  Eigen::EigenSolver<Matrix> solver(a, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw SolverError("eigenvalue iteration did not converge");
  }
  return solver.eigenvalues().real().maxCoeff();
}

Matrix solve_lyapunov(const Matrix& a, const Matrix& q) {
  require_square(a, "A");
  if (q.rows() != a.rows() || q.cols() != a.cols()) {
    throw DimensionError("Q must have the same shape as A");
  }
  if (!a.allFinite() || !q.allFinite()) {
    throw SolverError("Lyapunov data is not finite");
  }
  const double q_scale = std::max(1.0, q.cwiseAbs().maxCoeff());
  if ((q - q.transpose()).cwiseAbs().maxCoeff() > 1e-10 * q_scale) {
    throw DimensionError("Q must be symmetric");
  }

  const Eigen::Index m = a.rows();
  Eigen::ComplexSchur<ComplexMatrix> schur(a.cast<Complex>());
  if (schur.info() != Eigen::Success) {
    throw SolverError("Schur iteration did not converge");
  }
  const ComplexMatrix& t = schur.matrixT();
  const ComplexMatrix& u = schur.matrixU();

  double abscissa = -std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < m; ++i) abscissa = std::max(abscissa, t(i, i).real());
  if (!(abscissa < 0.0)) {
    throw StabilityError("A is not Hurwitz (spectral abscissa " + std::to_string(abscissa) + ")");
  }

  // T X + X T^* = -Qt. Column j of X T^* couples only columns k >= j through
  // conj(T(j, k)), so sweeping j downward leaves one triangular solve per column.
  const ComplexMatrix qt = u.adjoint() * q.cast<Complex>() * u;
  ComplexMatrix x = ComplexMatrix::Zero(m, m);
  ComplexMatrix shifted(m, m);
  for (Eigen::Index j = m - 1; j >= 0; --j) {
    ComplexVector rhs = -qt.col(j);
    for (Eigen::Index k = j + 1; k < m; ++k) rhs -= std::conj(t(j, k)) * x.col(k);
    shifted = t;
    shifted.diagonal().array() += std::conj(t(j, j));
    for (Eigen::Index i = 0; i < m; ++i) {
      // Diagonal entries are lambda_i + conj(lambda_j): real part < 0 for Hurwitz A.
      if (std::abs(shifted(i, i)) == 0.0) throw SolverError("singular Sylvester block");
    }
    x.col(j) = shifted.triangularView<Eigen::Upper>().solve(rhs);
  }

  Matrix p = (u * x * u.adjoint()).real();
  p = 0.5 * (p + p.transpose()).eval();
  if (!p.allFinite()) throw SolverError("Lyapunov solution is not finite");
  return p;
}

}  // namespace qcfb
