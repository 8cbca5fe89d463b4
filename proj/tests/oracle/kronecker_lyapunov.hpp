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

// Brute-force reference for A P + P A^T + Q = 0: vectorize with Kronecker
// products and solve the m^2 x m^2 system by full-pivot LU.

#include <random>

#include <Eigen/Dense>

namespace qcfb::oracle {

inline Eigen::MatrixXd kronecker_lyapunov(const Eigen::MatrixXd& a, const Eigen::MatrixXd& q) {
  const Eigen::Index m = a.rows();
  const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(m, m);
  Eigen::MatrixXd big = Eigen::MatrixXd::Zero(m * m, m * m);
  // Column-major vec: vec(A P) = (I kron A) vec P, vec(P A^T) = (A kron I) vec P.
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      big.block(i * m, j * m, m, m) += eye(i, j) * a + a(i, j) * eye;
    }
  }
  const Eigen::VectorXd rhs = -Eigen::Map<const Eigen::VectorXd>(q.data(), m * m);
  const Eigen::VectorXd x = big.fullPivLu().solve(rhs);
  return Eigen::Map<const Eigen::MatrixXd>(x.data(), m, m);
}

/// Hurwitz test matrix G - c I with c placed a margin beyond G's spectral abscissa.
template <class Rng>
Eigen::MatrixXd random_hurwitz(Eigen::Index m, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> margin(0.1, 2.0);
  Eigen::MatrixXd g(m, m);
  for (Eigen::Index i = 0; i < g.size(); ++i) g.data()[i] = normal(rng);
  const double abscissa = g.eigenvalues().real().maxCoeff();
  return g - (abscissa + margin(rng)) * Eigen::MatrixXd::Identity(m, m);
}

template <class Rng>
Eigen::MatrixXd random_psd(Eigen::Index m, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd h(m, m);
  for (Eigen::Index i = 0; i < h.size(); ++i) h.data()[i] = normal(rng);
  return h * h.transpose();
}

}  // namespace qcfb::oracle
