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

#include "qcfb/qls.hpp"

namespace qcfb {

/// Largest real part over the spectrum of a square matrix.
double spectral_abscissa(const Matrix& a);

/// Solves A P + P A^T + Q = 0 for Hurwitz A and symmetric Q.
///
/// Bartels-Stewart on the complex Schur form A = U T U^*: the transformed
/// equation T X + X T^* = -U^* Q U is solved column by column from the last
/// column backwards, each step a shifted upper-triangular solve. The result
/// is symmetrized before return.
///
/// Throws StabilityError if A is not Hurwitz and SolverError on a singular
/// shifted system or a non-finite result.
Matrix solve_lyapunov(const Matrix& a, const Matrix& q);

}  // namespace qcfb
