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

#include "qcfb/closed_loop.hpp"

namespace qcfb {

const char* to_string(Coupling mode) {
  switch (mode) {
    case Coupling::Indirect:
      return "indirect";
    case Coupling::DirectIndirect:
      return "direct_indirect";
    case Coupling::DirectIndirectSqueezed:
      return "direct_indirect_squeezed";
  }
  return "unknown";
}

ClosedLoopSystem assemble(const PlantModel& plant, const ControllerRealization& ctrl,
                          Coupling mode) {
  const Eigen::Index n = plant.n();
  const Eigen::Index nk = ctrl.n();
  const Eigen::Index nw = plant.n_w();
  const Eigen::Index n1 = ctrl.b_k1().cols();
  const Eigen::Index n2 = ctrl.b_k2().cols();

  if (ctrl.c_k().rows() != plant.n_u()) {
    throw DimensionError("C_K rows must equal the plant control channel count");
  }
  if (ctrl.b_ky().cols() != plant.n_y()) {
    throw DimensionError("B_Ky columns must equal the plant measurement channel count");
  }
  if (plant.D_z.cols() != ctrl.c_k().rows()) {
    throw DimensionError("D_z columns must equal C_K rows");
  }
  if (n1 != plant.n_u()) {
    throw DimensionError("w_K1 channel count must equal the control channel count");
  }

  const bool direct = mode != Coupling::Indirect;
  const bool squeezed = mode == Coupling::DirectIndirectSqueezed;
  if (direct && (!ctrl.b_12() || !ctrl.b_21())) {
    throw ConfigurationError(std::string(to_string(mode)) + " coupling requires B_12 and B_21");
  }
  if (squeezed && !ctrl.squeezers()) {
    throw ConfigurationError("squeezed coupling requires a squeezer set");
  }
  if (direct && (ctrl.b_12()->rows() != n || ctrl.b_12()->cols() != nk)) {
    throw DimensionError("B_12 must be n x n_K");
  }

  const Matrix b12 = direct ? *ctrl.b_12() : Matrix::Zero(n, nk);
  const Matrix b21 = direct ? *ctrl.b_21() : Matrix::Zero(nk, n);

  Matrix s_u, s_y, s_wk1, s_wk2;
  if (squeezed) {
    const SqueezerSet& sq = *ctrl.squeezers();
    s_u = sq.s_u();
    s_y = sq.s_y();
    s_wk1 = sq.s_wk1();
    s_wk2 = sq.s_wk2();
    if (s_u.rows() != plant.n_u() || s_y.rows() != plant.n_y() || s_wk1.rows() != n1 ||
        s_wk2.rows() != n2) {
      throw DimensionError("squeezers act on single-mode (2-channel) fields only");
    }
  }

  const Matrix b_u = squeezed ? Matrix(plant.B * s_u) : plant.B;
  const Matrix b_ky_y = squeezed ? Matrix(ctrl.b_ky() * s_y) : ctrl.b_ky();

  ClosedLoopSystem cl;
  cl.mode = mode;

  cl.A.resize(n + nk, n + nk);
  cl.A.topLeftCorner(n, n) = plant.A;
  cl.A.topRightCorner(n, nk) = b_u * ctrl.c_k() + b12;
  cl.A.bottomLeftCorner(nk, n) = b_ky_y * plant.C + b21;
  cl.A.bottomRightCorner(nk, nk) = ctrl.a_k();

  cl.B = Matrix::Zero(n + nk, nw + n1 + n2);
  cl.B.block(0, 0, n, nw) = plant.B_w;
  cl.B.block(0, nw, n, n1) = squeezed ? Matrix(b_u * s_wk1) : plant.B;
  cl.B.block(n, 0, nk, nw) = b_ky_y * plant.D_w;
  cl.B.block(n, nw, nk, n1) = squeezed ? Matrix(ctrl.b_k1() * s_wk1) : ctrl.b_k1();
  cl.B.block(n, nw + n1, nk, n2) = squeezed ? Matrix(ctrl.b_k2() * s_wk2) : ctrl.b_k2();

  cl.C.resize(plant.n_z(), n + nk);
  cl.C.leftCols(n) = plant.C_z;
  cl.C.rightCols(nk) = plant.D_z * (squeezed ? Matrix(s_u * ctrl.c_k()) : ctrl.c_k());
  return cl;
}

}  // namespace qcfb
