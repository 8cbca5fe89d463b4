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

/// How the controller is wired to the plant.
enum class Coupling {
  Indirect,                // shared fields y and u only
  DirectIndirect,          // plus direct couplings B_12 / B_21
  DirectIndirectSqueezed,  // plus ideal squeezers on u, y, w_K1, w_K2
};

const char* to_string(Coupling mode);

/// d eta = A eta dt + B dw_cl,  z = C eta,  eta = [x; xi],  w_cl = [w; w_K1; w_K2].
struct ClosedLoopSystem {
  Matrix A;
  Matrix B;
  Matrix C;
  Coupling mode = Coupling::Indirect;
};

/// Interconnects plant and controller.
///
/// Indirect mode ignores any couplings or squeezers carried by the controller.
/// DirectIndirect requires B_12/B_21 and ignores squeezers. The squeezed mode
/// requires both.
ClosedLoopSystem assemble(const PlantModel& plant, const ControllerRealization& ctrl,
                          Coupling mode);

}  // namespace qcfb
