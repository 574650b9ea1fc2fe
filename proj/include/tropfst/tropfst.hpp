// Copyright 2026 The tropfst Authors.
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
//
// Umbrella header.

#ifndef TROPFST_TROPFST_HPP_
#define TROPFST_TROPFST_HPP_

#include "tropfst/closure.hpp"
#include "tropfst/decoder.hpp"
#include "tropfst/errors.hpp"
#include "tropfst/halfspace.hpp"
#include "tropfst/matrix.hpp"
#include "tropfst/matrix_io.hpp"
#include "tropfst/observation.hpp"
#include "tropfst/text_format.hpp"
#include "tropfst/transforms.hpp"
#include "tropfst/weight.hpp"
#include "tropfst/wfst.hpp"

#endif  // TROPFST_TROPFST_HPP_
