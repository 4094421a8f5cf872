/*
   Copyright 2026 The dmf Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef DMF_DMF_HPP
#define DMF_DMF_HPP

#include "dmf/additive.hpp"
#include "dmf/arith.hpp"
#include "dmf/det.hpp"
#include "dmf/error.hpp"
#include "dmf/expansion.hpp"
#include "dmf/fq.hpp"
#include "dmf/hyperderiv.hpp"
#include "dmf/isobaric.hpp"
#include "dmf/modp.hpp"
#include "dmf/poly.hpp"
#include "dmf/prime.hpp"
#include "dmf/ratfunc.hpp"
#include "dmf/serialize.hpp"
#include "dmf/series.hpp"
#include "dmf/text.hpp"
#include "dmf/upoly.hpp"
#include "dmf/wronskian.hpp"

#endif  // DMF_DMF_HPP
