// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GAFKIT_GAFKIT_HPP
#define GAFKIT_GAFKIT_HPP

#include "common.hpp"
#include "digest.hpp"
#include "fft.hpp"
#include "gaf.hpp"
#include "noise.hpp"
#include "orthopoly.hpp"
#include "parallel.hpp"
#include "powerseries.hpp"
#include "quadrature.hpp"
#include "rng.hpp"
#include "series.hpp"
#include "stats.hpp"
#include "transforms.hpp"
#include "zeros.hpp"

#endif
