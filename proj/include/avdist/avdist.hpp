// Copyright 2026 The avdist Authors
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

#ifndef AVDIST_AVDIST_HPP
#define AVDIST_AVDIST_HPP

#include "avdist/closed_form.hpp"
#include "avdist/distances.hpp"
#include "avdist/ensembles.hpp"
#include "avdist/error.hpp"
#include "avdist/harness.hpp"
#include "avdist/io.hpp"
#include "avdist/linalg.hpp"
#include "avdist/moments.hpp"
#include "avdist/montecarlo.hpp"
#include "avdist/parallel.hpp"
#include "avdist/quantum.hpp"
#include "avdist/random_objects.hpp"
#include "avdist/rng.hpp"
#include "avdist/worst.hpp"

#endif  // AVDIST_AVDIST_HPP
