// Copyright 2026 The fmzv Authors. All Rights Reserved.
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

#ifndef FMZV_FMZV_HPP
#define FMZV_FMZV_HPP

#include "fmzv/adelic.hpp"
#include "fmzv/bernoulli.hpp"
#include "fmzv/combination.hpp"
#include "fmzv/combinatorics.hpp"
#include "fmzv/harmonic.hpp"
#include "fmzv/identities.hpp"
#include "fmzv/index.hpp"
#include "fmzv/parallel.hpp"
#include "fmzv/probe.hpp"
#include "fmzv/rational.hpp"
#include "fmzv/report.hpp"
#include "fmzv/residue.hpp"
#include "fmzv/shuffle.hpp"
#include "fmzv/suite.hpp"

#endif  // FMZV_FMZV_HPP
