// Copyright 2026 The sicdet developers
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

#include "sicdet/correlations.hpp"
#include "sicdet/criteria.hpp"
#include "sicdet/examples.hpp"
#include "sicdet/linalg.hpp"
#include "sicdet/matrix.hpp"
#include "sicdet/named_states.hpp"
#include "sicdet/partition.hpp"
#include "sicdet/povm.hpp"
#include "sicdet/random.hpp"
#include "sicdet/serialize.hpp"
#include "sicdet/state.hpp"
