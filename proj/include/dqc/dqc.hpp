// Copyright 2026 The dqc Authors
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

#include "dqc/bench.hpp"
#include "dqc/circuit.hpp"
#include "dqc/commutation.hpp"
#include "dqc/cost.hpp"
#include "dqc/decompose.hpp"
#include "dqc/error.hpp"
#include "dqc/io.hpp"
#include "dqc/native_format.hpp"
#include "dqc/optimizers.hpp"
#include "dqc/partition.hpp"
#include "dqc/qft.hpp"
#include "dqc/real_format.hpp"
#include "dqc/rng.hpp"
