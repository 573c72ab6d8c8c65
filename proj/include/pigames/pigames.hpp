// Copyright 2026 The pigames Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "pigames/allocation.hpp"
#include "pigames/axioms.hpp"
#include "pigames/coalition.hpp"
#include "pigames/constructions.hpp"
#include "pigames/game.hpp"
#include "pigames/generator.hpp"
#include "pigames/io.hpp"
#include "pigames/lp.hpp"
#include "pigames/rational.hpp"
#include "pigames/situation.hpp"
#include "pigames/solver.hpp"
