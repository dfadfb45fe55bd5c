// Copyright 2026 The sqfa Authors
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

#include "sqfa/analysis.hpp"
#include "sqfa/constructions.hpp"
#include "sqfa/dfa.hpp"
#include "sqfa/errors.hpp"
#include "sqfa/gate.hpp"
#include "sqfa/machine.hpp"
#include "sqfa/montecarlo.hpp"
#include "sqfa/quantum.hpp"
#include "sqfa/rational.hpp"
#include "sqfa/report_io.hpp"
#include "sqfa/spec_io.hpp"
