// Copyright 2026 The qrecon Authors
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

#include "qrecon/common.hpp"
#include "qrecon/pauli.hpp"
#include "qrecon/questions.hpp"
#include "qrecon/bloch.hpp"
#include "qrecon/random.hpp"
#include "qrecon/generators.hpp"
#include "qrecon/states.hpp"
#include "qrecon/interrogation.hpp"
#include "qrecon/io.hpp"
#include "qrecon/suites.hpp"
