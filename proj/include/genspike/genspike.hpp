// Copyright 2026 The Authors.
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

#include "genspike/certificate.hpp"
#include "genspike/construct.hpp"
#include "genspike/corpus.hpp"
#include "genspike/counterexample.hpp"
#include "genspike/error.hpp"
#include "genspike/matroid.hpp"
#include "genspike/modular_cut.hpp"
#include "genspike/oracle.hpp"
#include "genspike/spike.hpp"
#include "genspike/structure.hpp"
#include "genspike/subset.hpp"
#include "genspike/text_format.hpp"
