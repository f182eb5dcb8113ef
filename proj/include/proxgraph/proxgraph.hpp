// Copyright 2026 The Proxgraph Authors. All Rights Reserved.
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

#include "proxgraph/axioms.hpp"
#include "proxgraph/cli.hpp"
#include "proxgraph/corpus.hpp"
#include "proxgraph/errors.hpp"
#include "proxgraph/figures.hpp"
#include "proxgraph/forest_measures.hpp"
#include "proxgraph/graph.hpp"
#include "proxgraph/graph_io.hpp"
#include "proxgraph/linalg.hpp"
#include "proxgraph/oracles.hpp"
#include "proxgraph/path_measures.hpp"
#include "proxgraph/proximity.hpp"
#include "proxgraph/table1.hpp"
#include "proxgraph/walk_measures.hpp"
