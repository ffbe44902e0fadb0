// Copyright 2026 The tsalab Authors
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

#ifndef TSALAB_TSALAB_HPP
#define TSALAB_TSALAB_HPP

#include "tsalab/analysis.hpp"
#include "tsalab/convert.hpp"
#include "tsalab/expected.hpp"
#include "tsalab/fixtures.hpp"
#include "tsalab/fsa.hpp"
#include "tsalab/langlab.hpp"
#include "tsalab/mcfg.hpp"
#include "tsalab/oracle.hpp"
#include "tsalab/report.hpp"
#include "tsalab/run.hpp"
#include "tsalab/suites.hpp"
#include "tsalab/text.hpp"
#include "tsalab/transform.hpp"
#include "tsalab/treestack.hpp"
#include "tsalab/tsa.hpp"

#endif  // TSALAB_TSALAB_HPP
