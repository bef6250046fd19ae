// Copyright 2026 The cdim Authors.
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

#ifndef CDIM_JSON_IO_H_
#define CDIM_JSON_IO_H_

#include <optional>

#include "cdim/connectivity.h"
#include "cdim/graph.h"
#include "cdim/reduction.h"
#include "cdim/resolver.h"
#include "cdim/solver.h"
#include "json.hpp"

namespace cdim {

using Json = nlohmann::ordered_json;

// Finite values as integers, infinity as "inf".
Json ToJson(const KappaValue& value);
Json ToJson(const KappaMatrix& km);
Json ToJson(const Representation& r);
Json ToJson(const BoundsReport& bounds);
Json ToJson(const DimensionResult& result,
            const std::optional<BoundsReport>& bounds = std::nullopt);
Json ToJson(const BlockCutTree& tree);
Json ToJson(const GadgetMap& map);
Json ToJson(const SatDecision& decision);

}  // namespace cdim

#endif  // CDIM_JSON_IO_H_
