// Copyright 2026 The qsym Authors
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

#ifndef QSYM_JSON_IO_H
#define QSYM_JSON_IO_H

#include <nlohmann/json.hpp>
#include "qsym/state.h"
#include "qsym/truth_table.h"

namespace qsym {

/// {"n": int, "hex": string}. Tables over one input have no hex form and use
/// {"n": 1, "bin": string} instead.
nlohmann::json to_json(const TruthTable &t);
TruthTable truth_table_from_json(const nlohmann::json &j);

/// {"m": int, "s": int, "amps": [int]}
nlohmann::json to_json(const StateVector &sv);
StateVector state_from_json(const nlohmann::json &j);

}  // namespace qsym

#endif
