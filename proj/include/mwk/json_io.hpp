// Copyright 2026 The mwk Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <json.hpp>

#include "mwk/model.hpp"
#include "mwk/sequences.hpp"
#include "mwk/snf.hpp"
#include "mwk/suites.hpp"
#include "mwk/valuation.hpp"

namespace mwk {

using Json = nlohmann::ordered_json;

Json to_json(const ModelElem& x);
Json to_json(const ThElem& x);
Json to_json(const CanonicalForm& x);
Json to_json(const OpSequence& s);
Json to_json(const Report& r);
Json group_to_json(const std::vector<BigInt>& g);

// Inverses for the value types; the field is read from the "field" key.
ModelElem model_from_json(const Json& j);
ThElem th_from_json(const Json& j);
OpSequence sequence_from_json(const Json& j);

}  // namespace mwk
