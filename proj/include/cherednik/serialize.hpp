// Copyright 2026 The cherednik authors
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

#ifndef CHEREDNIK_SERIALIZE_HPP
#define CHEREDNIK_SERIALIZE_HPP

#include <json.hpp>

#include "cherednik/saito.hpp"
#include "cherednik/shift.hpp"

namespace cherednik {

// Polynomials serialize as {"vars", "field", "terms"} with coefficients as
// "p/q" strings (rational) or ascending coefficient arrays (extension).
nlohmann::json field_element_to_json(const FieldElement& c);
FieldElement field_element_from_json(const nlohmann::json& j, const FieldContextPtr& ctx);

nlohmann::json field_context_to_json(const FieldContextPtr& ctx);
FieldContextPtr field_context_from_json(const nlohmann::json& j);

nlohmann::json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const nlohmann::json& j);

nlohmann::json frame_to_json(const SaitoFrame& frame);
SaitoFrame frame_from_json(const nlohmann::json& j);

nlohmann::json family_to_json(const SingularFamily& fam);
SingularFamily family_from_json(const nlohmann::json& j);

}  // namespace cherednik

#endif  // CHEREDNIK_SERIALIZE_HPP
