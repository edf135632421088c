// Copyright 2026 The polardeg Authors
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

#include <filesystem>
#include <json.hpp>

#include "polardeg/formula.hpp"
#include "polardeg/profile.hpp"

namespace polardeg {

/// Strict reader: unknown keys, non-integer numbers and out-of-range values
/// raise SchemaError.
///
///   {"n": int, "d": int,
///    "isolated": [{"mu": int, "mu_section": int?}],
///    "curves": [{"genus": int, "degree": int, "mu_transversal": int,
///                "special_points": [{"chi_fiber": int, "branch_count": int,
///                                    "branch_multiplicities": [int]?,
///                                    "mu_section": int?, "id": string?}]}]}
SingularityProfile profile_from_json(const nlohmann::json& j);
nlohmann::json profile_to_json(const SingularityProfile& p);

/// Reads and validates a profile file. Throws SchemaError for unreadable or
/// malformed files.
SingularityProfile load_profile(const std::filesystem::path& path);

nlohmann::json pol_result_to_json(const PolResult& r);
PolResult pol_result_from_json(const nlohmann::json& j);

}  // namespace polardeg
