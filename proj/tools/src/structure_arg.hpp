// Copyright 2026 The sscd Authors.
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

#include <string>

#include "sscd/access.hpp"

namespace sscd::cli {

/// "2of3" for a threshold structure, or minimal sets such as
/// "{1,2},{3}" (n is the largest index unless given).
access::AccessStructure parse_structure(const std::string& text, std::size_t n_hint = 0);

}  // namespace sscd::cli
