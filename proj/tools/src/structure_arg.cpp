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

#include "structure_arg.hpp"

#include <algorithm>
#include <regex>
#include <stdexcept>

namespace sscd::cli {

access::AccessStructure parse_structure(const std::string& text, std::size_t n_hint) {
  static const std::regex threshold(R"(^\s*(\d+)\s*of\s*(\d+)\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, threshold)) {
    return access::AccessStructure::threshold(std::stoul(m[1]), std::stoul(m[2]));
  }
  static const std::regex set(R"(\{([^}]*)\})");
  std::vector<access::PartySet> minimal;
  std::size_t n = n_hint;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), set); it != std::sregex_iterator(); ++it) {
    access::PartySet s;
    static const std::regex num(R"(\d+)");
    const std::string body = (*it)[1];
    for (auto jt = std::sregex_iterator(body.begin(), body.end(), num); jt != std::sregex_iterator(); ++jt) {
      s.push_back(std::stoul(jt->str()));
      n = std::max(n, s.back());
    }
    minimal.push_back(std::move(s));
  }
  if (minimal.empty()) throw std::invalid_argument("structure must look like 2of3 or {1,2},{3}: " + text);
  return access::AccessStructure::general(n, minimal);
}

}  // namespace sscd::cli
