// Copyright 2026 The renner-hecke Authors
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
//
// JSON document format for RennerData:
//
//   {
//     "format": "renner-data/1",
//     "generators": ["s1", "s2"],
//     "edges": [["s1", "s2", 3]],
//     "lattice": ["e0", "e1", "e2"],
//     "order": [["e0", "e1"], ["e1", "e2"]],
//     "lambda_star_lower": {"e0": ["s1", "s2"], "e1": ["s2"], "e2": []},
//     "lambda_star_upper": {"e0": [], "e1": [], "e2": ["s1"]}
//   }
//
// "order" lists pairs [a, b] with a < b; the transitive closure is taken.
// Elements missing from a lambda map get the empty set.

#ifndef RENNER_DATA_FORMAT_HPP_
#define RENNER_DATA_FORMAT_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "renner/renner_monoid.hpp"

namespace renner {

  inline constexpr std::string_view kDataFormatTag = "renner-data/1";

  //! Emits Hasse pairs only, generators and elements in declared order.
  std::string to_data_text(RennerData const& data);

  //! Throws ParseError with "line:col" for syntax errors or a JSON pointer
  //! for semantic ones.  The result is not validated.
  RennerData parse_data(std::string_view text);

  RennerData from_file(std::filesystem::path const& path);
  void       to_file(RennerData const& data, std::filesystem::path const& path);

}  // namespace renner

#endif  // RENNER_DATA_FORMAT_HPP_
