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
// Text notation for monoid elements.  A singular element is written
// "w1 . eK . w2" with words as space separated generator labels, e.g.
// "s1 s2 . e1 . s1" or ". e0 .".  A unit is written as its word, or "1".

#ifndef RENNER_NOTATION_HPP_
#define RENNER_NOTATION_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "renner/renner_monoid.hpp"

namespace renner {

  std::string to_notation(RennerMonoid const& m, RennerElement const& r);

  std::string to_notation(RennerMonoid const& m, std::vector<Letter> const& word);

  //! Accepts "w1 . e . w2" (any triple, normalised) or a plain word over
  //! S and the lattice labels, evaluated in the monoid.  Throws ParseError.
  RennerElement parse_element(RennerMonoid const& m, std::string_view text);

}  // namespace renner

#endif  // RENNER_NOTATION_HPP_
