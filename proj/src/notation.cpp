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

#include "renner/notation.hpp"

#include <sstream>

#include "renner/errors.hpp"

namespace renner {

  namespace {
    std::vector<std::string> tokens(std::string_view text) {
      std::istringstream       in{std::string(text)};
      std::vector<std::string> result;
      for (std::string token; in >> token;) {
        result.push_back(token);
      }
      return result;
    }

    GroupElement parse_group_word(RennerMonoid const& m, std::vector<std::string> const& words) {
      std::vector<std::size_t> letters;
      for (auto const& w : words) {
        if (w == "1") {
          continue;
        }
        auto s = m.data().graph.index_of(w);
        if (!s) {
          throw ParseError("unknown generator '" + w + "'");
        }
        letters.push_back(*s);
      }
      return m.group().from_word(letters);
    }
  }  // namespace

  std::string to_notation(RennerMonoid const& m, RennerElement const& r) {
    auto const& g = m.group();
    if (r.is_unit()) {
      return g.length(r.w1) == 0 ? "1" : g.to_string(r.w1);
    }
    std::string result = g.to_string(r.w1);
    if (!result.empty()) {
      result += ' ';
    }
    result += ". " + m.lattice().name(r.e) + " .";
    if (g.length(r.w2) != 0) {
      result += ' ' + g.to_string(r.w2);
    }
    return result;
  }

  std::string to_notation(RennerMonoid const& m, std::vector<Letter> const& word) {
    if (word.empty()) {
      return "1";
    }
    std::string result;
    for (auto x : word) {
      if (!result.empty()) {
        result += ' ';
      }
      result += x.kind == Letter::Kind::generator ? m.data().graph.name(x.index)
                                                   : m.lattice().name(x.index);
    }
    return result;
  }

  RennerElement parse_element(RennerMonoid const& m, std::string_view text) {
    std::vector<std::string_view> slots;
    std::size_t                   begin = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
      if (i == text.size() || text[i] == '.') {
        slots.push_back(text.substr(begin, i - begin));
        begin = i + 1;
      }
    }
    if (slots.size() == 3) {
      auto const middle = tokens(slots[1]);
      if (middle.size() != 1) {
        throw ParseError("expected exactly one idempotent label between the dots in '"
                         + std::string(text) + "'");
      }
      auto e = m.lattice().index_of(middle[0]);
      if (!e) {
        throw ParseError("unknown idempotent label '" + middle[0] + "'");
      }
      return m.normalize(parse_group_word(m, tokens(slots[0])), *e,
                         parse_group_word(m, tokens(slots[2])));
    }
    if (slots.size() != 1) {
      throw ParseError("expected 'w1 . e . w2' or a word, got '" + std::string(text) + "'");
    }
    auto const words = tokens(text);
    if (words.empty()) {
      throw ParseError("empty element");
    }
    std::vector<Letter> word;
    for (auto const& w : words) {
      if (w == "1") {
        continue;
      }
      if (auto s = m.data().graph.index_of(w)) {
        word.push_back(Letter::generator(*s));
      } else if (auto e = m.lattice().index_of(w)) {
        word.push_back(Letter::idempotent(*e));
      } else {
        throw ParseError("unknown letter '" + w + "'");
      }
    }
    return m.evaluate(word);
  }

}  // namespace renner
