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

#include "renner/coxeter.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "renner/errors.hpp"

namespace renner {

  namespace {
    constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

    struct UnionFind {
      explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
      }
      std::size_t find(std::size_t x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      }
      void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
          parent[std::max(a, b)] = std::min(a, b);
        }
      }
      std::vector<std::size_t> parent;
    };
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // GeneratorSet / CoxeterGraph
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::size_t> GeneratorSet::members() const {
    std::vector<std::size_t> result;
    for (std::uint64_t bits = bits_; bits != 0; bits &= bits - 1) {
      result.push_back(static_cast<std::size_t>(std::countr_zero(bits)));
    }
    return result;
  }

  CoxeterGraph::CoxeterGraph(std::vector<std::string> generators)
      : generators_(std::move(generators)) {
    if (generators_.size() > GeneratorSet::kMaxRank) {
      throw MalformedGraph("rank " + std::to_string(generators_.size())
                           + " exceeds the supported maximum of 64");
    }
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      if (generators_[i].empty()) {
        throw MalformedGraph("empty generator label");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (generators_[i] == generators_[j]) {
          throw MalformedGraph("duplicate generator label '" + generators_[i] + "'");
        }
      }
    }
  }

  std::optional<std::size_t> CoxeterGraph::index_of(std::string_view name) const {
    auto it = std::find(generators_.begin(), generators_.end(), name);
    if (it == generators_.end()) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - generators_.begin());
  }

  void CoxeterGraph::add_edge(std::size_t s, std::size_t t, unsigned label) {
    if (s >= rank() || t >= rank()) {
      throw MalformedGraph("edge endpoint is not a declared generator");
    }
    if (s == t) {
      throw MalformedGraph("self-edge on generator '" + generators_[s] + "'");
    }
    if (label < 3) {
      throw MalformedGraph("edge {" + generators_[s] + ", " + generators_[t]
                           + "} has label " + std::to_string(label)
                           + "; labels must be at least 3");
    }
    edges_[std::minmax(s, t)] = label;
  }

  unsigned CoxeterGraph::label(std::size_t s, std::size_t t) const {
    if (s == t) {
      return 1;
    }
    auto it = edges_.find(std::minmax(s, t));
    return it == edges_.end() ? 2 : it->second;
  }

  bool CoxeterGraph::touches(GeneratorSet a, GeneratorSet b) const {
    if (!(a & b).empty()) {
      return true;
    }
    for (auto const& [edge, m] : edges_) {
      auto [s, t] = edge;
      if ((a.contains(s) && b.contains(t)) || (a.contains(t) && b.contains(s))) {
        return true;
      }
    }
    return false;
  }

  ////////////////////////////////////////////////////////////////////////
  // CoxeterGroup: enumeration
  ////////////////////////////////////////////////////////////////////////

  // Elements are discovered level by level (level = length).  At level k
  // every pair (w, s) with w*s not yet known is a candidate for level k+1.
  // Two candidates (w, s) != (w', t) give the same element x iff s and t are
  // both right descents of x, which happens iff x = y * w0(s, t) reduced; we
  // detect this by walking down from w along t, s, t, ... (m - 1 letters).
  CoxeterGroup::CoxeterGroup(CoxeterGraph graph, std::size_t cap)
      : graph_(std::move(graph)), rank_(graph_.rank()) {
    if (cap == 0) {
      throw CapExceeded("element cap must be positive");
    }
    std::vector<std::vector<std::uint8_t>> words{{}};
    std::vector<std::uint32_t>             right(rank_, kUnset);
    std::vector<unsigned>                  length{0};
    std::size_t                            level_begin = 0;

    for (unsigned k = 0;; ++k) {
      std::size_t const level_end = words.size();
      // Candidates of this level, indexed by (w - level_begin) * rank + s.
      std::vector<std::uint32_t> candidate_id((level_end - level_begin) * rank_, kUnset);
      std::vector<std::pair<std::uint32_t, std::uint8_t>> candidates;
      for (std::size_t w = level_begin; w < level_end; ++w) {
        for (std::size_t s = 0; s < rank_; ++s) {
          if (right[w * rank_ + s] == kUnset) {
            candidate_id[(w - level_begin) * rank_ + s] = static_cast<std::uint32_t>(candidates.size());
            candidates.emplace_back(static_cast<std::uint32_t>(w), static_cast<std::uint8_t>(s));
          }
        }
      }
      if (candidates.empty()) {
        break;
      }

      UnionFind classes(candidates.size());
      for (std::size_t c = 0; c < candidates.size(); ++c) {
        auto const [w, s] = candidates[c];
        for (std::size_t t = 0; t < rank_; ++t) {
          if (t == s) {
            continue;
          }
          unsigned const m = graph_.label(s, t);
          if (m - 1 > k) {
            continue;
          }
          std::uint32_t y  = w;
          bool          ok = true;
          for (unsigned step = 0; step + 1 < m; ++step) {
            std::size_t const   letter = (step % 2 == 0) ? t : s;
            std::uint32_t const next   = right[y * rank_ + letter];
            if (next == kUnset || length[next] + 1 != length[y]) {
              ok = false;
              break;
            }
            y = next;
          }
          if (!ok) {
            continue;
          }
          // Climb back along the other reduced word of w0(s,t) minus t.
          std::uint32_t other = y;
          for (unsigned step = 0; step + 1 < m; ++step) {
            // Letters from the bottom: the word read backwards is s, t, s, ...
            unsigned const    from_top = m - 2 - step;
            std::size_t const letter   = (from_top % 2 == 0) ? s : t;
            other                      = right[other * rank_ + letter];
          }
          auto const id = candidate_id[(other - level_begin) * rank_ + t];
          classes.unite(c, id);
        }
      }

      std::vector<std::uint32_t> class_element(candidates.size(), kUnset);
      for (std::size_t c = 0; c < candidates.size(); ++c) {
        auto const root = classes.find(c);
        auto const [w, s] = candidates[c];
        std::vector<std::uint8_t> candidate_word = words[w];
        candidate_word.push_back(s);
        if (class_element[root] == kUnset) {
          if (words.size() >= cap) {
            throw CapExceeded("Coxeter group has more than " + std::to_string(cap)
                              + " elements");
          }
          class_element[root] = static_cast<std::uint32_t>(words.size());
          words.push_back(std::move(candidate_word));
          length.push_back(k + 1);
          right.resize(right.size() + rank_, kUnset);
        } else if (candidate_word < words[class_element[root]]) {
          words[class_element[root]] = std::move(candidate_word);
        }
        auto const x        = class_element[root];
        right[w * rank_ + s] = x;
        right[x * rank_ + s] = w;
      }
      level_begin = level_end;
    }

    // Renumber so that indices follow shortlex order of canonical words.
    std::vector<std::uint32_t> order(words.size());
    std::iota(order.begin(), order.end(), std::uint32_t{0});
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
      return length[a] != length[b] ? length[a] < length[b] : words[a] < words[b];
    });
    std::vector<std::uint32_t> position(words.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      position[order[i]] = static_cast<std::uint32_t>(i);
    }

    std::size_t const n = words.size();
    right_.resize(n * rank_);
    length_.resize(n);
    word_offset_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      auto const old = order[i];
      length_[i]     = length[old];
      word_offset_[i] = words_.size();
      words_.insert(words_.end(), words[old].begin(), words[old].end());
      for (std::size_t s = 0; s < rank_; ++s) {
        right_[i * rank_ + s] = position[right[old * rank_ + s]];
      }
    }

    // s * x = (s * y) * t where x = y * t and t is the last letter of x.
    left_.assign(n * rank_, kUnset);
    for (std::size_t s = 0; s < rank_; ++s) {
      left_[s] = right_[s];
    }
    for (std::size_t x = 1; x < n; ++x) {
      std::size_t const   t = words_[word_offset_[x] + length_[x] - 1];
      std::uint32_t const y = right_[x * rank_ + t];
      for (std::size_t s = 0; s < rank_; ++s) {
        left_[x * rank_ + s] = right_[left_[y * rank_ + s] * rank_ + t];
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // CoxeterGroup: queries
  ////////////////////////////////////////////////////////////////////////

  GroupElement CoxeterGroup::element(std::size_t index) const {
    if (index >= size()) {
      throw std::out_of_range("group element index out of range");
    }
    return GroupElement(static_cast<std::uint32_t>(index));
  }

  GroupElement CoxeterGroup::multiply(GroupElement a, GroupElement b) const {
    for (auto s : word(b)) {
      a = right_multiply(a, s);
    }
    return a;
  }

  GroupElement CoxeterGroup::inverse(GroupElement w) const {
    GroupElement result = identity();
    auto const   letters = word(w);
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
      result = right_multiply(result, *it);
    }
    return result;
  }

  GroupElement CoxeterGroup::from_word(std::span<std::size_t const> letters) const {
    GroupElement result = identity();
    for (auto s : letters) {
      if (s >= rank_) {
        throw std::out_of_range("generator index out of range");
      }
      result = right_multiply(result, s);
    }
    return result;
  }

  GeneratorSet CoxeterGroup::left_descents(GroupElement w) const {
    GeneratorSet result;
    for (std::size_t s = 0; s < rank_; ++s) {
      if (is_left_descent(s, w)) {
        result.insert(s);
      }
    }
    return result;
  }

  GeneratorSet CoxeterGroup::right_descents(GroupElement w) const {
    GeneratorSet result;
    for (std::size_t s = 0; s < rank_; ++s) {
      if (is_right_descent(w, s)) {
        result.insert(s);
      }
    }
    return result;
  }

  GeneratorSet CoxeterGroup::support(GroupElement w) const {
    GeneratorSet result;
    for (auto s : word(w)) {
      result.insert(s);
    }
    return result;
  }

  DescentData CoxeterGroup::descent_and_support(GroupElement w) const {
    return {left_descents(w), right_descents(w), support(w)};
  }

  CosetDecomposition CoxeterGroup::coset_reduce(GroupElement w,
                                                GeneratorSet subset,
                                                Side         side) const {
    GroupElement parabolic = identity();
    auto const   members   = subset.members();
    bool         changed   = true;
    while (changed) {
      changed = false;
      for (auto s : members) {
        if (side == Side::right && is_right_descent(w, s)) {
          w         = right_multiply(w, s);
          parabolic = left_multiply(s, parabolic);
          changed   = true;
          break;
        }
        if (side == Side::left && is_left_descent(s, w)) {
          w         = left_multiply(s, w);
          parabolic = right_multiply(parabolic, s);
          changed   = true;
          break;
        }
      }
    }
    return {w, parabolic};
  }

  DoubleCosetDecomposition CoxeterGroup::double_coset_reduce(GroupElement w,
                                                             GeneratorSet left_subset,
                                                             GeneratorSet right_subset) const {
    auto const [x, right_part] = coset_reduce(w, right_subset, Side::right);
    auto const [reduced, left_part] = coset_reduce(x, left_subset, Side::left);
    return {left_part, reduced, right_part};
  }

  bool CoxeterGroup::is_reduced_pair(GroupElement w,
                                     GeneratorSet right_subset,
                                     GeneratorSet left_subset) const {
    return double_coset_reduce(w, left_subset, right_subset).reduced == w;
  }

  std::vector<GroupElement> CoxeterGroup::parabolic_subgroup(GeneratorSet subset) const {
    std::vector<bool>         seen(size(), false);
    std::vector<GroupElement> result{identity()};
    seen[0] = true;
    auto const members = subset.members();
    for (std::size_t i = 0; i < result.size(); ++i) {
      for (auto s : members) {
        auto const next = right_multiply(result[i], s);
        if (!seen[next.index()]) {
          seen[next.index()] = true;
          result.push_back(next);
        }
      }
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  GroupElement CoxeterGroup::alternating(std::size_t s, std::size_t t, unsigned count) const {
    GroupElement result = identity();
    for (unsigned i = 0; i < count; ++i) {
      result = right_multiply(result, i % 2 == 0 ? s : t);
    }
    return result;
  }

  std::string CoxeterGroup::to_string(GroupElement w, std::string_view separator) const {
    std::string result;
    for (auto s : word(w)) {
      if (!result.empty()) {
        result += separator;
      }
      result += graph_.name(s);
    }
    return result;
  }

}  // namespace renner
