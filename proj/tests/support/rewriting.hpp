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
// A slow word rewriting engine over the defining relations of a Renner
// monoid.  Words are sequences of letter ids: 0..rank-1 are the Coxeter
// generators, rank + e is the lattice element e.  Used as an oracle: two
// words connected by relation moves are equal in the presented monoid.

#ifndef RENNER_TESTS_SUPPORT_REWRITING_HPP_
#define RENNER_TESTS_SUPPORT_REWRITING_HPP_

#include <algorithm>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "renner/coxeter.hpp"
#include "renner/renner_monoid.hpp"

namespace support {

  using Word = std::vector<int>;

  class Rewriter {
   public:
    Rewriter(renner::RennerData const& data, renner::CoxeterGroup const& group)
        : rank_(static_cast<int>(data.graph.rank())) {
      auto const& g = data.graph;
      for (int s = 0; s < rank_; ++s) {
        relations_.push_back({{s, s}, {}});
        for (int t = s + 1; t < rank_; ++t) {
          unsigned const m = g.label(s, t);
          Word           a;
          Word           b;
          for (unsigned i = 0; i < m; ++i) {
            a.push_back(i % 2 == 0 ? s : t);
            b.push_back(i % 2 == 0 ? t : s);
          }
          relations_.push_back({a, b});
        }
      }
      auto const& lat = data.lattice;
      for (std::size_t e = 0; e < lat.size(); ++e) {
        int const ee = rank_ + static_cast<int>(e);
        for (auto s : data.lambda_star_upper[e].members()) {
          relations_.push_back({{static_cast<int>(s), ee}, {ee, static_cast<int>(s)}});
        }
        for (auto s : data.lambda_star_lower[e].members()) {
          relations_.push_back({{static_cast<int>(s), ee}, {ee}});
          relations_.push_back({{ee, static_cast<int>(s)}, {ee}});
        }
      }
      // e w f = h for w minimal in its double coset, h the greatest lower
      // bound of e and f whose type contains supp(w).
      for (std::size_t e = 0; e < lat.size(); ++e) {
        for (std::size_t f = 0; f < lat.size(); ++f) {
          for (std::size_t i = 0; i < group.size(); ++i) {
            auto const w = group.element(i);
            if (!(group.left_descents(w) & data.lambda(e)).empty()
                || !(group.right_descents(w) & data.lambda(f)).empty()) {
              continue;
            }
            std::vector<std::size_t> below;
            for (std::size_t h = 0; h < lat.size(); ++h) {
              if (lat.leq(h, e) && lat.leq(h, f)
                  && group.support(w).is_subset_of(data.lambda(h))) {
                below.push_back(h);
              }
            }
            for (auto h : below) {
              if (std::all_of(below.begin(), below.end(),
                              [&](std::size_t x) { return lat.leq(x, h); })) {
                Word lhs{rank_ + static_cast<int>(e)};
                for (auto s : group.word(w)) {
                  lhs.push_back(s);
                }
                lhs.push_back(rank_ + static_cast<int>(f));
                relations_.push_back({lhs, {rank_ + static_cast<int>(h)}});
              }
            }
          }
        }
      }
    }

    int rank() const noexcept {
      return rank_;
    }

    //! Number of generator letters (idempotents weigh 0).
    unsigned weight(Word const& w) const {
      return static_cast<unsigned>(
          std::count_if(w.begin(), w.end(), [this](int x) { return x < rank_; }));
    }

    //! Words reachable from `start` by single relation moves, staying within
    //! `max_letters` letters and satisfying `allowed`.
    std::set<Word> component(Word const&                            start,
                             std::size_t                            max_letters,
                             std::function<bool(Word const&)> const& allowed
                             = [](Word const&) { return true; }) const {
      std::set<Word>    seen{start};
      std::vector<Word> queue{start};
      for (std::size_t q = 0; q < queue.size(); ++q) {
        Word const current = queue[q];
        for (auto const& [a, b] : relations_) {
          for (int dir = 0; dir < 2; ++dir) {
            Word const& from = dir == 0 ? a : b;
            Word const& to   = dir == 0 ? b : a;
            if (from.size() > current.size()) {
              continue;
            }
            if (current.size() - from.size() + to.size() > max_letters) {
              continue;
            }
            for (std::size_t pos = 0; pos + from.size() <= current.size(); ++pos) {
              if (!std::equal(from.begin(), from.end(), current.begin() + static_cast<long>(pos))) {
                continue;
              }
              Word next(current.begin(), current.begin() + static_cast<long>(pos));
              next.insert(next.end(), to.begin(), to.end());
              next.insert(next.end(), current.begin() + static_cast<long>(pos + from.size()),
                          current.end());
              if (allowed(next) && seen.insert(next).second) {
                queue.push_back(next);
              }
            }
          }
        }
      }
      return seen;
    }

   private:
    int                              rank_;
    std::vector<std::pair<Word, Word>> relations_;
  };

  inline Word to_word(std::vector<renner::Letter> const& letters, int rank) {
    Word result;
    for (auto x : letters) {
      result.push_back(x.kind == renner::Letter::Kind::generator
                           ? static_cast<int>(x.index)
                           : rank + static_cast<int>(x.index));
    }
    return result;
  }

  inline std::vector<renner::Letter> to_letters(Word const& word, int rank) {
    std::vector<renner::Letter> result;
    for (int x : word) {
      result.push_back(x < rank ? renner::Letter::generator(static_cast<std::size_t>(x))
                                : renner::Letter::idempotent(static_cast<std::size_t>(x - rank)));
    }
    return result;
  }

}  // namespace support

#endif  // RENNER_TESTS_SUPPORT_REWRITING_HPP_
