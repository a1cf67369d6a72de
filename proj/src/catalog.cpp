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

#include "renner/catalog.hpp"

#include "renner/errors.hpp"

namespace renner {

  RennerData rook_data(std::size_t n) {
    if (n == 0) {
      throw InvalidData("rook data needs n >= 1");
    }
    std::vector<std::string> generators;
    for (std::size_t j = 1; j < n; ++j) {
      generators.push_back("s" + std::to_string(j));
    }
    CoxeterGraph graph(generators);
    for (std::size_t j = 0; j + 2 < n; ++j) {
      graph.add_edge(j, j + 1, 3);
    }
    std::vector<std::string>                         names;
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back("e" + std::to_string(i));
      if (i > 0) {
        covers.emplace_back(i - 1, i);
      }
    }
    RennerData data{std::move(graph), CrossSectionLattice(names, covers), {}, {}};
    for (std::size_t i = 0; i < n; ++i) {
      GeneratorSet lower;
      GeneratorSet upper;
      for (std::size_t j = 1; j < n; ++j) {
        if (j > i) {
          lower.insert(j - 1);
        } else if (j < i) {
          upper.insert(j - 1);
        }
      }
      data.lambda_star_lower.push_back(lower);
      data.lambda_star_upper.push_back(upper);
    }
    return data;
  }

  std::size_t rook_rank(RennerData const& data) {
    std::size_t const n = data.lattice.size();
    if (n == 0 || data.graph.rank() + 1 != n) {
      return 0;
    }
    return data == rook_data(n) ? n : 0;
  }

  RookElement RookElement::identity(std::size_t n) {
    return idempotent(n, n);
  }

  RookElement RookElement::transposition(std::size_t n, std::size_t i) {
    RookElement result = identity(n);
    result.set(i, i, 0);
    result.set(i + 1, i + 1, 0);
    result.set(i, i + 1, 1);
    result.set(i + 1, i, 1);
    return result;
  }

  RookElement RookElement::idempotent(std::size_t n, std::size_t k) {
    RookElement result(n);
    for (std::size_t i = 0; i < k; ++i) {
      result.set(i, i, 1);
    }
    return result;
  }

  bool RookElement::is_partial_permutation() const {
    for (std::size_t i = 0; i < n_; ++i) {
      unsigned row = 0;
      unsigned col = 0;
      for (std::size_t j = 0; j < n_; ++j) {
        if (at(i, j) > 1 || at(j, i) > 1) {
          return false;
        }
        row += at(i, j);
        col += at(j, i);
      }
      if (row > 1 || col > 1) {
        return false;
      }
    }
    return true;
  }

  std::size_t RookElement::rank() const {
    std::size_t result = 0;
    for (auto x : entries_) {
      result += x;
    }
    return result;
  }

  RookElement operator*(RookElement const& a, RookElement const& b) {
    RookElement result(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) {
      for (std::size_t k = 0; k < a.n_; ++k) {
        if (a.at(i, k) == 0) {
          continue;
        }
        for (std::size_t j = 0; j < a.n_; ++j) {
          result.entries_[i * a.n_ + j] += static_cast<std::uint8_t>(a.at(i, k) * b.at(k, j));
        }
      }
    }
    return result;
  }

  std::string RookElement::to_string() const {
    std::string result;
    for (std::size_t i = 0; i < n_; ++i) {
      result += i == 0 ? "(" : "; ";
      for (std::size_t j = 0; j < n_; ++j) {
        result += j == 0 ? "" : " ";
        result += static_cast<char>('0' + at(i, j));
      }
    }
    return n_ == 0 ? "()" : result + ")";
  }

  namespace {
    RookElement permutation(CoxeterGroup const& group, std::size_t n, GroupElement w) {
      RookElement result = RookElement::identity(n);
      for (auto s : group.word(w)) {
        result = result * RookElement::transposition(n, s);
      }
      return result;
    }
  }  // namespace

  RookElement to_matrix(RennerMonoid const& m, RennerElement const& r) {
    std::size_t const n = rook_rank(m.data());
    if (n == 0) {
      throw WrongCatalog("to_matrix needs a monoid built from rook data");
    }
    auto const& g = m.group();
    if (r.is_unit()) {
      return permutation(g, n, r.w1);
    }
    return permutation(g, n, r.w1) * RookElement::idempotent(n, r.e)
           * permutation(g, n, r.w2);
  }

}  // namespace renner
