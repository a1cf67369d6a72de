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
// Built-in data sets: the rook monoid family and its matrix realisation.

#ifndef RENNER_CATALOG_HPP_
#define RENNER_CATALOG_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "renner/renner_monoid.hpp"

namespace renner {

  //! Type A_{n-1} graph s1 - s2 - ... - s{n-1}, lattice e0 < ... < e{n-1},
  //! lambda_lower(e_i) = {s_j : j > i}, lambda_upper(e_i) = {s_j : j < i}.
  RennerData rook_data(std::size_t n);

  //! The n with data == rook_data(n), or 0.
  std::size_t rook_rank(RennerData const& data);

  //! n x n matrix with entries in {0, 1}, row major.
  class RookElement {
   public:
    RookElement() = default;
    explicit RookElement(std::size_t n) : n_(n), entries_(n * n, 0) {}

    static RookElement identity(std::size_t n);
    //! Permutation matrix of (i, i+1), 0-based i.
    static RookElement transposition(std::size_t n, std::size_t i);
    //! diag(1^k, 0^(n-k)).
    static RookElement idempotent(std::size_t n, std::size_t k);

    std::size_t n() const noexcept {
      return n_;
    }
    std::uint8_t at(std::size_t row, std::size_t col) const {
      return entries_[row * n_ + col];
    }
    void set(std::size_t row, std::size_t col, std::uint8_t value) {
      entries_[row * n_ + col] = value;
    }
    //! Row and column sums at most 1.
    bool is_partial_permutation() const;
    std::size_t rank() const;

    //! Ordinary matrix product (entries stay 0/1 for partial permutations).
    friend RookElement operator*(RookElement const& a, RookElement const& b);
    friend auto operator<=>(RookElement const&, RookElement const&) = default;

    std::string to_string() const;

   private:
    std::size_t               n_ = 0;
    std::vector<std::uint8_t> entries_;
  };

  //! perm(w1) diag(1^i, 0^(n-i)) perm(w2); perm(w) has 1 at (w(j), j).
  //! Throws WrongCatalog unless m was built from rook data.
  RookElement to_matrix(RennerMonoid const& m, RennerElement const& r);

}  // namespace renner

#endif  // RENNER_CATALOG_HPP_
