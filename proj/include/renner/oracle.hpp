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
// Brute-force ground truth inside M_n(F_p): Borel double cosets, coset
// products, and the structure constants of the double-coset basis of the
// convolution algebra, all with exact arithmetic.

#ifndef RENNER_ORACLE_HPP_
#define RENNER_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "renner/catalog.hpp"
#include "renner/hecke.hpp"
#include "renner/renner_monoid.hpp"

namespace renner {

  using Rational = boost::multiprecision::cpp_rational;

  class PrimeField {
   public:
    //! Throws NotPrime.
    explicit PrimeField(unsigned p);

    unsigned p() const noexcept {
      return p_;
    }
    unsigned add(unsigned a, unsigned b) const noexcept {
      return (a + b) % p_;
    }
    unsigned mul(unsigned a, unsigned b) const noexcept {
      return (a * b) % p_;
    }
    unsigned neg(unsigned a) const noexcept {
      return (p_ - a) % p_;
    }
    //! a must be nonzero.
    unsigned inv(unsigned a) const;

   private:
    unsigned p_;
  };

  //! All n x n matrices over F_p, indexed by their base-p digit string
  //! (entry (i, j) is digit i * n + j).
  class FiniteMatrixMonoid {
   public:
    static constexpr std::size_t kDefaultCap = 2'000'000;
    static constexpr std::size_t kMaxN       = 4;

    //! Throws NotPrime, CapExceeded (p^(n^2) > cap or n > 4).
    FiniteMatrixMonoid(std::size_t n, unsigned p, std::size_t cap = kDefaultCap);

    std::size_t n() const noexcept {
      return n_;
    }
    PrimeField const& field() const noexcept {
      return field_;
    }
    std::size_t size() const noexcept {
      return size_;
    }

    std::uint8_t entry(std::uint32_t x, std::size_t i, std::size_t j) const {
      return digits_[static_cast<std::size_t>(x) * n_ * n_ + i * n_ + j];
    }
    std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t encode(std::vector<unsigned> const& entries) const;
    std::uint32_t from_rook(RookElement const& r) const;
    std::uint32_t identity() const;

    bool is_invertible(std::uint32_t x) const;
    std::size_t unit_count() const;

    //! Invertible upper-triangular matrices, sorted.
    std::vector<std::uint32_t> const& borel() const noexcept {
      return borel_;
    }

    std::string to_string(std::uint32_t x) const;

   private:
    std::size_t                n_;
    PrimeField                 field_;
    std::size_t                size_;
    std::vector<std::uint8_t>  digits_;
    std::vector<std::uint32_t> place_;  // p^k
    std::vector<std::uint32_t> borel_;
  };

  struct BruhatDecomposition {
    std::vector<RennerElement>              elements;         // rook display order
    std::vector<std::uint32_t>              representatives;  // to_matrix(r)
    std::vector<std::vector<std::uint32_t>> cosets;           // B r B, sorted
    std::vector<std::uint32_t>              owner;            // matrix -> coset

    std::vector<std::size_t> sizes() const;
  };

  //! Throws CoverFailure unless the cosets partition M.
  BruhatDecomposition bruhat_decompose(FiniteMatrixMonoid const& mm, RennerMonoid const& rook);

  struct CosetCheckReport {
    std::size_t              checked = 0;
    std::vector<std::string> failures;
    // Failure counts per family: left s, right s, left e, right e.
    std::size_t left_s = 0;
    std::size_t right_s = 0;
    std::size_t left_e = 0;
    std::size_t right_e = 0;

    bool ok() const noexcept {
      return failures.empty();
    }
  };

  //! Coset indices making up the set B x B y B.
  std::vector<std::size_t> coset_product(FiniteMatrixMonoid const&  mm,
                                         BruhatDecomposition const& bd,
                                         std::size_t                i,
                                         std::size_t                j);

  CosetCheckReport coset_product_check(FiniteMatrixMonoid const&  mm,
                                       RennerMonoid const&        rook,
                                       BruhatDecomposition const& bd);

  struct RationalConstantTable {
    std::vector<RennerElement>    elements;
    std::vector<Rational>         normalization;  // a_r = p^l(r) / |BrB|
    std::vector<std::uint32_t>    representatives;
    std::vector<std::uint64_t>    pair_counts;    // (i * n + j) * n + k
    std::vector<Rational>         mu;             // same layout

    std::size_t size() const noexcept {
      return elements.size();
    }
    Rational const& at(std::size_t i, std::size_t j, std::size_t k) const {
      return mu[(i * size() + j) * size() + k];
    }
  };

  //! Representatives x_k: to_matrix(r_k) when `seed` is empty, otherwise a
  //! uniformly random element of each coset.
  RationalConstantTable iwahori_structure_constants_serial(
      FiniteMatrixMonoid const&    mm,
      RennerMonoid const&          rook,
      BruhatDecomposition const&   bd,
      std::optional<std::uint64_t> seed = std::nullopt);

  //! Same table, (i, j) cells in parallel when OpenMP is available.
  RationalConstantTable iwahori_structure_constants(
      FiniteMatrixMonoid const&    mm,
      RennerMonoid const&          rook,
      BruhatDecomposition const&   bd,
      std::optional<std::uint64_t> seed = std::nullopt);

  void write_table(std::ostream& out, RennerMonoid const& m, RationalConstantTable const& table);

  struct ComparisonReport {
    std::size_t              entries      = 0;
    std::size_t              matches      = 0;
    std::size_t              non_integral = 0;
    std::vector<std::string> mismatches;  // first few, with context

    bool ok() const noexcept {
      return entries == matches && non_integral == 0;
    }
    std::string summary() const;
  };

  //! Compares mu with the generic table specialised at q = p, entrywise.
  ComparisonReport compare_tables(RennerMonoid const&          rook,
                                  RationalConstantTable const& oracle,
                                  SpecializedTable const&      generic,
                                  std::size_t                  max_reported = 5);

  //! Builds everything for (n, p) and compares.
  ComparisonReport compare_with_generic(std::size_t n, unsigned p,
                                        std::size_t cap = FiniteMatrixMonoid::kDefaultCap);

  //! Sparse rational function on M.
  using MonoidFunction = std::map<std::uint32_t, Rational>;

  MonoidFunction convolve(FiniteMatrixMonoid const& mm,
                          MonoidFunction const&     f,
                          MonoidFunction const&     g);

  //! Uniform function 1/|B| on B.
  MonoidFunction borel_idempotent(FiniteMatrixMonoid const& mm);

  //! Weighted distance from the identity in the right Cayley graph of
  //! partial permutation matrices: transpositions weigh 1, diag(1^i, 0^(n-i))
  //! weighs 0.
  std::map<RookElement, unsigned> length_oracle(std::size_t n);

}  // namespace renner

#endif  // RENNER_ORACLE_HPP_
