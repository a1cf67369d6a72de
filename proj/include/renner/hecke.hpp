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
// The generic Hecke algebra of a Renner monoid over Z[q].

#ifndef RENNER_HECKE_HPP_
#define RENNER_HECKE_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "renner/polynomial.hpp"
#include "renner/renner_monoid.hpp"

namespace renner {

  //! Finitely supported map r -> coefficient; zero coefficients are never stored.
  class HeckeElement {
   public:
    using Terms = std::map<RennerElement, IntPolynomial>;

    HeckeElement() = default;

    static HeckeElement basis(RennerElement const& r, IntPolynomial coefficient = 1) {
      HeckeElement result;
      result.add(r, std::move(coefficient));
      return result;
    }

    void add(RennerElement const& r, IntPolynomial const& coefficient);

    IntPolynomial coefficient(RennerElement const& r) const;
    Terms const&  terms() const noexcept {
      return terms_;
    }
    bool empty() const noexcept {
      return terms_.empty();
    }
    std::size_t size() const noexcept {
      return terms_.size();
    }

    HeckeElement& operator+=(HeckeElement const& other);
    HeckeElement& operator*=(IntPolynomial const& scalar);

    friend HeckeElement operator+(HeckeElement a, HeckeElement const& b) {
      return a += b;
    }
    friend HeckeElement operator*(IntPolynomial const& scalar, HeckeElement h) {
      return h *= scalar;
    }
    friend bool operator==(HeckeElement const&, HeckeElement const&) = default;

   private:
    Terms terms_;
  };

  //! Integer table c(i, j, k) over a fixed element list.
  struct SpecializedTable {
    std::vector<RennerElement> elements;
    std::vector<BigInt>        entries;  // (i * n + j) * n + k

    std::size_t size() const noexcept {
      return elements.size();
    }
    BigInt const& at(std::size_t i, std::size_t j, std::size_t k) const {
      return entries[(i * size() + j) * size() + k];
    }
  };

  //! Products T_{a_i} T_{a_j} for all pairs of a fixed element list.
  struct StructureConstantTable {
    std::vector<RennerElement> elements;
    std::vector<HeckeElement>  products;  // i * n + j

    std::size_t size() const noexcept {
      return elements.size();
    }
    HeckeElement const& product(std::size_t i, std::size_t j) const {
      return products[i * size() + j];
    }
    //! Position of r in `elements`.  Throws std::out_of_range.
    std::size_t index_of(RennerElement const& r) const;

    //! Evaluates every coefficient at q0.
    SpecializedTable specialize(BigInt const& q0) const;
  };

  class HeckeAlgebra {
   public:
    explicit HeckeAlgebra(RennerMonoid const& monoid) : monoid_(&monoid) {}

    RennerMonoid const& monoid() const noexcept {
      return *monoid_;
    }

    HeckeElement one() const {
      return HeckeElement::basis(monoid_->one());
    }
    HeckeElement basis(RennerElement const& r) const {
      return HeckeElement::basis(r);
    }
    HeckeElement generator(Letter x) const {
      return basis(monoid_->letter(x));
    }

    //! T_x * h by the four left rules.
    HeckeElement left_mul_generator(Letter x, HeckeElement const& h) const;
    //! h * T_x by the mirrored rules.
    HeckeElement right_mul_generator(HeckeElement const& h, Letter x) const;

    //! T_{x1} ... T_{xk} * h, folding from the right.
    HeckeElement left_mul_word(std::vector<Letter> const& word, HeckeElement const& h) const;

    //! Expands each basis element of `a` along its minimal word and folds
    //! left rules onto `b`.
    HeckeElement multiply(HeckeElement const& a, HeckeElement const& b) const;
    //! Same product built from right rules only.
    HeckeElement multiply_right_fold(HeckeElement const& a, HeckeElement const& b) const;

    //! All pair products over `elements`, one cell at a time.
    StructureConstantTable structure_constants_serial(std::vector<RennerElement> elements) const;
    //! Same table; cells are computed in parallel when OpenMP is available.
    StructureConstantTable structure_constants(std::vector<RennerElement> elements) const;

    PresentationReport verify_hecke_presentation() const;

   private:
    RennerMonoid const* monoid_;
  };

  //! Terms in display order, e.g. "q * [1] + (q-1) * [s1]"; "0" if empty.
  std::string to_string(RennerMonoid const& m, HeckeElement const& h);

  //! One line per nonzero entry: r TAB r' TAB r'' TAB coefficient, rows in
  //! the order of `table.elements`.
  void write_table(std::ostream& out, RennerMonoid const& m, StructureConstantTable const& table);
  void write_table(std::ostream& out, RennerMonoid const& m, SpecializedTable const& table);

}  // namespace renner

#endif  // RENNER_HECKE_HPP_
