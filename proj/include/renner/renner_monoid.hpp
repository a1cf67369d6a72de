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
// Generalised Renner monoids built from Renner-Coxeter data.  Elements are
// kept in normal form (w1, e, w2): w1 has no right descent in lambda_lower(e)
// and w2 has no left descent in lambda(e).

#ifndef RENNER_RENNER_MONOID_HPP_
#define RENNER_RENNER_MONOID_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "renner/coxeter.hpp"

namespace renner {

  //! The non-identity part of a cross-section lattice, given by a finite
  //! partial order.  The unit 1 is not stored here.
  class CrossSectionLattice {
   public:
    static constexpr std::size_t kNoMeet = std::numeric_limits<std::size_t>::max();

    CrossSectionLattice() = default;
    //! `covers` holds pairs (a, b) meaning a < b; they need not be Hasse
    //! pairs.  Throws InvalidData on unknown indices or on a cycle.
    CrossSectionLattice(std::vector<std::string>                         names,
                        std::vector<std::pair<std::size_t, std::size_t>> covers);

    std::size_t size() const noexcept {
      return names_.size();
    }
    std::string const& name(std::size_t e) const {
      return names_.at(e);
    }
    std::vector<std::string> const& names() const noexcept {
      return names_;
    }
    std::optional<std::size_t> index_of(std::string_view name) const;

    bool leq(std::size_t a, std::size_t b) const {
      return leq_[a * size() + b];
    }
    //! Greatest lower bound or kNoMeet.
    std::size_t meet(std::size_t a, std::size_t b) const {
      return meet_[a * size() + b];
    }
    bool is_meet_semilattice() const noexcept;

    //! Length of the longest chain ending at e.
    std::size_t height(std::size_t e) const {
      return height_.at(e);
    }

    //! Hasse diagram pairs (a, b), a covered by b, sorted.
    std::vector<std::pair<std::size_t, std::size_t>> hasse_pairs() const;

    friend bool operator==(CrossSectionLattice const& a, CrossSectionLattice const& b) {
      return a.names_ == b.names_ && a.leq_ == b.leq_;
    }

   private:
    std::vector<std::string> names_;
    std::vector<bool>        leq_;
    std::vector<std::size_t> meet_;
    std::vector<std::size_t> height_;
  };

  struct RennerData {
    CoxeterGraph              graph;
    CrossSectionLattice       lattice;
    std::vector<GeneratorSet> lambda_star_lower;  // generators acting trivially
    std::vector<GeneratorSet> lambda_star_upper;  // generators commuting with e

    GeneratorSet lambda(std::size_t e) const {
      return lambda_star_lower.at(e) | lambda_star_upper.at(e);
    }

    friend bool operator==(RennerData const&, RennerData const&) = default;
  };

  enum class ViolationKind {
    shape,             // map sizes or generator ranges do not fit
    not_semilattice,   // some pair has no meet
    types_touch,       // lambda_lower(e) and lambda_upper(e) adjacent or shared
    lower_not_antitone,  // e <= f but lambda_lower(f) not in lambda_lower(e)
    upper_not_monotone,  // e <= f but lambda_upper(e) not in lambda_upper(f)
    no_greatest,       // some e w f has no greatest candidate meet
  };

  struct Violation {
    ViolationKind kind;
    std::string   message;
  };

  struct ValidationReport {
    std::vector<Violation> violations;
    std::size_t            reduced_checked = 0;

    bool valid() const noexcept {
      return violations.empty();
    }
  };

  //! Checks the type conditions and the existence of twisted meets.  Throws CapExceeded if W is too large.
  ValidationReport validate_data(RennerData const& data,
                                 std::size_t       cap = CoxeterGroup::kDefaultCap);

  //! Either a unit w (e == kUnit, w2 == identity) or a normal form w1 e w2.
  struct RennerElement {
    static constexpr std::uint32_t kUnit = std::numeric_limits<std::uint32_t>::max();

    GroupElement  w1;
    std::uint32_t e = kUnit;
    GroupElement  w2;

    static RennerElement unit(GroupElement w) {
      return {w, kUnit, GroupElement()};
    }
    static RennerElement singular(GroupElement w1, std::size_t e, GroupElement w2) {
      return {w1, static_cast<std::uint32_t>(e), w2};
    }
    bool is_unit() const noexcept {
      return e == kUnit;
    }

    friend auto operator<=>(RennerElement const&, RennerElement const&) = default;
  };

  //! A generator of the monoid: s in S or e in the lattice.
  struct Letter {
    enum class Kind : std::uint8_t { generator, idempotent };
    Kind        kind;
    std::size_t index;

    static Letter generator(std::size_t s) {
      return {Kind::generator, s};
    }
    static Letter idempotent(std::size_t e) {
      return {Kind::idempotent, e};
    }
    friend auto operator<=>(Letter const&, Letter const&) = default;
  };

  enum class LengthChange { up, fixed, down };

  //! Outcome of multiplying r by one letter.
  struct MatsumotoCase {
    LengthChange  change;
    RennerElement product;
    //! For s in S: the u with s w1 = w1 u (left, fixed) or w2 t = u w2
    //! (right, fixed or up/down through e).  Absent otherwise.
    std::optional<std::size_t> witness;
    //! Right multiplication only: the new element is (w1 u, e, w2).
    bool through_idempotent = false;
  };

  struct PresentationReport {
    std::size_t              checked = 0;
    std::vector<std::string> failures;

    bool ok() const noexcept {
      return failures.empty();
    }
  };

  struct ElementTable {
    std::vector<RennerElement> elements;    // display order
    std::vector<std::size_t>   idempotents;  // indices into elements
  };

  class RennerMonoid {
   public:
    static constexpr std::size_t kDefaultElementCap = 1'000'000;

    //! Validates the data first unless `validate` is false.  Throws
    //! InvalidData with the first violation.
    explicit RennerMonoid(RennerData  data,
                          std::size_t group_cap = CoxeterGroup::kDefaultCap,
                          bool        validate  = true);

    RennerData const& data() const noexcept {
      return data_;
    }
    CoxeterGroup const& group() const noexcept {
      return group_;
    }
    CrossSectionLattice const& lattice() const noexcept {
      return data_.lattice;
    }
    std::size_t rank() const noexcept {
      return group_.rank();
    }

    GeneratorSet lambda(std::size_t e) const {
      return data_.lambda(e);
    }
    GeneratorSet lambda_lower(std::size_t e) const {
      return data_.lambda_star_lower[e];
    }
    GeneratorSet lambda_upper(std::size_t e) const {
      return data_.lambda_star_upper[e];
    }

    RennerElement one() const {
      return RennerElement::unit(group_.identity());
    }
    RennerElement generator(std::size_t s) const {
      return RennerElement::unit(group_.generator(s));
    }
    RennerElement idempotent(std::size_t e) const {
      return RennerElement::singular(group_.identity(), e, group_.identity());
    }
    RennerElement letter(Letter x) const {
      return x.kind == Letter::Kind::generator ? generator(x.index) : idempotent(x.index);
    }

    //! True iff the triple satisfies both reducedness conditions.
    bool is_normal(RennerElement const& r) const;

    //! e meet_w f.  Throws NotReduced unless w is minimal in
    //! W_lambda(e) w W_lambda(f); NoGreatestElement if no maximum exists.
    std::size_t meet_with_witness(std::size_t e, std::size_t f, GroupElement w) const;

    //! Normal form of w1 e w2 for an arbitrary triple.
    RennerElement normalize(GroupElement w1, std::size_t e, GroupElement w2) const;

    RennerElement multiply(RennerElement const& a, RennerElement const& b) const;
    RennerElement multiply(Letter x, RennerElement const& r) const {
      return multiply(letter(x), r);
    }
    RennerElement multiply(RennerElement const& r, Letter x) const {
      return multiply(r, letter(x));
    }

    unsigned length(RennerElement const& r) const {
      return r.is_unit() ? group_.length(r.w1) : group_.length(r.w1) + group_.length(r.w2);
    }

    //! Word for w1, then e, then w2; its weighted length is length(r).
    std::vector<Letter> minimal_word(RennerElement const& r) const;
    RennerElement       evaluate(std::vector<Letter> const& word) const;

    MatsumotoCase matsumoto_case(RennerElement const& r, Letter x, Side side) const;

    //! All triples satisfying the normal-form conditions, in display order.
    std::vector<RennerElement> normal_forms() const;

    //! Closure of the generators under multiplication, in display order.
    ElementTable enumerate(std::size_t cap = kDefaultElementCap) const;

    bool is_idempotent(RennerElement const& r) const {
      return multiply(r, r) == r;
    }

    PresentationReport verify_presentation() const;

    //! Units, then idempotent classes by decreasing height and index, then
    //! (w1, w2) by group index.
    bool display_less(RennerElement const& a, RennerElement const& b) const;

   private:
    RennerData   data_;
    CoxeterGroup group_;
  };

  std::string to_string(LengthChange change);

}  // namespace renner

#endif  // RENNER_RENNER_MONOID_HPP_
