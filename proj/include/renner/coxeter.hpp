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
// Finite Coxeter groups given by a labelled graph.  Every element is stored
// by index; indices follow the shortlex order of the canonical (shortlex
// minimal) reduced words, so index 0 is the identity.

#ifndef RENNER_COXETER_HPP_
#define RENNER_COXETER_HPP_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace renner {

  //! Set of Coxeter generators, stored as a bit mask (rank at most 64).
  class GeneratorSet {
   public:
    static constexpr std::size_t kMaxRank = 64;

    constexpr GeneratorSet() noexcept = default;
    constexpr explicit GeneratorSet(std::uint64_t bits) noexcept : bits_(bits) {}

    static GeneratorSet of(std::initializer_list<std::size_t> generators) {
      GeneratorSet result;
      for (auto s : generators) {
        result.insert(s);
      }
      return result;
    }

    static constexpr GeneratorSet all(std::size_t rank) noexcept {
      return GeneratorSet(rank >= 64 ? ~std::uint64_t{0}
                                     : (std::uint64_t{1} << rank) - 1);
    }

    constexpr bool contains(std::size_t s) const noexcept {
      return s < kMaxRank && ((bits_ >> s) & 1U) != 0;
    }
    constexpr void insert(std::size_t s) noexcept {
      bits_ |= std::uint64_t{1} << s;
    }
    constexpr void erase(std::size_t s) noexcept {
      bits_ &= ~(std::uint64_t{1} << s);
    }
    constexpr bool empty() const noexcept {
      return bits_ == 0;
    }
    constexpr std::size_t count() const noexcept {
      return static_cast<std::size_t>(std::popcount(bits_));
    }
    constexpr bool is_subset_of(GeneratorSet other) const noexcept {
      return (bits_ & ~other.bits_) == 0;
    }
    constexpr std::uint64_t bits() const noexcept {
      return bits_;
    }

    //! Members in increasing order.
    std::vector<std::size_t> members() const;

    friend constexpr GeneratorSet operator|(GeneratorSet a, GeneratorSet b) noexcept {
      return GeneratorSet(a.bits_ | b.bits_);
    }
    friend constexpr GeneratorSet operator&(GeneratorSet a, GeneratorSet b) noexcept {
      return GeneratorSet(a.bits_ & b.bits_);
    }
    friend constexpr auto operator<=>(GeneratorSet, GeneratorSet) = default;

   private:
    std::uint64_t bits_ = 0;
  };

  //! Handle to an element of a CoxeterGroup.
  class GroupElement {
   public:
    constexpr GroupElement() noexcept = default;
    constexpr explicit GroupElement(std::uint32_t index) noexcept : index_(index) {}

    constexpr std::uint32_t index() const noexcept {
      return index_;
    }
    friend constexpr auto operator<=>(GroupElement, GroupElement) = default;

   private:
    std::uint32_t index_ = 0;
  };

  enum class Side { left, right };

  //! Labelled graph: generators are vertices, an edge {s,t} carries m(s,t) >= 3,
  //! and absent edges mean m(s,t) = 2.
  class CoxeterGraph {
   public:
    CoxeterGraph() = default;
    explicit CoxeterGraph(std::vector<std::string> generators);

    std::size_t rank() const noexcept {
      return generators_.size();
    }
    std::string const& name(std::size_t s) const {
      return generators_.at(s);
    }
    std::vector<std::string> const& generators() const noexcept {
      return generators_;
    }
    std::optional<std::size_t> index_of(std::string_view name) const;

    //! Throws MalformedGraph on self-edges, unknown endpoints or labels < 3.
    void add_edge(std::size_t s, std::size_t t, unsigned label);

    //! m(s,t): 1 on the diagonal, 2 for non-adjacent pairs.
    unsigned label(std::size_t s, std::size_t t) const;

    //! Edges keyed by (s, t) with s < t.
    std::map<std::pair<std::size_t, std::size_t>, unsigned> const& edges() const noexcept {
      return edges_;
    }

    //! True if some vertex of `a` is adjacent to, or equal to, a vertex of `b`.
    bool touches(GeneratorSet a, GeneratorSet b) const;

    friend bool operator==(CoxeterGraph const&, CoxeterGraph const&) = default;

   private:
    std::vector<std::string>                             generators_;
    std::map<std::pair<std::size_t, std::size_t>, unsigned> edges_;
  };

  struct CosetDecomposition {
    GroupElement reduced;    // minimal element of the coset
    GroupElement parabolic;  // factor in W_I
  };

  //! w = left * reduced * right with left in W_J, right in W_I.
  struct DoubleCosetDecomposition {
    GroupElement left;
    GroupElement reduced;
    GroupElement right;
  };

  struct DescentData {
    GeneratorSet left_descents;
    GeneratorSet right_descents;
    GeneratorSet support;
  };

  class CoxeterGroup {
   public:
    static constexpr std::size_t kDefaultCap = 20000;

    //! Enumerates W(graph).  Throws CapExceeded if it has more than `cap`
    //! elements, MalformedGraph if the graph is unusable.
    explicit CoxeterGroup(CoxeterGraph graph, std::size_t cap = kDefaultCap);

    CoxeterGraph const& graph() const noexcept {
      return graph_;
    }
    std::size_t rank() const noexcept {
      return rank_;
    }
    std::size_t size() const noexcept {
      return length_.size();
    }

    GroupElement identity() const noexcept {
      return GroupElement(0);
    }
    GroupElement generator(std::size_t s) const {
      return right_multiply(identity(), s);
    }
    GroupElement element(std::size_t index) const;

    GroupElement right_multiply(GroupElement w, std::size_t s) const {
      return GroupElement(right_[w.index() * rank_ + s]);
    }
    GroupElement left_multiply(std::size_t s, GroupElement w) const {
      return GroupElement(left_[w.index() * rank_ + s]);
    }
    GroupElement multiply(GroupElement a, GroupElement b) const;
    GroupElement inverse(GroupElement w) const;

    unsigned length(GroupElement w) const {
      return length_[w.index()];
    }
    //! Canonical reduced word: shortlex minimal over the generator order.
    std::span<std::uint8_t const> word(GroupElement w) const {
      return {words_.data() + word_offset_[w.index()], length_[w.index()]};
    }
    //! Evaluates an arbitrary (not necessarily reduced) word.
    GroupElement from_word(std::span<std::size_t const> letters) const;

    bool is_left_descent(std::size_t s, GroupElement w) const {
      return length(left_multiply(s, w)) < length(w);
    }
    bool is_right_descent(GroupElement w, std::size_t s) const {
      return length(right_multiply(w, s)) < length(w);
    }
    GeneratorSet left_descents(GroupElement w) const;
    GeneratorSet right_descents(GroupElement w) const;
    GeneratorSet support(GroupElement w) const;
    DescentData descent_and_support(GroupElement w) const;

    bool in_parabolic(GroupElement w, GeneratorSet subset) const {
      return support(w).is_subset_of(subset);
    }

    //! side = right: w = reduced * parabolic, reduced minimal in w W_I.
    //! side = left:  w = parabolic * reduced, reduced minimal in W_I w.
    CosetDecomposition coset_reduce(GroupElement w, GeneratorSet subset, Side side) const;

    //! w = left * reduced * right, left in W_J, right in W_I, reduced minimal
    //! in W_J w W_I, with left * reduced minimal in w W_I.
    DoubleCosetDecomposition double_coset_reduce(GroupElement w,
                                                 GeneratorSet  left_subset,
                                                 GeneratorSet  right_subset) const;

    //! True iff w is the minimal element of W_J w W_I.
    bool is_reduced_pair(GroupElement w, GeneratorSet right_subset, GeneratorSet left_subset) const;

    //! Elements of the standard parabolic subgroup W_I.
    std::vector<GroupElement> parabolic_subgroup(GeneratorSet subset) const;

    //! Product s t s ... with `count` letters, starting with s.
    GroupElement alternating(std::size_t s, std::size_t t, unsigned count) const;

    std::string to_string(GroupElement w, std::string_view separator = " ") const;

   private:
    CoxeterGraph               graph_;
    std::size_t                rank_;
    std::vector<std::uint32_t> right_;
    std::vector<std::uint32_t> left_;
    std::vector<unsigned>      length_;
    std::vector<std::uint8_t>  words_;
    std::vector<std::size_t>   word_offset_;
  };

}  // namespace renner

#endif  // RENNER_COXETER_HPP_
