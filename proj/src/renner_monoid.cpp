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

#include "renner/renner_monoid.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "renner/errors.hpp"
#include "renner/notation.hpp"

namespace renner {

  ////////////////////////////////////////////////////////////////////////
  // CrossSectionLattice
  ////////////////////////////////////////////////////////////////////////

  CrossSectionLattice::CrossSectionLattice(
      std::vector<std::string>                         names,
      std::vector<std::pair<std::size_t, std::size_t>> covers)
      : names_(std::move(names)) {
    std::size_t const n = names_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (names_[i].empty()) {
        throw InvalidData("empty lattice element label");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (names_[i] == names_[j]) {
          throw InvalidData("duplicate lattice element label '" + names_[i] + "'");
        }
      }
    }
    leq_.assign(n * n, false);
    for (std::size_t i = 0; i < n; ++i) {
      leq_[i * n + i] = true;
    }
    for (auto [a, b] : covers) {
      if (a >= n || b >= n) {
        throw InvalidData("order pair refers to an unknown lattice element");
      }
      leq_[a * n + b] = true;
    }
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!leq_[i * n + k]) {
          continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
          if (leq_[k * n + j]) {
            leq_[i * n + j] = true;
          }
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (leq_[i * n + j] && leq_[j * n + i]) {
          throw InvalidData("order relation has a cycle through '" + names_[i] + "' and '"
                            + names_[j] + "'");
        }
      }
    }

    meet_.assign(n * n, kNoMeet);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t g = 0; g < n; ++g) {
          if (!leq(g, a) || !leq(g, b)) {
            continue;
          }
          bool greatest = true;
          for (std::size_t h = 0; h < n && greatest; ++h) {
            if (leq(h, a) && leq(h, b) && !leq(h, g)) {
              greatest = false;
            }
          }
          if (greatest) {
            meet_[a * n + b] = g;
            break;
          }
        }
      }
    }

    // Elements sorted by the size of their down-set form a linear extension.
    std::vector<std::size_t> order(n);
    std::vector<std::size_t> below(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      order[i] = i;
      for (std::size_t j = 0; j < n; ++j) {
        below[i] += leq(j, i) ? 1 : 0;
      }
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return below[a] < below[b];
    });
    height_.assign(n, 0);
    for (auto e : order) {
      for (std::size_t h = 0; h < n; ++h) {
        if (h != e && leq(h, e)) {
          height_[e] = std::max(height_[e], height_[h] + 1);
        }
      }
    }
  }

  std::optional<std::size_t> CrossSectionLattice::index_of(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - names_.begin());
  }

  bool CrossSectionLattice::is_meet_semilattice() const noexcept {
    return std::find(meet_.begin(), meet_.end(), kNoMeet) == meet_.end();
  }

  std::vector<std::pair<std::size_t, std::size_t>> CrossSectionLattice::hasse_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> result;
    std::size_t const                                n = size();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (a == b || !leq(a, b)) {
          continue;
        }
        bool cover = true;
        for (std::size_t c = 0; c < n && cover; ++c) {
          if (c != a && c != b && leq(a, c) && leq(c, b)) {
            cover = false;
          }
        }
        if (cover) {
          result.emplace_back(a, b);
        }
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Validation
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::string set_to_string(CoxeterGraph const& graph, GeneratorSet set) {
      std::string result = "{";
      for (auto s : set.members()) {
        if (result.size() > 1) {
          result += ", ";
        }
        result += graph.name(s);
      }
      return result + "}";
    }

    bool check_shape(RennerData const& data, ValidationReport& report) {
      std::size_t const n    = data.lattice.size();
      auto const        full = GeneratorSet::all(data.graph.rank());
      if (data.lambda_star_lower.size() != n || data.lambda_star_upper.size() != n) {
        report.violations.push_back(
            {ViolationKind::shape, "type maps must have one entry per lattice element"});
        return false;
      }
      bool ok = true;
      for (std::size_t e = 0; e < n; ++e) {
        if (!data.lambda_star_lower[e].is_subset_of(full)
            || !data.lambda_star_upper[e].is_subset_of(full)) {
          report.violations.push_back({ViolationKind::shape,
                                       "type of " + data.lattice.name(e)
                                           + " uses an undeclared generator"});
          ok = false;
        }
      }
      return ok;
    }

    // Everything after the shape check; `group` must be W(data.graph).
    void validate_with_group(RennerData const&   data,
                             CoxeterGroup const& group,
                             ValidationReport&   report) {
      auto const&       lattice = data.lattice;
      auto const&       graph   = data.graph;
      std::size_t const n       = lattice.size();

      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
          if (lattice.meet(a, b) == CrossSectionLattice::kNoMeet) {
            report.violations.push_back({ViolationKind::not_semilattice,
                                         lattice.name(a) + " and " + lattice.name(b)
                                             + " have no greatest lower bound"});
          }
        }
      }

      for (std::size_t e = 0; e < n; ++e) {
        auto const lower = data.lambda_star_lower[e];
        auto const upper = data.lambda_star_upper[e];
        if (graph.touches(lower, upper)) {
          report.violations.push_back(
              {ViolationKind::types_touch,
               "lambda_lower(" + lattice.name(e) + ") = " + set_to_string(graph, lower)
                   + " and lambda_upper(" + lattice.name(e) + ") = "
                   + set_to_string(graph, upper) + " are connected in the graph"});
        }
      }

      for (std::size_t e = 0; e < n; ++e) {
        for (std::size_t f = 0; f < n; ++f) {
          if (e == f || !lattice.leq(e, f)) {
            continue;
          }
          if (!data.lambda_star_lower[f].is_subset_of(data.lambda_star_lower[e])) {
            report.violations.push_back(
                {ViolationKind::lower_not_antitone,
                 lattice.name(e) + " <= " + lattice.name(f) + " but lambda_lower("
                     + lattice.name(f) + ") is not contained in lambda_lower("
                     + lattice.name(e) + ")"});
          }
          if (!data.lambda_star_upper[e].is_subset_of(data.lambda_star_upper[f])) {
            report.violations.push_back(
                {ViolationKind::upper_not_monotone,
                 lattice.name(e) + " <= " + lattice.name(f) + " but lambda_upper("
                     + lattice.name(e) + ") is not contained in lambda_upper("
                     + lattice.name(f) + ")"});
          }
        }
      }

      for (std::size_t e = 0; e < n; ++e) {
        for (std::size_t f = 0; f < n; ++f) {
          auto const le = data.lambda(e);
          auto const lf = data.lambda(f);
          for (std::size_t i = 0; i < group.size(); ++i) {
            auto const w = group.element(i);
            if ((group.left_descents(w) & le).empty() == false
                || (group.right_descents(w) & lf).empty() == false) {
              continue;
            }
            ++report.reduced_checked;
            auto const               supp = group.support(w);
            std::vector<std::size_t> candidates;
            for (std::size_t h = 0; h < n; ++h) {
              if (lattice.leq(h, e) && lattice.leq(h, f) && supp.is_subset_of(data.lambda(h))) {
                candidates.push_back(h);
              }
            }
            bool found = false;
            for (auto g : candidates) {
              if (std::all_of(candidates.begin(), candidates.end(), [&](std::size_t h) {
                    return lattice.leq(h, g);
                  })) {
                found = true;
                break;
              }
            }
            if (!found) {
              report.violations.push_back(
                  {ViolationKind::no_greatest,
                   "no greatest h <= " + lattice.name(e) + ", " + lattice.name(f)
                       + " with supp(w) in lambda(h), for w = "
                       + (group.length(w) == 0 ? std::string("1") : group.to_string(w))});
            }
          }
        }
      }
    }
  }  // namespace

  ValidationReport validate_data(RennerData const& data, std::size_t cap) {
    ValidationReport report;
    if (!check_shape(data, report)) {
      return report;
    }
    CoxeterGroup const group(data.graph, cap);
    validate_with_group(data, group, report);
    return report;
  }

  std::string to_string(LengthChange change) {
    switch (change) {
      case LengthChange::up:
        return "length-up";
      case LengthChange::fixed:
        return "length-fixed";
      case LengthChange::down:
        return "length-down";
    }
    return "?";
  }

  ////////////////////////////////////////////////////////////////////////
  // RennerMonoid
  ////////////////////////////////////////////////////////////////////////

  RennerMonoid::RennerMonoid(RennerData data, std::size_t group_cap, bool validate)
      : data_(std::move(data)), group_(data_.graph, group_cap) {
    ValidationReport report;
    if (!check_shape(data_, report)) {
      throw InvalidData(report.violations.front().message);
    }
    if (validate) {
      validate_with_group(data_, group_, report);
      if (!report.valid()) {
        throw InvalidData(report.violations.front().message);
      }
    }
  }

  bool RennerMonoid::is_normal(RennerElement const& r) const {
    if (r.w1.index() >= group_.size() || r.w2.index() >= group_.size()) {
      return false;
    }
    if (r.is_unit()) {
      return r.w2 == group_.identity();
    }
    if (r.e >= lattice().size()) {
      return false;
    }
    return (group_.right_descents(r.w1) & lambda_lower(r.e)).empty()
           && (group_.left_descents(r.w2) & lambda(r.e)).empty();
  }

  std::size_t RennerMonoid::meet_with_witness(std::size_t e, std::size_t f, GroupElement w) const {
    if (!group_.is_reduced_pair(w, lambda(f), lambda(e))) {
      throw NotReduced(group_.to_string(w) + " is not minimal in its (" + lattice().name(e)
                       + ", " + lattice().name(f) + ") double coset");
    }
    auto const               supp = group_.support(w);
    std::vector<std::size_t> candidates;
    for (std::size_t h = 0; h < lattice().size(); ++h) {
      if (lattice().leq(h, e) && lattice().leq(h, f) && supp.is_subset_of(lambda(h))) {
        candidates.push_back(h);
      }
    }
    for (auto g : candidates) {
      if (std::all_of(candidates.begin(), candidates.end(), [&](std::size_t h) {
            return lattice().leq(h, g);
          })) {
        return g;
      }
    }
    throw NoGreatestElement("no greatest element for " + lattice().name(e) + " meet "
                            + lattice().name(f) + " with witness " + group_.to_string(w));
  }

  // x e y = x p e y' with y = p y', p in W_lambda(e) (p commutes with e up to
  // the absorbed lambda_lower part); then strip lambda_lower from x p.
  RennerElement RennerMonoid::normalize(GroupElement w1, std::size_t e, GroupElement w2) const {
    auto const [y, p] = group_.coset_reduce(w2, lambda(e), Side::left);
    auto const x      = group_.coset_reduce(group_.multiply(w1, p), lambda_lower(e), Side::right);
    return RennerElement::singular(x.reduced, e, y);
  }

  RennerElement RennerMonoid::multiply(RennerElement const& a, RennerElement const& b) const {
    if (a.is_unit() && b.is_unit()) {
      return RennerElement::unit(group_.multiply(a.w1, b.w1));
    }
    if (a.is_unit()) {
      return normalize(group_.multiply(a.w1, b.w1), b.e, b.w2);
    }
    if (b.is_unit()) {
      return normalize(a.w1, a.e, group_.multiply(a.w2, b.w1));
    }
    // w2 v1 = l d r with l in W_lambda(e), r in W_lambda(f).  The
    // lambda_lower parts of l and r commute past their upper parts and are
    // absorbed by h = e meet_d f, so e w2 v1 f = l h r.
    auto const u  = group_.multiply(a.w2, b.w1);
    auto const dc = group_.double_coset_reduce(u, lambda(a.e), lambda(b.e));
    auto const h  = meet_with_witness(a.e, b.e, dc.reduced);
    return normalize(group_.multiply(a.w1, dc.left), h, group_.multiply(dc.right, b.w2));
  }

  std::vector<Letter> RennerMonoid::minimal_word(RennerElement const& r) const {
    std::vector<Letter> result;
    for (auto s : group_.word(r.w1)) {
      result.push_back(Letter::generator(s));
    }
    if (!r.is_unit()) {
      result.push_back(Letter::idempotent(r.e));
      for (auto s : group_.word(r.w2)) {
        result.push_back(Letter::generator(s));
      }
    }
    return result;
  }

  RennerElement RennerMonoid::evaluate(std::vector<Letter> const& word) const {
    RennerElement result = one();
    for (auto x : word) {
      result = multiply(result, x);
    }
    return result;
  }

  MatsumotoCase RennerMonoid::matsumoto_case(RennerElement const& r, Letter x, Side side) const {
    MatsumotoCase result;
    result.product = side == Side::left ? multiply(x, r) : multiply(r, x);
    auto const before = length(r);
    auto const after  = length(result.product);
    result.change     = after > before   ? LengthChange::up
                        : after < before ? LengthChange::down
                                         : LengthChange::fixed;
    if (x.kind != Letter::Kind::generator || r.is_unit()) {
      return result;
    }
    auto const as_generator = [&](GroupElement g) -> std::optional<std::size_t> {
      if (group_.length(g) != 1) {
        return std::nullopt;
      }
      return group_.word(g)[0];
    };
    auto const s = group_.generator(x.index);
    if (side == Side::left) {
      if (result.change == LengthChange::fixed) {
        result.witness = as_generator(group_.multiply(group_.inverse(r.w1), group_.multiply(s, r.w1)));
      }
      return result;
    }
    if (result.change == LengthChange::fixed) {
      result.witness = as_generator(group_.multiply(group_.multiply(r.w2, s), group_.inverse(r.w2)));
    } else if (result.product.w1 != r.w1) {
      result.through_idempotent = true;
      result.witness = as_generator(group_.multiply(group_.inverse(r.w1), result.product.w1));
    }
    return result;
  }

  bool RennerMonoid::display_less(RennerElement const& a, RennerElement const& b) const {
    auto key = [&](RennerElement const& r) {
      if (r.is_unit()) {
        return std::tuple<int, std::size_t, std::size_t, std::uint32_t, std::uint32_t>(
            0, 0, 0, r.w1.index(), 0);
      }
      // Higher lattice elements first.
      std::size_t const inverted = lattice().size() - lattice().height(r.e);
      return std::tuple<int, std::size_t, std::size_t, std::uint32_t, std::uint32_t>(
          1, inverted, r.e, r.w1.index(), r.w2.index());
    };
    return key(a) < key(b);
  }

  std::vector<RennerElement> RennerMonoid::normal_forms() const {
    std::vector<RennerElement> result;
    for (std::size_t i = 0; i < group_.size(); ++i) {
      result.push_back(RennerElement::unit(group_.element(i)));
    }
    for (std::size_t e = 0; e < lattice().size(); ++e) {
      std::vector<GroupElement> left;
      std::vector<GroupElement> right;
      for (std::size_t i = 0; i < group_.size(); ++i) {
        auto const w = group_.element(i);
        if ((group_.right_descents(w) & lambda_lower(e)).empty()) {
          left.push_back(w);
        }
        if ((group_.left_descents(w) & lambda(e)).empty()) {
          right.push_back(w);
        }
      }
      for (auto w1 : left) {
        for (auto w2 : right) {
          result.push_back(RennerElement::singular(w1, e, w2));
        }
      }
    }
    std::sort(result.begin(), result.end(), [this](auto const& a, auto const& b) {
      return display_less(a, b);
    });
    return result;
  }

  ElementTable RennerMonoid::enumerate(std::size_t cap) const {
    std::vector<Letter> letters;
    for (std::size_t s = 0; s < rank(); ++s) {
      letters.push_back(Letter::generator(s));
    }
    for (std::size_t e = 0; e < lattice().size(); ++e) {
      letters.push_back(Letter::idempotent(e));
    }
    std::set<RennerElement>    seen{one()};
    std::vector<RennerElement> queue{one()};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (auto x : letters) {
        auto const next = multiply(queue[i], x);
        if (seen.insert(next).second) {
          if (seen.size() > cap) {
            throw CapExceeded("monoid has more than " + std::to_string(cap) + " elements");
          }
          queue.push_back(next);
        }
      }
    }
    ElementTable table;
    table.elements = std::move(queue);
    std::sort(table.elements.begin(), table.elements.end(), [this](auto const& a, auto const& b) {
      return display_less(a, b);
    });
    for (std::size_t i = 0; i < table.elements.size(); ++i) {
      if (is_idempotent(table.elements[i])) {
        table.idempotents.push_back(i);
      }
    }
    return table;
  }

  PresentationReport RennerMonoid::verify_presentation() const {
    PresentationReport report;
    auto const         check = [&](bool holds, std::string const& instance) {
      ++report.checked;
      if (!holds) {
        report.failures.push_back(instance);
      }
    };
    auto const& g = data_.graph;
    for (std::size_t s = 0; s < rank(); ++s) {
      check(multiply(generator(s), generator(s)) == one(),
            "involution: " + g.name(s) + " " + g.name(s) + " = 1");
    }
    for (std::size_t s = 0; s < rank(); ++s) {
      for (std::size_t t = s + 1; t < rank(); ++t) {
        unsigned const m   = g.label(s, t);
        RennerElement  lhs = one();
        RennerElement  rhs = one();
        for (unsigned i = 0; i < m; ++i) {
          lhs = multiply(lhs, generator(i % 2 == 0 ? s : t));
          rhs = multiply(rhs, generator(i % 2 == 0 ? t : s));
        }
        check(lhs == rhs, "braid relation of length " + std::to_string(m) + " on "
                              + g.name(s) + ", " + g.name(t));
      }
    }
    for (std::size_t e = 0; e < lattice().size(); ++e) {
      auto const ee = idempotent(e);
      for (auto s : lambda_upper(e).members()) {
        check(multiply(generator(s), ee) == multiply(ee, generator(s)),
              "commuting: " + g.name(s) + " " + lattice().name(e) + " = " + lattice().name(e) + " "
                  + g.name(s));
      }
      for (auto s : lambda_lower(e).members()) {
        check(multiply(generator(s), ee) == ee && multiply(ee, generator(s)) == ee,
              "absorbing: " + g.name(s) + " " + lattice().name(e) + " = " + lattice().name(e) + " "
                  + g.name(s) + " = " + lattice().name(e));
      }
    }
    for (std::size_t e = 0; e < lattice().size(); ++e) {
      for (std::size_t f = 0; f < lattice().size(); ++f) {
        for (std::size_t i = 0; i < group_.size(); ++i) {
          auto const w = group_.element(i);
          if (!group_.is_reduced_pair(w, lambda(f), lambda(e))) {
            continue;
          }
          auto const h   = meet_with_witness(e, f, w);
          auto       lhs = idempotent(e);
          for (auto s : group_.word(w)) {
            lhs = multiply(lhs, generator(s));
          }
          lhs = multiply(lhs, idempotent(f));
          check(lhs == idempotent(h), "meet: " + lattice().name(e) + " ["
                                          + group_.to_string(w) + "] " + lattice().name(f)
                                          + " = " + lattice().name(h) + ", got "
                                          + to_notation(*this, lhs));
        }
      }
    }
    return report;
  }

}  // namespace renner
