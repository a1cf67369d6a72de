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

#include "renner/hecke.hpp"

#include <algorithm>
#include <stdexcept>

#include "renner/notation.hpp"

namespace renner {

  ////////////////////////////////////////////////////////////////////////
  // HeckeElement
  ////////////////////////////////////////////////////////////////////////

  void HeckeElement::add(RennerElement const& r, IntPolynomial const& coefficient) {
    if (coefficient.is_zero()) {
      return;
    }
    auto [it, inserted] = terms_.try_emplace(r, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second.is_zero()) {
        terms_.erase(it);
      }
    }
  }

  IntPolynomial HeckeElement::coefficient(RennerElement const& r) const {
    auto it = terms_.find(r);
    return it == terms_.end() ? IntPolynomial() : it->second;
  }

  HeckeElement& HeckeElement::operator+=(HeckeElement const& other) {
    for (auto const& [r, c] : other.terms_) {
      add(r, c);
    }
    return *this;
  }

  HeckeElement& HeckeElement::operator*=(IntPolynomial const& scalar) {
    if (scalar.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [r, c] : terms_) {
      c *= scalar;
    }
    return *this;
  }

  ////////////////////////////////////////////////////////////////////////
  // HeckeAlgebra
  ////////////////////////////////////////////////////////////////////////

  namespace {
    IntPolynomial q_power(unsigned before, unsigned after) {
      if (after > before) {
        throw std::logic_error("idempotent rule produced a negative exponent");
      }
      return IntPolynomial::monomial(before - after);
    }

    // Shared by both sides: r is the old basis element, xr its product with x.
    void apply_rule(HeckeElement&        out,
                    RennerMonoid const&  m,
                    Letter               x,
                    RennerElement const& r,
                    RennerElement const& xr,
                    IntPolynomial const& c) {
      auto const before = m.length(r);
      auto const after  = m.length(xr);
      if (x.kind == Letter::Kind::idempotent) {
        out.add(xr, c * q_power(before, after));
      } else if (after == before + 1) {
        out.add(xr, c);
      } else if (after == before) {
        out.add(r, c * IntPolynomial::q());
      } else {
        out.add(r, c * (IntPolynomial::q() - 1));
        out.add(xr, c * IntPolynomial::q());
      }
    }
  }  // namespace

  HeckeElement HeckeAlgebra::left_mul_generator(Letter x, HeckeElement const& h) const {
    HeckeElement result;
    for (auto const& [r, c] : h.terms()) {
      apply_rule(result, *monoid_, x, r, monoid_->multiply(x, r), c);
    }
    return result;
  }

  HeckeElement HeckeAlgebra::right_mul_generator(HeckeElement const& h, Letter x) const {
    HeckeElement result;
    for (auto const& [r, c] : h.terms()) {
      apply_rule(result, *monoid_, x, r, monoid_->multiply(r, x), c);
    }
    return result;
  }

  HeckeElement HeckeAlgebra::left_mul_word(std::vector<Letter> const& word,
                                           HeckeElement const&        h) const {
    HeckeElement result = h;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      result = left_mul_generator(*it, result);
    }
    return result;
  }

  HeckeElement HeckeAlgebra::multiply(HeckeElement const& a, HeckeElement const& b) const {
    HeckeElement result;
    for (auto const& [r, c] : a.terms()) {
      result += c * left_mul_word(monoid_->minimal_word(r), b);
    }
    return result;
  }

  HeckeElement HeckeAlgebra::multiply_right_fold(HeckeElement const& a,
                                                 HeckeElement const& b) const {
    HeckeElement result;
    for (auto const& [r, c] : b.terms()) {
      HeckeElement partial = a;
      for (auto x : monoid_->minimal_word(r)) {
        partial = right_mul_generator(partial, x);
      }
      result += c * partial;
    }
    return result;
  }

  StructureConstantTable HeckeAlgebra::structure_constants_serial(
      std::vector<RennerElement> elements) const {
    StructureConstantTable table{std::move(elements), {}};
    std::size_t const      n = table.size();
    table.products.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      auto const word = monoid_->minimal_word(table.elements[i]);
      for (std::size_t j = 0; j < n; ++j) {
        table.products[i * n + j] = left_mul_word(word, basis(table.elements[j]));
      }
    }
    return table;
  }

  StructureConstantTable HeckeAlgebra::structure_constants(
      std::vector<RennerElement> elements) const {
    StructureConstantTable table{std::move(elements), {}};
    std::size_t const      n = table.size();
    table.products.resize(n * n);
    auto const cells = static_cast<long long>(n * n);
#pragma omp parallel for schedule(dynamic, 16)
    for (long long cell = 0; cell < cells; ++cell) {
      auto const i = static_cast<std::size_t>(cell) / n;
      auto const j = static_cast<std::size_t>(cell) % n;
      table.products[static_cast<std::size_t>(cell)]
          = left_mul_word(monoid_->minimal_word(table.elements[i]), basis(table.elements[j]));
    }
    return table;
  }

  PresentationReport HeckeAlgebra::verify_hecke_presentation() const {
    PresentationReport report;
    auto const&        m     = *monoid_;
    auto const&        g     = m.data().graph;
    auto const&        lat   = m.lattice();
    auto const         check = [&](bool holds, std::string const& instance) {
      ++report.checked;
      if (!holds) {
        report.failures.push_back(instance);
      }
    };
    auto const T  = [&](Letter x) { return generator(x); };
    auto const TT = [&](HeckeElement const& a, HeckeElement const& b) { return multiply(a, b); };
    IntPolynomial const q = IntPolynomial::q();

    for (std::size_t s = 0; s < m.rank(); ++s) {
      auto const Ts       = T(Letter::generator(s));
      auto const expected = (q - 1) * Ts + q * one();
      auto const got      = TT(Ts, Ts);
      check(got == expected, "quadratic: T_" + g.name(s) + "^2 = (q-1)T_" + g.name(s)
                                 + " + qT_1, got " + to_string(m, got));
    }
    for (std::size_t s = 0; s < m.rank(); ++s) {
      for (std::size_t t = s + 1; t < m.rank(); ++t) {
        unsigned const mst = g.label(s, t);
        HeckeElement   lhs = one();
        HeckeElement   rhs = one();
        for (unsigned i = 0; i < mst; ++i) {
          lhs = TT(lhs, T(Letter::generator(i % 2 == 0 ? s : t)));
          rhs = TT(rhs, T(Letter::generator(i % 2 == 0 ? t : s)));
        }
        check(lhs == rhs, "braid relation of length " + std::to_string(mst) + " on T_"
                              + g.name(s) + ", T_" + g.name(t));
      }
    }
    for (std::size_t e = 0; e < lat.size(); ++e) {
      auto const Te = T(Letter::idempotent(e));
      for (auto s : m.lambda_upper(e).members()) {
        auto const Ts = T(Letter::generator(s));
        check(TT(Ts, Te) == TT(Te, Ts),
              "commuting: T_" + g.name(s) + " T_" + lat.name(e) + " = T_" + lat.name(e) + " T_"
                  + g.name(s));
      }
      for (auto s : m.lambda_lower(e).members()) {
        auto const Ts = T(Letter::generator(s));
        check(TT(Ts, Te) == q * Te && TT(Te, Ts) == q * Te,
              "absorbing: T_" + g.name(s) + " T_" + lat.name(e) + " = T_" + lat.name(e) + " T_"
                  + g.name(s) + " = q T_" + lat.name(e));
      }
    }
    auto const& group = m.group();
    for (std::size_t e = 0; e < lat.size(); ++e) {
      for (std::size_t f = 0; f < lat.size(); ++f) {
        for (std::size_t i = 0; i < group.size(); ++i) {
          auto const w = group.element(i);
          if (!group.is_reduced_pair(w, m.lambda(f), m.lambda(e))) {
            continue;
          }
          auto const h   = m.meet_with_witness(e, f, w);
          auto const lhs = TT(TT(T(Letter::idempotent(e)), basis(RennerElement::unit(w))),
                              T(Letter::idempotent(f)));
          auto const rhs = IntPolynomial::monomial(group.length(w)) * T(Letter::idempotent(h));
          check(lhs == rhs, "meet: T_" + lat.name(e) + " T_[" + group.to_string(w) + "] T_"
                                + lat.name(f) + " = q^" + std::to_string(group.length(w))
                                + " T_" + lat.name(h) + ", got " + to_string(m, lhs));
        }
      }
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Tables and output
  ////////////////////////////////////////////////////////////////////////

  std::size_t StructureConstantTable::index_of(RennerElement const& r) const {
    auto it = std::find(elements.begin(), elements.end(), r);
    if (it == elements.end()) {
      throw std::out_of_range("element not in table");
    }
    return static_cast<std::size_t>(it - elements.begin());
  }

  SpecializedTable StructureConstantTable::specialize(BigInt const& q0) const {
    std::size_t const n = size();
    SpecializedTable  result{elements, std::vector<BigInt>(n * n * n)};
    std::map<RennerElement, std::size_t> position;
    for (std::size_t k = 0; k < n; ++k) {
      position.emplace(elements[k], k);
    }
    for (std::size_t cell = 0; cell < n * n; ++cell) {
      for (auto const& [r, c] : products[cell].terms()) {
        auto it = position.find(r);
        if (it == position.end()) {
          throw std::out_of_range("product leaves the element list");
        }
        result.entries[cell * n + it->second] = c.eval_at(q0);
      }
    }
    return result;
  }

  std::string to_string(RennerMonoid const& m, HeckeElement const& h) {
    std::vector<std::pair<RennerElement, IntPolynomial>> terms(h.terms().begin(),
                                                               h.terms().end());
    std::sort(terms.begin(), terms.end(), [&m](auto const& a, auto const& b) {
      return m.display_less(a.first, b.first);
    });
    std::string result;
    for (auto const& [r, c] : terms) {
      if (!result.empty()) {
        result += " + ";
      }
      if (c != IntPolynomial(1)) {
        std::string coefficient = c.to_string();
        bool const  compound    = coefficient.find_first_of("+-", 1) != std::string::npos;
        result += compound ? "(" + coefficient + ")" : coefficient;
        result += " * ";
      }
      result += "[" + to_notation(m, r) + "]";
    }
    return result.empty() ? "0" : result;
  }

  namespace {
    void write_header(std::ostream& out) {
      out << "# r\tr'\tr''\tcoefficient of T_r'' in T_r T_r'\n";
    }
  }  // namespace

  void write_table(std::ostream& out, RennerMonoid const& m, StructureConstantTable const& table) {
    write_header(out);
    std::size_t const n = table.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          auto const c = table.product(i, j).coefficient(table.elements[k]);
          if (!c.is_zero()) {
            out << to_notation(m, table.elements[i]) << '\t'
                << to_notation(m, table.elements[j]) << '\t'
                << to_notation(m, table.elements[k]) << '\t' << c.to_string() << '\n';
          }
        }
      }
    }
  }

  void write_table(std::ostream& out, RennerMonoid const& m, SpecializedTable const& table) {
    write_header(out);
    std::size_t const n = table.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          auto const& c = table.at(i, j, k);
          if (c != 0) {
            out << to_notation(m, table.elements[i]) << '\t'
                << to_notation(m, table.elements[j]) << '\t'
                << to_notation(m, table.elements[k]) << '\t' << c.str() << '\n';
          }
        }
      }
    }
  }

}  // namespace renner
