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

#include "renner/oracle.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <sstream>

#include "renner/errors.hpp"
#include "renner/notation.hpp"

namespace renner {

  ////////////////////////////////////////////////////////////////////////
  // PrimeField / FiniteMatrixMonoid
  ////////////////////////////////////////////////////////////////////////

  PrimeField::PrimeField(unsigned p) : p_(p) {
    bool prime = p >= 2;
    for (unsigned d = 2; prime && d * d <= p; ++d) {
      prime = p % d != 0;
    }
    if (!prime) {
      throw NotPrime(std::to_string(p) + " is not prime");
    }
  }

  unsigned PrimeField::inv(unsigned a) const {
    if (a % p_ == 0) {
      throw std::domain_error("zero has no inverse");
    }
    unsigned result = 1;
    unsigned base   = a % p_;
    for (unsigned e = p_ - 2; e > 0; e >>= 1) {
      if (e & 1U) {
        result = mul(result, base);
      }
      base = mul(base, base);
    }
    return result;
  }

  FiniteMatrixMonoid::FiniteMatrixMonoid(std::size_t n, unsigned p, std::size_t cap)
      : n_(n), field_(p), size_(1) {
    if (n == 0 || n > kMaxN) {
      throw CapExceeded("matrix size must be between 1 and 4");
    }
    for (std::size_t k = 0; k < n * n; ++k) {
      place_.push_back(static_cast<std::uint32_t>(size_));
      size_ *= p;
      if (size_ > cap) {
        throw CapExceeded("M_" + std::to_string(n) + "(F_" + std::to_string(p)
                          + ") has more than " + std::to_string(cap) + " elements");
      }
    }
    std::size_t const cells = n * n;
    digits_.resize(size_ * cells);
    for (std::size_t x = 0; x < size_; ++x) {
      std::size_t rest = x;
      for (std::size_t k = 0; k < cells; ++k) {
        digits_[x * cells + k] = static_cast<std::uint8_t>(rest % p);
        rest /= p;
      }
    }
    for (std::uint32_t x = 0; x < size_; ++x) {
      bool upper = true;
      for (std::size_t i = 0; i < n && upper; ++i) {
        upper = entry(x, i, i) != 0;
        for (std::size_t j = 0; j < i && upper; ++j) {
          upper = entry(x, i, j) == 0;
        }
      }
      if (upper) {
        borel_.push_back(x);
      }
    }
  }

  std::uint32_t FiniteMatrixMonoid::multiply(std::uint32_t a, std::uint32_t b) const {
    unsigned const p     = field_.p();
    std::size_t    cells = n_ * n_;
    auto const*    da    = &digits_[static_cast<std::size_t>(a) * cells];
    auto const*    db    = &digits_[static_cast<std::size_t>(b) * cells];
    std::uint32_t  result = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        unsigned sum = 0;
        for (std::size_t k = 0; k < n_; ++k) {
          sum += static_cast<unsigned>(da[i * n_ + k]) * db[k * n_ + j];
        }
        result += (sum % p) * place_[i * n_ + j];
      }
    }
    return result;
  }

  std::uint32_t FiniteMatrixMonoid::encode(std::vector<unsigned> const& entries) const {
    if (entries.size() != n_ * n_) {
      throw std::invalid_argument("wrong number of matrix entries");
    }
    std::uint32_t result = 0;
    for (std::size_t k = 0; k < entries.size(); ++k) {
      result += (entries[k] % field_.p()) * place_[k];
    }
    return result;
  }

  std::uint32_t FiniteMatrixMonoid::from_rook(RookElement const& r) const {
    if (r.n() != n_) {
      throw std::invalid_argument("rook matrix has the wrong size");
    }
    std::vector<unsigned> entries(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        entries[i * n_ + j] = r.at(i, j);
      }
    }
    return encode(entries);
  }

  std::uint32_t FiniteMatrixMonoid::identity() const {
    return from_rook(RookElement::identity(n_));
  }

  bool FiniteMatrixMonoid::is_invertible(std::uint32_t x) const {
    std::vector<unsigned> a(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        a[i * n_ + j] = entry(x, i, j);
      }
    }
    for (std::size_t col = 0; col < n_; ++col) {
      std::size_t pivot = col;
      while (pivot < n_ && a[pivot * n_ + col] == 0) {
        ++pivot;
      }
      if (pivot == n_) {
        return false;
      }
      for (std::size_t j = 0; j < n_; ++j) {
        std::swap(a[col * n_ + j], a[pivot * n_ + j]);
      }
      unsigned const scale = field_.inv(a[col * n_ + col]);
      for (std::size_t i = col + 1; i < n_; ++i) {
        unsigned const factor = field_.mul(a[i * n_ + col], scale);
        for (std::size_t j = col; j < n_; ++j) {
          a[i * n_ + j] = field_.add(a[i * n_ + j], field_.neg(field_.mul(factor, a[col * n_ + j])));
        }
      }
    }
    return true;
  }

  std::size_t FiniteMatrixMonoid::unit_count() const {
    std::size_t result = 0;
    for (std::uint32_t x = 0; x < size_; ++x) {
      result += is_invertible(x) ? 1 : 0;
    }
    return result;
  }

  std::string FiniteMatrixMonoid::to_string(std::uint32_t x) const {
    std::string result = "(";
    for (std::size_t i = 0; i < n_; ++i) {
      result += i == 0 ? "" : "; ";
      for (std::size_t j = 0; j < n_; ++j) {
        result += (j == 0 ? "" : " ") + std::to_string(entry(x, i, j));
      }
    }
    return result + ")";
  }

  ////////////////////////////////////////////////////////////////////////
  // Bruhat decomposition and coset products
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::size_t> BruhatDecomposition::sizes() const {
    std::vector<std::size_t> result;
    for (auto const& c : cosets) {
      result.push_back(c.size());
    }
    return result;
  }

  namespace {
    constexpr std::uint32_t kNoOwner = std::numeric_limits<std::uint32_t>::max();

    std::vector<std::uint32_t> double_coset(FiniteMatrixMonoid const& mm, std::uint32_t x) {
      std::vector<std::uint32_t> result;
      for (auto b1 : mm.borel()) {
        auto const left = mm.multiply(b1, x);
        for (auto b2 : mm.borel()) {
          result.push_back(mm.multiply(left, b2));
        }
      }
      std::sort(result.begin(), result.end());
      result.erase(std::unique(result.begin(), result.end()), result.end());
      return result;
    }

    std::size_t position(BruhatDecomposition const& bd, RennerElement const& r) {
      auto it = std::find(bd.elements.begin(), bd.elements.end(), r);
      if (it == bd.elements.end()) {
        throw std::logic_error("rook element missing from the decomposition");
      }
      return static_cast<std::size_t>(it - bd.elements.begin());
    }

    // Owners of { a * x * b : a in A, b in B } with A = B or A a coset.
    std::vector<std::size_t> owners_of(FiniteMatrixMonoid const&         mm,
                                       BruhatDecomposition const&        bd,
                                       std::vector<std::uint32_t> const& left,
                                       std::uint32_t                     middle,
                                       std::vector<std::uint32_t> const& right) {
      std::vector<bool> hit(bd.cosets.size(), false);
      for (auto a : left) {
        auto const ax = mm.multiply(a, middle);
        for (auto b : right) {
          hit[bd.owner[mm.multiply(ax, b)]] = true;
        }
      }
      std::vector<std::size_t> result;
      for (std::size_t k = 0; k < hit.size(); ++k) {
        if (hit[k]) {
          result.push_back(k);
        }
      }
      return result;
    }
  }  // namespace

  BruhatDecomposition bruhat_decompose(FiniteMatrixMonoid const& mm, RennerMonoid const& rook) {
    if (rook_rank(rook.data()) != mm.n()) {
      throw WrongCatalog("Bruhat decomposition needs rook data of the same size");
    }
    BruhatDecomposition bd;
    bd.elements = rook.enumerate().elements;
    bd.owner.assign(mm.size(), kNoOwner);
    for (std::size_t k = 0; k < bd.elements.size(); ++k) {
      auto const x = mm.from_rook(to_matrix(rook, bd.elements[k]));
      bd.representatives.push_back(x);
      bd.cosets.push_back(double_coset(mm, x));
      for (auto y : bd.cosets.back()) {
        if (bd.owner[y] != kNoOwner) {
          throw CoverFailure("B r B overlap at " + mm.to_string(y) + " between "
                             + to_notation(rook, bd.elements[bd.owner[y]]) + " and "
                             + to_notation(rook, bd.elements[k]));
        }
        bd.owner[y] = static_cast<std::uint32_t>(k);
      }
    }
    for (std::uint32_t y = 0; y < mm.size(); ++y) {
      if (bd.owner[y] == kNoOwner) {
        throw CoverFailure(mm.to_string(y) + " lies in no B r B");
      }
    }
    return bd;
  }

  std::vector<std::size_t> coset_product(FiniteMatrixMonoid const&  mm,
                                         BruhatDecomposition const& bd,
                                         std::size_t                i,
                                         std::size_t                j) {
    // B x B y B = (B x B) y B.
    return owners_of(mm, bd, bd.cosets[i], bd.representatives[j], mm.borel());
  }

  CosetCheckReport coset_product_check(FiniteMatrixMonoid const&  mm,
                                       RennerMonoid const&        rook,
                                       BruhatDecomposition const& bd) {
    CosetCheckReport report;
    auto const       name = [&](std::size_t k) { return "[" + to_notation(rook, bd.elements[k]) + "]"; };
    auto const       fmt  = [&](std::vector<std::size_t> const& ks) {
      std::string result = "{";
      for (auto k : ks) {
        result += (result.size() > 1 ? ", " : "") + name(k);
      }
      return result + "}";
    };
    auto const expected_s = [&](std::size_t r, RennerElement const& sr) {
      auto const k  = position(bd, sr);
      auto const lr = rook.length(bd.elements[r]);
      auto const ls = rook.length(sr);
      std::vector<std::size_t> result;
      if (ls == lr + 1) {
        result = {k};
      } else if (ls == lr) {
        result = {r};
      } else {
        result = {std::min(k, r), std::max(k, r)};
      }
      return result;
    };
    auto const record = [&](bool holds, std::size_t& family, std::string const& what) {
      ++report.checked;
      if (!holds) {
        ++family;
        report.failures.push_back(what);
      }
    };

    std::vector<Letter> idempotents;
    for (std::size_t e = 0; e < rook.lattice().size(); ++e) {
      idempotents.push_back(Letter::idempotent(e));
    }
    for (std::size_t r = 0; r < bd.elements.size(); ++r) {
      auto const& elem = bd.elements[r];
      for (std::size_t s = 0; s < rook.rank(); ++s) {
        auto const x  = position(bd, rook.generator(s));
        auto const sr = rook.multiply(Letter::generator(s), elem);
        auto const rs = rook.multiply(elem, Letter::generator(s));
        auto const left = owners_of(mm, bd, bd.cosets[x], bd.representatives[r], mm.borel());
        auto const want_left = expected_s(r, sr);
        record(left == want_left, report.left_s,
               "BsB*BrB for s = " + name(x) + ", r = " + name(r) + ": got " + fmt(left)
                   + ", expected " + fmt(want_left));
        auto const right = owners_of(mm, bd, mm.borel(), bd.representatives[r], bd.cosets[x]);
        auto const want_right = expected_s(r, rs);
        record(right == want_right, report.right_s,
               "BrB*BsB for r = " + name(r) + ", s = " + name(x) + ": got " + fmt(right)
                   + ", expected " + fmt(want_right));
      }
      for (auto e : idempotents) {
        auto const x     = position(bd, rook.letter(e));
        auto const left  = owners_of(mm, bd, bd.cosets[x], bd.representatives[r], mm.borel());
        auto const right = owners_of(mm, bd, mm.borel(), bd.representatives[r], bd.cosets[x]);
        std::vector<std::size_t> const want_left{position(bd, rook.multiply(e, elem))};
        std::vector<std::size_t> const want_right{position(bd, rook.multiply(elem, e))};
        record(left == want_left, report.left_e,
               "BeB*BrB for e = " + name(x) + ", r = " + name(r) + ": got " + fmt(left)
                   + ", expected " + fmt(want_left));
        record(right == want_right, report.right_e,
               "BrB*BeB for r = " + name(r) + ", e = " + name(x) + ": got " + fmt(right)
                   + ", expected " + fmt(want_right));
      }
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Structure constants
  ////////////////////////////////////////////////////////////////////////

  namespace {
    RationalConstantTable prepare_table(FiniteMatrixMonoid const&    mm,
                                        RennerMonoid const&          rook,
                                        BruhatDecomposition const&   bd,
                                        std::optional<std::uint64_t> seed) {
      RationalConstantTable table;
      table.elements = bd.elements;
      std::size_t const n = table.size();
      Rational const    p(mm.field().p());
      for (std::size_t k = 0; k < n; ++k) {
        Rational a = 1;
        for (unsigned i = 0; i < rook.length(table.elements[k]); ++i) {
          a *= p;
        }
        table.normalization.push_back(a / Rational(bd.cosets[k].size()));
      }
      if (seed) {
        std::mt19937_64 rng(*seed);
        for (std::size_t k = 0; k < n; ++k) {
          std::uniform_int_distribution<std::size_t> pick(0, bd.cosets[k].size() - 1);
          table.representatives.push_back(bd.cosets[k][pick(rng)]);
        }
      } else {
        table.representatives = bd.representatives;
      }
      table.pair_counts.assign(n * n * n, 0);
      table.mu.assign(n * n * n, Rational(0));
      return table;
    }

    void count_cell(FiniteMatrixMonoid const&     mm,
                    BruhatDecomposition const&    bd,
                    std::vector<std::int32_t> const& rep_index,
                    std::size_t                   i,
                    std::size_t                   j,
                    std::uint64_t*                counts) {
      for (auto x : bd.cosets[i]) {
        for (auto y : bd.cosets[j]) {
          auto const k = rep_index[mm.multiply(x, y)];
          if (k >= 0) {
            ++counts[k];
          }
        }
      }
    }

    void finish_table(RationalConstantTable& table) {
      std::size_t const n = table.size();
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          for (std::size_t k = 0; k < n; ++k) {
            auto const idx = (i * n + j) * n + k;
            if (table.pair_counts[idx] != 0) {
              table.mu[idx] = table.normalization[i] * table.normalization[j]
                              / table.normalization[k] * Rational(table.pair_counts[idx]);
            }
          }
        }
      }
    }

    std::vector<std::int32_t> representative_index(FiniteMatrixMonoid const&    mm,
                                                    RationalConstantTable const& table) {
      std::vector<std::int32_t> result(mm.size(), -1);
      for (std::size_t k = 0; k < table.size(); ++k) {
        result[table.representatives[k]] = static_cast<std::int32_t>(k);
      }
      return result;
    }
  }  // namespace

  RationalConstantTable iwahori_structure_constants_serial(FiniteMatrixMonoid const&    mm,
                                                           RennerMonoid const&          rook,
                                                           BruhatDecomposition const&   bd,
                                                           std::optional<std::uint64_t> seed) {
    auto              table     = prepare_table(mm, rook, bd, seed);
    auto const        rep_index = representative_index(mm, table);
    std::size_t const n         = table.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        count_cell(mm, bd, rep_index, i, j, &table.pair_counts[(i * n + j) * n]);
      }
    }
    finish_table(table);
    return table;
  }

  RationalConstantTable iwahori_structure_constants(FiniteMatrixMonoid const&    mm,
                                                    RennerMonoid const&          rook,
                                                    BruhatDecomposition const&   bd,
                                                    std::optional<std::uint64_t> seed) {
    auto              table     = prepare_table(mm, rook, bd, seed);
    auto const        rep_index = representative_index(mm, table);
    std::size_t const n         = table.size();
    auto const        cells     = static_cast<long long>(n * n);
#pragma omp parallel for schedule(dynamic, 1)
    for (long long cell = 0; cell < cells; ++cell) {
      auto const c = static_cast<std::size_t>(cell);
      count_cell(mm, bd, rep_index, c / n, c % n, &table.pair_counts[c * n]);
    }
    finish_table(table);
    return table;
  }

  void write_table(std::ostream& out, RennerMonoid const& m, RationalConstantTable const& table) {
    out << "# r\tr'\tr''\tcoefficient of T_r'' in T_r T_r'\n";
    std::size_t const n = table.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          auto const& mu = table.at(i, j, k);
          if (mu != 0) {
            out << to_notation(m, table.elements[i]) << '\t'
                << to_notation(m, table.elements[j]) << '\t'
                << to_notation(m, table.elements[k]) << '\t' << mu.str() << '\n';
          }
        }
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Comparison
  ////////////////////////////////////////////////////////////////////////

  std::string ComparisonReport::summary() const {
    std::ostringstream out;
    out << matches << "/" << entries << " entries match";
    if (non_integral != 0) {
      out << ", " << non_integral << " non-integral";
    }
    return out.str();
  }

  ComparisonReport compare_tables(RennerMonoid const&          rook,
                                  RationalConstantTable const& oracle,
                                  SpecializedTable const&      generic,
                                  std::size_t                  max_reported) {
    if (oracle.elements != generic.elements) {
      throw std::invalid_argument("tables use different element orders");
    }
    ComparisonReport  report;
    std::size_t const n = oracle.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          ++report.entries;
          auto const& mu       = oracle.at(i, j, k);
          bool const  integral = denominator(mu) == 1;
          report.non_integral += integral ? 0 : 1;
          if (mu == Rational(generic.at(i, j, k))) {
            ++report.matches;
          } else if (report.mismatches.size() < max_reported) {
            report.mismatches.push_back(
                "T_[" + to_notation(rook, oracle.elements[i]) + "] T_["
                + to_notation(rook, oracle.elements[j]) + "] at T_["
                + to_notation(rook, oracle.elements[k]) + "]: oracle " + mu.str() + ", generic "
                + generic.at(i, j, k).str());
          }
        }
      }
    }
    return report;
  }

  ComparisonReport compare_with_generic(std::size_t n, unsigned p, std::size_t cap) {
    FiniteMatrixMonoid const mm(n, p, cap);
    RennerMonoid const       rook(rook_data(n));
    auto const               bd      = bruhat_decompose(mm, rook);
    auto const               oracle  = iwahori_structure_constants(mm, rook, bd);
    HeckeAlgebra const       hecke(rook);
    auto const               generic = hecke.structure_constants(bd.elements).specialize(p);
    return compare_tables(rook, oracle, generic);
  }

  ////////////////////////////////////////////////////////////////////////
  // Convolution and lengths
  ////////////////////////////////////////////////////////////////////////

  MonoidFunction convolve(FiniteMatrixMonoid const& mm,
                          MonoidFunction const&     f,
                          MonoidFunction const&     g) {
    MonoidFunction result;
    for (auto const& [x, fx] : f) {
      for (auto const& [y, gy] : g) {
        result[mm.multiply(x, y)] += fx * gy;
      }
    }
    std::erase_if(result, [](auto const& kv) { return kv.second == 0; });
    return result;
  }

  MonoidFunction borel_idempotent(FiniteMatrixMonoid const& mm) {
    MonoidFunction result;
    Rational const weight(1, static_cast<long long>(mm.borel().size()));
    for (auto b : mm.borel()) {
      result[b] = weight;
    }
    return result;
  }

  std::map<RookElement, unsigned> length_oracle(std::size_t n) {
    std::vector<std::pair<RookElement, unsigned>> generators;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      generators.emplace_back(RookElement::transposition(n, i), 1);
    }
    for (std::size_t k = 0; k < n; ++k) {
      generators.emplace_back(RookElement::idempotent(n, k), 0);
    }
    std::map<RookElement, unsigned> distance{{RookElement::identity(n), 0}};
    std::deque<RookElement>         queue{RookElement::identity(n)};
    while (!queue.empty()) {
      auto const x = queue.front();
      queue.pop_front();
      auto const dx = distance.at(x);
      for (auto const& [g, w] : generators) {
        auto const y  = x * g;
        auto       it = distance.find(y);
        if (it == distance.end() || dx + w < it->second) {
          distance[y] = dx + w;
          if (w == 0) {
            queue.push_front(y);
          } else {
            queue.push_back(y);
          }
        }
      }
    }
    return distance;
  }

}  // namespace renner
