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

#include <array>
#include <set>

#include "doctest.h"
#include "renner/catalog.hpp"
#include "renner/errors.hpp"
#include "renner/hecke.hpp"
#include "renner/oracle.hpp"
#include "support/partial_maps.hpp"

using namespace renner;

namespace {
  using Matrix = std::vector<unsigned>;

  // Plain matrix arithmetic, independent of FiniteMatrixMonoid.
  Matrix times(Matrix const& a, Matrix const& b, std::size_t n, unsigned p) {
    Matrix c(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        unsigned sum = 0;
        for (std::size_t k = 0; k < n; ++k) {
          sum += a[i * n + k] * b[k * n + j];
        }
        c[i * n + j] = sum % p;
      }
    }
    return c;
  }

  std::vector<Matrix> all_matrices(std::size_t n, unsigned p) {
    std::vector<Matrix> result{Matrix(n * n, 0)};
    for (std::size_t pos = 0; pos < n * n; ++pos) {
      std::vector<Matrix> next;
      for (auto const& m : result) {
        for (unsigned v = 0; v < p; ++v) {
          auto x = m;
          x[pos] = v;
          next.push_back(x);
        }
      }
      result = std::move(next);
    }
    return result;
  }

  std::vector<Matrix> upper_units(std::size_t n, unsigned p) {
    std::vector<Matrix> result;
    for (auto const& m : all_matrices(n, p)) {
      bool ok = true;
      for (std::size_t i = 0; i < n; ++i) {
        ok = ok && m[i * n + i] != 0;
        for (std::size_t j = 0; j < i; ++j) {
          ok = ok && m[i * n + j] == 0;
        }
      }
      if (ok) {
        result.push_back(m);
      }
    }
    return result;
  }

  struct Fixture {
    FiniteMatrixMonoid  mm;
    RennerMonoid        rook;
    BruhatDecomposition bd;

    Fixture(std::size_t n, unsigned p) : mm(n, p), rook(rook_data(n)), bd(bruhat_decompose(mm, rook)) {}
  };
}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("field and monoid sizes") {
    CHECK_THROWS_AS(PrimeField(4), NotPrime);
    CHECK_THROWS_AS(PrimeField(1), NotPrime);
    CHECK(PrimeField(5).inv(2) == 3);
    CHECK_THROWS_AS(FiniteMatrixMonoid(3, 3, 1000), CapExceeded);
    CHECK_THROWS_AS(FiniteMatrixMonoid(2, 6), NotPrime);
    FiniteMatrixMonoid const m22(2, 2);
    CHECK(m22.size() == 16);
    CHECK(m22.borel().size() == 2);
    CHECK(m22.unit_count() == 6);
    FiniteMatrixMonoid const m23(2, 3);
    CHECK(m23.size() == 81);
    CHECK(m23.borel().size() == 12);
    CHECK(m23.unit_count() == 48);
    FiniteMatrixMonoid const m32(3, 2);
    CHECK(m32.size() == 512);
    CHECK(m32.borel().size() == 8);
    CHECK(m32.unit_count() == 168);
  }

  TEST_CASE("matrix products agree with plain arithmetic") {
    for (auto [n, p] : std::array<std::pair<std::size_t, unsigned>, 2>{{{2, 3}, {3, 2}}}) {
      FiniteMatrixMonoid const mm(n, p);
      auto const               all = all_matrices(n, p);
      for (std::size_t a = 0; a < all.size(); a += 7) {
        for (std::size_t b = 0; b < all.size(); b += 5) {
          CHECK(mm.multiply(mm.encode(all[a]), mm.encode(all[b])) == mm.encode(times(all[a], all[b], n, p)));
        }
      }
    }
  }

  TEST_CASE("Bruhat decomposition of M_2(F_2)") {
    Fixture const f(2, 2);
    CHECK(f.bd.sizes() == std::vector<std::size_t>{2, 4, 2, 1, 4, 2, 1});
  }

  TEST_CASE("cosets agree with brute-force orbits") {
    for (auto [n, p] : std::array<std::pair<std::size_t, unsigned>, 3>{{{2, 2}, {2, 3}, {3, 2}}}) {
      CAPTURE(n);
      CAPTURE(p);
      Fixture const f(n, p);
      auto const    borel = upper_units(n, p);
      std::size_t   total = 0;
      for (std::size_t k = 0; k < f.bd.elements.size(); ++k) {
        Matrix x(n * n);
        for (std::size_t i = 0; i < n * n; ++i) {
          x[i] = f.mm.entry(f.bd.representatives[k], i / n, i % n);
        }
        std::set<std::uint32_t> orbit;
        for (auto const& a : borel) {
          auto const ax = times(a, x, n, p);
          for (auto const& b : borel) {
            orbit.insert(f.mm.encode(times(ax, b, n, p)));
          }
        }
        CHECK(std::vector<std::uint32_t>(orbit.begin(), orbit.end()) == f.bd.cosets[k]);
        total += orbit.size();
      }
      CHECK(total == f.mm.size());
      CHECK(f.bd.elements.size() == support::rook_count(n));
    }
  }

  TEST_CASE("Borel idempotent and the indicator algebra") {
    Fixture const f(2, 2);
    auto const    eps = borel_idempotent(f.mm);
    CHECK(convolve(f.mm, eps, eps) == eps);
    auto const n = f.bd.elements.size();
    std::vector<MonoidFunction> indicator(n);
    for (std::size_t k = 0; k < n; ++k) {
      for (auto x : f.bd.cosets[k]) {
        indicator[k][x] = 1;
      }
      CHECK(convolve(f.mm, eps, indicator[k]) == indicator[k]);
      CHECK(convolve(f.mm, indicator[k], eps) == indicator[k]);
    }
    auto const table = iwahori_structure_constants_serial(f.mm, f.rook, f.bd);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto const conv = convolve(f.mm, indicator[i], indicator[j]);
        for (std::size_t k = 0; k < n; ++k) {
          // Constant on each double coset.
          std::set<Rational> values;
          for (auto x : f.bd.cosets[k]) {
            auto const it = conv.find(x);
            values.insert(it == conv.end() ? Rational(0) : it->second);
          }
          CHECK(values.size() == 1);
          CHECK(*values.begin() == Rational(table.pair_counts[(i * n + j) * n + k]));
        }
      }
    }
  }

  TEST_CASE("structure constant identities") {
    for (auto [n, p] : std::array<std::pair<std::size_t, unsigned>, 2>{{{2, 2}, {2, 3}}}) {
      Fixture const f(n, p);
      auto const    table = iwahori_structure_constants(f.mm, f.rook, f.bd);
      auto const    size  = table.size();
      CHECK(table.elements[0] == f.rook.one());
      CHECK(table.normalization[0] == Rational(1, static_cast<long long>(f.mm.borel().size())));
      for (std::size_t j = 0; j < size; ++j) {
        for (std::size_t k = 0; k < size; ++k) {
          CHECK(table.at(0, j, k) == (j == k ? 1 : 0));
          CHECK(table.at(j, 0, k) == (j == k ? 1 : 0));
        }
      }
      // Unit block: the Iwahori-Hecke algebra of GL_2 has T_s^2 = (p-1) T_s + p.
      std::size_t const s = 1;
      CHECK(table.elements[s] == f.rook.generator(0));
      CHECK(table.at(s, s, 0) == p);
      CHECK(table.at(s, s, s) == p - 1);
    }
  }

  TEST_CASE("pair counts are symmetric under the anti-transpose") {
    Fixture const f(2, 3);
    auto const    table = iwahori_structure_constants(f.mm, f.rook, f.bd);
    auto const    n     = table.size();
    auto const    transpose_index = [&](std::size_t k) {
      Matrix t(4);
      for (std::size_t i = 0; i < 4; ++i) {
        t[i] = f.mm.entry(f.bd.representatives[k], 1 - i % 2, 1 - i / 2);
      }
      return f.bd.owner[f.mm.encode(t)];
    };
    // x -> J x^T J preserves B and reverses products.
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          auto const ti = transpose_index(i);
          auto const tj = transpose_index(j);
          auto const tk = transpose_index(k);
          CHECK(table.pair_counts[(i * n + j) * n + k] == table.pair_counts[(tj * n + ti) * n + tk]);
        }
      }
    }
  }

  TEST_CASE("serial, parallel and random representatives agree") {
    Fixture const f(3, 2);
    auto const    serial   = iwahori_structure_constants_serial(f.mm, f.rook, f.bd);
    auto const    parallel = iwahori_structure_constants(f.mm, f.rook, f.bd);
    auto const    random   = iwahori_structure_constants(f.mm, f.rook, f.bd, 12345);
    CHECK(serial.pair_counts == parallel.pair_counts);
    CHECK(serial.mu == parallel.mu);
    CHECK(serial.mu == random.mu);
    CHECK(random.representatives != serial.representatives);
  }

  TEST_CASE("comparison report") {
    auto const report = compare_with_generic(2, 2);
    CHECK(report.entries == 343);
    CHECK(report.matches <= report.entries);
    CHECK(report.mismatches.size() <= 5);
    CHECK(report.summary().find("/343 entries match") != std::string::npos);
  }

  TEST_CASE("length oracle agrees with the partial-map distances") {
    for (std::size_t n = 1; n <= 4; ++n) {
      auto const oracle = length_oracle(n);
      auto const dist   = support::weighted_distances(n);
      CHECK(oracle.size() == dist.size());
      RennerMonoid const m(rook_data(n));
      for (auto const& r : m.enumerate().elements) {
        CHECK(oracle.at(to_matrix(m, r)) == m.length(r));
      }
    }
  }
}
