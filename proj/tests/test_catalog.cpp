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

#include <set>

#include "doctest.h"
#include "renner/catalog.hpp"
#include "renner/errors.hpp"
#include "renner/notation.hpp"
#include "support/partial_maps.hpp"

using namespace renner;

namespace {
  RookElement diag(std::vector<std::uint8_t> const& d) {
    RookElement m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
      m.set(i, i, d[i]);
    }
    return m;
  }
}  // namespace

TEST_SUITE("catalog") {
  TEST_CASE("rook_data shapes") {
    auto const d1 = rook_data(1);
    CHECK(d1.graph.rank() == 0);
    CHECK(d1.lattice.size() == 1);

    auto const d2 = rook_data(2);
    CHECK(d2.graph.generators() == std::vector<std::string>{"s1"});
    CHECK(d2.lattice.names() == std::vector<std::string>{"e0", "e1"});
    CHECK(d2.lambda_star_lower[0] == GeneratorSet::of({0}));
    CHECK(d2.lambda_star_lower[1].empty());
    CHECK(d2.lambda_star_upper[0].empty());
    CHECK(d2.lambda_star_upper[1].empty());

    auto const d3 = rook_data(3);
    CHECK(d3.graph.label(0, 1) == 3);
    CHECK(d3.lattice.leq(0, 2));
    CHECK(d3.lambda_star_lower[1] == GeneratorSet::of({1}));
    CHECK(d3.lambda_star_upper[2] == GeneratorSet::of({0}));
    CHECK(rook_rank(d3) == 3);
    auto modified                 = d3;
    modified.lambda_star_upper[2] = GeneratorSet();
    CHECK(rook_rank(modified) == 0);
    CHECK_THROWS_AS(rook_data(0), InvalidData);
  }

  TEST_CASE("to_matrix examples") {
    RennerMonoid const m2(rook_data(2));
    CHECK(to_matrix(m2, parse_element(m2, "s1 . e1 . s1")) == diag({0, 1}));
    CHECK(to_matrix(m2, m2.idempotent(0)) == diag({0, 0}));
    CHECK(to_matrix(m2, m2.idempotent(1)) == diag({1, 0}));
    RennerMonoid const m3(rook_data(3));
    auto const         r = parse_element(m3, "s1 s2");
    CHECK(to_matrix(m3, r)
          == RookElement::transposition(3, 0) * RookElement::transposition(3, 1));
    CHECK(to_matrix(m3, m3.one()) == RookElement::identity(3));
  }

  TEST_CASE("to_matrix is an injective homomorphism onto the rook monoid") {
    for (std::size_t n = 1; n <= 4; ++n) {
      CAPTURE(n);
      RennerMonoid const m(rook_data(n));
      auto const         elements = m.enumerate().elements;
      std::set<RookElement> image;
      for (auto const& r : elements) {
        auto const x = to_matrix(m, r);
        CHECK(x.is_partial_permutation());
        image.insert(x);
      }
      CHECK(image.size() == elements.size());
      CHECK(image.size() == support::rook_count(n));
      if (n <= 3) {
        for (auto const& a : elements) {
          for (auto const& b : elements) {
            REQUIRE(to_matrix(m, m.multiply(a, b)) == to_matrix(m, a) * to_matrix(m, b));
          }
        }
      }
    }
  }

  TEST_CASE("rank of the matrix is the lattice index") {
    RennerMonoid const m(rook_data(4));
    for (auto const& r : m.enumerate().elements) {
      CHECK(to_matrix(m, r).rank() == (r.is_unit() ? 4 : r.e));
    }
  }

  TEST_CASE("to_matrix rejects other data") {
    auto data                 = rook_data(3);
    data.lambda_star_upper[2] = GeneratorSet();
    RennerMonoid const m(data);
    CHECK_THROWS_AS(to_matrix(m, m.one()), WrongCatalog);
  }

  TEST_CASE("RookElement basics") {
    auto const t = RookElement::transposition(3, 1);
    CHECK(t * t == RookElement::identity(3));
    CHECK(RookElement::idempotent(3, 2) == diag({1, 1, 0}));
    CHECK(RookElement::idempotent(3, 2).rank() == 2);
    RookElement bad(2);
    bad.set(0, 0, 1);
    bad.set(0, 1, 1);
    CHECK_FALSE(bad.is_partial_permutation());
    CHECK(diag({1, 0}).to_string() == "(1 0; 0 0)");
  }
}
