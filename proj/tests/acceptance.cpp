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
// Acceptance criteria, one per invocation: `renner_acceptance N` prints a
// single "criterion N: PASS|FAIL ..." line and exits 0 on PASS.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "renner/catalog.hpp"
#include "renner/hecke.hpp"
#include "renner/oracle.hpp"
#include "renner/renner_monoid.hpp"
#include "support/partial_maps.hpp"
#include "support/rook_model.hpp"

using namespace renner;

namespace {
  // Wall clock limits, seconds.
  constexpr double kSmallOracleLimit = 5.0;
  constexpr double kLargeOracleLimit = 60.0;
  constexpr double kAssociativityLimit = 60.0;

  struct Outcome {
    bool        pass = true;
    std::string detail;

    void fail(std::string const& why) {
      pass = false;
      note(why);
    }
    void note(std::string const& what) {
      detail += detail.empty() ? what : "; " + what;
    }
  };

  double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }

  std::string fixed(double x) {
    std::ostringstream out;
    out.precision(2);
    out << std::fixed << x;
    return out.str();
  }

  Outcome criterion_1() {
    Outcome out;
    struct Case {
      std::size_t n;
      unsigned    p;
      double      limit;
    };
    for (auto [n, p, limit] : {Case{2, 2, kSmallOracleLimit}, Case{2, 3, kSmallOracleLimit},
                               Case{3, 2, kLargeOracleLimit}}) {
      auto const   start   = std::chrono::steady_clock::now();
      auto const   report  = compare_with_generic(n, p);
      double const elapsed = seconds_since(start);
      std::string  tag     = "(" + std::to_string(n) + "," + std::to_string(p) + ") "
                        + report.summary() + " in " + fixed(elapsed) + "s";
      if (!report.ok()) {
        out.fail(tag);
      } else if (elapsed > limit) {
        out.fail(tag + " over " + fixed(limit) + "s");
      } else {
        out.note(tag);
      }
    }
    return out;
  }

  Outcome criterion_2() {
    Outcome out;
    for (auto [n, p] : {std::pair<std::size_t, unsigned>{2, 2}, {2, 3}, {3, 2}}) {
      FiniteMatrixMonoid const mm(n, p);
      RennerMonoid const       rook(rook_data(n));
      auto const               bd    = bruhat_decompose(mm, rook);
      std::size_t              total = 0;
      std::vector<int>         seen(mm.size(), 0);
      for (auto const& coset : bd.cosets) {
        total += coset.size();
        for (auto x : coset) {
          ++seen[x];
        }
      }
      bool const partition = std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
      std::string const tag = "(" + std::to_string(n) + "," + std::to_string(p) + ") "
                              + std::to_string(bd.cosets.size()) + " cosets";
      if (!partition || total != mm.size() || bd.cosets.size() != support::rook_count(n)) {
        out.fail(tag + " do not partition M");
      } else {
        out.note(tag);
      }
      if (n == 2 && p == 2) {
        std::vector<std::size_t> const golden{2, 4, 2, 1, 4, 2, 1};
        if (bd.sizes() != golden) {
          out.fail("(2,2) sizes differ from golden");
        }
      }
    }
    return out;
  }

  Outcome criterion_3() {
    Outcome out;
    for (auto [n, p] : {std::pair<std::size_t, unsigned>{2, 2}, {2, 3}, {3, 2}}) {
      FiniteMatrixMonoid const mm(n, p);
      RennerMonoid const       rook(rook_data(n));
      auto const               bd     = bruhat_decompose(mm, rook);
      auto const               report = coset_product_check(mm, rook, bd);
      std::string const tag = "(" + std::to_string(n) + "," + std::to_string(p) + ") "
                              + std::to_string(report.checked - report.failures.size()) + "/"
                              + std::to_string(report.checked);
      if (report.ok()) {
        out.note(tag);
      } else {
        out.fail(tag + " [left s " + std::to_string(report.left_s) + ", right s "
                 + std::to_string(report.right_s) + ", left e " + std::to_string(report.left_e)
                 + ", right e " + std::to_string(report.right_e) + "]");
      }
    }
    return out;
  }

  // Expands a linear combination sum c_k T_k times T_c through the table.
  HeckeElement times_right(StructureConstantTable const& table, HeckeElement const& h, std::size_t c) {
    HeckeElement result;
    for (auto const& [r, coeff] : h.terms()) {
      result += coeff * table.product(table.index_of(r), c);
    }
    return result;
  }

  HeckeElement times_left(StructureConstantTable const& table, std::size_t a, HeckeElement const& h) {
    HeckeElement result;
    for (auto const& [r, coeff] : h.terms()) {
      result += coeff * table.product(a, table.index_of(r));
    }
    return result;
  }

  Outcome criterion_4() {
    Outcome    out;
    auto const start = std::chrono::steady_clock::now();
    for (std::size_t n : {2, 3}) {
      RennerMonoid const m(rook_data(n));
      HeckeAlgebra const H(m);
      auto const         table    = H.structure_constants(m.enumerate().elements);
      std::size_t const  size     = table.size();
      std::size_t        failures = 0;
      for (std::size_t a = 0; a < size; ++a) {
        for (std::size_t b = 0; b < size; ++b) {
          for (std::size_t c = 0; c < size; ++c) {
            if (times_right(table, table.product(a, b), c) != times_left(table, a, table.product(b, c))) {
              ++failures;
            }
          }
        }
      }
      std::string const tag = "R_" + std::to_string(n) + " " + std::to_string(size * size * size - failures)
                              + "/" + std::to_string(size * size * size) + " triples";
      failures == 0 ? out.note(tag) : out.fail(tag);
    }
    double const elapsed = seconds_since(start);
    if (elapsed > kAssociativityLimit) {
      out.fail("took " + fixed(elapsed) + "s");
    } else {
      out.note(fixed(elapsed) + "s");
    }
    return out;
  }

  Outcome criterion_5() {
    Outcome out;
    for (std::size_t n = 1; n <= 4; ++n) {
      RennerMonoid const m(rook_data(n));
      auto const         report = m.verify_presentation();
      std::string const  tag    = "R_" + std::to_string(n) + " " + std::to_string(report.checked)
                              + " relations";
      report.ok() ? out.note(tag) : out.fail(tag + ", first failure: " + report.failures.front());
      if (n <= 3) {
        auto const hecke = HeckeAlgebra(m).verify_hecke_presentation();
        std::string const htag = "H(R_" + std::to_string(n) + ") " + std::to_string(hecke.checked)
                                 + " relations";
        hecke.ok() ? out.note(htag) : out.fail(htag + ", first failure: " + hecke.failures.front());
      }
    }
    return out;
  }

  Outcome criterion_6() {
    Outcome out;
    for (std::size_t n = 1; n <= 4; ++n) {
      RennerMonoid const m(rook_data(n));
      auto const         dist     = support::weighted_distances(n);
      auto const         elements = m.enumerate().elements;
      std::size_t        failures = 0;
      for (auto const& r : elements) {
        if (dist.at(support::model(m, r)) != m.length(r)) {
          ++failures;
        }
      }
      std::string const tag = "R_" + std::to_string(n) + " " + std::to_string(elements.size() - failures)
                              + "/" + std::to_string(elements.size());
      failures == 0 && dist.size() == elements.size() ? out.note(tag) : out.fail(tag);
    }
    return out;
  }

  Outcome criterion_7() {
    Outcome out;
    for (std::size_t n = 1; n <= 3; ++n) {
      RennerMonoid const m(rook_data(n));
      auto const         table    = HeckeAlgebra(m).structure_constants(m.enumerate().elements);
      auto const         at1      = table.specialize(1);
      std::size_t        failures = 0;
      for (std::size_t i = 0; i < table.size(); ++i) {
        for (std::size_t j = 0; j < table.size(); ++j) {
          auto const product = table.index_of(m.multiply(table.elements[i], table.elements[j]));
          for (std::size_t k = 0; k < table.size(); ++k) {
            if (at1.at(i, j, k) != (k == product ? 1 : 0)) {
              ++failures;
            }
          }
        }
      }
      std::string const tag = "R_" + std::to_string(n) + " " + std::to_string(failures) + " bad entries";
      failures == 0 ? out.note(tag) : out.fail(tag);
    }
    return out;
  }

  Outcome criterion_8() {
    Outcome out;
    for (std::size_t n = 1; n <= 4; ++n) {
      RennerMonoid const m(rook_data(n));
      auto const         forms = m.normal_forms();
      std::set<RennerElement> const form_set(forms.begin(), forms.end());
      // Closure of the generators under right multiplication.
      std::vector<Letter> letters;
      for (std::size_t s = 0; s < m.rank(); ++s) {
        letters.push_back(Letter::generator(s));
      }
      for (std::size_t e = 0; e < m.lattice().size(); ++e) {
        letters.push_back(Letter::idempotent(e));
      }
      std::set<RennerElement>    closure{m.one()};
      std::vector<RennerElement> queue{m.one()};
      for (std::size_t i = 0; i < queue.size(); ++i) {
        for (auto x : letters) {
          auto const next = m.multiply(queue[i], x);
          if (closure.insert(next).second) {
            queue.push_back(next);
          }
        }
      }
      std::size_t const expected = support::rook_count(n);
      std::string const tag      = "R_" + std::to_string(n) + " " + std::to_string(forms.size()) + " forms, "
                              + std::to_string(closure.size()) + " by closure, expected "
                              + std::to_string(expected);
      bool const ok = forms.size() == expected && form_set.size() == forms.size() && closure == form_set;
      ok ? out.note(tag) : out.fail(tag);
    }
    return out;
  }

  Outcome criterion_9() {
    Outcome            out;
    RennerMonoid const m(rook_data(3));
    auto const&        g        = m.group();
    auto const         elements = m.enumerate().elements;
    std::vector<RennerElement> lambda{m.one()};
    for (std::size_t e = 0; e < m.lattice().size(); ++e) {
      lambda.push_back(m.idempotent(e));
    }
    auto const  len       = [&](RennerElement const& r) { return static_cast<long>(m.length(r)); };
    std::size_t checked_v = 0;
    std::size_t failed_v  = 0;
    std::size_t checked_2 = 0;
    std::size_t failed_2  = 0;
    for (auto const& r : elements) {
      for (std::size_t s = 0; s < m.rank(); ++s) {
        auto const sr = m.multiply(m.generator(s), r);
        for (std::size_t t = 0; t < m.rank(); ++t) {
          auto const rt  = m.multiply(r, m.generator(t));
          auto const srt = m.multiply(sr, m.generator(t));
          if (r.is_unit() || len(srt) != len(r) || len(sr) != len(rt) || len(sr) == len(r)) {
            continue;
          }
          ++checked_v;
          bool found = false;
          for (auto u : m.lambda_upper(r.e).members()) {
            found = found
                    || (g.left_multiply(s, r.w1) == g.right_multiply(r.w1, u)
                        && g.left_multiply(u, r.w2) == g.right_multiply(r.w2, t));
          }
          if (!found || sr != rt) {
            ++failed_v;
          }
        }
        auto const rs = m.multiply(r, m.generator(s));
        for (auto const& f : lambda) {
          ++checked_2;
          long const d_left  = len(sr) - len(r);
          long const d_right = len(rs) - len(r);
          long const lf      = len(m.multiply(r, f));
          long const lsf     = len(m.multiply(sr, f));
          long const fl      = len(m.multiply(f, r));
          long const fls     = len(m.multiply(f, rs));
          bool ok            = true;
          ok = ok && !(d_left == -1 && lsf > lf) && !(d_left == 1 && lsf < lf);
          ok = ok && !(d_right == -1 && fls > fl) && !(d_right == 1 && fls < fl);
          if (!ok) {
            ++failed_2;
          }
        }
      }
    }
    std::string const tag = "exchange sr = rt " + std::to_string(checked_v - failed_v) + "/"
                            + std::to_string(checked_v) + ", length monotonicity under idempotents "
                            + std::to_string(checked_2 - failed_2) + "/" + std::to_string(checked_2);
    failed_v == 0 && failed_2 == 0 && checked_v > 0 ? out.note(tag) : out.fail(tag);
    return out;
  }
}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: renner_acceptance N (1-9)\n";
    return 2;
  }
  int const criterion = std::atoi(argv[1]);
  Outcome   outcome;
  try {
    switch (criterion) {
      case 1: outcome = criterion_1(); break;
      case 2: outcome = criterion_2(); break;
      case 3: outcome = criterion_3(); break;
      case 4: outcome = criterion_4(); break;
      case 5: outcome = criterion_5(); break;
      case 6: outcome = criterion_6(); break;
      case 7: outcome = criterion_7(); break;
      case 8: outcome = criterion_8(); break;
      case 9: outcome = criterion_9(); break;
      default: std::cerr << "unknown criterion " << criterion << "\n"; return 2;
    }
  } catch (std::exception const& e) {
    outcome.fail(std::string("exception: ") + e.what());
  }
  std::cout << "criterion " << criterion << ": " << (outcome.pass ? "PASS" : "FAIL") << " "
            << outcome.detail << "\n";
  return outcome.pass ? 0 : 1;
}
