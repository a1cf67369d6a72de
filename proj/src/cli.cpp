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

#include "renner/cli.hpp"

#include <chrono>
#include <fstream>
#include <memory>
#include <optional>

#include "CLI11.hpp"

#include "renner/catalog.hpp"
#include "renner/data_format.hpp"
#include "renner/errors.hpp"
#include "renner/hecke.hpp"
#include "renner/notation.hpp"
#include "renner/oracle.hpp"

namespace renner::cli {

  namespace {
    struct Source {
      std::size_t rook = 0;
      std::string file;

      void add_to(CLI::App* cmd, bool positional) {
        cmd->add_option("--rook", rook, "Use the built-in rook data of size N")
            ->check(CLI::Range(1, 8));
        if (positional) {
          cmd->add_option("file", file, "RennerData file");
        } else {
          cmd->add_option("--data", file, "RennerData file");
        }
      }

      RennerData load() const {
        if ((rook == 0) == file.empty()) {
          throw CLI::ValidationError("exactly one of --rook or a data file is required");
        }
        return rook != 0 ? rook_data(rook) : from_file(file);
      }
    };

    std::ofstream open_output(std::string const& path) {
      std::ofstream out(path);
      if (!out) {
        throw IoError("cannot write '" + path + "'");
      }
      return out;
    }

    int report_lines(std::ostream& out, std::string const& title, PresentationReport const& r) {
      out << title << ": " << (r.checked - r.failures.size()) << "/" << r.checked
          << " instances hold\n";
      for (auto const& f : r.failures) {
        out << "  FAIL " << f << '\n';
      }
      return r.ok() ? kOk : kFailure;
    }

    int run_verify(RennerMonoid const& m, std::size_t triple_limit, std::ostream& out) {
      int status = kOk;
      status |= report_lines(out, "presentation", m.verify_presentation());

      auto const table = m.enumerate();
      auto       forms = m.normal_forms();
      bool const same  = forms == table.elements;
      out << "normal forms: " << forms.size() << " triples, closure has "
          << table.elements.size() << " elements" << (same ? "" : " (MISMATCH)") << '\n';
      status |= same ? kOk : kFailure;

      HeckeAlgebra const hecke(m);
      status |= report_lines(out, "hecke presentation", hecke.verify_hecke_presentation());

      auto const        products = hecke.structure_constants(table.elements);
      std::size_t const n        = products.size();
      std::size_t       lr_fail  = 0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          auto const right = hecke.multiply_right_fold(hecke.basis(table.elements[i]),
                                                       hecke.basis(table.elements[j]));
          lr_fail += right == products.product(i, j) ? 0 : 1;
        }
      }
      out << "left/right folding: " << (n * n - lr_fail) << "/" << n * n << " pairs agree\n";
      status |= lr_fail == 0 ? kOk : kFailure;

      if (n * n * n <= triple_limit) {
        std::size_t assoc_fail = 0;
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
              HeckeElement lhs;
              for (auto const& [r, c] : products.product(i, j).terms()) {
                lhs += c * products.product(products.index_of(r), k);
              }
              HeckeElement rhs;
              for (auto const& [r, c] : products.product(j, k).terms()) {
                rhs += c * products.product(i, products.index_of(r));
              }
              assoc_fail += lhs == rhs ? 0 : 1;
            }
          }
        }
        out << "hecke associativity: " << (n * n * n - assoc_fail) << "/" << n * n * n
            << " triples\n";
        status |= assoc_fail == 0 ? kOk : kFailure;
      } else {
        out << "hecke associativity: skipped (" << n * n * n << " triples > limit)\n";
      }
      out << (status == kOk ? "all checks passed\n" : "FAILED\n");
      return status;
    }
  }  // namespace

  int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Renner monoids, their generic Hecke algebras and a matrix oracle", "renner"};
    app.require_subcommand(1);

    std::size_t catalog_rook = 0;
    auto*       catalog      = app.add_subcommand("catalog", "Print built-in data");
    catalog->add_option("--rook", catalog_rook, "Rook data of size N")
        ->required()
        ->check(CLI::Range(1, 8));

    Source validate_src;
    auto*  validate = app.add_subcommand("validate", "Check Renner-Coxeter data");
    validate_src.add_to(validate, true);

    Source elements_src;
    auto*  elements = app.add_subcommand("elements", "List normal forms with lengths");
    elements_src.add_to(elements, true);

    Source      mul_src;
    std::string mul_a;
    std::string mul_b;
    auto*       mul = app.add_subcommand("mul", "Multiply two monoid elements");
    mul_src.add_to(mul, false);
    mul->add_option("a", mul_a, "Left operand, e.g. \"s1 . e1 .\"")->required();
    mul->add_option("b", mul_b, "Right operand")->required();

    Source                     hmul_src;
    std::string                hmul_a;
    std::string                hmul_b;
    std::optional<long long>   hmul_q;
    std::string                hmul_table;
    auto* hmul = app.add_subcommand("hecke-mul", "Multiply two basis elements T_a T_b");
    hmul_src.add_to(hmul, false);
    hmul->add_option("a", hmul_a, "Left operand");
    hmul->add_option("b", hmul_b, "Right operand");
    hmul->add_option("--q", hmul_q, "Specialise at this integer");
    hmul->add_option("--table", hmul_table, "Write the full structure constant table");

    Source      verify_src;
    std::size_t triple_limit = 50'000;
    auto*       verify = app.add_subcommand("verify", "Run the relation and invariant suites");
    verify_src.add_to(verify, true);
    verify->add_option("--triple-limit", triple_limit,
                       "Skip Hecke associativity above this many triples");

    std::size_t oracle_n   = 2;
    unsigned    oracle_p   = 2;
    std::size_t oracle_cap = FiniteMatrixMonoid::kDefaultCap;
    std::string emit_table;
    std::string emit_generic;
    auto*       oracle = app.add_subcommand("oracle-compare",
                                            "Compare with the Iwahori-Hecke algebra of M_n(F_p)");
    oracle->alias("oracle");
    oracle->add_option("--n", oracle_n, "Matrix size")->check(CLI::Range(1, 4));
    oracle->add_option("--p", oracle_p, "Prime");
    oracle->add_option("--cap", oracle_cap, "Maximum number of matrices");
    oracle->add_option("--emit-table", emit_table, "Write the oracle's rational table");
    oracle->add_option("--emit-generic", emit_generic, "Write the generic table at q = p");

    try {
      app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? kOk : kUsage;
    }

    try {
      if (*catalog) {
        out << to_data_text(rook_data(catalog_rook));
        return kOk;
      }
      if (*validate) {
        auto const data   = validate_src.load();
        auto const report = validate_data(data);
        if (report.valid()) {
          out << "valid (" << report.reduced_checked << " reduced witnesses checked)\n";
          return kOk;
        }
        out << "invalid: " << report.violations.size() << " violation(s)\n";
        for (auto const& v : report.violations) {
          out << "  " << v.message << '\n';
        }
        return kFailure;
      }
      if (*elements) {
        RennerMonoid const m(elements_src.load());
        auto const         table = m.enumerate();
        for (auto const& r : table.elements) {
          out << to_notation(m, r) << '\t' << m.length(r) << '\n';
        }
        out << "# " << table.elements.size() << " elements, " << table.idempotents.size()
            << " idempotents\n";
        return kOk;
      }
      if (*mul) {
        RennerMonoid const m(mul_src.load());
        out << to_notation(m, m.multiply(parse_element(m, mul_a), parse_element(m, mul_b)))
            << '\n';
        return kOk;
      }
      if (*hmul) {
        RennerMonoid const m(hmul_src.load());
        HeckeAlgebra const hecke(m);
        if (!hmul_table.empty()) {
          auto const table = hecke.structure_constants(m.enumerate().elements);
          auto       file  = open_output(hmul_table);
          if (hmul_q) {
            write_table(file, m, table.specialize(*hmul_q));
          } else {
            write_table(file, m, table);
          }
        }
        if (hmul_a.empty() != hmul_b.empty()) {
          throw CLI::ValidationError("hecke-mul needs two operands");
        }
        if (!hmul_a.empty()) {
          auto product = hecke.multiply(hecke.basis(parse_element(m, hmul_a)),
                                        hecke.basis(parse_element(m, hmul_b)));
          if (hmul_q) {
            HeckeElement specialised;
            for (auto const& [r, c] : product.terms()) {
              specialised.add(r, IntPolynomial(c.eval_at(*hmul_q)));
            }
            product = specialised;
          }
          out << to_string(m, product) << '\n';
        } else if (hmul_table.empty()) {
          throw CLI::ValidationError("hecke-mul needs two operands or --table");
        }
        return kOk;
      }
      if (*verify) {
        RennerMonoid const m(verify_src.load());
        return run_verify(m, triple_limit, out);
      }
      if (*oracle) {
        auto const               start = std::chrono::steady_clock::now();
        FiniteMatrixMonoid const mm(oracle_n, oracle_p, oracle_cap);
        RennerMonoid const       rook(rook_data(oracle_n));
        auto const               bd      = bruhat_decompose(mm, rook);
        auto const               table   = iwahori_structure_constants(mm, rook, bd);
        HeckeAlgebra const       hecke(rook);
        auto const               generic = hecke.structure_constants(bd.elements).specialize(oracle_p);
        if (!emit_table.empty()) {
          auto file = open_output(emit_table);
          write_table(file, rook, table);
        }
        if (!emit_generic.empty()) {
          auto file = open_output(emit_generic);
          write_table(file, rook, generic);
        }
        auto const report = compare_tables(rook, table, generic);
        auto const secs   = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
        out << "M_" << oracle_n << "(F_" << oracle_p << "): " << mm.size() << " matrices, "
            << bd.elements.size() << " double cosets, |B| = " << mm.borel().size() << '\n';
        out << report.summary() << " (" << secs.count() << " s)\n";
        for (auto const& m : report.mismatches) {
          out << "  mismatch: " << m << '\n';
        }
        return report.ok() ? kOk : kFailure;
      }
    } catch (CLI::ValidationError const& e) {
      err << "error: " << e.what() << '\n';
      return kUsage;
    } catch (ParseError const& e) {
      err << "parse error: " << e.what() << '\n';
      return kUsage;
    } catch (IoError const& e) {
      err << "error: " << e.what() << '\n';
      return kUsage;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return kFailure;
    }
    return kUsage;
  }

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    std::vector<char const*> argv{"renner"};
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
  }

}  // namespace renner::cli
