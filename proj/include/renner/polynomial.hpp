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
// Dense polynomials in q with arbitrary-precision integer coefficients.

#ifndef RENNER_POLYNOMIAL_HPP_
#define RENNER_POLYNOMIAL_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace renner {

  using BigInt = boost::multiprecision::cpp_int;

  class IntPolynomial {
   public:
    IntPolynomial() = default;
    IntPolynomial(long long constant);  // NOLINT(runtime/explicit)
    explicit IntPolynomial(BigInt constant);
    //! Coefficients by increasing degree; trailing zeros are dropped.
    explicit IntPolynomial(std::vector<BigInt> coefficients);

    static IntPolynomial q() {
      return monomial(1);
    }
    static IntPolynomial monomial(std::size_t degree, BigInt coefficient = 1);

    bool is_zero() const noexcept {
      return coeffs_.empty();
    }
    //! -1 for the zero polynomial.
    long degree() const noexcept {
      return static_cast<long>(coeffs_.size()) - 1;
    }
    BigInt coefficient(std::size_t degree) const {
      return degree < coeffs_.size() ? coeffs_[degree] : BigInt(0);
    }
    std::vector<BigInt> const& coefficients() const noexcept {
      return coeffs_;
    }

    //! Horner evaluation.
    BigInt eval_at(BigInt const& q0) const;

    IntPolynomial& operator+=(IntPolynomial const& other);
    IntPolynomial& operator-=(IntPolynomial const& other);
    IntPolynomial& operator*=(IntPolynomial const& other);
    IntPolynomial& operator*=(BigInt const& scalar);

    friend IntPolynomial operator+(IntPolynomial a, IntPolynomial const& b) {
      return a += b;
    }
    friend IntPolynomial operator-(IntPolynomial a, IntPolynomial const& b) {
      return a -= b;
    }
    friend IntPolynomial operator*(IntPolynomial a, IntPolynomial const& b) {
      return a *= b;
    }
    friend IntPolynomial operator-(IntPolynomial a) {
      return a *= BigInt(-1);
    }
    friend bool operator==(IntPolynomial const&, IntPolynomial const&) = default;

    //! Highest degree first, e.g. "q^2-q", "2q+1", "-1", "0".
    std::string to_string() const;
    //! Inverse of to_string; whitespace is ignored.  Throws ParseError.
    static IntPolynomial parse(std::string_view text);

   private:
    void trim();

    std::vector<BigInt> coeffs_;
  };

}  // namespace renner

#endif  // RENNER_POLYNOMIAL_HPP_
