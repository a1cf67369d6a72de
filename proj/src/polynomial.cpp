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

#include "renner/polynomial.hpp"

#include <cctype>

#include "renner/errors.hpp"

namespace renner {

  IntPolynomial::IntPolynomial(long long constant) : IntPolynomial(BigInt(constant)) {}

  IntPolynomial::IntPolynomial(BigInt constant) {
    if (constant != 0) {
      coeffs_.push_back(std::move(constant));
    }
  }

  IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients)
      : coeffs_(std::move(coefficients)) {
    trim();
  }

  IntPolynomial IntPolynomial::monomial(std::size_t degree, BigInt coefficient) {
    std::vector<BigInt> coeffs(degree + 1);
    coeffs[degree] = std::move(coefficient);
    return IntPolynomial(std::move(coeffs));
  }

  void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
      coeffs_.pop_back();
    }
  }

  BigInt IntPolynomial::eval_at(BigInt const& q0) const {
    BigInt result = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      result = result * q0 + *it;
    }
    return result;
  }

  IntPolynomial& IntPolynomial::operator+=(IntPolynomial const& other) {
    if (other.coeffs_.size() > coeffs_.size()) {
      coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
      coeffs_[i] += other.coeffs_[i];
    }
    trim();
    return *this;
  }

  IntPolynomial& IntPolynomial::operator-=(IntPolynomial const& other) {
    if (other.coeffs_.size() > coeffs_.size()) {
      coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
      coeffs_[i] -= other.coeffs_[i];
    }
    trim();
    return *this;
  }

  IntPolynomial& IntPolynomial::operator*=(IntPolynomial const& other) {
    if (is_zero() || other.is_zero()) {
      coeffs_.clear();
      return *this;
    }
    std::vector<BigInt> product(coeffs_.size() + other.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
        product[i + j] += coeffs_[i] * other.coeffs_[j];
      }
    }
    coeffs_ = std::move(product);
    trim();
    return *this;
  }

  IntPolynomial& IntPolynomial::operator*=(BigInt const& scalar) {
    for (auto& c : coeffs_) {
      c *= scalar;
    }
    trim();
    return *this;
  }

  std::string IntPolynomial::to_string() const {
    if (is_zero()) {
      return "0";
    }
    std::string result;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      BigInt const& c = coeffs_[k];
      if (c == 0) {
        continue;
      }
      BigInt const magnitude = c < 0 ? BigInt(-c) : c;
      if (c < 0) {
        result += '-';
      } else if (!result.empty()) {
        result += '+';
      }
      if (magnitude != 1 || k == 0) {
        result += magnitude.str();
      }
      if (k >= 1) {
        result += 'q';
      }
      if (k >= 2) {
        result += '^' + std::to_string(k);
      }
    }
    return result;
  }

  IntPolynomial IntPolynomial::parse(std::string_view text) {
    std::string compact;
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) {
        compact += c;
      }
    }
    if (compact.empty()) {
      throw ParseError("empty polynomial");
    }
    auto const bad = [&]() {
      return ParseError("malformed polynomial '" + std::string(text) + "'");
    };
    IntPolynomial result;
    std::size_t   i = 0;
    while (i < compact.size()) {
      int sign = 1;
      if (compact[i] == '+' || compact[i] == '-') {
        sign = compact[i] == '-' ? -1 : 1;
        ++i;
      } else if (i != 0) {
        throw bad();
      }
      std::size_t const digits_begin = i;
      while (i < compact.size() && std::isdigit(static_cast<unsigned char>(compact[i]))) {
        ++i;
      }
      BigInt coefficient = 1;
      bool   has_digits  = i > digits_begin;
      if (has_digits) {
        coefficient = BigInt(compact.substr(digits_begin, i - digits_begin));
      }
      std::size_t degree = 0;
      if (i < compact.size() && compact[i] == 'q') {
        ++i;
        degree = 1;
        if (i < compact.size() && compact[i] == '^') {
          ++i;
          std::size_t const exp_begin = i;
          while (i < compact.size() && std::isdigit(static_cast<unsigned char>(compact[i]))) {
            ++i;
          }
          if (i == exp_begin) {
            throw bad();
          }
          degree = std::stoul(compact.substr(exp_begin, i - exp_begin));
        }
      } else if (!has_digits) {
        throw bad();
      }
      result += monomial(degree, sign * coefficient);
    }
    return result;
  }

}  // namespace renner
