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

#ifndef RENNER_ERRORS_HPP_
#define RENNER_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace renner {

  //! Base class of every exception thrown by this library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Enumeration produced more elements than the configured cap.
  class CapExceeded : public Error {
   public:
    using Error::Error;
  };

  class MalformedGraph : public Error {
   public:
    using Error::Error;
  };

  //! Renner-Coxeter data failed validation or is structurally unusable.
  class InvalidData : public Error {
   public:
    using Error::Error;
  };

  //! The witness passed to a meet is not double-coset reduced.
  class NotReduced : public Error {
   public:
    using Error::Error;
  };

  class NoGreatestElement : public Error {
   public:
    using Error::Error;
  };

  class WrongCatalog : public Error {
   public:
    using Error::Error;
  };

  class NotPrime : public Error {
   public:
    using Error::Error;
  };

  //! The double cosets B r B do not partition the matrix monoid.
  class CoverFailure : public Error {
   public:
    using Error::Error;
  };

  //! Malformed input text; the message carries line or field context.
  class ParseError : public Error {
   public:
    using Error::Error;
  };

  class IoError : public Error {
   public:
    using Error::Error;
  };

}  // namespace renner

#endif  // RENNER_ERRORS_HPP_
