// Copyright 2026 The hamca Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hamca {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// Model matrices that break S = S^T or A = -A^T. Indices are 1-based.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& what, std::size_t row, std::size_t col)
      : Error(what), row_(row), col_(col) {}
  explicit ValidationError(const std::string& what) : Error(what) {}

  std::size_t row() const { return row_; }
  std::size_t col() const { return col_; }

 private:
  std::size_t row_ = 0;
  std::size_t col_ = 0;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class DegenerateStateError : public Error {
 public:
  using Error::Error;
};

// [G, H] != 0. The witness is the first nonzero commutator entry (1-based).
class NonCommutingError : public Error {
 public:
  NonCommutingError(const std::string& what, std::size_t row, std::size_t col,
                    std::string witness)
      : Error(what), row_(row), col_(col), witness_(std::move(witness)) {}

  std::size_t row() const { return row_; }
  std::size_t col() const { return col_; }
  const std::string& witness() const { return witness_; }

 private:
  std::size_t row_;
  std::size_t col_;
  std::string witness_;
};

// A conserved quantity changed between consecutive pairs.
class ConservationViolation : public Error {
 public:
  ConservationViolation(const std::string& what, std::size_t step)
      : Error(what), step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

// psi_{n+1} - psi_{n-1} != -i H psi_n at state index `step` (= n + 1).
class RecursionViolation : public Error {
 public:
  RecursionViolation(const std::string& what, std::size_t step)
      : Error(what), step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

// cos(phi) is not invertible for some eigenvalue lambda = 2 sin(phi).
class SingularityError : public Error {
 public:
  SingularityError(const std::string& what, double eigenvalue)
      : Error(what), eigenvalue_(eigenvalue) {}
  double eigenvalue() const { return eigenvalue_; }

 private:
  double eigenvalue_;
};

// Link number L vanishes, so link weights have no continuum meaning.
class OntologicalRegimeError : public Error {
 public:
  OntologicalRegimeError(const std::string& what, double link_number)
      : Error(what), link_number_(link_number) {}
  double link_number() const { return link_number_; }

 private:
  double link_number_;
};

class NumericalFailure : public Error {
 public:
  using Error::Error;
};

class InstabilityError : public NumericalFailure {
 public:
  InstabilityError(const std::string& what, std::size_t step)
      : NumericalFailure(what), step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

// A file could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed input text. `field` names the offending field or record.
class ParseError : public Error {
 public:
  ParseError(const std::string& field, const std::string& what)
      : Error(field + ": " + what), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

}  // namespace hamca
