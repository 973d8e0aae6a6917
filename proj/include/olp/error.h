// Copyright 2026 The OnlineLP Authors
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

#ifndef OLP_ERROR_H_
#define OLP_ERROR_H_

#include <stdexcept>
#include <string>

namespace olp {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInstanceError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// A quantity is undefined at the given arguments (e.g. a ratio against 0).
class DomainError : public Error {
 public:
  using Error::Error;
};

class InvalidConfigError : public Error {
 public:
  using Error::Error;
};

// The assumption d_lo > 0 (every capacity strictly positive) does not hold.
class AssumptionError : public Error {
 public:
  using Error::Error;
};

// No point satisfies the equality constraint of a weighted-simplex projection.
class InfeasibleSetError : public Error {
 public:
  using Error::Error;
};

// Numerical breakdown: singular basis, failed KKT verification and similar.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace olp

#endif  // OLP_ERROR_H_
