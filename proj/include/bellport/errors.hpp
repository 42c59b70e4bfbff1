// Copyright 2026 The bellport Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace bellport {

// Invalid arguments are reported with std::invalid_argument.

/// A forced measurement branch whose probability is below the zero threshold.
class ImpossibleOutcome : public std::runtime_error {
  public:
    explicit ImpossibleOutcome(const std::string& what) : std::runtime_error(what) {}
};

/// An eigensolve whose lowest level is degenerate within tolerance.
class NumericalDegeneracy : public std::runtime_error {
  public:
    NumericalDegeneracy(const std::string& what, double gap) : std::runtime_error(what), gap_(gap) {}
    double gap() const { return gap_; }

  private:
    double gap_;
};

/// An output request with nothing to emit.
class EmptyData : public std::runtime_error {
  public:
    explicit EmptyData(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bellport
