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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bellport/protocol.hpp"

namespace bellport::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 2;
inline constexpr int kExitUsage = 64;

const char* version();

const std::vector<std::string>& subcommands();

struct ExperimentConfig {
    std::string subcommand;
    std::uint64_t seed = 42;
    /// Unset means the subcommand default.
    std::optional<std::size_t> trials;
    std::optional<int> qubits;
    std::optional<int> dim;
    std::optional<double> phi;
    std::optional<double> theta;
    /// "0-1,2-3" style site pairs.
    std::string pairing;
    /// Empty writes to the given stream.
    std::string out;
    bool deterministic = false;
    bool enumerate_branches = false;
    std::string ensemble = "perturbed";
    /// fig2 only: scatter and bound line data file.
    std::string plot;
};

/// "# key=value" lines describing the run. The timestamp line is omitted when deterministic.
std::string header(const ExperimentConfig& config);

/// Parses "0-1,2-3". Throws std::invalid_argument on malformed text.
std::vector<SitePair> parse_pairing(const std::string& text);

/// Runs one subcommand, writing the header and CSV table to config.out or `out`.
/// Returns kExitOk, kExitViolation, or kExitUsage for invalid sizes.
int run(const ExperimentConfig& config, std::ostream& out);

/// Whitespace-delimited (omega, fidelity) scatter, two blank lines, then the
/// bound line sampled at 100 points on [-1, 3]. Throws EmptyData on no rows.
std::string plotdata(std::span<const Fig2Row> rows);

/// Writes plotdata(rows) to `path`. No file is created for empty input.
void emit_plotdata(std::span<const Fig2Row> rows, const std::string& path);

/// Command-line entry point.
int main(int argc, char** argv);

}  // namespace bellport::cli
