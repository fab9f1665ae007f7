// Copyright 2026 The rglab Authors
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

#ifndef RGLAB_CLI_H_
#define RGLAB_CLI_H_

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>

#include "rglab/clt.h"
#include "rglab/es_probe.h"

namespace rglab {

inline constexpr const char* kVersion = "0.1.0";

// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitClaimViolation = 2,
  kExitIo = 3,
};

// File-system failure, reported with the offending path.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Runs one subcommand (`args` excludes the program name). Diagnostics go to
// `err`; stdout-style output goes to `out`.
int dispatch(std::span<const std::string> args, std::ostream& out, std::ostream& err);
int dispatch(int argc, char** argv);

// printf("%.17g"): round-trips every double.
std::string format_double(double x);

// Column headers of the CSV outputs.
inline constexpr const char* kProbeColumns =
    "trial,mode,n,c,ell,k,d_size,w_size,event_E,claim_subset,claim_small,locality,"
    "f_was_edge,z,z_tilde";
inline constexpr const char* kCltColumns = "trial,n,z,z_tilde,z_hat";
inline constexpr const char* kCensusColumns = "v,ball_size,boundary_size,is_tree,phi,phi_local";
inline constexpr const char* kMantleColumns = "trial,max_size,num_components,event_E";

// Writes `# <meta>` and the header when `meta` is non-empty, then one line per
// row. Absent z_tilde / z_hat are written as empty cells.
void write_probe_csv(std::ostream& os, const std::string& meta,
                     std::span<const ResampleTrialRecord> rows);
void write_clt_csv(std::ostream& os, const std::string& meta, std::span<const CltTrial> rows);

// JSON objects: {"num_components", "largest", "size_histogram"} and
// {"k", "core_size", "mantle_max_component", "mantle_size_histogram"}.
std::string labeling_json(const ComponentLabeling& labeling);
std::string core_json(const CoreResult& core);

}  // namespace rglab

#endif  // RGLAB_CLI_H_
