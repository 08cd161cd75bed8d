#pragma once

// The bhconst command line: constants, verify, figure and experiment
// subcommands.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
// 3 I/O failure, 4 capacity exceeded.

#include "bhc/ksz.hpp"
#include "bhc/sequences.hpp"
#include "bhc/table_io.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace bhc {

enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2, kExitIo = 3, kExitCapacity = 4 };

inline constexpr std::uint64_t kDefaultFigureNMax = 50;
inline constexpr unsigned kDefaultTSteps = 100;

int cmd_constants(const SequenceSpec& spec, std::uint64_t n_max, const OutputSpec& out, std::ostream& os);

/// suite: monotonicity, sandwich, reduction, fundamental-lemma, block-ratios
/// or ksz-exhaustive. Writes the JSON report, returns 0 or 1.
int cmd_verify(const std::string& suite, std::uint64_t n_max, const OutputSpec& out, std::ostream& os);

/// name: pcr (real) or pcrx (complex). Emits the coefficient curves t,p,c,r
/// on t = 1 + i/t_steps and the surface n,t,upper_bound. With a CSV
/// destination file "x.csv" the surface goes to "x_surface.csv".
int cmd_figure(const std::string& name, unsigned t_steps, std::uint64_t n_max, const OutputSpec& out,
               std::ostream& os);

struct ExperimentRequest {
    std::string kind; // ratio, ksz, divergence
    unsigned m = 2;
    std::vector<unsigned> n_list;
    double q = 0.0; // 0: kind-specific default
    std::vector<std::size_t> dims;
    std::string form_path;
    std::uint64_t seed = 0;
    unsigned trials = 0; // 0: kind-specific default
    std::string mode;
    unsigned restarts = kDefaultRestarts;
};

int cmd_experiment(const ExperimentRequest& request, const OutputSpec& out, std::ostream& os);

/// Parses argv, dispatches, and maps exceptions to exit codes. Diagnostics
/// go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace bhc
