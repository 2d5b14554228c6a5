#ifndef FIE_CLI_HPP
#define FIE_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include "fie/solver.hpp"

namespace fie::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitEvalFailure = 1;
inline constexpr int kExitArgumentError = 2;
inline constexpr int kExitNotContraction = 3;
inline constexpr int kExitMaxIter = 4;

enum class Subcommand { solve, check, table, sweep };
enum class OutputFormat { csv, json };

struct RunManifest {
  Subcommand subcommand = Subcommand::solve;
  int example_id = 0;        // 1 or 2; 0 means "use problem_path"
  std::string problem_path;  // config file; empty means "use example_id"
  SolverConfig solver;
  std::string out_path;  // empty means standard output
  OutputFormat format = OutputFormat::csv;
  std::vector<int> sweep_points = {4, 6, 8, 10, 14, 20, 30};
  std::vector<int> sweep_iters = {2, 10, 20};
};

/// Dispatches the manifest, writing results to `out` and diagnostics to
/// `err`.  Returns one of the kExit* codes; never throws.
int run_manifest(const RunManifest& manifest, std::ostream& out, std::ostream& err);

/// Like run_manifest, but honors manifest.out_path (opens the file, falls
/// back to `out` when the path is empty).
int run_manifest_to_path(const RunManifest& manifest, std::ostream& out,
                         std::ostream& err);

}  // namespace fie::cli

#endif  // FIE_CLI_HPP
