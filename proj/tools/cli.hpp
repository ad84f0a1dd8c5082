#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "crtube/hol_solver.hpp"

namespace crtube::cli {

enum class ExitCode : int { ok = 0, check_failed = 1, input_error = 2 };

struct RunConfig {
  /// analyze, hol, compare, endocone, catalog.
  std::string command;
  /// catalog: list, run, run-all.
  std::string subcommand;
  std::vector<std::string> inputs;
  Backend backend = Backend::automatic;
  double tol = kDefaultTol;
  int max_degree = 6;
  /// 0 means n.
  int max_k = 0;
  std::uint64_t seed = 42;
  bool json = false;

  // endocone
  std::string phi_path;
  int d = 0;
  std::string a;

  // catalog run
  std::optional<int> p;
  std::optional<int> q;
  std::optional<std::string> alpha;
};

/// Runs one command, writing the report to out and diagnostics to err.
ExitCode run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace crtube::cli
