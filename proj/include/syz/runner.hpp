#pragma once
// Executes the tasks of a parsed problem file in order, writing deterministic
// human-readable results to one stream and, on request, a structured JSON
// report to a file. Field and window defaults live here, not in the file, so
// the same description can be rerun over GF(p) and over Q.

#include <cstdint>
#include <iosfwd>
#include <string>

#include "syz/problem.hpp"

namespace syz {

struct RunOptions {
  long long characteristic = 32003;  // prime; ignored when rational is set
  bool rational = false;             // exact rationals instead of GF(p)
  int imax = 6;                      // homological window, per-task overridable
  int dmax = 10;                     // degree window, per-task overridable
  std::uint64_t seed = 1;
  std::string export_path;           // when nonempty, JSON for every task
};

// Returns 0 when every task ran; on the first failing task writes
// "line N: why" to err and returns 1. Output already produced stays.
int run_problem(const ProblemFile& pf, const RunOptions& opt, std::ostream& out,
                std::ostream& err);

}  // namespace syz
