#pragma once
// Declarative problem files: named rings (direct quotients or fibre
// products), named modules over them, and an ordered list of tasks. The
// parser resolves every name, checks homogeneity of every polynomial, and
// reports failures with the source line. Field and window choices stay out
// of the file, so one description serves both GF(p) and Q runs.
//
// Grammar (line oriented, '#' starts a comment):
//
//   ring R1
//     vars = X, Y
//     relations = X*Y, X^2 - Y^2     # optional
//   fibre R
//     left = R1
//     right = R2
//   module M
//     over = R
//     kind = quotient                 # k | free | maximal-ideal |
//     ideal = X                       # power-quotient | quotient | presentation
//   module N
//     over = R
//     kind = presentation
//     gens = 0, 0                     # generator degrees of the cover
//     column = 1 : X + Z, Z           # degree : one entry per generator
//   task
//     command = betti                 # or "verify prop-3-3", "construct prop-5-1", ...
//     module = M
//     imax = 6

#include <map>
#include <string>
#include <vector>

#include "syz/polynomial.hpp"

namespace syz {

// A polynomial as written in the file: integer-coefficient AST plus the
// original text (for error echoes) and the line it came from.
struct SpannedPoly {
  PolyAst ast;
  std::string text;
  int line = 0;
};

struct RingBlock {
  std::string name;
  int line = 0;
  bool is_fibre = false;
  std::vector<std::string> vars;      // direct rings only
  std::vector<SpannedPoly> relations; // direct rings only
  std::string left, right;            // fibre blocks only
};

struct PresentationColumn {
  int degree = 0;
  std::vector<SpannedPoly> entries;  // one per generator row
  int line = 0;
};

enum class ModuleKind {
  ResidueField,
  Free,
  MaximalIdeal,
  PowerQuotient,
  Quotient,
  Presentation,
};

struct ModuleBlock {
  std::string name;
  int line = 0;
  std::string over;
  ModuleKind kind = ModuleKind::ResidueField;
  int power = 1;                  // power-quotient only
  std::vector<SpannedPoly> ideal; // quotient only
  std::vector<int> gens = {0};    // presentation cover degrees
  std::vector<PresentationColumn> columns;
};

struct TaskBlock {
  int line = 0;
  std::string command;  // first token: betti, verify, construct, scan-q511, ...
  std::string target;   // second token for verify/construct, else empty
  std::map<std::string, std::string> params;
  std::map<std::string, int> param_lines;

  bool has(const std::string& key) const { return params.count(key) != 0; }
  // returns the parameter or throws a line-tagged error naming the task
  const std::string& need(const std::string& key) const;
};

struct ProblemFile {
  std::vector<RingBlock> rings;
  std::vector<ModuleBlock> modules;
  std::vector<TaskBlock> tasks;

  const RingBlock* find_ring(const std::string& name) const;
  const ModuleBlock* find_module(const std::string& name) const;
  // all variable names of a ring block, factors flattened left-to-right
  std::vector<std::string> ring_vars(const RingBlock& rb) const;
};

// Throws std::runtime_error with a "line N:" prefix on malformed input.
ProblemFile parse_problem(const std::string& text);

}  // namespace syz
