#include "syz/problem.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "syz/field.hpp"

namespace syz {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::stringstream ss(s);
  while (std::getline(ss, cur, ',')) out.push_back(trim(cur));
  return out;
}

std::vector<std::string> split_tokens(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

bool is_ident(const std::string& s) {
  if (s.empty() || !(std::isalpha((unsigned char)s[0]) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum((unsigned char)c) || c == '_')) return false;
  return true;
}

[[noreturn]] void fail_at(int line, const std::string& msg) {
  fail("line " + std::to_string(line) + ": " + msg);
}

long long parse_int_at(int line, const std::string& key, const std::string& text) {
  try {
    size_t used = 0;
    long long v = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    fail_at(line, "'" + key + "' needs an integer, got '" + text + "'");
  }
}

PolyAst parse_checked(const SpannedPoly& sp, const std::vector<std::string>& vars) {
  try {
    return parse_poly(sp.text, vars);
  } catch (const ParseError& e) {
    fail_at(sp.line, e.message + " in '" + sp.text + "'");
  }
}

// nonzero and homogeneous, otherwise a line-tagged error naming the role
int require_homogeneous(const SpannedPoly& sp, const char* role) {
  if (sp.ast.terms.empty()) fail_at(sp.line, std::string(role) + " '" + sp.text + "' is zero");
  auto d = homogeneous_degree(sp.ast);
  if (!d) fail_at(sp.line, std::string(role) + " '" + sp.text + "' is not homogeneous");
  return *d;
}

}  // namespace

const std::string& TaskBlock::need(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end())
    fail("line " + std::to_string(line) + ": task '" + command +
         "' is missing the '" + key + "' parameter");
  return it->second;
}

const RingBlock* ProblemFile::find_ring(const std::string& name) const {
  for (const auto& r : rings)
    if (r.name == name) return &r;
  return nullptr;
}

const ModuleBlock* ProblemFile::find_module(const std::string& name) const {
  for (const auto& m : modules)
    if (m.name == name) return &m;
  return nullptr;
}

std::vector<std::string> ProblemFile::ring_vars(const RingBlock& rb) const {
  if (!rb.is_fibre) return rb.vars;
  auto out = ring_vars(*find_ring(rb.left));
  for (const auto& v : ring_vars(*find_ring(rb.right))) out.push_back(v);
  return out;
}

ProblemFile parse_problem(const std::string& text) {
  ProblemFile pf;

  enum class Section { None, Ring, Fibre, Module, Task };
  Section cur = Section::None;
  std::set<std::string> seen_keys;  // reset per block; 'column' is exempt

  // raw column values are held until the block's 'gens' is known
  struct RawColumn {
    std::string value;
    int line;
  };
  std::vector<RawColumn> raw_columns;

  auto close_block = [&](int line) {
    if (cur == Section::Ring || cur == Section::Fibre) {
      const auto& rb = pf.rings.back();
      if (rb.is_fibre) {
        if (rb.left.empty() || rb.right.empty())
          fail_at(rb.line, "fibre '" + rb.name + "' needs both 'left' and 'right'");
      } else if (rb.vars.empty()) {
        fail_at(rb.line, "ring '" + rb.name + "' has no vars");
      }
    } else if (cur == Section::Module) {
      auto& mb = pf.modules.back();
      if (mb.over.empty()) fail_at(mb.line, "module '" + mb.name + "' has no 'over' ring");
      if (mb.kind == ModuleKind::Quotient && mb.ideal.empty())
        fail_at(mb.line, "quotient module '" + mb.name + "' has an empty ideal");
      if (mb.kind == ModuleKind::PowerQuotient && !seen_keys.count("power"))
        fail_at(mb.line, "power-quotient module '" + mb.name + "' needs 'power'");
      if (mb.kind != ModuleKind::PowerQuotient && seen_keys.count("power"))
        fail_at(mb.line, "'power' only makes sense for kind = power-quotient");
      if (mb.kind != ModuleKind::Quotient && !mb.ideal.empty())
        fail_at(mb.line, "'ideal' only makes sense for kind = quotient");
      if (mb.kind != ModuleKind::Presentation && (!raw_columns.empty() || seen_keys.count("gens")))
        fail_at(mb.line, "'gens' and 'column' only make sense for kind = presentation");
      if (mb.kind == ModuleKind::Presentation && raw_columns.empty())
        fail_at(mb.line, "presentation module '" + mb.name + "' has no columns");
      for (const auto& rc : raw_columns) {
        size_t colon = rc.value.find(':');
        if (colon == std::string::npos)
          fail_at(rc.line, "column needs the form 'degree : entry, entry, ...'");
        PresentationColumn col;
        col.line = rc.line;
        col.degree = (int)parse_int_at(rc.line, "column", trim(rc.value.substr(0, colon)));
        for (const auto& piece : split_commas(rc.value.substr(colon + 1)))
          col.entries.push_back({{}, piece, rc.line});
        if (col.entries.size() != mb.gens.size())
          fail_at(rc.line, "column has " + std::to_string(col.entries.size()) +
                               " entries but the cover has " + std::to_string(mb.gens.size()) +
                               " generators");
        mb.columns.push_back(std::move(col));
      }
      raw_columns.clear();
    } else if (cur == Section::Task) {
      if (pf.tasks.back().command.empty())
        fail_at(pf.tasks.back().line, "task has no 'command'");
    }
    (void)line;
    seen_keys.clear();
  };

  std::set<std::string> ring_names, module_names;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string line = trim(raw);
    if (line.empty()) continue;

    size_t eq = line.find('=');
    if (eq == std::string::npos) {
      // section header
      auto toks = split_tokens(line);
      close_block(lineno);
      if (toks[0] == "ring" || toks[0] == "fibre") {
        if (toks.size() != 2 || !is_ident(toks[1]))
          fail_at(lineno, "expected '" + toks[0] + " <name>'");
        if (!ring_names.insert(toks[1]).second)
          fail_at(lineno, "ring '" + toks[1] + "' is declared twice");
        RingBlock rb;
        rb.name = toks[1];
        rb.line = lineno;
        rb.is_fibre = (toks[0] == "fibre");
        pf.rings.push_back(std::move(rb));
        cur = (toks[0] == "fibre") ? Section::Fibre : Section::Ring;
      } else if (toks[0] == "module") {
        if (toks.size() != 2 || !is_ident(toks[1]))
          fail_at(lineno, "expected 'module <name>'");
        if (!module_names.insert(toks[1]).second)
          fail_at(lineno, "module '" + toks[1] + "' is declared twice");
        ModuleBlock mb;
        mb.name = toks[1];
        mb.line = lineno;
        pf.modules.push_back(std::move(mb));
        cur = Section::Module;
      } else if (toks[0] == "task") {
        if (toks.size() != 1) fail_at(lineno, "expected 'task' with nothing after it");
        TaskBlock tb;
        tb.line = lineno;
        pf.tasks.push_back(std::move(tb));
        cur = Section::Task;
      } else {
        fail_at(lineno, "expected a section header or 'key = value', got '" + line + "'");
      }
      continue;
    }

    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) fail_at(lineno, "missing key before '='");
    if (value.empty()) fail_at(lineno, "missing value for '" + key + "'");
    if (cur == Section::None) fail_at(lineno, "key '" + key + "' appears before any section header");
    if (key != "column" && !seen_keys.insert(key).second)
      fail_at(lineno, "duplicate key '" + key + "'");

    switch (cur) {
      case Section::Ring: {
        auto& rb = pf.rings.back();
        if (key == "vars") {
          for (const auto& v : split_commas(value)) {
            if (!is_ident(v)) fail_at(lineno, "bad variable name '" + v + "'");
            if (std::find(rb.vars.begin(), rb.vars.end(), v) != rb.vars.end())
              fail_at(lineno, "variable '" + v + "' is listed twice");
            rb.vars.push_back(v);
          }
        } else if (key == "relations") {
          for (const auto& p : split_commas(value)) rb.relations.push_back({{}, p, lineno});
        } else {
          fail_at(lineno, "unknown key '" + key + "' in a ring block");
        }
        break;
      }
      case Section::Fibre: {
        auto& rb = pf.rings.back();
        if (key == "left")
          rb.left = value;
        else if (key == "right")
          rb.right = value;
        else
          fail_at(lineno, "unknown key '" + key + "' in a fibre block");
        if (!ring_names.count(value))
          fail_at(lineno, "'" + value + "' does not name a ring declared above");
        break;
      }
      case Section::Module: {
        auto& mb = pf.modules.back();
        if (key == "over") {
          if (!ring_names.count(value))
            fail_at(lineno, "'" + value + "' does not name a ring declared above");
          mb.over = value;
        } else if (key == "kind") {
          if (value == "k")
            mb.kind = ModuleKind::ResidueField;
          else if (value == "free")
            mb.kind = ModuleKind::Free;
          else if (value == "maximal-ideal")
            mb.kind = ModuleKind::MaximalIdeal;
          else if (value == "power-quotient")
            mb.kind = ModuleKind::PowerQuotient;
          else if (value == "quotient")
            mb.kind = ModuleKind::Quotient;
          else if (value == "presentation")
            mb.kind = ModuleKind::Presentation;
          else
            fail_at(lineno, "unknown module kind '" + value +
                                "' (one of: k, free, maximal-ideal, power-quotient, "
                                "quotient, presentation)");
        } else if (key == "power") {
          mb.power = (int)parse_int_at(lineno, key, value);
          if (mb.power < 1) fail_at(lineno, "'power' must be at least 1");
        } else if (key == "ideal") {
          for (const auto& p : split_commas(value)) mb.ideal.push_back({{}, p, lineno});
        } else if (key == "gens") {
          mb.gens.clear();
          for (const auto& g : split_commas(value))
            mb.gens.push_back((int)parse_int_at(lineno, key, g));
          if (mb.gens.empty()) fail_at(lineno, "'gens' lists no generator degrees");
        } else if (key == "column") {
          raw_columns.push_back({value, lineno});
        } else {
          fail_at(lineno, "unknown key '" + key + "' in a module block");
        }
        break;
      }
      case Section::Task: {
        auto& tb = pf.tasks.back();
        if (key == "command") {
          auto toks = split_tokens(value);
          tb.command = toks[0];
          if (toks.size() == 2) tb.target = toks[1];
          if (toks.size() > 2) fail_at(lineno, "command takes at most two words");
        } else {
          tb.params[key] = value;
          tb.param_lines[key] = lineno;
        }
        break;
      }
      case Section::None:
        break;  // unreachable, handled above
    }
  }
  close_block(lineno + 1);

  // Name resolution and polynomial checks now that every block is known.
  for (auto& rb : pf.rings) {
    if (rb.is_fibre) {
      auto lv = pf.ring_vars(*pf.find_ring(rb.left));
      auto rv = pf.ring_vars(*pf.find_ring(rb.right));
      for (const auto& v : lv)
        if (std::find(rv.begin(), rv.end(), v) != rv.end())
          fail_at(rb.line, "fibre '" + rb.name + "': factors share the variable '" + v + "'");
      continue;
    }
    for (auto& sp : rb.relations) {
      sp.ast = parse_checked(sp, rb.vars);
      if (require_homogeneous(sp, "relation") < 1)
        fail_at(sp.line, "relation '" + sp.text + "' has degree 0");
    }
  }

  for (auto& mb : pf.modules) {
    auto vars = pf.ring_vars(*pf.find_ring(mb.over));
    for (auto& sp : mb.ideal) {
      sp.ast = parse_checked(sp, vars);
      if (require_homogeneous(sp, "ideal entry") < 1)
        fail_at(sp.line, "ideal entry '" + sp.text + "' has degree 0");
    }
    for (auto& col : mb.columns) {
      for (size_t i = 0; i < col.entries.size(); ++i) {
        auto& sp = col.entries[i];
        sp.ast = parse_checked(sp, vars);
        if (sp.ast.terms.empty()) continue;  // zero entries are fine anywhere
        auto d = homogeneous_degree(sp.ast);
        if (!d) fail_at(sp.line, "entry '" + sp.text + "' is not homogeneous");
        int want = col.degree - mb.gens[i];
        if (*d != want)
          fail_at(sp.line, "entry '" + sp.text + "' has degree " + std::to_string(*d) +
                               ", the column needs degree " + std::to_string(want) +
                               " over generator " + std::to_string(i));
      }
    }
  }

  static const std::set<std::string> commands = {
      "hilbert",  "resolve", "betti",          "regularity", "purity",   "koszul",
      "cone-decompose", "catalog", "verify", "construct",  "scan-q511"};
  static const std::set<std::string> task_keys = {
      "module", "ring", "imax", "dmax", "seed", "z", "trials", "max-gens", "max-deg"};
  static const std::set<std::string> int_keys = {"imax",   "dmax",     "seed",
                                                 "trials", "max-gens", "max-deg"};
  for (auto& tb : pf.tasks) {
    if (!commands.count(tb.command)) fail_at(tb.line, "unknown command '" + tb.command + "'");
    bool wants_target = (tb.command == "verify" || tb.command == "construct");
    if (wants_target && tb.target.empty())
      fail_at(tb.line, "'" + tb.command + "' needs a second word naming what to run");
    if (!wants_target && !tb.target.empty())
      fail_at(tb.line, "unexpected word '" + tb.target + "' after '" + tb.command + "'");
    for (const auto& [key, value] : tb.params) {
      if (!task_keys.count(key)) fail_at(tb.param_lines.at(key), "unknown key '" + key + "' in a task");
      if (int_keys.count(key)) parse_int_at(tb.param_lines.at(key), key, value);
    }
    if (tb.has("module") && !pf.find_module(tb.params.at("module")))
      fail_at(tb.param_lines.at("module"), "unknown module '" + tb.params.at("module") + "'");
    if (tb.has("ring") && !pf.find_ring(tb.params.at("ring")))
      fail_at(tb.param_lines.at("ring"), "unknown ring '" + tb.params.at("ring") + "'");
  }

  return pf;
}

}  // namespace syz
