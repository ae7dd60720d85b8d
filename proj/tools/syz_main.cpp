// Command line front end: parse one problem file, run its tasks in order.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "syz/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exact graded resolutions over quotient rings and fibre products"};

  std::string path;
  syz::RunOptions opt;
  std::string field = "gfp";
  app.add_option("problem-file", path, "task description to run")->required();
  app.add_option("--char", opt.characteristic, "prime field characteristic")
      ->capture_default_str();
  app.add_option("--field", field, "gfp or q")
      ->check(CLI::IsMember({"gfp", "q"}))
      ->capture_default_str();
  app.add_option("--imax", opt.imax, "default homological window")->capture_default_str();
  app.add_option("--dmax", opt.dmax, "default degree window")->capture_default_str();
  app.add_option("--seed", opt.seed, "default seed for randomized searches")
      ->capture_default_str();
  app.add_option("--export", opt.export_path, "write a JSON report of every task here");
  CLI11_PARSE(app, argc, argv);
  opt.rational = (field == "q");

  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot read '" << path << "'\n";
    return 1;
  }
  std::stringstream text;
  text << in.rdbuf();

  try {
    syz::ProblemFile pf = syz::parse_problem(text.str());
    return syz::run_problem(pf, opt, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
}
