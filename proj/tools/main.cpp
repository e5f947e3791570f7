#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "famloc/errors.hpp"

using namespace famloc;
using namespace famloc::cli;

namespace {

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"famloc: loci of special fibers in parametric polynomial families"};
  std::string command, path, format = "text";
  RunOptions o;
  std::string names;

  app.add_option("command", command, "Subcommand")
      ->required()
      ->check(CLI::IsMember(subcommands()));
  app.add_option("file", path, "Problem file ('-' for stdin)")->required();
  app.add_option("--order", o.order, "Fiber term order")
      ->check(CLI::IsMember({"grevlex", "lex"}))
      ->capture_default_str();
  app.add_option("--seed", o.seed, "Seed for randomized steps")->capture_default_str();
  app.add_option("--trials", o.trials, "Independent trials for dimension loci")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--max-minor-size", o.max_minor_size, "Cap for the minors solver")
      ->capture_default_str();
  app.add_option("--max-branch-depth", o.max_branch_depth, "Cap on case splits per branch")
      ->capture_default_str();
  app.add_option("--containment", o.containment, "Containment method")
      ->check(CLI::IsMember({"normal-form", "ansatz-elimination", "ansatz-minors"}))
      ->capture_default_str();
  app.add_option("--witness-point", o.witness_point, "Group element, comma-separated rationals");
  app.add_option("--veronese-degree", o.veronese_degree, "Degree of the re-embedding")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--names", names, "Comma-separated names for the Veronese variables");
  app.add_option("--max-gl-size", o.max_gl_size, "Largest n for the GL_n orbit in toric-check")
      ->capture_default_str();
  app.add_option("--ideal", o.ideal, "Ideal to use (default I, else the first)");
  app.add_option("--other", o.other, "Second ideal for containment/coincidence (default J)");
  app.add_option("--action", o.action, "Group action for stabilizer-locus and grading");
  app.add_option("--dim", o.dim, "Fiber dimension for fiber-dim-locus");
  app.add_flag("--prime", o.prime, "unital-locus via the prime-fiber dimension route");
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "machine"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }
  if (!names.empty()) {
    std::stringstream ss(names);
    for (std::string n; std::getline(ss, n, ',');) {
      auto b = n.find_first_not_of(' '), e = n.find_last_not_of(' ');
      if (b != std::string::npos) o.names.push_back(n.substr(b, e - b + 1));
    }
  }

  try {
    auto problem = parse_problem(read_input(path));
    auto r = run_command(command, problem, o);
    if (format == "machine") std::cout << machine_document(command, r).dump(2) << "\n";
    else std::cout << r.text << "\n";
    if (r.low_confidence) {
      std::cerr << "warning: independent randomized trials disagreed; result is low-confidence\n";
      return kExitLowConfidence;
    }
    return kExitOk;
  } catch (const ParseError& e) {
    std::cerr << (path == "-" ? "<stdin>" : path) << ":" << e.what() << "\n";
    return kExitParse;
  } catch (const ResourceCapExceeded& e) {
    std::cerr << "resource cap exceeded: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
