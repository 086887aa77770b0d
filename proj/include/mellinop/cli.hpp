#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mellinop::cli {

/// One library operation and the subcommand (with its --op value) that runs it.
struct Route {
  std::string operation;
  std::string subcommand;
  std::string op;
};

/// Every exposed library operation, each listed once.
const std::vector<Route>& routes();

/// Subcommand names in registration order.
const std::vector<std::string>& subcommands();

/// --op values accepted by a subcommand (empty when it has no --op).
std::vector<std::string> ops_of(const std::string& subcommand);

/// Parses and executes one command line. The report (sorted-key JSON) goes
/// to --out when given, else to out; errors go to err as JSON with a
/// category. Returns 0 on success, 1 on input errors, 2 on numerical failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mellinop::cli
