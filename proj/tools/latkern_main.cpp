#include <iostream>
#include <string>
#include <vector>

#include "cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const latkern::cli::CommandResult r = latkern::cli::run(args);
  if (r.exit_code == latkern::cli::kInputError || r.exit_code == latkern::cli::kInternalError) {
    std::cerr << "latkern: " << r.report.value("error", std::string("error")) << '\n';
  }
  std::cout << r.rendered();
  return r.exit_code;
}
