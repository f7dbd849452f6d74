#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lef::cli {

  constexpr int exit_ok       = 0;
  constexpr int exit_error    = 1;
  constexpr int exit_negative = 3;

  //! Runs one command; `args` excludes the program name.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace lef::cli
