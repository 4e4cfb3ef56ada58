#pragma once

#include <string>
#include <vector>

#include "ehrhart/construct.hpp"

namespace ehrhart::cli {

// Construction DSL: S(m,d), T(m,d), simplex(d), unitcube(d), symcube(d),
// cross(d), crossodd(l,d), box(l,d), join(E1,E2), prism(E,m), pyr(E),
// dilate(E,k). Throws std::invalid_argument on malformed input.
ExprPtr parse_expr(const std::string& text);

struct RunResult {
  int exit_code = 0;
  std::string out;  // emitted document (also written to --out when given)
  std::string err;
};

// In-process entry point; args exclude the program name.
RunResult run(const std::vector<std::string>& args);

int run_main(int argc, char** argv);

}  // namespace ehrhart::cli
