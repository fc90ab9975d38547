#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "freesimplex/freewords.hpp"
#include "freesimplex/quatrep.hpp"

namespace freesimplex::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
};

/// Runs one command line.  args[0] is the program name.  Results go to
/// `out`, progress and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "(g1^-1 g2)(1^-1 g3)(g1^-1 1)".
std::string format_alt_expression(const Word& w);

/// Vertex table with q_1 replaced by q_1^-1.  Used only to exercise the
/// failure paths (the hidden --corrupt-vertices flag).
const VertexTable& corrupted_vertex_table();

}  // namespace freesimplex::cli
