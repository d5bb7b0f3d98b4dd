// stderr diagnostics gated by the TORICGRAPH_LOG environment variable
// (0/unset = quiet, 1 = progress, 2 = engine internals).
#pragma once

#include <string>

namespace toricgraph {

int log_level();
void log_line(int level, const std::string& message);

}  // namespace toricgraph
