#include "toricgraph/log.hpp"

#include <cstdio>
#include <cstdlib>

namespace toricgraph {

int log_level() {
    static int level = [] {
        const char* env = std::getenv("TORICGRAPH_LOG");
        if (env == nullptr) return 0;
        return std::atoi(env);
    }();
    return level;
}

void log_line(int level, const std::string& message) {
    if (log_level() >= level) {
        std::fprintf(stderr, "[toricgraph] %s\n", message.c_str());
    }
}

}  // namespace toricgraph
