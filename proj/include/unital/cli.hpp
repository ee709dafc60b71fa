#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace unital::cli {

/// Verbs: construct, verify, classify, zoo, report. `args` excludes the
/// program name. Returns 0 when every verdict passes, 1 when a check
/// fails and 2 on usage or input errors.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

} // namespace unital::cli
