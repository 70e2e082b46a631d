#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hyperspec::cli {

// Stable exit codes.
enum Exit : int {
    kOk = 0,
    kInternal = 1,
    kSpecError = 2,      // bad family spec, bad flag, bad mode string
    kInputError = 3,     // unreadable / malformed / invalid input document
    kModeMismatch = 4,   // mode or bound not applicable to the input
    kSoundness = 5,      // a bound exceeded an exact value, or an oracle disagreed
};

// Runs one command line (without the program name). Reports go to `out` unless --out is
// given; diagnostics and batch summaries go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hyperspec::cli
