// Command line front end.  Exit status: 0 on success, 2 on usage errors,
// 3 when a computation rejects its input or fails validation.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qstbell::cli {

// args exclude the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_main(int argc, char** argv);

} // namespace qstbell::cli
