#ifndef GSTLAB_CLI_HPP
#define GSTLAB_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace gstlab {

// Command dispatcher behind the gstlab binary, separated from main() so
// tests can drive it with string streams.  args excludes the program name.
// Exit status: 0 success / property holds, 1 property fails (a witness is
// printed), 2 usage, parse or validation errors (reported on err).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gstlab

#endif
