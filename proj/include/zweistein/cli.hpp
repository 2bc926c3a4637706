#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zweistein {

// Entry point for the `zweistein` tool. args[0] is the program name.
int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace zweistein
