#ifndef LOCC_CLI_HPP
#define LOCC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace locc {

// Exit codes: 0 pass, 1 verdict fail, 2 parameter error, 3 precondition error.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace locc

#endif
