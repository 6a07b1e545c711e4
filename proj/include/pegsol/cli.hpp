#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pegsol {

// Dispatch for the pegsol command-line tool. JSON goes to `out`; prose and
// summaries go to `err`. Exit codes: 0 success, 1 usage or I/O failure,
// 2 assertion/verification failure.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pegsol
