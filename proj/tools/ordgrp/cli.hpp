#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ordgrp::cli {

/// args[0] is the program name. Writes one JSON document to out on success.
/// Returns 0 on success, 2 for input or usage errors, 3 when a configured
/// resource bound was exceeded.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ordgrp::cli
