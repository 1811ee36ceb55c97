#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "ordgrp/presentation.hpp"

namespace ordgrp::testing {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::string data_path(const std::string& name) { return std::string(ORDGRP_DATA_DIR) + "/" + name; }

/// One of the bundled presentations, e.g. "weeks".
inline pres::Presentation bundled(const std::string& name) {
  return pres::parse_presentation(read_file(data_path(name + ".pres")));
}

}  // namespace ordgrp::testing
