// Tiny file helpers for the shipped data files.
#pragma once

#include <string>
#include <vector>

namespace fivesel {

// Whole-file read; throws std::runtime_error with the path on failure.
std::string read_file(const std::string& path);

// Split on runs of whitespace, dropping empty pieces.
std::vector<std::string> split_ws(const std::string& s);

}  // namespace fivesel
