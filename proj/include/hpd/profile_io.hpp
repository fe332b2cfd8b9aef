#pragma once

#include <stdexcept>
#include <string>

#include "hpd/profile.hpp"

namespace hpd {

// Parse/format failure with a position in the source text (1-based;
// line 0 means the position is unknown).
struct ParseError : std::runtime_error {
  int line = 0, column = 0;
  ParseError(const std::string& msg, int line_, int column_);
};

// Converts a byte offset into 1-based line/column.
void offset_to_line_col(const std::string& text, size_t offset, int& line, int& column);

LefschetzProfile parse_profile(const std::string& text);
std::string serialize_profile(const LefschetzProfile& p);

LefschetzProfile load_profile(const std::string& path);  // IO errors -> std::runtime_error
void save_profile(const LefschetzProfile& p, const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& bytes);

}  // namespace hpd
