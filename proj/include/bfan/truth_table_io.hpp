#pragma once

#include <iosfwd>
#include <string>

#include "bfan/boolean_function.hpp"

namespace bfan {

/// "TT1": ASCII header line `tt1 n=<n>` followed by 2^n characters '0'/'1'
/// (row b = bit b), optional trailing newline.
///
/// "TTB": 8-byte magic `BFANTTB1`, one byte n, then ceil(2^n/8) bytes with
/// row b stored at bit (b & 7) of byte (b >> 3), LSB first.

void write_tt1(std::ostream& os, const BooleanFunction& f);
void write_ttb(std::ostream& os, const BooleanFunction& f);

BooleanFunction read_tt1(std::istream& is);
BooleanFunction read_ttb(std::istream& is);

/// Dispatches on content: TTB magic wins, otherwise TT1.
BooleanFunction read_truth_table_file(const std::string& path);
void write_truth_table_file(const std::string& path, const BooleanFunction& f, bool binary);

} // namespace bfan
