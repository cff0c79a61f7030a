#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace llva {

// Shortest round-trip decimal representation of a double. Stable across runs,
// so files built from the same inputs compare byte-identical.
std::string format_double(double value);

// Strict double parser; the whole token must be consumed.
// Throws ParseError with `context` in the message on failure.
double parse_double(std::string_view token, const std::string& context);

// Strict integer parser, same contract as parse_double.
long long parse_int(std::string_view token, const std::string& context);

// Splits one CSV line on commas (no quoting; the emitted formats never need it).
std::vector<std::string_view> split_csv_line(std::string_view line);

// Trims ASCII whitespace (incl. trailing '\r' from CRLF files).
std::string_view trim(std::string_view s);

}  // namespace llva
