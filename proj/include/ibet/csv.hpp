#pragma once

#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ibet::csv {

/// Quotes a field when it holds a comma, quote, CR or LF; inner quotes are doubled.
std::string escape(std::string_view field);

/// Writes one record terminated by CRLF.
void write_row(std::ostream& out, std::span<const std::string> fields);

/// Parses RFC 4180 text (CRLF or LF line ends) into records.
/// Throws std::runtime_error on an unterminated quoted field.
std::vector<std::vector<std::string>> parse(std::istream& in);

/// Shortest decimal text that reads back to the same double; "nan", "inf", "-inf" otherwise.
std::string format_double(double value);
double parse_double(std::string_view text);

}  // namespace ibet::csv
