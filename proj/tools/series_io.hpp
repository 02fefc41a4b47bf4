#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "ward/series.hpp"

namespace ward::cli {

// {"trunc": N, "coeffs": ["p/q", ...]} with exactly trunc+1 entries.
nlohmann::ordered_json series_to_json(const Series& s);
Series series_from_json(const nlohmann::json& j);

// nlohmann parse wrapped into ParseError so the CLI exit codes stay uniform.
nlohmann::json parse_json_text(const std::string& text);

// "1, 1/2, -3" -> exact values; an empty string is an empty list.
std::vector<Rat> parse_rat_list(const std::string& text);

// Accepted forms: "file:<path>" holding series JSON, inline "{...}" JSON,
// or a comma list. Comma lists are exact polynomials and get padded with
// zeros to pad_to when pad_to exceeds their degree; JSON forms carry their
// own truncation and are never padded.
Series parse_series_arg(const std::string& arg, int pad_to);

std::string read_text_file(const std::string& path);

// Aligned two-column (exponent, coefficient) listing for --pretty.
std::string pretty_table(const Series& s);
// Aligned lower-triangular grid for matrix output.
std::string pretty_matrix(const std::vector<std::vector<Rat>>& rows);

}  // namespace ward::cli
