#include "series_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ward/errors.hpp"

namespace ward::cli {

nlohmann::ordered_json series_to_json(const Series& s) {
  nlohmann::ordered_json j;
  j["trunc"] = s.trunc();
  auto arr = nlohmann::ordered_json::array();
  for (int k = 0; k <= s.trunc(); ++k) arr.push_back(s.coeff(k).str());
  j["coeffs"] = std::move(arr);
  return j;
}

Series series_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("trunc") || !j.contains("coeffs"))
    throw ParseError(R"(series JSON must be {"trunc": N, "coeffs": [...]})");
  if (!j["trunc"].is_number_integer())
    throw ParseError("series trunc must be an integer");
  long long t = j["trunc"].get<long long>();
  const auto& c = j["coeffs"];
  if (!c.is_array() || t < 0 || c.size() != static_cast<std::size_t>(t) + 1)
    throw ParseError("series coeffs must hold exactly trunc+1 entries");
  std::vector<Rat> v;
  v.reserve(c.size());
  for (const auto& e : c) {
    if (e.is_string())
      v.push_back(Rat::parse(e.get<std::string>()));
    else if (e.is_number_integer())
      v.push_back(Rat::parse(std::to_string(e.get<long long>())));
    else
      throw ParseError(
          "series coefficients must be exact: \"p/q\" strings or integers");
  }
  return Series(std::move(v));
}

nlohmann::json parse_json_text(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad JSON: ") + e.what());
  }
}

namespace {

std::string trimmed(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<Rat> parse_rat_list(const std::string& text) {
  std::vector<Rat> v;
  if (trimmed(text).empty()) return v;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string token =
        trimmed(comma == std::string::npos ? text.substr(pos)
                                           : text.substr(pos, comma - pos));
    if (token.empty()) throw ParseError("empty entry in rational list");
    v.push_back(Rat::parse(token));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return v;
}

Series parse_series_arg(const std::string& arg, int pad_to) {
  if (arg.rfind("file:", 0) == 0)
    return series_from_json(parse_json_text(read_text_file(arg.substr(5))));
  if (!arg.empty() && arg.front() == '{')
    return series_from_json(parse_json_text(arg));
  auto v = parse_rat_list(arg);
  if (v.empty()) throw ParseError("empty series literal");
  Series s(std::move(v));
  if (pad_to > s.trunc()) return s.padded_as_polynomial(pad_to);
  return s;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string pretty_table(const Series& s) {
  std::size_t kw = std::to_string(s.trunc()).size();
  std::ostringstream os;
  for (int k = 0; k <= s.trunc(); ++k) {
    std::string ks = std::to_string(k);
    os << std::string(kw - ks.size(), ' ') << ks << "  " << s.coeff(k).str()
       << "\n";
  }
  return os.str();
}

std::string pretty_matrix(const std::vector<std::vector<Rat>>& rows) {
  std::size_t cols = 0;
  for (const auto& r : rows) cols = std::max(cols, r.size());
  std::vector<std::size_t> width(cols, 0);
  for (const auto& r : rows)
    for (std::size_t j = 0; j < r.size(); ++j)
      width[j] = std::max(width[j], r[j].str().size());
  std::ostringstream os;
  for (const auto& r : rows) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      std::string cell = r[j].str();
      if (j) os << "  ";
      os << std::string(width[j] - cell.size(), ' ') << cell;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace ward::cli
