#pragma once

#include <charconv>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "argroth/errors.hpp"
#include "argroth/integer_matrix.hpp"

// Shared lexing for the line-oriented catalog formats.
namespace argroth::text {

struct Line {
  std::size_t number;
  std::string content; // comment stripped, trimmed, never empty
};

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos)
    return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

inline std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view raw =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos
                                                      : nl - pos);
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);
    raw = trim(raw);
    if (!raw.empty())
      out.push_back({number, std::string(raw)});
    if (nl == std::string_view::npos)
      break;
    pos = nl + 1;
  }
  return out;
}

inline std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream is{std::string(s)};
  std::string w;
  while (is >> w)
    out.push_back(w);
  return out;
}

inline bool parse_bool(const std::string &word, std::size_t line,
                       std::string_view what) {
  if (word == "true")
    return true;
  if (word == "false")
    return false;
  throw ParseError(line, std::string(what) + " must be 'true' or 'false', got '" +
                             word + "'");
}

inline unsigned long long parse_count(const std::string &word, std::size_t line,
                                      std::string_view what) {
  unsigned long long value = 0;
  const auto *begin = word.data();
  const auto *end = word.data() + word.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (word.empty() || ec != std::errc() || ptr != end)
    throw ParseError(line, std::string(what) +
                               " must be a nonnegative integer, got '" + word +
                               "'");
  return value;
}

inline Integer parse_integer(const std::string &word, std::size_t line,
                             std::string_view what) {
  if (word.empty() ||
      word.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(line, std::string(what) +
                               " must be a nonnegative integer, got '" + word +
                               "'");
  return Integer(word);
}

inline std::string read_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ParseError(0, "cannot read '" + path.string() + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

} // namespace argroth::text
