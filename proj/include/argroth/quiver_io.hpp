#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>

#include "argroth/errors.hpp"
#include "argroth/quiver.hpp"
#include "argroth/text_format.hpp"

namespace argroth {

/// Reads the `quiver ... end` format. Syntax problems and dangling vertex
/// references raise ParseError with the offending line; domain violations
/// (free end terms, non-additive ranks, no vertices) raise InvariantError.
inline ARQuiver parse_quiver(std::string_view source) {
  const auto lines = text::significant_lines(source);
  if (lines.empty())
    throw ParseError(0, "empty quiver file");

  ARQuiver q;
  {
    const auto head = text::split_words(lines.front().content);
    if (head.size() != 2 || head[0] != "quiver")
      throw ParseError(lines.front().number, "expected 'quiver <name>'");
    q.name = head[1];
  }

  std::optional<unsigned> dim;
  std::optional<bool> gorenstein, domain;
  std::unordered_set<std::string> ids;
  std::size_t end_line = 0;

  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto &[number, content] = lines[k];
    if (end_line)
      throw ParseError(number, "content after 'end'");
    const auto words = text::split_words(content);
    const std::string &key = words[0];

    auto single_value = [&](std::string_view what) -> const std::string & {
      if (words.size() != 2)
        throw ParseError(number, "expected '" + std::string(what) + " <value>'");
      return words[1];
    };
    auto once = [&](bool already) {
      if (already)
        throw ParseError(number, "'" + key + "' given twice");
    };

    if (key == "dim") {
      once(dim.has_value());
      dim = static_cast<unsigned>(text::parse_count(single_value("dim"), number, "dim"));
    } else if (key == "gorenstein") {
      once(gorenstein.has_value());
      gorenstein = text::parse_bool(single_value("gorenstein"), number, "gorenstein");
    } else if (key == "domain") {
      once(domain.has_value());
      domain = text::parse_bool(single_value("domain"), number, "domain");
    } else if (key == "vertex") {
      if (words.size() < 3)
        throw ParseError(number, "expected 'vertex <id> free=<0|1> [rank=<n>]'");
      Vertex v{words[1], false, std::nullopt};
      bool saw_free = false;
      for (std::size_t w = 2; w < words.size(); ++w) {
        const auto eq = words[w].find('=');
        const std::string attr = words[w].substr(0, eq);
        const std::string value =
            eq == std::string::npos ? std::string() : words[w].substr(eq + 1);
        if (attr == "free" && !saw_free) {
          if (value != "0" && value != "1")
            throw ParseError(number, "free= must be 0 or 1, got '" + value + "'");
          v.is_free = value == "1";
          saw_free = true;
        } else if (attr == "rank" && !v.generic_rank) {
          v.generic_rank = text::parse_integer(value, number, "rank");
        } else {
          throw ParseError(number, "unexpected vertex attribute '" + words[w] + "'");
        }
      }
      if (!saw_free)
        throw ParseError(number, "vertex '" + v.id + "' lacks free=<0|1>");
      if (v.id.find('|') != std::string::npos)
        throw ParseError(number, "vertex id may not contain '|'");
      if (!ids.insert(v.id).second)
        throw ParseError(number, "duplicate vertex '" + v.id + "'");
      q.vertices.push_back(std::move(v));
    } else if (key == "seq") {
      const std::string_view body = std::string_view(content).substr(3);
      const auto bar1 = body.find('|');
      const auto bar2 =
          bar1 == std::string_view::npos ? bar1 : body.find('|', bar1 + 1);
      if (bar2 == std::string_view::npos ||
          body.find('|', bar2 + 1) != std::string_view::npos)
        throw ParseError(number, "expected 'seq <left> | <middle...> | <right>'");
      const auto left = text::split_words(body.substr(0, bar1));
      auto middle = text::split_words(body.substr(bar1 + 1, bar2 - bar1 - 1));
      const auto right = text::split_words(body.substr(bar2 + 1));
      if (left.size() != 1 || right.size() != 1)
        throw ParseError(number, "sequence ends must be single vertex ids");
      if (middle.empty())
        throw ParseError(number, "empty middle term must be written as '-'");
      if (middle.size() == 1 && middle[0] == "-")
        middle.clear();
      q.sequences.push_back({left[0], std::move(middle), right[0], number});
    } else if (key == "end") {
      if (words.size() != 1)
        throw ParseError(number, "'end' takes no arguments");
      end_line = number;
    } else {
      throw ParseError(number, "unknown directive '" + key + "'");
    }
  }

  if (!end_line)
    throw ParseError(lines.back().number, "missing 'end'");
  if (!dim)
    throw ParseError(end_line, "missing 'dim'");
  if (!gorenstein)
    throw ParseError(end_line, "missing 'gorenstein'");
  if (!domain)
    throw ParseError(end_line, "missing 'domain'");
  q.dim = *dim;
  q.is_gorenstein = *gorenstein;
  q.is_domain = *domain;

  for (const auto &s : q.sequences) {
    auto known = [&](const std::string &id) {
      if (!ids.contains(id))
        throw ParseError(s.line, "unknown vertex '" + id + "'");
    };
    known(s.left);
    for (const auto &m : s.middle)
      known(m);
    known(s.right);
  }

  validate(q);
  return q;
}

inline ARQuiver load_quiver(const std::filesystem::path &path) {
  const std::string source = text::read_file(path);
  try {
    return parse_quiver(source);
  } catch (const ParseError &e) {
    throw e.in_file(path.string());
  } catch (const InvariantError &e) {
    throw InvariantError(path.string() + ": " + e.what());
  }
}

/// Inverse of parse_quiver up to comments and whitespace.
inline std::string write_quiver(const ARQuiver &q) {
  std::ostringstream os;
  os << "quiver " << q.name << '\n'
     << "dim " << q.dim << '\n'
     << "gorenstein " << (q.is_gorenstein ? "true" : "false") << '\n'
     << "domain " << (q.is_domain ? "true" : "false") << '\n';
  for (const auto &v : q.vertices) {
    os << "vertex " << v.id << " free=" << (v.is_free ? 1 : 0);
    if (v.generic_rank)
      os << " rank=" << *v.generic_rank;
    os << '\n';
  }
  for (const auto &s : q.sequences) {
    os << "seq " << s.left << " |";
    if (s.middle.empty())
      os << " -";
    for (const auto &m : s.middle)
      os << ' ' << m;
    os << " | " << s.right << '\n';
  }
  os << "end\n";
  return os.str();
}

} // namespace argroth
