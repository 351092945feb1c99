#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "argroth/basechange.hpp"
#include "argroth/direct_system.hpp"
#include "argroth/errors.hpp"
#include "argroth/quiver_io.hpp"
#include "argroth/text_format.hpp"

namespace argroth {

namespace detail {

// "<key> -> id[*mult] id[*mult] ..."; repeated ids accumulate.
inline std::pair<std::string, Multiplicities>
parse_image_line(const std::vector<std::string> &words, std::size_t line) {
  if (words.size() < 4 || words[2] != "->")
    throw ParseError(line, "expected '" + words[0] +
                               " <id> -> <id>[*<mult>] ...'");
  Multiplicities image;
  for (std::size_t w = 3; w < words.size(); ++w) {
    const auto star = words[w].find('*');
    const std::string id = words[w].substr(0, star);
    Integer mult = 1;
    if (star != std::string::npos) {
      mult = text::parse_integer(words[w].substr(star + 1), line, "multiplicity");
      if (mult == 0)
        throw ParseError(line, "multiplicity must be positive");
    }
    if (id.empty())
      throw ParseError(line, "missing vertex id in '" + words[w] + "'");
    image[id] += mult;
  }
  return {words[1], std::move(image)};
}

// Header line "<keyword> <name>"; returns the name.
inline std::string expect_header(const std::vector<text::Line> &lines,
                                 std::string_view keyword) {
  if (lines.empty())
    throw ParseError(0, "empty " + std::string(keyword) + " file");
  const auto head = text::split_words(lines.front().content);
  if (head.size() != 2 || head[0] != keyword)
    throw ParseError(lines.front().number,
                     "expected '" + std::string(keyword) + " <name>'");
  return head[1];
}

} // namespace detail

inline DecompositionTable parse_table(std::string_view source) {
  const auto lines = text::significant_lines(source);
  DecompositionTable t;
  t.name = detail::expect_header(lines, "basechange");
  std::optional<std::string> from, to;
  std::optional<Integer> degree;
  std::size_t end_line = 0;

  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto &[number, content] = lines[k];
    if (end_line)
      throw ParseError(number, "content after 'end'");
    const auto words = text::split_words(content);
    const std::string &key = words[0];
    auto single = [&]() -> const std::string & {
      if (words.size() != 2)
        throw ParseError(number, "expected '" + key + " <value>'");
      return words[1];
    };
    auto once = [&](bool already) {
      if (already)
        throw ParseError(number, "'" + key + "' given twice");
    };

    if (key == "from") {
      once(from.has_value());
      from = single();
    } else if (key == "to") {
      once(to.has_value());
      to = single();
    } else if (key == "degree") {
      once(degree.has_value());
      degree = text::parse_integer(single(), number, "degree");
      if (*degree == 0)
        throw ParseError(number, "degree must be positive");
    } else if (key == "extend") {
      auto [id, image] = detail::parse_image_line(words, number);
      if (!t.extend.emplace(id, std::move(image)).second)
        throw ParseError(number, "second extend entry for '" + id + "'");
    } else if (key == "restrict") {
      if (!t.restrict)
        t.restrict.emplace();
      auto [id, image] = detail::parse_image_line(words, number);
      if (!t.restrict->emplace(id, std::move(image)).second)
        throw ParseError(number, "second restrict entry for '" + id + "'");
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
  if (!from || !to || !degree)
    throw ParseError(end_line, "table needs 'from', 'to' and 'degree'");
  if (t.extend.empty())
    throw ParseError(end_line, "table has no extend entries");
  t.from = *from;
  t.to = *to;
  t.degree = *degree;
  return t;
}

inline DecompositionTable load_table(const std::filesystem::path &path) {
  try {
    return parse_table(text::read_file(path));
  } catch (const ParseError &e) {
    throw e.in_file(path.string());
  }
}

/// File references in a system description, before loading.
struct SystemManifest {
  std::string name;
  std::vector<std::filesystem::path> stages;
  std::vector<std::filesystem::path> tables;
  bool stabilized = false;
};

/// Relative stage/table paths are resolved against `base_dir`.
inline SystemManifest parse_system_manifest(std::string_view source,
                                            const std::filesystem::path &base_dir) {
  const auto lines = text::significant_lines(source);
  SystemManifest m;
  m.name = detail::expect_header(lines, "system");
  std::optional<bool> stabilized;
  std::size_t end_line = 0;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto &[number, content] = lines[k];
    if (end_line)
      throw ParseError(number, "content after 'end'");
    const auto words = text::split_words(content);
    const std::string &key = words[0];
    if (key == "end") {
      if (words.size() != 1)
        throw ParseError(number, "'end' takes no arguments");
      end_line = number;
      continue;
    }
    if (words.size() != 2)
      throw ParseError(number, "expected '" + key + " <value>'");
    if (key == "stage") {
      m.stages.push_back(base_dir / words[1]);
    } else if (key == "table") {
      m.tables.push_back(base_dir / words[1]);
    } else if (key == "stabilized") {
      if (stabilized)
        throw ParseError(number, "'stabilized' given twice");
      stabilized = text::parse_bool(words[1], number, "stabilized");
    } else {
      throw ParseError(number, "unknown directive '" + key + "'");
    }
  }
  if (!end_line)
    throw ParseError(lines.back().number, "missing 'end'");
  if (m.stages.empty())
    throw ParseError(end_line, "system has no stages");
  if (m.tables.size() + 1 != m.stages.size())
    throw ParseError(end_line, "need exactly one table per consecutive pair of "
                               "stages");
  if (!stabilized)
    throw ParseError(end_line, "missing 'stabilized'");
  m.stabilized = *stabilized;
  return m;
}

inline DirectSystem load_system(const std::filesystem::path &path) {
  SystemManifest m;
  try {
    m = parse_system_manifest(text::read_file(path), path.parent_path());
  } catch (const ParseError &e) {
    throw e.in_file(path.string());
  }
  DirectSystem sys{m.name, {}, {}, m.stabilized};
  for (const auto &p : m.stages)
    sys.stages.push_back(load_quiver(p));
  for (const auto &p : m.tables)
    sys.tables.push_back(load_table(p));
  sys.check();
  return sys;
}

} // namespace argroth
