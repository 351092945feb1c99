// argroth: Grothendieck groups of MCM categories from AR-sequence data.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "argroth/report.hpp"

namespace {

std::optional<std::filesystem::path> catalog_from_env() {
  if (const char *dir = std::getenv("ARGROTH_CATALOG"); dir && *dir)
    return std::filesystem::path(dir);
  return std::nullopt;
}

int emit(const argroth::cli::Report &report, bool json) {
  if (json)
    std::cout << report.json();
  else
    std::cout << report.human();
  if (!report.diagnostic.empty())
    std::cerr << "argroth " << report.command << ": " << report.diagnostic
              << '\n';
  return report.exit_status;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Grothendieck groups of maximal Cohen-Macaulay categories from "
               "Auslander-Reiten data"};
  app.require_subcommand(1);
  bool json = false;

  std::string group_file;
  auto *group = app.add_subcommand("group", "Print G = F / AR_0 of a quiver file");
  group->add_option("file", group_file, "quiver file")->required();
  group->add_flag("--json", json, "emit a JSON report");

  std::string table_file, from_file, to_file;
  auto *basechange = app.add_subcommand(
      "basechange", "Compare G(from) and G(to) along a decomposition table");
  basechange->add_option("table", table_file, "basechange file")->required();
  basechange->add_option("from", from_file, "source quiver file")->required();
  basechange->add_option("to", to_file, "target quiver file")->required();
  basechange->add_flag("--json", json, "emit a JSON report");

  std::string system_file;
  auto *colimit = app.add_subcommand(
      "colimit", "Colimit of a direct system and the comparison map xi");
  colimit->add_option("system", system_file, "system file")->required();
  colimit->add_flag("--json", json, "emit a JSON report");

  std::string directory;
  auto *corollary = app.add_subcommand(
      "check-corollary", "Check rational rank bounds on a directory of quivers");
  corollary->add_option("dir", directory,
                        "quiver directory (default: $ARGROTH_CATALOG or ./catalog)");
  corollary->add_flag("--json", json, "emit a JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : argroth::cli::parse_failure;
  }

  const auto catalog = catalog_from_env();
  using namespace argroth::cli;
  if (*group)
    return emit(cmd_group(group_file, catalog), json);
  if (*basechange)
    return emit(cmd_basechange(table_file, from_file, to_file, catalog), json);
  if (*colimit)
    return emit(cmd_colimit(system_file, catalog), json);
  if (directory.empty())
    directory = catalog ? catalog->string() : std::string("catalog");
  return emit(cmd_check_corollary(directory), json);
}
