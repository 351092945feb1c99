#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>

#include "argroth/report.hpp"

using namespace argroth::cli;

namespace {

const std::filesystem::path source_dir = ARGROTH_SOURCE_DIR;

std::string catalog(const std::string &name) {
  return (source_dir / "catalog" / name).string();
}

std::string data(const std::string &name) {
  return (source_dir / "tests/data" / name).string();
}

struct CliRun {
  int status;
  std::string out;
};

// Runs the installed binary through the shell; stderr is discarded.
CliRun run_cli(const std::string &args, const std::string &env = {}) {
  const std::string cmd = env + " " + std::string(ARGROTH_CLI) + " " + args +
                          " 2>/dev/null";
  FILE *pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 512> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe))
    out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

} // namespace

TEST(CmdGroup, CatalogEntries) {
  const Report real = cmd_group(catalog("node_real.quiver"));
  EXPECT_EQ(real.exit_status, ok);
  EXPECT_EQ(real.human(), "Z^1 (+) Z/2\n");
  EXPECT_EQ(cmd_group(catalog("node_complex.quiver")).human(), "Z^2\n");
  EXPECT_EQ(cmd_group(data("vertices_only.quiver")).human(), "Z^3\n");
}

TEST(CmdGroup, ErrorClasses) {
  const Report parse = cmd_group(data("undeclared.quiver"));
  EXPECT_EQ(parse.exit_status, parse_failure);
  EXPECT_NE(parse.diagnostic.find("'Q'"), std::string::npos);
  EXPECT_TRUE(parse.human().empty());

  EXPECT_EQ(cmd_group(data("no_such_file.quiver")).exit_status, parse_failure);

  const auto tmp = std::filesystem::temp_directory_path() / "argroth_free_end.quiver";
  {
    std::ofstream f(tmp);
    f << "quiver bad\ndim 1\ngorenstein true\ndomain false\nvertex R free=1\n"
         "vertex M free=0\nseq R | M | M\nend\n";
  }
  EXPECT_EQ(cmd_group(tmp.string()).exit_status, invariant_violation);
  std::filesystem::remove(tmp);
}

TEST(CmdGroup, CatalogLookup) {
  const Report r = cmd_group("node_real.quiver", source_dir / "catalog");
  EXPECT_EQ(r.exit_status, ok);
  EXPECT_EQ(r.human(), "Z^1 (+) Z/2\n");
}

TEST(CmdBasechange, NodeTriple) {
  const Report r = cmd_basechange(catalog("node_extension.bc"),
                                  catalog("node_real.quiver"),
                                  catalog("node_complex.quiver"));
  ASSERT_EQ(r.exit_status, ok) << r.diagnostic;
  const std::string h = r.human();
  EXPECT_NE(h.find("eta_Q injective: yes\n"), std::string::npos) << h;
  EXPECT_NE(h.find("proper subspace: yes (rank 1 < 2)\n"), std::string::npos);
  EXPECT_NE(h.find("torsion: [2] vs []\n"), std::string::npos);
  EXPECT_EQ(r.result["eta_injective"], "yes");
  EXPECT_EQ(r.result["proper_subspace"], "yes");
  EXPECT_EQ(r.result["source"]["torsion"], Json::array({2}));
  EXPECT_EQ(r.result["target"]["torsion"], Json::array());
  EXPECT_EQ(r.result["delta"], "holds");
}

TEST(CmdBasechange, IdentityTriple) {
  const Report r = cmd_basechange(data("identity_real.bc"),
                                  catalog("node_real.quiver"),
                                  catalog("node_real.quiver"));
  ASSERT_EQ(r.exit_status, ok) << r.diagnostic;
  EXPECT_NE(r.human().find("proper subspace: no"), std::string::npos);
  EXPECT_EQ(r.result["proper_subspace"], "no");
}

TEST(CmdBasechange, BrokenExtendExitsThree) {
  const Report r = cmd_basechange(data("broken_extend.bc"),
                                  catalog("node_real.quiver"),
                                  catalog("node_complex.quiver"));
  EXPECT_EQ(r.exit_status, ill_defined_hom);
  EXPECT_NE(r.diagnostic.find("M | R R | M"), std::string::npos) << r.diagnostic;
}

TEST(CmdBasechange, NameMismatchIsInvariantViolation) {
  const Report r = cmd_basechange(catalog("node_extension.bc"),
                                  catalog("node_complex.quiver"),
                                  catalog("node_real.quiver"));
  EXPECT_EQ(r.exit_status, invariant_violation);
}

TEST(CmdBasechange, DeltaFailureIsFlagged) {
  const Report r = cmd_basechange(data("bad_degree.bc"),
                                  catalog("node_real.quiver"),
                                  catalog("node_complex.quiver"));
  ASSERT_EQ(r.exit_status, ok);
  EXPECT_EQ(r.result["delta"], "fails");
  EXPECT_EQ(r.result["eta_injective"], "not established");
}

TEST(CmdColimit, NodeSystem) {
  const Report r = cmd_colimit(catalog("node_system.sys"));
  ASSERT_EQ(r.exit_status, ok) << r.diagnostic;
  EXPECT_NE(r.human().find("colimit: Z^2\n"), std::string::npos);
  EXPECT_NE(r.human().find("xi isomorphism: yes\n"), std::string::npos);
  EXPECT_EQ(r.result["colimit"]["group"], "Z^2");
  EXPECT_EQ(r.result["xi_isomorphism"], "yes");
}

TEST(CmdColimit, SingleStage) {
  const Report r = cmd_colimit(data("single_stage.sys"));
  ASSERT_EQ(r.exit_status, ok) << r.diagnostic;
  EXPECT_EQ(r.result["xi_isomorphism"], "yes");
}

TEST(CmdColimit, UnstabilizedExitsFour) {
  const Report r = cmd_colimit(data("unstabilized.sys"));
  EXPECT_EQ(r.exit_status, not_stabilized);
  EXPECT_NE(r.diagnostic.find("stabilized"), std::string::npos);
}

TEST(CmdCheckCorollary, ShippedCatalogPasses) {
  const Report r = cmd_check_corollary((source_dir / "catalog").string());
  ASSERT_EQ(r.exit_status, ok) << r.diagnostic;
  EXPECT_EQ(r.result["checked"], 2);
  EXPECT_EQ(r.result["failed"], 0);
  EXPECT_NE(r.human().find("node_complex.quiver: node_complex dim 1 rank 2 "
                           "bound <= 3 pass"),
            std::string::npos)
      << r.human();
}

TEST(CmdCheckCorollary, EvenDimensionRankTwoFails) {
  const Report r = cmd_check_corollary(data("corollary_fail"));
  EXPECT_EQ(r.exit_status, corollary_failure);
  EXPECT_NE(r.diagnostic.find("even_rank_two.quiver"), std::string::npos);
  EXPECT_EQ(r.result["passed"], false);
}

TEST(CmdCheckCorollary, MixedDirectory) {
  const Report r = cmd_check_corollary(data("corollary_mixed"));
  ASSERT_EQ(r.exit_status, ok) << r.diagnostic;
  EXPECT_EQ(r.result["checked"], 2);
  EXPECT_EQ(r.result["skipped"], 1);
  EXPECT_EQ(r.result["entries"][0]["file"], "a1_surface.quiver");
  EXPECT_EQ(r.result["entries"][0]["bound"], "= 1");
  EXPECT_EQ(r.result["entries"][2]["status"], "skipped");
}

TEST(CmdCheckCorollary, EmptyDirectory) {
  const auto dir = std::filesystem::temp_directory_path() / "argroth_empty_dir";
  std::filesystem::create_directories(dir);
  const Report r = cmd_check_corollary(dir.string());
  EXPECT_EQ(r.exit_status, ok);
  EXPECT_EQ(r.result["checked"], 0);
  EXPECT_NE(r.human().find("no quiver files"), std::string::npos);
  std::filesystem::remove(dir);

  EXPECT_EQ(cmd_check_corollary(data("no_such_dir")).exit_status, parse_failure);
}

TEST(ReportJson, AgreesWithHumanOutput) {
  const std::vector<Report> reports = {
      cmd_group(catalog("node_real.quiver")),
      cmd_basechange(catalog("node_extension.bc"), catalog("node_real.quiver"),
                     catalog("node_complex.quiver")),
      cmd_colimit(catalog("node_system.sys")),
  };
  for (const Report &r : reports) {
    const Json j = Json::parse(r.json());
    EXPECT_EQ(j["command"], r.command);
    EXPECT_EQ(j["exit_status"], 0);
    const std::string h = r.human();
    std::function<void(const Json &)> visit = [&](const Json &node) {
      if (node.is_object()) {
        if (node.contains("group") && node.contains("torsion")) {
          EXPECT_NE(h.find(node["group"].get<std::string>()), std::string::npos)
              << r.command;
        }
        for (const auto &[k, v] : node.items())
          visit(v);
      }
    };
    visit(j["result"]);
  }
  const Json b = Json::parse(reports[1].json())["result"];
  EXPECT_NE(reports[1].human().find("eta_Q injective: " +
                                    b["eta_injective"].get<std::string>()),
            std::string::npos);
  const Json c = Json::parse(reports[2].json())["result"];
  EXPECT_NE(reports[2].human().find("xi isomorphism: " +
                                    c["xi_isomorphism"].get<std::string>()),
            std::string::npos);
}

TEST(ReportJson, StableKeyOrder) {
  const std::string s = cmd_group(catalog("node_real.quiver")).json();
  const auto pos = [&](const char *key) { return s.find(key); };
  EXPECT_LT(pos("\"command\""), pos("\"inputs\""));
  EXPECT_LT(pos("\"inputs\""), pos("\"exit_status\""));
  EXPECT_LT(pos("\"exit_status\""), pos("\"result\""));
}

TEST(ReportJson, ErrorReportCarriesMessage) {
  const Json j = Json::parse(cmd_colimit(data("unstabilized.sys")).json());
  EXPECT_EQ(j["exit_status"], 4);
  EXPECT_FALSE(j.contains("result"));
  EXPECT_TRUE(j["error"].is_string());
}

TEST(Executable, GroupAndExitCodes) {
  const CliRun real = run_cli("group " + catalog("node_real.quiver"));
  EXPECT_EQ(real.status, 0);
  EXPECT_EQ(real.out, "Z^1 (+) Z/2\n");
  EXPECT_EQ(run_cli("group " + data("undeclared.quiver")).status, 1);
  EXPECT_EQ(run_cli("basechange " + data("broken_extend.bc") + " " +
                    catalog("node_real.quiver") + " " +
                    catalog("node_complex.quiver"))
                .status,
            3);
  EXPECT_EQ(run_cli("colimit " + data("unstabilized.sys")).status, 4);
  EXPECT_EQ(run_cli("check-corollary " + data("corollary_fail")).status, 5);
  EXPECT_EQ(run_cli("frobnicate").status, 1);
}

TEST(Executable, CatalogEnvironmentVariable) {
  const std::string env = "ARGROTH_CATALOG=" + (source_dir / "catalog").string();
  const CliRun r = run_cli("group node_complex.quiver", env);
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "Z^2\n");
  const CliRun c = run_cli("check-corollary --json", "cd / && " + env);
  EXPECT_EQ(c.status, 0);
  EXPECT_EQ(Json::parse(c.out)["result"]["checked"], 2);
}

TEST(Executable, ByteDeterministic) {
  for (const std::string &args :
       {"group " + catalog("node_real.quiver") + " --json",
        "basechange " + catalog("node_extension.bc") + " " +
            catalog("node_real.quiver") + " " + catalog("node_complex.quiver"),
        "colimit " + catalog("node_system.sys") + " --json",
        "check-corollary " + (source_dir / "catalog").string()}) {
    const CliRun first = run_cli(args);
    const CliRun second = run_cli(args);
    EXPECT_EQ(first.status, 0) << args;
    EXPECT_EQ(first.out, second.out) << args;
    EXPECT_FALSE(first.out.empty());
  }
}
