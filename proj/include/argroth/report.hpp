#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "argroth/basechange.hpp"
#include "argroth/basechange_io.hpp"
#include "argroth/direct_system.hpp"
#include "argroth/errors.hpp"
#include "argroth/quiver_io.hpp"

// Command implementations behind the argroth executable. Each command
// returns a Report; printing is left to the caller.
namespace argroth::cli {

using Json = nlohmann::ordered_json;

enum ExitStatus : int {
  ok = 0,
  parse_failure = 1,
  invariant_violation = 2,
  ill_defined_hom = 3,
  not_stabilized = 4,
  corollary_failure = 5,
};

struct Report {
  Report(std::string cmd, std::vector<std::string> in)
      : command(std::move(cmd)), inputs(std::move(in)) {}

  std::string command;
  std::vector<std::string> inputs;
  Json result = Json::object();
  std::vector<std::string> lines; // human-readable result
  std::string diagnostic;         // destined for the error stream
  int exit_status = ok;

  std::string human() const {
    std::string out;
    for (const auto &l : lines)
      out += l + '\n';
    return out;
  }

  /// One JSON object, keys in fixed order.
  std::string json() const {
    Json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["exit_status"] = exit_status;
    if (exit_status == ok || exit_status == corollary_failure)
      j["result"] = result;
    if (!diagnostic.empty())
      j["error"] = diagnostic;
    return j.dump(2) + '\n';
  }
};

inline Json integer_json(const Integer &v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

inline Json invariants_json(const GroupInvariants &inv) {
  Json j;
  j["group"] = to_string(inv);
  j["free_rank"] = inv.free_rank;
  Json torsion = Json::array();
  for (const auto &d : inv.torsion)
    torsion.push_back(integer_json(d));
  j["torsion"] = torsion;
  return j;
}

inline Json matrix_json(const IntMatrix &m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(integer_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

inline const char *yes_no(bool b) { return b ? "yes" : "no"; }

/// Runs `body`, translating library exceptions into the exit status and
/// diagnostic of `report`.
inline Report guarded(Report report, const std::function<void(Report &)> &body) {
  auto fail = [&](int status, const std::string &what) {
    report.exit_status = status;
    report.diagnostic = what;
    report.lines.clear();
    report.result = Json::object();
  };
  try {
    body(report);
  } catch (const ParseError &e) {
    fail(parse_failure, std::string("parse error: ") + e.what());
  } catch (const IllDefinedHomError &e) {
    fail(ill_defined_hom, std::string("ill-defined homomorphism: ") + e.what());
  } catch (const HypothesisError &e) {
    fail(not_stabilized, std::string("hypothesis not asserted: ") + e.what());
  } catch (const InvariantError &e) {
    fail(invariant_violation, std::string("invariant violation: ") + e.what());
  } catch (const std::invalid_argument &e) {
    fail(invariant_violation, std::string("invariant violation: ") + e.what());
  } catch (const std::exception &e) {
    fail(parse_failure, std::string("error: ") + e.what());
  }
  return report;
}

/// Uses `path` when it exists, otherwise tries it relative to `catalog`.
inline std::filesystem::path
resolve_input(const std::string &path,
              const std::optional<std::filesystem::path> &catalog) {
  std::filesystem::path p(path);
  if (!std::filesystem::exists(p) && catalog && p.is_relative() &&
      std::filesystem::exists(*catalog / p))
    return *catalog / p;
  return p;
}

inline Report cmd_group(const std::string &file,
                        const std::optional<std::filesystem::path> &catalog = {}) {
  return guarded({"group", {file}}, [&](Report &r) {
    const ARQuiver q = load_quiver(resolve_input(file, catalog));
    const FPAbelianGroup g = grothendieck_group(q);
    const GroupInvariants inv = invariants(g);
    r.result["quiver"] = q.name;
    r.result["generators"] = g.n_generators;
    r.result["relations"] = matrix_json(g.relations);
    r.result.update(invariants_json(inv));
    r.lines.push_back(to_string(inv));
  });
}

inline Report cmd_basechange(const std::string &table_file,
                             const std::string &from_file,
                             const std::string &to_file,
                             const std::optional<std::filesystem::path> &catalog = {}) {
  return guarded({"basechange", {table_file, from_file, to_file}}, [&](Report &r) {
    const DecompositionTable t = load_table(resolve_input(table_file, catalog));
    const ARQuiver from = load_quiver(resolve_input(from_file, catalog));
    const ARQuiver to = load_quiver(resolve_input(to_file, catalog));
    const BaseChangeReport b = compare_torsion_and_rank(t, from, to);

    const std::string injective =
        b.eta_injective ? yes_no(*b.eta_injective) : "not established";
    r.result["table"] = t.name;
    r.result["from"] = from.name;
    r.result["to"] = to.name;
    r.result["degree"] = integer_json(t.degree);
    r.result["source"] = invariants_json(b.source);
    r.result["target"] = invariants_json(b.target);
    r.result["eta_matrix"] = matrix_json(extend_matrix(t, from, to));
    r.result["eta_rational_rank"] = b.eta_rational_rank;
    r.result["delta"] = to_string(b.delta);
    r.result["eta_injective"] = injective;
    r.result["proper_subspace"] = yes_no(b.proper_subspace);

    std::ostringstream degree;
    degree << t.degree;
    r.lines = {
        "table: " + t.name + " (" + from.name + " -> " + to.name +
            ", degree " + degree.str() + ")",
        "source: " + to_string(b.source),
        "target: " + to_string(b.target),
        "delta (restrict o extend = " + degree.str() +
            " * id): " + to_string(b.delta),
        "eta_Q rank: " + std::to_string(b.eta_rational_rank),
        "eta_Q injective: " + injective,
        "proper subspace: " + std::string(yes_no(b.proper_subspace)) +
            " (rank " + std::to_string(b.source.free_rank) +
            (b.proper_subspace ? " < " : " >= ") +
            std::to_string(b.target.free_rank) + ")",
        "torsion: " + torsion_string(b.source) + " vs " +
            torsion_string(b.target),
    };
  });
}

inline Report cmd_colimit(const std::string &system_file,
                          const std::optional<std::filesystem::path> &catalog = {}) {
  return guarded({"colimit", {system_file}}, [&](Report &r) {
    const DirectSystem sys = load_system(resolve_input(system_file, catalog));
    const XiReport x = check_xi_iso(sys);
    Json stages = Json::array();
    for (const auto &q : sys.stages)
      stages.push_back(q.name);
    r.result["system"] = sys.name;
    r.result["stages"] = stages;
    r.result["stabilized"] = sys.stabilized;
    r.result["colimit"] = invariants_json(x.colimit);
    r.result["terminal"] = invariants_json(x.terminal);
    r.result["xi_matrix"] = matrix_json(x.xi.matrix);
    r.result["xi_surjective"] = yes_no(x.surjective);
    r.result["xi_injective"] = yes_no(x.injective);
    r.result["xi_isomorphism"] = yes_no(x.isomorphism());

    r.lines.push_back("system: " + sys.name + " (" +
                      std::to_string(sys.stages.size()) + " stages, terminal " +
                      sys.terminal().name + ")");
    r.lines.push_back("colimit: " + to_string(x.colimit));
    r.lines.push_back("G(T): " + to_string(x.terminal));
    r.lines.push_back("xi matrix:");
    for (std::size_t i = 0; i < x.xi.matrix.rows(); ++i)
      r.lines.push_back("  " + to_string(x.xi.matrix.row(i)));
    r.lines.push_back(std::string("xi surjective: ") + yes_no(x.surjective));
    r.lines.push_back(std::string("xi injective: ") + yes_no(x.injective));
    r.lines.push_back(std::string("xi isomorphism: ") + yes_no(x.isomorphism()));
  });
}

struct CorollaryEntry {
  std::string file;
  std::string quiver;
  unsigned dim = 0;
  bool gorenstein = false;
  std::size_t rational_rank = 0;
  std::string bound;  // "= 1", "<= 3" or "" when skipped
  std::string status; // pass, fail, skipped
};

/// Rank bounds for Gorenstein rings of finite representation type:
/// positive even dimension forces rank 1, odd dimension allows at most 3.
inline CorollaryEntry check_corollary_entry(const ARQuiver &q) {
  CorollaryEntry e{{}, q.name, q.dim, q.is_gorenstein,
                   rational_rank(grothendieck_group(q)), {}, "skipped"};
  if (!q.is_gorenstein || q.dim == 0)
    return e;
  if (q.dim % 2 == 0) {
    e.bound = "= 1";
    e.status = e.rational_rank == 1 ? "pass" : "fail";
  } else {
    e.bound = "<= 3";
    e.status = e.rational_rank <= 3 ? "pass" : "fail";
  }
  return e;
}

inline Report cmd_check_corollary(const std::string &directory) {
  return guarded({"check-corollary", {directory}}, [&](Report &r) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(directory))
      throw ParseError(0, "'" + directory + "' is not a directory");
    std::vector<fs::path> files;
    for (const auto &entry : fs::directory_iterator(directory))
      if (entry.is_regular_file() && entry.path().extension() == ".quiver")
        files.push_back(entry.path());
    std::sort(files.begin(), files.end(),
              [](const fs::path &a, const fs::path &b) {
                return a.filename().string() < b.filename().string();
              });

    std::size_t checked = 0, skipped = 0;
    std::vector<std::string> failing;
    Json entries = Json::array();
    for (const auto &path : files) {
      CorollaryEntry e = check_corollary_entry(load_quiver(path));
      e.file = path.filename().string();
      if (e.status == "skipped")
        ++skipped;
      else
        ++checked;
      if (e.status == "fail")
        failing.push_back(e.file);

      Json j;
      j["file"] = e.file;
      j["quiver"] = e.quiver;
      j["dim"] = e.dim;
      j["gorenstein"] = e.gorenstein;
      j["rational_rank"] = e.rational_rank;
      j["bound"] = e.bound;
      j["status"] = e.status;
      entries.push_back(j);

      std::string line = e.file + ": " + e.quiver + " dim " +
                         std::to_string(e.dim) + " rank " +
                         std::to_string(e.rational_rank);
      if (e.status == "skipped")
        line += e.gorenstein ? " (dimension 0, no bound) skipped"
                             : " (not Gorenstein) skipped";
      else
        line += " bound " + e.bound + " " + e.status;
      r.lines.push_back(line);
    }
    r.result["entries"] = entries;
    r.result["checked"] = checked;
    r.result["skipped"] = skipped;
    r.result["failed"] = failing.size();
    r.result["passed"] = failing.empty();
    r.lines.push_back("checked " + std::to_string(checked) + ", skipped " +
                      std::to_string(skipped) + ", failed " +
                      std::to_string(failing.size()) +
                      (files.empty() ? " (no quiver files)" : ""));
    if (!failing.empty()) {
      r.exit_status = corollary_failure;
      r.diagnostic = "corollary bounds violated by:";
      for (const auto &f : failing)
        r.diagnostic += " " + f;
    }
  });
}

} // namespace argroth::cli
