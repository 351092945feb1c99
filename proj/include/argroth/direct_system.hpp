#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "argroth/basechange.hpp"
#include "argroth/colimit.hpp"
#include "argroth/errors.hpp"
#include "argroth/group_hom.hpp"
#include "argroth/quiver.hpp"

namespace argroth {

/// Finite truncation E_0 c E_1 c ... c E_m of a directed system of base
/// changes. The last stage plays the role of the limit ring T; `stabilized`
/// asserts that every indecomposable and AR sequence of T is already
/// defined over the stages.
struct DirectSystem {
  std::string name;
  std::vector<ARQuiver> stages;
  std::vector<DecompositionTable> tables; // tables[i]: stages[i] -> stages[i+1]
  bool stabilized = false;

  const ARQuiver &terminal() const { return stages.back(); }

  void check() const {
    if (stages.empty())
      throw InvariantError("system '" + name + "' has no stages");
    if (tables.size() + 1 != stages.size())
      throw InvariantError("system '" + name + "' has " +
                           std::to_string(stages.size()) + " stages but " +
                           std::to_string(tables.size()) + " tables");
    for (std::size_t i = 0; i < tables.size(); ++i)
      validate_table(tables[i], stages[i], stages[i + 1]);
  }

  /// Extension matrix from stage i to stage j >= i, multiplied out along
  /// the chain.
  IntMatrix extend_between(std::size_t i, std::size_t j) const {
    IntMatrix m = IntMatrix::identity(stages[i].vertices.size());
    for (std::size_t k = i; k < j; ++k)
      m = extend_matrix(tables[k], stages[k], stages[k + 1]) * m;
    return m;
  }
};

struct SystemColimit {
  std::vector<FPAbelianGroup> groups;  // G(stage) per stage
  std::vector<GroupHom> steps;         // eta between consecutive stages
  Colimit limit;                       // group plus canonical eta_E
};

inline SystemColimit system_colimit(const DirectSystem &sys) {
  sys.check();
  SystemColimit out;
  for (const auto &q : sys.stages)
    out.groups.push_back(grothendieck_group(q));
  std::vector<IntMatrix> matrices;
  for (std::size_t i = 0; i < sys.tables.size(); ++i) {
    out.steps.push_back(
        induced_hom(sys.tables[i], sys.stages[i], sys.stages[i + 1]));
    matrices.push_back(out.steps.back().matrix);
  }
  out.limit = colimit(GroupDiagram::chain(out.groups, matrices));
  return out;
}

struct XiReport {
  GroupInvariants colimit;
  GroupInvariants terminal;
  GroupHom xi;
  bool surjective = false;
  bool injective = false;
  bool isomorphism() const { return surjective && injective; }
};

/// Compares colim G(stage) with G(terminal) through the map induced by base
/// change to the terminal stage. Refuses systems not asserted stabilized.
inline XiReport check_xi_iso(const DirectSystem &sys) {
  if (!sys.stabilized)
    throw HypothesisError(
        "system '" + sys.name +
        "' is not marked stabilized: the comparison needs every "
        "indecomposable and every AR sequence of the terminal stage to be "
        "lifted from some stage of the chain");
  const SystemColimit sc = system_colimit(sys);
  const std::size_t last = sys.stages.size() - 1;

  IntMatrix xi_matrix(sys.terminal().vertices.size(), 0);
  for (std::size_t i = 0; i <= last; ++i)
    xi_matrix = xi_matrix.beside(sys.extend_between(i, last));

  XiReport r{invariants(sc.limit.group), invariants(sc.groups[last]),
             GroupHom{sc.limit.group, sc.groups[last], std::move(xi_matrix)}};
  require_well_defined(r.xi);
  r.surjective = is_surjective(r.xi);
  r.injective = is_injective(r.xi);
  return r;
}

} // namespace argroth
