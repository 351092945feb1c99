#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "argroth/abelian_group.hpp"
#include "argroth/errors.hpp"
#include "argroth/group_hom.hpp"

namespace argroth {

struct DiagramArrow {
  std::size_t from;
  std::size_t to;
  GroupHom hom;
};

/// Finite diagram of groups over a totally ordered index set; arrows only
/// go from a smaller index to a larger one.
struct GroupDiagram {
  std::vector<FPAbelianGroup> objects;
  std::vector<DiagramArrow> arrows;

  const DiagramArrow *find(std::size_t from, std::size_t to) const {
    for (const auto &a : arrows)
      if (a.from == from && a.to == to)
        return &a;
    return nullptr;
  }

  /// Description of the first defect, or nullopt for a consistent diagram.
  std::optional<std::string> defect() const {
    for (const auto &a : arrows) {
      if (a.from >= a.to)
        return "arrow " + std::to_string(a.from) + "->" + std::to_string(a.to) +
               " does not respect the index order";
      if (a.to >= objects.size())
        return "arrow " + std::to_string(a.from) + "->" + std::to_string(a.to) +
               " references a missing object";
      if (a.hom.matrix.cols() != objects[a.from].n_generators ||
          a.hom.matrix.rows() != objects[a.to].n_generators)
        return "arrow " + std::to_string(a.from) + "->" + std::to_string(a.to) +
               " has the wrong shape";
      if (!is_well_defined(a.hom))
        return "arrow " + std::to_string(a.from) + "->" + std::to_string(a.to) +
               " is not well defined";
    }
    for (const auto &ij : arrows)
      for (const auto &jk : arrows) {
        if (jk.from != ij.to)
          continue;
        const DiagramArrow *ik = find(ij.from, jk.to);
        if (ik && !same_map(ik->hom, compose(jk.hom, ij.hom)))
          return "arrow " + std::to_string(ij.from) + "->" +
                 std::to_string(jk.to) + " differs from the composite through " +
                 std::to_string(ij.to);
      }
    return std::nullopt;
  }

  /// Consecutive arrows 0->1->...->n-1.
  static GroupDiagram chain(std::vector<FPAbelianGroup> objects,
                            const std::vector<IntMatrix> &steps) {
    if (objects.empty() ? !steps.empty() : steps.size() + 1 != objects.size())
      throw std::invalid_argument("GroupDiagram::chain: need one step per gap");
    GroupDiagram d{std::move(objects), {}};
    for (std::size_t i = 0; i < steps.size(); ++i)
      d.arrows.push_back({i, i + 1, {d.objects[i], d.objects[i + 1], steps[i]}});
    return d;
  }
};

struct Colimit {
  FPAbelianGroup group;
  std::vector<GroupHom> canonical; // one per object, object -> group
};

/// Direct sum of the objects modulo x - beta(x) for every arrow beta and
/// every generator x of its source.
inline Colimit colimit(const GroupDiagram &d) {
  if (auto bad = d.defect())
    throw InvariantError("inconsistent diagram: " + *bad);

  std::vector<std::size_t> offset(d.objects.size() + 1, 0);
  for (std::size_t i = 0; i < d.objects.size(); ++i)
    offset[i + 1] = offset[i] + d.objects[i].n_generators;
  const std::size_t total = offset.back();

  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < d.objects.size(); ++i) {
    const IntMatrix &rel = d.objects[i].relations;
    for (std::size_t r = 0; r < rel.rows(); ++r) {
      IntVector v(total);
      for (std::size_t c = 0; c < rel.cols(); ++c)
        v[offset[i] + c] = rel(r, c);
      rows.push_back(std::move(v));
    }
  }
  for (const auto &a : d.arrows)
    for (std::size_t x = 0; x < d.objects[a.from].n_generators; ++x) {
      IntVector v(total);
      v[offset[a.from] + x] += 1;
      for (std::size_t y = 0; y < d.objects[a.to].n_generators; ++y)
        v[offset[a.to] + y] -= a.hom.matrix(y, x);
      rows.push_back(std::move(v));
    }

  Colimit out{FPAbelianGroup(total, IntMatrix::from_rows(rows, total)), {}};
  for (std::size_t i = 0; i < d.objects.size(); ++i) {
    IntMatrix inclusion(total, d.objects[i].n_generators);
    for (std::size_t x = 0; x < d.objects[i].n_generators; ++x)
      inclusion(offset[i] + x, x) = 1;
    out.canonical.push_back({d.objects[i], out.group, std::move(inclusion)});
  }
  return out;
}

} // namespace argroth
