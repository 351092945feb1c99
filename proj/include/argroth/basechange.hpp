#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "argroth/abelian_group.hpp"
#include "argroth/errors.hpp"
#include "argroth/group_hom.hpp"
#include "argroth/quiver.hpp"

namespace argroth {

/// Vertex id -> multiplicity. Zero multiplicities are never stored.
using Multiplicities = std::map<std::string, Integer>;

/// Extension-of-scalars data between two quivers: how each indecomposable
/// of the base decomposes after base change, and optionally how each
/// indecomposable of the extension decomposes under restriction.
struct DecompositionTable {
  std::string name;
  std::string from;
  std::string to;
  Integer degree = 1;
  std::map<std::string, Multiplicities> extend;
  std::optional<std::map<std::string, Multiplicities>> restrict;

  static DecompositionTable identity(const ARQuiver &q) {
    DecompositionTable t{"identity-" + q.name, q.name, q.name, 1, {}, {}};
    t.restrict.emplace();
    for (const auto &v : q.vertices) {
      t.extend[v.id][v.id] = 1;
      (*t.restrict)[v.id][v.id] = 1;
    }
    return t;
  }
};

namespace detail {

inline std::string describe_sequence(const ARSequence &s) {
  std::string out = s.left + " |";
  if (s.middle.empty())
    out += " -";
  for (const auto &m : s.middle)
    out += " " + m;
  return out + " | " + s.right;
}

inline void check_image(const std::string &table, const std::string &block,
                        const std::string &key, const Multiplicities &image,
                        const ARQuiver &codomain) {
  if (image.empty())
    throw InvariantError("table '" + table + "': " + block + " of '" + key +
                         "' is empty");
  for (const auto &[id, mult] : image) {
    if (!codomain.index_of(id))
      throw InvariantError("table '" + table + "': " + block + " of '" + key +
                           "' names unknown vertex '" + id + "' of '" +
                           codomain.name + "'");
    if (mult <= 0)
      throw InvariantError("table '" + table + "': nonpositive multiplicity");
  }
}

// Column j describes the image of domain vertex j in codomain vertices.
inline IntMatrix multiplicity_matrix(
    const std::map<std::string, Multiplicities> &images,
    const ARQuiver &domain, const ARQuiver &codomain) {
  IntMatrix m(codomain.vertices.size(), domain.vertices.size());
  for (std::size_t j = 0; j < domain.vertices.size(); ++j)
    for (const auto &[id, mult] : images.at(domain.vertices[j].id))
      m(codomain.require_index(id), j) = mult;
  return m;
}

} // namespace detail

/// Checks names, totality, vertex references, positivity of the degree and
/// that free modules extend to the free module. Does not check the
/// restrict-extend composite; see check_delta.
inline void validate_table(const DecompositionTable &t, const ARQuiver &from,
                           const ARQuiver &to) {
  if (t.from != from.name || t.to != to.name)
    throw InvariantError("table '" + t.name + "' maps '" + t.from + "' -> '" +
                         t.to + "' but was given quivers '" + from.name +
                         "' -> '" + to.name + "'");
  if (t.degree <= 0)
    throw InvariantError("table '" + t.name + "': degree must be positive");
  for (const auto &[id, image] : t.extend)
    if (!from.index_of(id))
      throw InvariantError("table '" + t.name + "': extend names unknown vertex '" +
                           id + "' of '" + from.name + "'");
  for (const auto &v : from.vertices) {
    auto it = t.extend.find(v.id);
    if (it == t.extend.end())
      throw InvariantError("table '" + t.name + "': no extend entry for '" +
                           v.id + "'");
    detail::check_image(t.name, "extend", v.id, it->second, to);
    if (v.is_free) {
      const auto &image = it->second;
      const bool free_once =
          image.size() == 1 && image.begin()->second == 1 &&
          to.vertices[*to.index_of(image.begin()->first)].is_free;
      if (!free_once)
        throw InvariantError("table '" + t.name + "': free vertex '" + v.id +
                             "' must extend to a single free vertex");
    }
  }
  if (t.restrict) {
    for (const auto &[id, image] : *t.restrict)
      if (!to.index_of(id))
        throw InvariantError("table '" + t.name +
                             "': restrict names unknown vertex '" + id +
                             "' of '" + to.name + "'");
    for (const auto &v : to.vertices) {
      auto it = t.restrict->find(v.id);
      if (it == t.restrict->end())
        throw InvariantError("table '" + t.name + "': no restrict entry for '" +
                             v.id + "'");
      detail::check_image(t.name, "restrict", v.id, it->second, from);
    }
  }
}

inline IntMatrix extend_matrix(const DecompositionTable &t, const ARQuiver &from,
                               const ARQuiver &to) {
  validate_table(t, from, to);
  return detail::multiplicity_matrix(t.extend, from, to);
}

inline IntMatrix restrict_matrix(const DecompositionTable &t,
                                 const ARQuiver &from, const ARQuiver &to) {
  validate_table(t, from, to);
  if (!t.restrict)
    throw InvariantError("table '" + t.name + "' has no restrict block");
  return detail::multiplicity_matrix(*t.restrict, to, from);
}

/// G(from) -> G(to), [M] -> [M extended]. Throws IllDefinedHomError naming
/// the first AR sequence of `from` whose relation does not survive.
inline GroupHom induced_hom(const DecompositionTable &t, const ARQuiver &from,
                            const ARQuiver &to) {
  GroupHom h{grothendieck_group(from), grothendieck_group(to),
             extend_matrix(t, from, to)};
  if (auto bad = first_violated_relation(h)) {
    const IntVector rel = h.source.relations.row(*bad);
    throw IllDefinedHomError(
        "table '" + t.name + "': relation " + to_string(rel) + " of sequence '" +
        detail::describe_sequence(from.sequences[*bad]) + "' in '" + from.name +
        "' maps to " + to_string(h.matrix * std::span<const Integer>(rel)) +
        ", outside the relation lattice of '" + to.name + "'");
  }
  return h;
}

/// restrict o extend == degree * identity on the base vertices.
inline bool check_delta(const DecompositionTable &t, const ARQuiver &from,
                        const ARQuiver &to) {
  const IntMatrix composite =
      restrict_matrix(t, from, to) * extend_matrix(t, from, to);
  return composite ==
         IntMatrix::identity(from.vertices.size()).scaled(t.degree);
}

/// G(to) -> G(from) by restriction of scalars.
inline GroupHom transfer_hom(const DecompositionTable &t, const ARQuiver &from,
                             const ARQuiver &to) {
  if (!check_delta(t, from, to))
    throw InvariantError("table '" + t.name +
                         "': restrict o extend is not degree times identity");
  GroupHom h{grothendieck_group(to), grothendieck_group(from),
             restrict_matrix(t, from, to)};
  if (auto bad = first_violated_relation(h))
    throw IllDefinedHomError("table '" + t.name + "': restriction of sequence '" +
                             detail::describe_sequence(to.sequences[*bad]) +
                             "' leaves the relation lattice of '" + from.name +
                             "'");
  return h;
}

namespace detail {

inline std::map<std::string, Multiplicities>
compose_images(const std::map<std::string, Multiplicities> &first,
               const std::map<std::string, Multiplicities> &second) {
  std::map<std::string, Multiplicities> out;
  for (const auto &[id, image] : first) {
    Multiplicities &acc = out[id];
    for (const auto &[mid, mult] : image) {
      auto it = second.find(mid);
      if (it == second.end())
        throw InvariantError("cannot compose tables: no entry for '" + mid + "'");
      for (const auto &[tgt, m2] : it->second)
        acc[tgt] += mult * m2;
    }
  }
  return out;
}

} // namespace detail

/// Base change along first then second.
inline DecompositionTable compose_tables(const DecompositionTable &first,
                                         const DecompositionTable &second) {
  if (first.to != second.from)
    throw InvariantError("cannot compose table '" + first.name + "' into '" +
                         first.to + "' with '" + second.name + "' from '" +
                         second.from + "'");
  DecompositionTable out{second.name + "*" + first.name,
                         first.from,
                         second.to,
                         first.degree * second.degree,
                         detail::compose_images(first.extend, second.extend),
                         {}};
  if (first.restrict && second.restrict)
    out.restrict = detail::compose_images(*second.restrict, *first.restrict);
  return out;
}

enum class DeltaStatus { absent, holds, fails };

inline const char *to_string(DeltaStatus s) {
  switch (s) {
  case DeltaStatus::absent:
    return "absent";
  case DeltaStatus::holds:
    return "holds";
  case DeltaStatus::fails:
    return "fails";
  }
  return "?";
}

struct BaseChangeReport {
  GroupInvariants source;
  GroupInvariants target;
  std::size_t eta_rational_rank = 0;
  DeltaStatus delta = DeltaStatus::absent;
  // Rational injectivity of eta, established through restrict o extend.
  // Empty when the transfer data is missing or inconsistent.
  std::optional<bool> eta_injective;
  bool proper_subspace = false;
};

inline BaseChangeReport compare_torsion_and_rank(const DecompositionTable &t,
                                                 const ARQuiver &from,
                                                 const ARQuiver &to) {
  const GroupHom eta = induced_hom(t, from, to);
  BaseChangeReport r;
  r.source = invariants(eta.source);
  r.target = invariants(eta.target);
  r.eta_rational_rank = rationalized_hom_rank(eta);
  if (t.restrict)
    r.delta = check_delta(t, from, to) ? DeltaStatus::holds : DeltaStatus::fails;
  if (r.delta == DeltaStatus::holds)
    r.eta_injective = r.eta_rational_rank == r.source.free_rank;
  r.proper_subspace = r.source.free_rank < r.target.free_rank;
  return r;
}

} // namespace argroth
