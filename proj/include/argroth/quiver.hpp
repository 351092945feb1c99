#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "argroth/abelian_group.hpp"
#include "argroth/errors.hpp"
#include "argroth/group_hom.hpp"

namespace argroth {

/// An indecomposable maximal Cohen-Macaulay module.
struct Vertex {
  std::string id;
  bool is_free = false;
  std::optional<Integer> generic_rank;
};

/// 0 -> left -> (+) middle -> right -> 0. `middle` is a multiset.
struct ARSequence {
  std::string left;
  std::vector<std::string> middle;
  std::string right;
  std::size_t line = 0; // source line when parsed from text
};

struct ARQuiver {
  std::string name;
  unsigned dim = 0;
  bool is_gorenstein = false;
  bool is_domain = false;
  std::vector<Vertex> vertices;
  std::vector<ARSequence> sequences;

  std::optional<std::size_t> index_of(const std::string &id) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i].id == id)
        return i;
    return std::nullopt;
  }

  std::size_t require_index(const std::string &id) const {
    if (auto i = index_of(id))
      return *i;
    throw InvariantError("quiver '" + name + "' has no vertex '" + id + "'");
  }

  bool has_all_ranks() const {
    return std::all_of(vertices.begin(), vertices.end(),
                       [](const Vertex &v) { return v.generic_rank.has_value(); });
  }
};

namespace detail {

inline std::string where(const ARSequence &s) {
  return s.line ? " (line " + std::to_string(s.line) + ")" : std::string();
}

inline Integer middle_rank(const ARQuiver &q, const ARSequence &s) {
  Integer total = 0;
  for (const auto &m : s.middle)
    total += *q.vertices[q.require_index(m)].generic_rank;
  return total;
}

inline bool rank_additive(const ARQuiver &q, const ARSequence &s) {
  return *q.vertices[q.require_index(s.left)].generic_rank +
             *q.vertices[q.require_index(s.right)].generic_rank ==
         middle_rank(q, s);
}

} // namespace detail

/// Throws InvariantError on the first structural or rank violation.
inline void validate(const ARQuiver &q) {
  if (q.vertices.empty())
    throw InvariantError("quiver '" + q.name + "' declares no vertices");
  std::unordered_set<std::string> seen;
  for (const auto &v : q.vertices) {
    if (v.id.empty())
      throw InvariantError("quiver '" + q.name + "' has an unnamed vertex");
    if (!seen.insert(v.id).second)
      throw InvariantError("duplicate vertex '" + v.id + "'");
  }
  for (const auto &s : q.sequences) {
    for (const auto *end : {&s.left, &s.right}) {
      const std::size_t i = q.require_index(*end);
      if (q.vertices[i].is_free)
        throw InvariantError("sequence" + detail::where(s) + " has free vertex '" +
                             *end + "' as an end term");
    }
    for (const auto &m : s.middle)
      q.require_index(m);
  }
  if (q.is_domain && q.has_all_ranks())
    for (const auto &s : q.sequences)
      if (!detail::rank_additive(q, s))
        throw InvariantError("rank is not additive on sequence " + s.left +
                             " -> ... -> " + s.right + detail::where(s));
}

/// Coefficient vector [left] - sum [middle] + [right] over the vertex order.
inline IntVector relation_vector(const ARQuiver &q, const ARSequence &s) {
  IntVector v(q.vertices.size());
  v[q.require_index(s.left)] += 1;
  for (const auto &m : s.middle)
    v[q.require_index(m)] -= 1;
  v[q.require_index(s.right)] += 1;
  return v;
}

/// G = F / AR_0: free on the vertices, one relation per AR sequence.
inline FPAbelianGroup grothendieck_group(const ARQuiver &q) {
  std::vector<IntVector> rows;
  rows.reserve(q.sequences.size());
  for (const auto &s : q.sequences)
    rows.push_back(relation_vector(q, s));
  return FPAbelianGroup(q.vertices.size(),
                        IntMatrix::from_rows(rows, q.vertices.size()));
}

/// A chosen set of indecomposables and a chosen set of AR sequences among
/// them.
struct SubPresentation {
  ARQuiver quiver;
  std::set<std::string> vertex_subset;
  std::set<std::size_t> sequence_subset;

  static SubPresentation full(const ARQuiver &q) {
    SubPresentation sp{q, {}, {}};
    for (const auto &v : q.vertices)
      sp.vertex_subset.insert(v.id);
    for (std::size_t i = 0; i < q.sequences.size(); ++i)
      sp.sequence_subset.insert(i);
    return sp;
  }

  /// Selected vertex indices, in the quiver's declaration order.
  std::vector<std::size_t> selected_vertices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < quiver.vertices.size(); ++i)
      if (vertex_subset.contains(quiver.vertices[i].id))
        out.push_back(i);
    return out;
  }

  void check() const {
    for (const auto &id : vertex_subset)
      quiver.require_index(id);
    for (std::size_t k : sequence_subset) {
      if (k >= quiver.sequences.size())
        throw InvariantError("sequence index " + std::to_string(k) +
                             " out of range");
      const ARSequence &s = quiver.sequences[k];
      auto inside = [&](const std::string &id) {
        if (!vertex_subset.contains(id))
          throw InvariantError("sequence " + std::to_string(k) +
                               " uses vertex '" + id +
                               "' outside the chosen subset");
      };
      inside(s.left);
      inside(s.right);
      for (const auto &m : s.middle)
        inside(m);
    }
  }
};

inline FPAbelianGroup sub_group(const SubPresentation &sp) {
  sp.check();
  const auto selected = sp.selected_vertices();
  std::vector<IntVector> rows;
  for (std::size_t k : sp.sequence_subset) {
    const IntVector full = relation_vector(sp.quiver, sp.quiver.sequences[k]);
    IntVector v;
    v.reserve(selected.size());
    for (std::size_t i : selected)
      v.push_back(full[i]);
    rows.push_back(std::move(v));
  }
  return FPAbelianGroup(selected.size(),
                        IntMatrix::from_rows(rows, selected.size()));
}

/// Map from the sub-presentation to the full Grothendieck group induced by
/// the inclusion of generators.
inline GroupHom alpha_map(const SubPresentation &sp) {
  FPAbelianGroup source = sub_group(sp);
  FPAbelianGroup target = grothendieck_group(sp.quiver);
  const auto selected = sp.selected_vertices();
  IntMatrix m(target.n_generators, source.n_generators);
  for (std::size_t j = 0; j < selected.size(); ++j)
    m(selected[j], j) = 1;
  return {std::move(source), std::move(target), std::move(m)};
}

/// Whether [M] -> rank(M) is additive on every AR sequence, i.e. descends
/// to a map G -> Z. Requires a domain with ranks on every vertex.
inline bool check_rank_map(const ARQuiver &q) {
  if (!q.is_domain)
    throw HypothesisError("quiver '" + q.name +
                          "' is not flagged as a domain; generic rank is "
                          "undefined");
  if (!q.has_all_ranks())
    throw HypothesisError("quiver '" + q.name +
                          "' is missing generic rank data");
  return std::all_of(q.sequences.begin(), q.sequences.end(),
                     [&](const ARSequence &s) {
                       return detail::rank_additive(q, s);
                     });
}

/// The rank map G -> Z as a GroupHom; requires check_rank_map.
inline GroupHom rank_hom(const ARQuiver &q) {
  if (!check_rank_map(q))
    throw IllDefinedHomError("rank is not additive on the AR sequences of '" +
                             q.name + "'");
  IntMatrix m(1, q.vertices.size());
  for (std::size_t i = 0; i < q.vertices.size(); ++i)
    m(0, i) = *q.vertices[i].generic_rank;
  return {grothendieck_group(q), FPAbelianGroup::free_group(1), std::move(m)};
}

} // namespace argroth
