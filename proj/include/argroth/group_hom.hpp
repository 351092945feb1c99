#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include "argroth/abelian_group.hpp"
#include "argroth/errors.hpp"
#include "argroth/integer_matrix.hpp"
#include "argroth/smith_normal_form.hpp"

namespace argroth {

/// Homomorphism between presented groups. Column j of `matrix` is the image
/// of source generator j, written in target generators.
struct GroupHom {
  FPAbelianGroup source;
  FPAbelianGroup target;
  IntMatrix matrix;

  void check_shape() const {
    source.check();
    target.check();
    if (matrix.rows() != target.n_generators ||
        matrix.cols() != source.n_generators)
      throw std::invalid_argument(
          "GroupHom: matrix is " + std::to_string(matrix.rows()) + "x" +
          std::to_string(matrix.cols()) + ", expected " +
          std::to_string(target.n_generators) + "x" +
          std::to_string(source.n_generators));
  }

  static GroupHom identity(const FPAbelianGroup &g) {
    return {g, g, IntMatrix::identity(g.n_generators)};
  }

  static GroupHom zero(const FPAbelianGroup &from, const FPAbelianGroup &to) {
    return {from, to, IntMatrix(to.n_generators, from.n_generators)};
  }
};

/// Index of the first source relation whose image leaves the target's
/// relation lattice, or nullopt when the hom is well defined.
inline std::optional<std::size_t> first_violated_relation(const GroupHom &h) {
  h.check_shape();
  const Lattice lattice(h.target.relations);
  for (std::size_t i = 0; i < h.source.relations.rows(); ++i) {
    const IntVector rel = h.source.relations.row(i);
    if (!lattice.contains(h.matrix * std::span<const Integer>(rel)))
      return i;
  }
  return std::nullopt;
}

inline bool is_well_defined(const GroupHom &h) {
  return !first_violated_relation(h).has_value();
}

inline void require_well_defined(const GroupHom &h) {
  if (auto bad = first_violated_relation(h)) {
    const IntVector rel = h.source.relations.row(*bad);
    throw IllDefinedHomError(
        "relation " + std::to_string(*bad) + " " + to_string(rel) +
        " maps to " + to_string(h.matrix * std::span<const Integer>(rel)) +
        ", which is not in the target relation lattice");
  }
}

/// Rank of the induced map of Q-vector spaces. The image of source_Q in
/// target_Q is (col span M + relation span)/(relation span).
inline std::size_t rationalized_hom_rank(const GroupHom &h) {
  require_well_defined(h);
  const IntMatrix spanning = h.target.relations.transpose().beside(h.matrix);
  return rational_rank(spanning) - rational_rank(h.target.relations);
}

/// Presentation of target / image(h).
inline FPAbelianGroup cokernel(const GroupHom &h) {
  require_well_defined(h);
  return FPAbelianGroup(h.target.n_generators,
                        h.target.relations.stacked(h.matrix.transpose()));
}

inline bool is_surjective(const GroupHom &h) {
  return invariants(cokernel(h)).is_trivial();
}

/// Generators (as columns, in source generators) of the preimage of the
/// target relation lattice. The kernel of h is this lattice modulo the
/// source relations.
inline IntMatrix kernel_preimage(const GroupHom &h) {
  require_well_defined(h);
  const std::size_t n = h.source.n_generators;
  const IntMatrix joint = h.matrix.beside(h.target.relations.transpose());
  const IntMatrix ker = integer_kernel(joint);
  IntMatrix out(n, ker.cols());
  for (std::size_t k = 0; k < ker.cols(); ++k)
    for (std::size_t i = 0; i < n; ++i)
      out(i, k) = ker(i, k);
  return out;
}

inline bool is_injective(const GroupHom &h) {
  const IntMatrix pre = kernel_preimage(h);
  const Lattice source_relations(h.source.relations);
  for (std::size_t k = 0; k < pre.cols(); ++k)
    if (!source_relations.contains(pre.col(k)))
      return false;
  return true;
}

inline bool is_isomorphism(const GroupHom &h) {
  return is_injective(h) && is_surjective(h);
}

/// outer o inner
inline GroupHom compose(const GroupHom &outer, const GroupHom &inner) {
  if (outer.source.n_generators != inner.target.n_generators)
    throw std::invalid_argument("compose: intermediate groups differ in size");
  return {inner.source, outer.target, outer.matrix * inner.matrix};
}

/// Equality as maps of groups: generator images agree modulo the target
/// relations. Presentations are compared by generator count only.
inline bool same_map(const GroupHom &a, const GroupHom &b) {
  a.check_shape();
  b.check_shape();
  if (a.matrix.rows() != b.matrix.rows() || a.matrix.cols() != b.matrix.cols())
    return false;
  const IntMatrix diff = a.matrix - b.matrix;
  const Lattice lattice(a.target.relations);
  for (std::size_t j = 0; j < diff.cols(); ++j)
    if (!lattice.contains(diff.col(j)))
      return false;
  return true;
}

} // namespace argroth
