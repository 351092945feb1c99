#pragma once

#include <cstddef>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "argroth/integer_matrix.hpp"
#include "argroth/smith_normal_form.hpp"

namespace argroth {

/// Finitely presented abelian group Z^n / (row span of `relations`).
struct FPAbelianGroup {
  std::size_t n_generators = 0;
  IntMatrix relations = IntMatrix(0, 0); // one relation per row, cols == n_generators

  FPAbelianGroup() = default;
  explicit FPAbelianGroup(std::size_t n) : n_generators(n), relations(0, n) {}
  FPAbelianGroup(std::size_t n, IntMatrix rels)
      : n_generators(n), relations(std::move(rels)) {
    check();
  }

  void check() const {
    if (relations.cols() != n_generators)
      throw std::invalid_argument(
          "FPAbelianGroup: relation width " + std::to_string(relations.cols()) +
          " does not match " + std::to_string(n_generators) + " generators");
  }

  static FPAbelianGroup free_group(std::size_t n) { return FPAbelianGroup(n); }
};

/// Canonical isomorphism invariants: Z^free_rank (+) Z/d1 (+) ... with
/// every d_i >= 2 and d_i | d_{i+1}.
struct GroupInvariants {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }

  friend bool operator==(const GroupInvariants &,
                         const GroupInvariants &) = default;
};

inline GroupInvariants invariants(const FPAbelianGroup &g) {
  g.check();
  const SNFResult snf = smith_normal_form(g.relations);
  GroupInvariants out;
  const std::size_t r = snf.rank();
  out.free_rank = g.n_generators - r;
  for (std::size_t i = 0; i < r; ++i)
    if (snf.diagonal(i, i) != 1)
      out.torsion.push_back(snf.diagonal(i, i));
  return out;
}

inline std::size_t rational_rank(const FPAbelianGroup &g) {
  g.check();
  return g.n_generators - rational_rank(g.relations);
}

/// "Z^r" or "Z^r (+) Z/d1 (+) Z/d2 ..."; the zero group prints as "Z^0".
inline std::string to_string(const GroupInvariants &inv) {
  std::ostringstream os;
  os << "Z^" << inv.free_rank;
  for (const auto &d : inv.torsion)
    os << " (+) Z/" << d;
  return os.str();
}

inline std::ostream &operator<<(std::ostream &os, const GroupInvariants &inv) {
  return os << to_string(inv);
}

inline std::string torsion_string(const GroupInvariants &inv) {
  return to_string(std::span<const Integer>(inv.torsion));
}

/// Direct sum presentation: generators and relations placed block-diagonally.
inline FPAbelianGroup direct_sum(const std::vector<FPAbelianGroup> &parts) {
  std::size_t gens = 0, rels = 0;
  for (const auto &p : parts) {
    gens += p.n_generators;
    rels += p.relations.rows();
  }
  IntMatrix m(rels, gens);
  std::size_t row = 0, col = 0;
  for (const auto &p : parts) {
    for (std::size_t i = 0; i < p.relations.rows(); ++i)
      for (std::size_t j = 0; j < p.n_generators; ++j)
        m(row + i, col + j) = p.relations(i, j);
    row += p.relations.rows();
    col += p.n_generators;
  }
  return FPAbelianGroup(gens, std::move(m));
}

} // namespace argroth
