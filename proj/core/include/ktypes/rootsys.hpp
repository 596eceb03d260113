#pragma once

#include <string>
#include <vector>

#include "ktypes/lattice.hpp"

namespace ktypes {

/// Real forms handled by the library.  The first seven are equal rank;
/// the last four are verified through fixed restricted-root tables.
enum class Family {
  su_pq,       // su(p,q)
  so_2n_1,     // so(2n,1)
  so_2p_2q1,   // so(2p,2q+1), p,q >= 1
  sp_n_R,      // sp(n,R)
  sp_pq,       // sp(p,q)
  so_star_2n,  // so*(2n)
  so_2p_2q,    // so(2p,2q)
  sl_odd_R,    // sl(2n+1,R)
  sl_even_R,   // sl(2n,R)
  sl_n_H,      // sl(n,H)
  so_odd_odd,  // so(2p+1,2q+1)
};

/// Dynkin type of a reduced classical system.
enum class Type { A, B, C, D };

struct GroupSpec {
  Family family;
  // Parameter use depends on the family: (p,q) for the two-parameter
  // families, n for the one-parameter ones.
  int p = 0;
  int q = 0;
  int n = 0;

  /// Throws rank_error when the parameters fall below the hypotheses the
  /// classification needs (the message names the bound).
  void validate() const;

  bool is_equal_rank() const;
  /// Rank of the compact torus t (the dimension weights live in, up to the
  /// type-A central direction).
  int rank() const;
  /// Ambient coordinate dimension of the realization (rank+1 for type A).
  int ambient() const;
  /// Dynkin type of Δ(g,t) for equal-rank families, or of the reduced
  /// system underlying the restricted roots for the others.
  Type g_type() const;
  /// Canonical CLI form, e.g. "su:2,1", "so:4,5", "so*:8", "sl:3,H".
  std::string str() const;

  bool operator==(const GroupSpec& o) const = default;
};

struct RootSystemData {
  GroupSpec spec;
  Type type;
  std::vector<Weight> positive_roots;
  SimpleBasis simples;  // Bourbaki order
  std::vector<Weight> fundamental_weights;
  bool is_equal_rank = true;
};

/// Positive roots of the reference e_i realization for a reduced classical
/// system: A_{n}: e_i−e_j on n+1 coordinates; B_n: e_i±e_j, e_k;
/// C_n: e_i±e_j, 2e_k; D_n: e_i±e_j.  Simples in Bourbaki order.
std::vector<Weight> reference_positive_roots(Type t, int rank);
SimpleBasis reference_simples(Type t, int rank);

/// The symbolic positive-root lists in simple-root coordinates (intervals
/// for type A; the B/C/D lists with their doubled tails).  Used to
/// cross-check the e_i realization.
std::vector<std::vector<int>> symbolic_positive_roots(Type t, int rank);

/// Builds the full reference root system for an equal-rank spec and
/// cross-checks the symbolic lists against the realization.  Throws
/// rank_error for out-of-scope parameters and error when a non-equal-rank
/// family is passed (those are table-driven elsewhere).
RootSystemData build_root_system(const GroupSpec& spec);

/// (1/2)·Σ roots; the empty sum is zero(ambient).
Weight half_sum(const std::vector<Weight>& roots, std::size_t ambient);

/// ξ_i with pair(ξ_i, α_j) = δ_ij, by exact linear solve.  For type A the
/// representatives are trace-zero.
std::vector<Weight> fundamental_weights_for(const SimpleBasis& simples);

/// |W| for a reduced classical system (rank 0 gives 1).
Int weyl_order(Type t, int rank);

/// |W(g,t)| / |W(k,t)| from the standard order formulas — an independent
/// prediction of the chamber count for equal-rank groups.
Int expected_chamber_count(const GroupSpec& spec);

} // namespace ktypes
