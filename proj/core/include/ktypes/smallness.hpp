#pragma once

#include <string>
#include <vector>

#include "ktypes/group.hpp"

namespace ktypes {

/// How a u-smallness verdict was reached.
enum class Method { order_test, dominance_test, lp_oracle };

std::string method_name(Method m);

/// A u-smallness verdict with a re-checkable witness.
struct USmallCertificate {
  bool usmall = false;
  Method method = Method::order_test;
  /// order-test: the (nonnegative) simple-root coordinates of ν − μ⁺ when
  /// the verdict is true.
  std::vector<Rat> cone_coords;
  /// dominance-test: the frame (chamber or case) whose 2ρ_n − μ is
  /// g-dominant.
  int frame_index = -1;
  std::vector<std::size_t> chamber_word;
  /// lp-oracle: convex coefficients over the orbit when feasible.
  std::vector<Rat> convex_coeffs;
  /// Central component stripped before the test (type A only).
  Rat central = Rat(0);
  /// ρ_n convention note for the table-driven families.
  std::string convention;
};

/// ν for one chamber: the dominant representative of its 2ρ_n in the
/// group's reference basis (the same vector for every chamber).
Weight usmall_hull_vertex(const GroupData& g, const Chamber& c);

/// Hull membership via the dominance order: μ is u-small iff
/// ν − dominant_representative(μ) is a nonnegative combination of simple
/// roots.  Type-A weights are projected to the trace-zero plane first and
/// the stripped central component is recorded on the certificate.
USmallCertificate is_usmall(const GroupData& g, const Weight& mu);

/// Sufficient criterion: search every frame for one where 2ρ_n − μ is
/// g-dominant.  A false verdict does NOT mean u-large.
USmallCertificate dominance_criterion(const GroupData& g, const Weight& mu);

/// The full Weyl orbit of w under the reflection group of the basis.
std::vector<Weight> weyl_orbit(const Weight& w, const SimpleBasis& basis);

/// Independent exact oracle (rank <= 3): enumerate the orbit {2wρ_n} and
/// decide μ ∈ conv(orbit) by exact phase-1 simplex.  Throws rank_error
/// beyond the guard.
bool lp_oracle(const GroupData& g, const Weight& mu);

/// Same, returning the certificate with convex coefficients.
USmallCertificate lp_oracle_certificate(const GroupData& g, const Weight& mu);

/// Exact feasibility of target = Σ c_i points_i, Σ c_i = 1, c_i >= 0,
/// with the witness coefficients when feasible (phase-1 simplex with
/// Bland's rule).
bool convex_combination(const std::vector<Weight>& points, const Weight& target,
                        std::vector<Rat>* coeffs_out);

} // namespace ktypes
