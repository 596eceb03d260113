#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ktypes/rational.hpp"

namespace ktypes {

/// A weight: an exact rational coordinate vector in an ambient Euclidean
/// space carrying the standard dot product.  Immutable in spirit; all
/// operations return fresh values.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<Rat> coords) : coords_(std::move(coords)) {}

  static Weight zero(std::size_t ambient);

  std::size_t dim() const { return coords_.size(); }
  const Rat& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Rat>& coords() const { return coords_; }

  bool is_zero() const;

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;
  Weight operator*(const Rat& s) const;

  bool operator==(const Weight& o) const { return coords_ == o.coords_; }
  bool operator!=(const Weight& o) const { return !(*this == o); }
  /// Lexicographic order on coordinates; used for canonical sorting and
  /// deduplication keys.
  bool operator<(const Weight& o) const;

  /// "1,-1/2,0" — also the parse format.
  std::string str() const;
  static Weight parse(const std::string& s);

 private:
  std::vector<Rat> coords_;
};

/// Standard dot product (λ, μ).
Rat dot(const Weight& a, const Weight& b);

/// An ordered simple-root basis.  The constructor-checked invariants are
/// linear independence and integer Cartan pairings that are <= 0 off the
/// diagonal.
struct SimpleBasis {
  std::vector<Weight> simples;

  std::size_t rank() const { return simples.size(); }
  const Weight& operator[](std::size_t i) const { return simples[i]; }

  /// Validates the basis invariants; throws on violation.
  static SimpleBasis checked(std::vector<Weight> simples);
};

/// Coroot pairing 2(λ,α)/(α,α).  Throws degenerate_root_error when
/// (α,α) = 0 and dimension_error on ambient mismatch.
Rat pair(const Weight& lambda, const Weight& alpha);

/// s_α(λ) = λ − pair(λ,α)·α.
Weight reflect(const Weight& lambda, const Weight& alpha);

/// pair(λ, α) >= 0 for every simple α.
bool is_dominant(const Weight& lambda, const SimpleBasis& basis);

/// The unique dominant element of the W-orbit of λ, by greedy descent:
/// while some pair(λ, α_i) < 0, reflect at the least such i.
Weight dominant_representative(const Weight& lambda, const SimpleBasis& basis);

/// Exact coordinates of v in the given (independent) vectors, or nullopt
/// when v lies outside their span.
std::optional<std::vector<Rat>> expand_in_basis(const Weight& v,
                                                const std::vector<Weight>& basis);

/// True iff v = Σ c_i α_i with every c_i >= 0 (false when v is outside the
/// span of the simples).
bool in_positive_root_cone(const Weight& v, const SimpleBasis& basis);

/// Same test, exposing the cone coordinates when membership holds.
std::optional<std::vector<Rat>> positive_root_cone_coords(const Weight& v,
                                                          const SimpleBasis& basis);

/// Orthogonal projection onto the trace-zero hyperplane (subtract the
/// coordinate mean).  Identity on weights that already sum to zero; used
/// for the type-A realizations.
Weight project_trace_zero(const Weight& w);

/// Mean of the coordinates (the central component removed by
/// project_trace_zero).
Rat central_component(const Weight& w);

/// Exact solve of a square rational system A x = b by Gaussian
/// elimination; throws error on a singular matrix.
std::vector<Rat> solve_linear(std::vector<std::vector<Rat>> a, std::vector<Rat> b);

} // namespace ktypes
