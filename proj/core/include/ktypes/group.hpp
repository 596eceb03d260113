#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ktypes/ktype.hpp"
#include "ktypes/vogan.hpp"

namespace ktypes {

/// Everything downstream verification needs about one group, built once
/// and shared read-only (all members are immutable after load_group).
struct GroupData {
  GroupSpec spec;

  // Equal-rank: reference realization and the chamber closure.
  std::optional<RootSystemData> roots;
  std::vector<Chamber> chambers;

  // Non-equal-rank: the fixed restricted-root tables.
  std::optional<RestrictedData> restricted;

  // Shared: the fixed Δ⁺(k,t) simples, the reference basis used for
  // dominant representatives and the hull order test, and the dominant
  // hull vertex ν = dominant_representative(2ρ_n).
  std::vector<Weight> k_simples;
  SimpleBasis reference;
  Weight hull_vertex;
  std::string rho_n_convention;  // nonempty only for the table-driven families

  bool equal_rank() const { return spec.is_equal_rank(); }
  std::size_t ambient() const { return static_cast<std::size_t>(spec.ambient()); }
};

/// Builds GroupData from scratch.
GroupData load_group(const GroupSpec& spec);

/// Cache-aware variant: chamber enumerations are stored as JSON under
/// cache_dir keyed by the group string (schema-versioned, written with
/// create-then-rename).  An empty cache_dir disables caching.
GroupData load_group(const GroupSpec& spec, const std::string& cache_dir);

} // namespace ktypes
