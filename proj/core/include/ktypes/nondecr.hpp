#pragma once

#include <string>
#include <vector>

#include "ktypes/smallness.hpp"

namespace ktypes {

/// One verification frame: an equal-rank chamber or a table-driven case,
/// reduced to the data the non-decreasable predicate needs.
struct VerificationFrame {
  std::string label;       // "chamber 3" or "case I"
  std::string case_label;  // raw table-case label: "", "I" or "II"
  bool equal_rank = true;
  std::size_t index = 0;  // chamber index / case index
  SimpleBasis g_simples;
  std::vector<Weight> fundamental_weights;  // ξ dual to g_simples
  Weight two_rho_c;
  Weight two_rho_n;
  std::vector<Weight> k_simples;
  std::vector<Weight> k_fundamental_weights;  // enumeration basis for table cases
  std::vector<std::size_t> word;              // equal-rank chamber word
};

std::vector<VerificationFrame> verification_frames(const GroupData& g);

/// Per-fundamental-weight evidence: which of the two dominance failures
/// held for ξ_i.  At least one is set for every index of a non-decreasable
/// weight.
struct IndexFailure {
  bool k_failed = false;  // μ − ξ_i not k-dominant
  bool g_failed = false;  // μ + 2ρ_c − ξ_i not g-dominant
};

enum class NonDecrStatus {
  ok,
  not_k_dominant,       // μ fails k-dominance
  not_integral,         // μ fails the integrality convention of the frame
  shift_not_g_dominant  // μ + 2ρ_c fails g-dominance in this frame
};

struct NonDecrCheck {
  NonDecrStatus status = NonDecrStatus::ok;
  bool nondecreasable = false;
  std::vector<IndexFailure> reasons;
};

/// The definitional test: μ is non-decreasable in the frame iff for every
/// i either μ−ξ_i fails k-dominance or μ+2ρ_c−ξ_i fails g-dominance.
/// Precondition violations are reported distinctly through status.
NonDecrCheck is_nondecreasable(const VerificationFrame& f, const Weight& mu);

/// Enumeration bounds on pair(μ, α_i):
///   −pair(2ρ_c, α_i)  <=  pair(μ, α_i)  <=  2·pair(2ρ_n, α_i) + slack.
/// The lower bound is forced by the μ+2ρ_c dominance precondition; the
/// upper bound doubles the dominance-test prediction so that a would-be
/// counterexample just beyond the hull is caught rather than excluded.
struct SearchBox {
  std::vector<Rat> lower;
  std::vector<Rat> upper;
  int slack = 0;
};

SearchBox search_box(const VerificationFrame& f, int slack);

struct FrameHit {
  std::size_t frame_index = 0;
  std::string frame_label;
  std::vector<Rat> fw_coords;  // μ in this frame's ξ basis
  std::vector<IndexFailure> reasons;
};

struct NonDecrCandidate {
  Weight mu;
  std::vector<FrameHit> hits;
};

/// Scans every frame's search box for integral k-dominant weights passing
/// the predicate; a weight qualifying in several frames is reported once
/// with all its hits.  Candidates are ordered lexicographically by
/// (dominant representative, μ).  jobs > 1 fans frames out over threads;
/// the output is identical for every job count.
std::vector<NonDecrCandidate> enumerate_nondecreasable(const GroupData& g, int slack,
                                                       int jobs = 1);

struct VerifyOptions {
  int slack = 4;
  int jobs = 1;
};

/// Runs the enumeration and asserts that (i) every candidate is u-small
/// and (ii) for equal-rank groups every candidate passes the 2ρ_n − μ
/// dominance test in each of its own chambers.  Counterexamples (expected:
/// none) are report content, not exceptions.
VerificationReport verify_containment(const GroupData& g, const VerifyOptions& opt);

} // namespace ktypes
