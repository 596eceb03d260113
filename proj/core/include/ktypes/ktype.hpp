#pragma once

#include <string>
#include <vector>

#include "ktypes/report.hpp"
#include "ktypes/vogan.hpp"

namespace ktypes {

/// Shape of a compact simple root written in the chamber's simple basis.
/// The *_form / *_degenerate pairs share a root-list shape and are split
/// by whether the 1-coefficient prefix is empty.
enum class KCase {
  simple_root,    // γ is itself a simple root of Δ⁺(g,t)
  interval,       // α_l+...+α_m, ends noncompact, middle compact
  b3_form,        // α_l+...+α_{m−1}+2(α_m+...+α_n), l < m−1
  b3_degenerate,  // α_{m−1}+2(α_m+...+α_n)
  c3_form,        // 2(α_l+...+α_{n−1})+α_n
  d2_form,        // α_l+...+α_{n−2}+α_n
  d3_form,        // α_l+...+α_n, l < n−2
  d3_degenerate,  // α_{n−2}+α_{n−1}+α_n
  d4_form,        // α_l+...+α_{m−1}+2(α_m+...+α_{n−2})+α_{n−1}+α_n, l < m−1
  d4_degenerate,  // α_l+2(α_{l+1}+...+α_{n−2})+α_{n−1}+α_n
};

std::string kcase_name(KCase c);

struct KSimpleClassification {
  Weight gamma;
  KCase tag;
  int l = 0;  // 1-based interval parameters, meaning depends on the tag
  int m = 0;
  std::vector<int> coeffs;                // γ in the chamber's simple basis
  std::vector<bool> expected_noncompact;  // per-vertex pattern the case dictates
};

/// The simple roots of the fixed Δ⁺(k,t): indecomposable compact positive
/// roots of the chamber (identical as a set across chambers of one group).
/// Sorted canonically.
std::vector<Weight> compact_simple_roots(const Chamber& c);

/// All classification cases of the family that match gamma (shape and
/// compactness pattern).  classify_k_simple requires exactly one.
std::vector<KSimpleClassification> matching_cases(const GroupSpec& spec,
                                                  const Chamber& c,
                                                  const Weight& gamma);

/// Identifies the unique case of the family's classification and verifies
/// the stated compactness pattern of the summands.  Throws
/// classification_error (carrying the chamber word and gamma) when no or
/// several cases match — that would falsify the classification.
KSimpleClassification classify_k_simple(const GroupSpec& spec, const Chamber& c,
                                        const Weight& gamma);

/// Chain check: every maximal consecutive chain α_h, α_h±1, ... whose
/// partial sums are roots with γ minus the partial sum also a positive
/// root must have a noncompact head and a compact tail.
VerificationReport check_components(const Chamber& c, const Weight& gamma);

/// Per-chamber pairing facts about the compact simple roots γ = Σ c_i α_i:
/// (a) c_i(α_i,α_i) >= (γ,γ) whenever c_i != 0;
/// (b) 2(ξ_i,γ)/(γ,γ) ∈ {0,1,2};
/// (c) the same pairings are integers (integrality of 2(μ,γ)/(γ,γ) for
///     every g-integral μ follows by linearity).
VerificationReport check_pairing_bounds(const Chamber& c);

/// Fixed restricted-root data for one non-equal-rank verification case.
struct RestrictedCase {
  std::string label;  // "" for single-case families, else "I" / "II"
  SimpleBasis g_simples;
  std::vector<Weight> fundamental_weights;  // ξ_i dual to g_simples
  std::vector<Weight> p_positive;
  Weight two_rho_n;  // sum of p_positive
};

struct RestrictedData {
  GroupSpec spec;
  std::vector<Weight> k_positive;
  SimpleBasis k_simples;
  std::vector<Weight> k_fundamental_weights;  // ϖ_i dual to k_simples
  Weight two_rho_c;                           // sum of k_positive
  std::vector<RestrictedCase> cases;
  std::string rho_n_convention;
};

/// The verbatim tables for sl(2n+1,R), sl(2n,R) (cases I and II),
/// sl(n,H) and so(2p+1,2q+1).  Throws for equal-rank specs.
RestrictedData restricted_tables(const GroupSpec& spec);

/// Aggregate sweeps over every chamber of a group, with one report each;
/// classification failures arrive as counterexamples, not exceptions.
VerificationReport check_classification_all(const GroupSpec& spec,
                                            const std::vector<Chamber>& chambers);
VerificationReport check_components_all(const GroupSpec& spec,
                                        const std::vector<Chamber>& chambers);
VerificationReport check_pairing_bounds_all(const GroupSpec& spec,
                                            const std::vector<Chamber>& chambers);

} // namespace ktypes
