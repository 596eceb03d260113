#pragma once

#include <cstddef>
#include <vector>

#include "ktypes/rootsys.hpp"

namespace ktypes {

/// A simple-root basis with a compact/noncompact painting of each vertex
/// (true = noncompact).
struct VoganDiagram {
  SimpleBasis simples;
  std::vector<bool> painted;

  std::size_t rank() const { return painted.size(); }
};

/// One positive system Δ⁺(g,t) containing the fixed Δ⁺(k,t), together
/// with its derived data.  rho = rho_c + rho_n exactly.
struct Chamber {
  VoganDiagram diagram;
  std::vector<Weight> positive_roots;  // sorted canonically
  Weight rho;
  Weight rho_c;
  Weight rho_n;
  std::vector<Weight> fundamental_weights;
  std::vector<std::size_t> word;  // reflection word (vertex indices) from the initial chamber
};

/// The standard one-painted-vertex diagram for an equal-rank spec:
/// su(p,q), so(2p,2q+1), sp(p,q), so(2p,2q) paint vertex p;
/// so(2n,1), sp(n,R), so*(2n) paint vertex n.
VoganDiagram initial_diagram(const GroupSpec& spec);

/// 0-based index of the painted vertex of the initial diagram.
std::size_t initial_painted_vertex(const GroupSpec& spec);

/// Reflect at a painted vertex i: the new basis is s_{α_i}(Π) and the
/// painting is updated by the adjacency rules (the vertex itself and
/// non-neighbors keep their color; neighbors flip, except a longer
/// neighbor across a double edge keeps its color).
VoganDiagram reflect_diagram(const VoganDiagram& d, std::size_t i);

/// Parity compactness relative to a diagram: expand beta in the diagram's
/// basis and test whether the painted-coefficient sum is even.  Throws
/// when beta does not expand integrally (not a root of the lattice).
bool diagram_compact(const VoganDiagram& d, const Weight& beta);

/// Lemma-style compactness query on a chamber; beta must belong to
/// Δ(g,t) (either sign), otherwise an error is thrown.
bool is_compact_root(const Chamber& c, const Weight& beta);

/// Breadth-first closure of the initial diagram under reflections at
/// painted vertices, deduplicated by positive-root sets.  Returns every
/// positive system containing the fixed Δ⁺(k,t), each with derived data,
/// in discovery order (the initial chamber first).
std::vector<Chamber> enumerate_chambers(const GroupSpec& spec);
std::vector<Chamber> enumerate_chambers(const RootSystemData& roots);

/// Chamber construction for one diagram (exposed for round-trip /
/// cache-loading paths).
Chamber make_chamber(const RootSystemData& roots, VoganDiagram diagram,
                     std::vector<std::size_t> word);

} // namespace ktypes
