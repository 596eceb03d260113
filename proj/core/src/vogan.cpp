#include "ktypes/vogan.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

namespace ktypes {

std::size_t initial_painted_vertex(const GroupSpec& spec) {
  switch (spec.family) {
    case Family::su_pq: return spec.p - 1;
    case Family::so_2p_2q1: return spec.p - 1;
    case Family::sp_pq: return spec.p - 1;
    case Family::so_2p_2q: return spec.p - 1;
    case Family::so_2n_1: return spec.n - 1;
    case Family::sp_n_R: return spec.n - 1;
    case Family::so_star_2n: return spec.n - 1;
    default:
      throw error(spec.str() + ": no Vogan diagram for a non-equal-rank family");
  }
}

VoganDiagram initial_diagram(const GroupSpec& spec) {
  spec.validate();
  std::size_t v = initial_painted_vertex(spec);  // also rejects non-equal-rank
  SimpleBasis simples = reference_simples(spec.g_type(), spec.rank());
  std::vector<bool> painted(simples.rank(), false);
  painted[v] = true;
  return VoganDiagram{std::move(simples), std::move(painted)};
}

VoganDiagram reflect_diagram(const VoganDiagram& d, std::size_t i) {
  const std::size_t n = d.rank();
  if (i >= n) throw error("vertex index out of range");
  if (!d.painted[i])
    throw error("reflect_diagram: vertex " + std::to_string(i + 1) +
                " is not painted (compact simple roots do not move the chamber)");
  const Weight& alpha = d.simples[i];

  std::vector<Weight> new_simples;
  new_simples.reserve(n);
  for (std::size_t j = 0; j < n; ++j) new_simples.push_back(reflect(d.simples[j], alpha));

  std::vector<bool> painted = d.painted;
  Rat alpha_norm = dot(alpha, alpha);
  for (std::size_t j = 0; j < n; ++j) {
    if (j == i) continue;  // same color at the reflecting vertex
    Rat cij = pair(d.simples[j], alpha);
    if (cij == 0) continue;  // not adjacent: same color
    Rat nj = dot(d.simples[j], d.simples[j]);
    // Bond multiplicity pair(α_j,α_i)·pair(α_i,α_j); a double edge with a
    // longer neighbor keeps the neighbor's color, everything else flips.
    Rat mult = cij * pair(alpha, d.simples[j]);
    bool double_edge_longer = (mult == 2) && (nj > alpha_norm);
    if (!double_edge_longer) painted[j] = !painted[j];
  }

  return VoganDiagram{SimpleBasis{std::move(new_simples)}, std::move(painted)};
}

bool diagram_compact(const VoganDiagram& d, const Weight& beta) {
  // Coefficient of α_i is 2(β,ξ_i)/(α_i,α_i); solving via the fundamental
  // weights here would be circular for callers that construct them, so use
  // the general exact solve.
  auto coeffs = expand_in_basis(beta, d.simples.simples);
  if (!coeffs) throw error("weight outside the root lattice span");
  long painted_sum = 0;
  for (std::size_t j = 0; j < coeffs->size(); ++j) {
    const Rat& c = (*coeffs)[j];
    if (!rat_is_integer(c))
      throw error("weight is not in the root lattice: coefficient " + rat_str(c));
    if (d.painted[j]) painted_sum += rat_to_i64(c);
  }
  return painted_sum % 2 == 0;
}

bool is_compact_root(const Chamber& c, const Weight& beta) {
  bool found = false;
  for (const Weight& r : c.positive_roots)
    if (r == beta || (-r) == beta) {
      found = true;
      break;
    }
  if (!found) throw error("is_compact_root: not a root: " + beta.str());
  return diagram_compact(c.diagram, beta);
}

Chamber make_chamber(const RootSystemData& roots, VoganDiagram diagram,
                     std::vector<std::size_t> word) {
  const std::size_t ambient = roots.spec.ambient();
  std::vector<Weight> fw = fundamental_weights_for(diagram.simples);

  // A root β is positive for this chamber iff all its coefficients in the
  // chamber basis are >= 0; coefficient i is 2(β,ξ_i)/(α_i,α_i).
  std::vector<Rat> norms;
  for (const Weight& a : diagram.simples.simples) norms.push_back(dot(a, a));
  std::vector<Weight> positives;
  std::vector<Weight> compact_positives;
  for (const Weight& beta : roots.positive_roots) {
    for (int sign = 0; sign < 2; ++sign) {
      Weight cand = sign ? -beta : beta;
      bool nonneg = true;
      for (std::size_t i = 0; i < fw.size() && nonneg; ++i)
        if (2 * dot(cand, fw[i]) < 0) nonneg = false;
      if (!nonneg) continue;
      positives.push_back(cand);
      if (diagram_compact(diagram, cand)) compact_positives.push_back(cand);
      break;  // exactly one of ±β is positive
    }
  }
  std::sort(positives.begin(), positives.end());
  if (positives.size() != roots.positive_roots.size())
    throw error("chamber does not split the root system into halves");

  Chamber c{std::move(diagram), std::move(positives), Weight::zero(ambient),
            Weight::zero(ambient), Weight::zero(ambient), std::move(fw),
            std::move(word)};
  c.rho = half_sum(c.positive_roots, ambient);
  c.rho_c = half_sum(compact_positives, ambient);
  c.rho_n = c.rho - c.rho_c;
  return c;
}

static std::string positive_set_key(const std::vector<Weight>& sorted_positives) {
  std::string key;
  for (const Weight& w : sorted_positives) {
    key += w.str();
    key += ';';
  }
  return key;
}

std::vector<Chamber> enumerate_chambers(const RootSystemData& roots) {
  std::vector<Chamber> chambers;
  std::map<std::string, std::size_t> seen;

  std::deque<std::pair<VoganDiagram, std::vector<std::size_t>>> queue;
  queue.emplace_back(initial_diagram(roots.spec), std::vector<std::size_t>{});

  while (!queue.empty()) {
    auto [diagram, word] = std::move(queue.front());
    queue.pop_front();
    Chamber c = make_chamber(roots, std::move(diagram), word);
    std::string key = positive_set_key(c.positive_roots);
    if (seen.count(key)) continue;
    seen.emplace(std::move(key), chambers.size());

    for (std::size_t i = 0; i < c.diagram.rank(); ++i) {
      if (!c.diagram.painted[i]) continue;
      std::vector<std::size_t> next_word = c.word;
      next_word.push_back(i);
      queue.emplace_back(reflect_diagram(c.diagram, i), std::move(next_word));
    }
    chambers.push_back(std::move(c));
  }
  return chambers;
}

std::vector<Chamber> enumerate_chambers(const GroupSpec& spec) {
  return enumerate_chambers(build_root_system(spec));
}

} // namespace ktypes
