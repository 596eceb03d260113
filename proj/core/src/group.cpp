#include "ktypes/group.hpp"

#include "ktypes/serialize.hpp"

namespace ktypes {

GroupData load_group(const GroupSpec& spec) { return load_group(spec, ""); }

GroupData load_group(const GroupSpec& spec, const std::string& cache_dir) {
  spec.validate();
  GroupData g;
  g.spec = spec;
  if (spec.is_equal_rank()) {
    g.roots = build_root_system(spec);
    auto cached = load_cached_chambers(spec, *g.roots, cache_dir);
    if (cached) {
      g.chambers = std::move(*cached);
    } else {
      g.chambers = enumerate_chambers(*g.roots);
      store_cached_chambers(spec, g.chambers, cache_dir);
    }
    g.k_simples = compact_simple_roots(g.chambers.front());
    g.reference = g.chambers.front().diagram.simples;
    g.hull_vertex = dominant_representative(g.chambers.front().rho_n * 2, g.reference);
  } else {
    g.restricted = restricted_tables(spec);
    g.k_simples = g.restricted->k_simples.simples;
    g.reference = g.restricted->cases.front().g_simples;
    g.hull_vertex =
        dominant_representative(g.restricted->cases.front().two_rho_n, g.reference);
    g.rho_n_convention = g.restricted->rho_n_convention;
  }
  return g;
}

} // namespace ktypes
