#include "ktypes/smallness.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace ktypes {

std::string method_name(Method m) {
  switch (m) {
    case Method::order_test: return "order-test";
    case Method::dominance_test: return "dominance";
    case Method::lp_oracle: return "lp-oracle";
  }
  return "?";
}

static bool is_type_a(const GroupData& g) { return g.spec.g_type() == Type::A && g.equal_rank(); }

static Weight normalize_input(const GroupData& g, const Weight& mu, Rat* central_out) {
  if (mu.dim() != g.ambient())
    throw dimension_error("weight has " + std::to_string(mu.dim()) +
                          " coordinates, group ambient is " +
                          std::to_string(g.ambient()));
  if (is_type_a(g)) {
    Rat c = central_component(mu);
    if (central_out) *central_out = c;
    return project_trace_zero(mu);
  }
  if (central_out) *central_out = 0;
  return mu;
}

Weight usmall_hull_vertex(const GroupData& g, const Chamber& c) {
  return dominant_representative(c.rho_n * 2, g.reference);
}

USmallCertificate is_usmall(const GroupData& g, const Weight& mu) {
  USmallCertificate cert;
  cert.method = Method::order_test;
  cert.convention = g.rho_n_convention;
  Weight m = normalize_input(g, mu, &cert.central);
  Weight dom = dominant_representative(m, g.reference);
  auto coords = positive_root_cone_coords(g.hull_vertex - dom, g.reference);
  cert.usmall = coords.has_value();
  if (coords) cert.cone_coords = std::move(*coords);
  return cert;
}

USmallCertificate dominance_criterion(const GroupData& g, const Weight& mu) {
  USmallCertificate cert;
  cert.method = Method::dominance_test;
  cert.convention = g.rho_n_convention;
  Weight m = normalize_input(g, mu, &cert.central);
  if (g.equal_rank()) {
    for (std::size_t i = 0; i < g.chambers.size(); ++i) {
      const Chamber& c = g.chambers[i];
      if (is_dominant(c.rho_n * 2 - m, c.diagram.simples)) {
        cert.usmall = true;
        cert.frame_index = static_cast<int>(i);
        cert.chamber_word = c.word;
        return cert;
      }
    }
  } else {
    const auto& cases = g.restricted->cases;
    for (std::size_t i = 0; i < cases.size(); ++i) {
      if (is_dominant(cases[i].two_rho_n - m, cases[i].g_simples)) {
        cert.usmall = true;
        cert.frame_index = static_cast<int>(i);
        return cert;
      }
    }
  }
  cert.usmall = false;
  return cert;
}

std::vector<Weight> weyl_orbit(const Weight& w, const SimpleBasis& basis) {
  std::set<Weight> seen;
  std::deque<Weight> queue{w};
  seen.insert(w);
  while (!queue.empty()) {
    Weight cur = std::move(queue.front());
    queue.pop_front();
    for (const Weight& alpha : basis.simples) {
      Weight img = reflect(cur, alpha);
      if (seen.insert(img).second) queue.push_back(img);
    }
  }
  return std::vector<Weight>(seen.begin(), seen.end());
}

// Phase-1 simplex with Bland's rule, exact rationals throughout.
bool convex_combination(const std::vector<Weight>& points, const Weight& target,
                        std::vector<Rat>* coeffs_out) {
  const std::size_t k = points.size();
  if (k == 0) return false;
  const std::size_t dim = target.dim();
  const std::size_t m = dim + 1;  // coordinate equalities plus Σc = 1

  // rows: [A | b], artificial basis appended implicitly
  std::vector<std::vector<Rat>> a(m, std::vector<Rat>(k + 1));
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t j = 0; j < k; ++j) a[r][j] = points[j][r];
    a[r][k] = target[r];
  }
  for (std::size_t j = 0; j < k; ++j) a[m - 1][j] = 1;
  a[m - 1][k] = 1;
  for (std::size_t r = 0; r < m; ++r)
    if (a[r][k] < 0)
      for (auto& q : a[r]) q = -q;

  // objective: minimize the sum of artificials; reduced cost of column j
  // is the column sum over rows whose basic variable is still artificial.
  std::vector<long> basis(m, -1);  // -1 = artificial
  auto reduced_cost = [&](std::size_t j) {
    Rat s(0);
    for (std::size_t r = 0; r < m; ++r)
      if (basis[r] < 0) s += a[r][j];
    return s;
  };

  for (;;) {
    // Bland: entering column = lowest index with positive reduced cost.
    std::size_t enter = k;
    for (std::size_t j = 0; j < k; ++j) {
      if (reduced_cost(j) > 0) {
        enter = j;
        break;
      }
    }
    if (enter == k) break;
    // Bland's leaving rule: among the minimum-ratio rows take the one whose
    // basic variable has the smallest index (artificials count as k + row).
    auto var_index = [&](std::size_t r) {
      return basis[r] < 0 ? k + r : static_cast<std::size_t>(basis[r]);
    };
    std::size_t leave = m;
    Rat best;
    for (std::size_t r = 0; r < m; ++r) {
      if (a[r][enter] <= 0) continue;
      Rat ratio = a[r][k] / a[r][enter];
      if (leave == m || ratio < best ||
          (ratio == best && var_index(r) < var_index(leave))) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == m) throw error("unbounded phase-1 system");
    // pivot
    Rat piv = a[leave][enter];
    for (auto& q : a[leave]) q /= piv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == leave || a[r][enter] == 0) continue;
      Rat f = a[r][enter];
      for (std::size_t c2 = 0; c2 <= k; ++c2) a[r][c2] -= f * a[leave][c2];
    }
    basis[leave] = static_cast<long>(enter);
  }

  Rat residual(0);
  for (std::size_t r = 0; r < m; ++r)
    if (basis[r] < 0) residual += a[r][k];
  if (residual != 0) return false;

  if (coeffs_out) {
    coeffs_out->assign(k, Rat(0));
    for (std::size_t r = 0; r < m; ++r)
      if (basis[r] >= 0) (*coeffs_out)[static_cast<std::size_t>(basis[r])] = a[r][k];
  }
  return true;
}

USmallCertificate lp_oracle_certificate(const GroupData& g, const Weight& mu) {
  if (g.spec.rank() > 3)
    throw rank_error(g.spec.str() + ": lp oracle is guarded to rank <= 3");
  USmallCertificate cert;
  cert.method = Method::lp_oracle;
  cert.convention = g.rho_n_convention;
  Weight m = normalize_input(g, mu, &cert.central);
  std::vector<Weight> orbit = weyl_orbit(g.hull_vertex, g.reference);
  std::vector<Rat> coeffs;
  cert.usmall = convex_combination(orbit, m, &coeffs);
  if (cert.usmall) cert.convex_coeffs = std::move(coeffs);
  return cert;
}

bool lp_oracle(const GroupData& g, const Weight& mu) {
  return lp_oracle_certificate(g, mu).usmall;
}

} // namespace ktypes
