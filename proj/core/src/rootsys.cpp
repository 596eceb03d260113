#include "ktypes/rootsys.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ktypes {

void GroupSpec::validate() const {
  auto need = [&](bool ok, const std::string& msg) {
    if (!ok) throw rank_error(str() + ": " + msg);
  };
  switch (family) {
    case Family::su_pq:
      need(p >= 1 && q >= 1, "su(p,q) requires p,q >= 1");
      break;
    case Family::so_2n_1:
      need(n > 1, "so(2n,1) requires n > 1");
      break;
    case Family::so_2p_2q1:
      need(p >= 1 && q >= 1, "so(2p,2q+1) requires p,q >= 1");
      need(p + q > 1, "so(2p,2q+1) requires p+q > 1");
      break;
    case Family::sp_n_R:
      need(n > 2, "sp(n,R) requires n > 2");
      break;
    case Family::sp_pq:
      need(p >= 1 && q >= 1, "sp(p,q) requires p,q >= 1");
      need(p + q > 2, "sp(p,q) requires p+q > 2");
      break;
    case Family::so_star_2n:
      need(n > 3, "so*(2n) requires n > 3");
      break;
    case Family::so_2p_2q:
      need(p >= 1 && q >= 1, "so(2p,2q) requires p,q >= 1");
      need(p + q > 3, "so(2p,2q) requires p+q > 3");
      break;
    case Family::sl_odd_R:
      need(n >= 1, "sl(2n+1,R) requires n >= 1");
      break;
    case Family::sl_even_R:
      need(n >= 2, "sl(2n,R) requires n >= 2");
      break;
    case Family::sl_n_H:
      need(n >= 2, "sl(n,H) requires n >= 2");
      break;
    case Family::so_odd_odd:
      need(p >= 0 && q >= 1, "so(2p+1,2q+1) requires p >= 0, q >= 1");
      break;
  }
}

bool GroupSpec::is_equal_rank() const {
  switch (family) {
    case Family::sl_odd_R:
    case Family::sl_even_R:
    case Family::sl_n_H:
    case Family::so_odd_odd:
      return false;
    default:
      return true;
  }
}

int GroupSpec::rank() const {
  switch (family) {
    case Family::su_pq: return p + q - 1;
    case Family::so_2n_1: return n;
    case Family::so_2p_2q1: return p + q;
    case Family::sp_n_R: return n;
    case Family::sp_pq: return p + q;
    case Family::so_star_2n: return n;
    case Family::so_2p_2q: return p + q;
    case Family::sl_odd_R: return n;
    case Family::sl_even_R: return n;
    case Family::sl_n_H: return n;
    case Family::so_odd_odd: return p + q;
  }
  return 0;
}

int GroupSpec::ambient() const {
  return family == Family::su_pq ? p + q : rank();
}

Type GroupSpec::g_type() const {
  switch (family) {
    case Family::su_pq: return Type::A;
    case Family::so_2n_1:
    case Family::so_2p_2q1: return Type::B;
    case Family::sp_n_R:
    case Family::sp_pq: return Type::C;
    case Family::so_star_2n:
    case Family::so_2p_2q: return Type::D;
    // reduced systems underlying the restricted-root lists
    case Family::sl_odd_R: return Type::B;
    case Family::sl_even_R: return Type::C;
    case Family::sl_n_H: return Type::C;
    case Family::so_odd_odd: return Type::B;
  }
  return Type::A;
}

std::string GroupSpec::str() const {
  switch (family) {
    case Family::su_pq: return "su:" + std::to_string(p) + "," + std::to_string(q);
    case Family::so_2n_1: return "so:" + std::to_string(2 * n) + ",1";
    case Family::so_2p_2q1:
      return "so:" + std::to_string(2 * p) + "," + std::to_string(2 * q + 1);
    case Family::sp_n_R: return "sp:" + std::to_string(n) + ",R";
    case Family::sp_pq: return "sp:" + std::to_string(p) + "," + std::to_string(q);
    case Family::so_star_2n: return "so*:" + std::to_string(2 * n);
    case Family::so_2p_2q:
      return "so:" + std::to_string(2 * p) + "," + std::to_string(2 * q);
    case Family::sl_odd_R: return "sl:" + std::to_string(2 * n + 1) + ",R";
    case Family::sl_even_R: return "sl:" + std::to_string(2 * n) + ",R";
    case Family::sl_n_H: return "sl:" + std::to_string(n) + ",H";
    case Family::so_odd_odd:
      return "so:" + std::to_string(2 * p + 1) + "," + std::to_string(2 * q + 1);
  }
  return "?";
}

static Weight unit(std::size_t dim, std::size_t i, int v = 1) {
  std::vector<Rat> c(dim, Rat(0));
  c[i] = v;
  return Weight(std::move(c));
}

static Weight e_minus_e(std::size_t dim, std::size_t i, std::size_t j) {
  std::vector<Rat> c(dim, Rat(0));
  c[i] = 1;
  c[j] = -1;
  return Weight(std::move(c));
}

static Weight e_plus_e(std::size_t dim, std::size_t i, std::size_t j) {
  std::vector<Rat> c(dim, Rat(0));
  c[i] = 1;
  c[j] = 1;
  return Weight(std::move(c));
}

std::vector<Weight> reference_positive_roots(Type t, int rank) {
  std::vector<Weight> roots;
  const std::size_t dim = (t == Type::A) ? rank + 1 : rank;
  switch (t) {
    case Type::A:
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j) roots.push_back(e_minus_e(dim, i, j));
      break;
    case Type::B:
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j) {
          roots.push_back(e_minus_e(dim, i, j));
          roots.push_back(e_plus_e(dim, i, j));
        }
      for (std::size_t k = 0; k < dim; ++k) roots.push_back(unit(dim, k));
      break;
    case Type::C:
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j) {
          roots.push_back(e_minus_e(dim, i, j));
          roots.push_back(e_plus_e(dim, i, j));
        }
      for (std::size_t k = 0; k < dim; ++k) roots.push_back(unit(dim, k, 2));
      break;
    case Type::D:
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j) {
          roots.push_back(e_minus_e(dim, i, j));
          roots.push_back(e_plus_e(dim, i, j));
        }
      break;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

SimpleBasis reference_simples(Type t, int rank) {
  if (rank < 1) throw error("rank must be positive");
  if (t == Type::D && rank < 2) throw error("type D needs rank >= 2");
  const std::size_t dim = (t == Type::A) ? rank + 1 : rank;
  std::vector<Weight> s;
  const int diffs = (t == Type::A) ? rank : rank - 1;
  for (int i = 0; i < diffs; ++i) s.push_back(e_minus_e(dim, i, i + 1));
  switch (t) {
    case Type::A: break;
    case Type::B: s.push_back(unit(dim, rank - 1)); break;
    case Type::C: s.push_back(unit(dim, rank - 1, 2)); break;
    case Type::D: s.push_back(e_plus_e(dim, rank - 2, rank - 1)); break;
  }
  return SimpleBasis::checked(std::move(s));
}

std::vector<std::vector<int>> symbolic_positive_roots(Type t, int rank) {
  const int n = rank;
  std::vector<std::vector<int>> out;
  auto zero = [&] { return std::vector<int>(n, 0); };
  auto add_interval = [&](int l, int m) {  // 1-based inclusive
    auto c = zero();
    for (int i = l; i <= m; ++i) c[i - 1] = 1;
    out.push_back(std::move(c));
  };
  // simples
  for (int i = 1; i <= n; ++i) {
    auto c = zero();
    c[i - 1] = 1;
    out.push_back(std::move(c));
  }
  switch (t) {
    case Type::A:
      for (int l = 1; l < n; ++l)
        for (int m = l + 1; m <= n; ++m) add_interval(l, m);
      break;
    case Type::B:
      // (B1) proper intervals below n, (B2) intervals reaching n,
      // (B3) α_l+...+α_{m−1}+2(α_m+...+α_n)
      for (int l = 1; l < n; ++l)
        for (int m = l + 1; m < n; ++m) add_interval(l, m);
      for (int l = 1; l < n; ++l) add_interval(l, n);
      for (int l = 1; l < n; ++l)
        for (int m = l + 1; m <= n; ++m) {
          auto c = zero();
          for (int i = l; i <= m - 1; ++i) c[i - 1] = 1;
          for (int i = m; i <= n; ++i) c[i - 1] = 2;
          out.push_back(std::move(c));
        }
      break;
    case Type::C:
      // (C1), (C2) α_l+...+α_{m−1}+2(α_m+...+α_{n−1})+α_n, (C3) 2(α_m+...+α_{n−1})+α_n
      for (int l = 1; l < n; ++l)
        for (int m = l + 1; m <= n; ++m) add_interval(l, m);
      for (int l = 1; l < n; ++l)
        for (int m = l + 1; m < n; ++m) {
          auto c = zero();
          for (int i = l; i <= m - 1; ++i) c[i - 1] = 1;
          for (int i = m; i <= n - 1; ++i) c[i - 1] = 2;
          c[n - 1] = 1;
          out.push_back(std::move(c));
        }
      for (int m = 1; m < n; ++m) {
        auto c = zero();
        for (int i = m; i <= n - 1; ++i) c[i - 1] = 2;
        c[n - 1] = 1;
        out.push_back(std::move(c));
      }
      break;
    case Type::D:
      // (D1), (D2) ...+α_{n−2}+α_n, (D3) ...+α_{n−1}+α_n,
      // (D4) α_l+...+α_{m−1}+2(α_m+...+α_{n−2})+α_{n−1}+α_n
      for (int l = 1; l < n; ++l)
        for (int m = l + 1; m <= n - 1; ++m) add_interval(l, m);
      for (int l = 1; l < n - 1; ++l) {
        auto c = zero();
        for (int i = l; i <= n - 2; ++i) c[i - 1] = 1;
        c[n - 1] = 1;
        out.push_back(std::move(c));
      }
      for (int l = 1; l < n - 1; ++l) add_interval(l, n);
      for (int l = 1; l < n - 1; ++l)
        for (int m = l + 1; m < n - 1; ++m) {
          auto c = zero();
          for (int i = l; i <= m - 1; ++i) c[i - 1] = 1;
          for (int i = m; i <= n - 2; ++i) c[i - 1] = 2;
          c[n - 2] = 1;
          c[n - 1] = 1;
          out.push_back(std::move(c));
        }
      break;
  }
  return out;
}

Weight half_sum(const std::vector<Weight>& roots, std::size_t ambient) {
  Weight s = Weight::zero(ambient);
  for (const Weight& r : roots) s = s + r;
  return s * Rat(1, 2);
}

std::vector<Weight> fundamental_weights_for(const SimpleBasis& simples) {
  const std::size_t n = simples.rank();
  // Cartan system: Σ_k y_k pair(α_k, α_j) = δ_ij for each i.
  std::vector<std::vector<Rat>> cartan(n, std::vector<Rat>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) cartan[j][k] = pair(simples[k], simples[j]);
  std::vector<Weight> fw;
  fw.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rat> rhs(n, Rat(0));
    rhs[i] = 1;
    std::vector<Rat> y = solve_linear(cartan, std::move(rhs));
    Weight xi = Weight::zero(simples[0].dim());
    for (std::size_t k = 0; k < n; ++k) xi = xi + simples[k] * y[k];
    fw.push_back(std::move(xi));
  }
  return fw;
}

RootSystemData build_root_system(const GroupSpec& spec) {
  spec.validate();
  if (!spec.is_equal_rank())
    throw error(spec.str() + ": non-equal-rank families are table-driven; "
                "build_root_system handles the equal-rank realizations");
  const Type t = spec.g_type();
  const int n = spec.rank();

  RootSystemData data{spec, t, reference_positive_roots(t, n),
                      reference_simples(t, n), {}, true};
  data.fundamental_weights = fundamental_weights_for(data.simples);

  // Cross-check the symbolic lists against the realization, bijectively.
  auto symbolic = symbolic_positive_roots(t, n);
  std::set<Weight> realized(data.positive_roots.begin(), data.positive_roots.end());
  if (symbolic.size() != realized.size())
    throw error(spec.str() + ": symbolic root list size " +
                std::to_string(symbolic.size()) + " != " +
                std::to_string(realized.size()));
  std::set<Weight> from_symbolic;
  for (const auto& coeffs : symbolic) {
    Weight w = Weight::zero(spec.ambient());
    for (int i = 0; i < n; ++i)
      if (coeffs[i] != 0) w = w + data.simples[i] * Rat(coeffs[i]);
    from_symbolic.insert(std::move(w));
  }
  if (from_symbolic != realized)
    throw error(spec.str() + ": symbolic root lists disagree with the realization");

  return data;
}

Int weyl_order(Type t, int rank) {
  if (rank <= 0) return 1;
  Int fact(1);
  for (int i = 2; i <= rank; ++i) fact *= i;
  Int two_pow(1);
  switch (t) {
    case Type::A: {
      Int f(1);
      for (int i = 2; i <= rank + 1; ++i) f *= i;
      return f;
    }
    case Type::B:
    case Type::C:
      mpz_mul_2exp(two_pow.get_mpz_t(), two_pow.get_mpz_t(), rank);
      return two_pow * fact;
    case Type::D:
      mpz_mul_2exp(two_pow.get_mpz_t(), two_pow.get_mpz_t(), rank - 1);
      return two_pow * fact;
  }
  return 1;
}

Int expected_chamber_count(const GroupSpec& spec) {
  spec.validate();
  Int g, k;
  switch (spec.family) {
    case Family::su_pq:
      g = weyl_order(Type::A, spec.p + spec.q - 1);
      k = weyl_order(Type::A, spec.p - 1) * weyl_order(Type::A, spec.q - 1);
      break;
    case Family::so_2n_1:
      g = weyl_order(Type::B, spec.n);
      k = weyl_order(Type::D, spec.n);
      break;
    case Family::so_2p_2q1:
      g = weyl_order(Type::B, spec.p + spec.q);
      k = weyl_order(Type::D, spec.p) * weyl_order(Type::B, spec.q);
      break;
    case Family::sp_n_R:
      g = weyl_order(Type::C, spec.n);
      k = weyl_order(Type::A, spec.n - 1);
      break;
    case Family::sp_pq:
      g = weyl_order(Type::C, spec.p + spec.q);
      k = weyl_order(Type::C, spec.p) * weyl_order(Type::C, spec.q);
      break;
    case Family::so_star_2n:
      g = weyl_order(Type::D, spec.n);
      k = weyl_order(Type::A, spec.n - 1);
      break;
    case Family::so_2p_2q:
      g = weyl_order(Type::D, spec.p + spec.q);
      k = weyl_order(Type::D, spec.p) * weyl_order(Type::D, spec.q);
      break;
    default:
      throw error(spec.str() + ": chamber counts apply to equal-rank groups");
  }
  if (g % k != 0) throw error("Weyl order not divisible by subgroup order");
  return g / k;
}

} // namespace ktypes
