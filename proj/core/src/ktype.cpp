#include "ktypes/ktype.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ktypes {

std::string kcase_name(KCase c) {
  switch (c) {
    case KCase::simple_root: return "simple";
    case KCase::interval: return "interval";
    case KCase::b3_form: return "B3-form";
    case KCase::b3_degenerate: return "B3-degenerate";
    case KCase::c3_form: return "C3-form";
    case KCase::d2_form: return "D2-form";
    case KCase::d3_form: return "D3-form";
    case KCase::d3_degenerate: return "D3-degenerate";
    case KCase::d4_form: return "D4-form";
    case KCase::d4_degenerate: return "D4-degenerate";
  }
  return "?";
}

std::vector<Weight> compact_simple_roots(const Chamber& c) {
  std::vector<Weight> compact;
  for (const Weight& r : c.positive_roots)
    if (diagram_compact(c.diagram, r)) compact.push_back(r);
  std::set<Weight> compact_set(compact.begin(), compact.end());

  std::vector<Weight> simples;
  for (const Weight& g : compact) {
    bool decomposable = false;
    for (const Weight& a : compact) {
      if (!(a < g)) continue;  // need a proper summand; b = g − a handles the rest
      if (compact_set.count(g - a)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simples.push_back(g);
  }
  std::sort(simples.begin(), simples.end());
  return simples;
}

namespace {

// 1-based view of the coefficient vector.
struct Coeffs {
  std::vector<int> c;
  int n;
  int at(int i) const { return c[i - 1]; }
};

// Candidate case template before pattern verification.
struct Shape {
  KCase tag;
  int l, m;
  std::vector<int> noncompact;  // 1-based indices required noncompact
};

bool coeffs_equal(const Coeffs& x, const std::vector<int>& want) { return x.c == want; }

std::vector<int> shape_vector(int n, int l1, int m1, int twol, int twom, bool at_nm1,
                              bool at_n) {
  // ones on [l1,m1], twos on [twol,twom], plus optional single coefficients
  // at n−1 and n.  Empty ranges are passed as l > m.
  std::vector<int> v(n, 0);
  for (int i = l1; i <= m1; ++i) v[i - 1] = 1;
  for (int i = twol; i <= twom; ++i) v[i - 1] = 2;
  if (at_nm1) v[n - 2] += 1;
  if (at_n) v[n - 1] += 1;
  return v;
}

void family_shapes(const GroupSpec& spec, const Coeffs& x, std::vector<Shape>& out) {
  const int n = x.n;
  auto push = [&](KCase tag, int l, int m, std::vector<int> nc) {
    out.push_back(Shape{tag, l, m, std::move(nc)});
  };

  // γ simple: compact by assumption, so the vertex must be unpainted.
  for (int i = 1; i <= n; ++i)
    if (coeffs_equal(x, shape_vector(n, i, i, 1, 0, false, false)))
      push(KCase::simple_root, i, i, {});

  auto intervals = [&](int max_m) {
    for (int l = 1; l < n; ++l)
      for (int m = l + 1; m <= max_m; ++m)
        if (coeffs_equal(x, shape_vector(n, l, m, 1, 0, false, false)))
          push(KCase::interval, l, m, {l, m});
  };

  switch (spec.family) {
    case Family::su_pq:
      intervals(n);
      break;
    case Family::so_2n_1:
      // only γ = α_{n−1} + 2α_n beyond the simples
      if (coeffs_equal(x, shape_vector(n, n - 1, n - 1, n, n, false, false)))
        push(KCase::b3_degenerate, n - 1, n, {n});
      break;
    case Family::so_2p_2q1:
      intervals(n);
      for (int m = 2; m <= n; ++m) {
        // α_{m−1} + 2(α_m+...+α_n)
        if (coeffs_equal(x, shape_vector(n, m - 1, m - 1, m, n, false, false)))
          push(KCase::b3_degenerate, m - 1, m, {m});
        // α_l+...+α_{m−1} + 2(α_m+...+α_n), l < m−1
        for (int l = 1; l < m - 1; ++l)
          if (coeffs_equal(x, shape_vector(n, l, m - 1, m, n, false, false)))
            push(KCase::b3_form, l, m, {l, m - 1, m});
      }
      break;
    case Family::sp_n_R:
      intervals(n);
      break;
    case Family::sp_pq:
      intervals(n);
      // 2(α_l+...+α_{n−1}) + α_n
      for (int l = 1; l < n; ++l)
        if (coeffs_equal(x, shape_vector(n, 0, -1, l, n - 1, false, true)))
          push(KCase::c3_form, l, n, {l});
      break;
    case Family::so_star_2n:
      intervals(n - 1);
      // α_l+...+α_{n−2} + α_n
      for (int l = 1; l < n - 1; ++l)
        if (coeffs_equal(x, shape_vector(n, l, n - 2, 1, 0, false, true)))
          push(KCase::d2_form, l, n, {l, n});
      break;
    case Family::so_2p_2q:
      intervals(n - 1);
      for (int l = 1; l < n - 1; ++l)
        if (coeffs_equal(x, shape_vector(n, l, n - 2, 1, 0, false, true)))
          push(KCase::d2_form, l, n, {l, n});
      // α_l+...+α_n: the chain through both fork vertices
      for (int l = 1; l < n - 2; ++l)
        if (coeffs_equal(x, shape_vector(n, l, n, 1, 0, false, false)))
          push(KCase::d3_form, l, n, {l, n - 2, n - 1, n});
      if (n >= 3 && coeffs_equal(x, shape_vector(n, n - 2, n, 1, 0, false, false)))
        push(KCase::d3_degenerate, n - 2, n, {n - 1, n});
      // α_l+...+α_{m−1} + 2(α_m+...+α_{n−2}) + α_{n−1} + α_n
      for (int m = 2; m <= n - 2; ++m) {
        if (coeffs_equal(x, shape_vector(n, m - 1, m - 1, m, n - 2, true, true)))
          push(KCase::d4_degenerate, m - 1, m, {m});
        for (int l = 1; l < m - 1; ++l)
          if (coeffs_equal(x, shape_vector(n, l, m - 1, m, n - 2, true, true)))
            push(KCase::d4_form, l, m, {l, m - 1, m});
      }
      break;
    default:
      throw error(spec.str() + ": classification applies to equal-rank families");
  }
}

} // namespace

std::vector<KSimpleClassification> matching_cases(const GroupSpec& spec,
                                                  const Chamber& c,
                                                  const Weight& gamma) {
  auto expansion = expand_in_basis(gamma, c.diagram.simples.simples);
  if (!expansion) throw error("gamma is outside the root lattice span");
  Coeffs x;
  x.n = static_cast<int>(c.diagram.rank());
  for (const Rat& q : *expansion) {
    if (!rat_is_integer(q) || q < 0)
      throw error("gamma is not a positive root of the chamber: " + gamma.str());
    x.c.push_back(static_cast<int>(rat_to_i64(q)));
  }

  std::vector<Shape> shapes;
  family_shapes(spec, x, shapes);

  std::vector<KSimpleClassification> matches;
  for (const Shape& s : shapes) {
    std::vector<bool> expected(x.n, false);
    for (int idx : s.noncompact) expected[idx - 1] = true;
    bool ok = true;
    for (int i = 1; i <= x.n && ok; ++i) {
      if (x.at(i) == 0) continue;  // the lemmas constrain summands only
      if (c.diagram.painted[i - 1] != expected[i - 1]) ok = false;
    }
    if (!ok) continue;
    matches.push_back(KSimpleClassification{gamma, s.tag, s.l, s.m, x.c, expected});
  }
  return matches;
}

KSimpleClassification classify_k_simple(const GroupSpec& spec, const Chamber& c,
                                        const Weight& gamma) {
  auto matches = matching_cases(spec, c, gamma);
  if (matches.size() == 1) return matches.front();

  std::ostringstream msg;
  msg << spec.str() << ": " << matches.size() << " classification cases match gamma="
      << gamma.str() << " in chamber word [";
  for (std::size_t i = 0; i < c.word.size(); ++i)
    msg << (i ? " " : "") << c.word[i] + 1;
  msg << "]";
  throw classification_error(msg.str());
}

VerificationReport check_components(const Chamber& c, const Weight& gamma) {
  VerificationReport report;
  report.check = "components";
  report.subject = gamma.str();

  std::set<Weight> positive(c.positive_roots.begin(), c.positive_roots.end());
  const int n = static_cast<int>(c.diagram.rank());
  std::int64_t chains = 0;

  auto record_chain = [&](int head, int dir) {
    // extend from head while partial sums and their complements in gamma
    // stay positive roots
    std::vector<int> chain;
    Weight partial = Weight::zero(gamma.dim());
    for (int i = head; 1 <= i && i <= n; i += dir) {
      Weight next = partial + c.diagram.simples[i - 1];
      if (!positive.count(next)) break;
      if (!positive.count(gamma - next)) break;
      partial = next;
      chain.push_back(i);
    }
    if (chain.empty()) return;
    ++chains;
    bool head_ok = c.diagram.painted[chain.front() - 1];
    bool tail_ok = true;
    for (std::size_t k = 1; k < chain.size(); ++k)
      if (c.diagram.painted[chain[k] - 1]) tail_ok = false;
    if (head_ok && tail_ok) return;
    Finding f;
    f.what = head_ok ? "chain tail contains a noncompact simple root"
                     : "chain head is compact";
    std::string idxs;
    for (std::size_t k = 0; k < chain.size(); ++k)
      idxs += (k ? " " : "") + std::to_string(chain[k]);
    f.data.emplace_back("chain", idxs);
    f.data.emplace_back("gamma", gamma.str());
    report.counterexamples.push_back(std::move(f));
  };

  for (int head = 1; head <= n; ++head) {
    record_chain(head, +1);
    record_chain(head, -1);
  }
  report.count("chains", chains);
  return report;
}

VerificationReport check_pairing_bounds(const Chamber& c) {
  VerificationReport report;
  report.check = "pairing-bounds";

  std::vector<Weight> gammas = compact_simple_roots(c);
  std::int64_t pairs_checked = 0;
  for (const Weight& gamma : gammas) {
    Rat gnorm = dot(gamma, gamma);
    auto coeffs = expand_in_basis(gamma, c.diagram.simples.simples);
    if (!coeffs) throw error("k-simple outside root span");
    for (std::size_t i = 0; i < c.diagram.rank(); ++i) {
      const Weight& alpha = c.diagram.simples[i];
      ++pairs_checked;
      // (a) coefficient-times-norm bound
      if ((*coeffs)[i] != 0) {
        Rat lhs = (*coeffs)[i] * dot(alpha, alpha);
        if (lhs < gnorm) {
          Finding f;
          f.what = "c_i(alpha_i,alpha_i) < (gamma,gamma)";
          f.data.emplace_back("gamma", gamma.str());
          f.data.emplace_back("i", std::to_string(i + 1));
          f.data.emplace_back("lhs", rat_str(lhs));
          f.data.emplace_back("rhs", rat_str(gnorm));
          report.counterexamples.push_back(std::move(f));
        }
      }
      // (b) fundamental-weight pairings land in {0,1,2}; (c) integrality
      Rat v = 2 * dot(c.fundamental_weights[i], gamma) / gnorm;
      if (!rat_is_integer(v) || v < 0 || v > 2) {
        Finding f;
        f.what = "2(xi_i,gamma)/(gamma,gamma) outside {0,1,2}";
        f.data.emplace_back("gamma", gamma.str());
        f.data.emplace_back("i", std::to_string(i + 1));
        f.data.emplace_back("value", rat_str(v));
        report.counterexamples.push_back(std::move(f));
      }
    }
  }
  report.count("k_simples", static_cast<std::int64_t>(gammas.size()));
  report.count("pairs_checked", pairs_checked);
  return report;
}

namespace {

Weight basis_unit(std::size_t dim, std::size_t i, int v = 1) {
  std::vector<Rat> c(dim, Rat(0));
  c[i] = v;
  return Weight(std::move(c));
}

Weight e_diff(std::size_t dim, std::size_t i, std::size_t j) {
  std::vector<Rat> c(dim, Rat(0));
  c[i] = 1;
  c[j] = -1;
  return Weight(std::move(c));
}

Weight e_sum(std::size_t dim, std::size_t i, std::size_t j) {
  std::vector<Rat> c(dim, Rat(0));
  c[i] = 1;
  c[j] = 1;
  return Weight(std::move(c));
}

Weight sum_all(const std::vector<Weight>& ws, std::size_t dim) {
  Weight s = Weight::zero(dim);
  for (const Weight& w : ws) s = s + w;
  return s;
}

constexpr const char* kRestrictedConvention =
    "rho_n = half sum of the listed restricted p-roots, one term per distinct "
    "root; hull Weyl group taken from the reduced system underlying the "
    "restricted roots";

} // namespace

RestrictedData restricted_tables(const GroupSpec& spec) {
  spec.validate();
  if (spec.is_equal_rank())
    throw error(spec.str() + ": restricted tables exist for the non-equal-rank families");

  const std::size_t n = spec.rank();
  RestrictedData data;
  data.spec = spec;
  data.rho_n_convention = kRestrictedConvention;

  switch (spec.family) {
    case Family::sl_odd_R: {
      // Δ⁺(k,t) = {e_i±e_j, e_i} (type B_n), Δ⁺(p,t) = Δ⁺(k,t) ∪ {2e_i}.
      data.k_positive = reference_positive_roots(Type::B, n);
      data.k_simples = reference_simples(Type::B, n);
      RestrictedCase cs;
      cs.g_simples = data.k_simples;
      cs.fundamental_weights = fundamental_weights_for(cs.g_simples);
      cs.p_positive = data.k_positive;
      for (std::size_t i = 0; i < n; ++i) cs.p_positive.push_back(basis_unit(n, i, 2));
      cs.two_rho_n = sum_all(cs.p_positive, n);
      data.cases.push_back(std::move(cs));
      break;
    }
    case Family::sl_even_R: {
      // Δ⁺(k,t) = {e_i±e_j} (type D_n); two positive systems for p.
      data.k_positive = reference_positive_roots(Type::D, n);
      data.k_simples = reference_simples(Type::D, n);
      for (int case_ix = 0; case_ix < 2; ++case_ix) {
        RestrictedCase cs;
        cs.label = case_ix == 0 ? "I" : "II";
        std::vector<Weight> simples;
        for (std::size_t i = 0; i + 1 < n; ++i) simples.push_back(e_diff(n, i, i + 1));
        if (case_ix == 0) {
          simples.push_back(basis_unit(n, n - 1, 2));  // 2e_n
        } else {
          simples.back() = e_sum(n, n - 2, n - 1);     // e_{n−1}+e_n
          simples.push_back(basis_unit(n, n - 1, -2)); // −2e_n
        }
        cs.g_simples = SimpleBasis::checked(std::move(simples));
        cs.fundamental_weights = fundamental_weights_for(cs.g_simples);
        cs.p_positive = data.k_positive;
        for (std::size_t i = 0; i + 1 < n; ++i) cs.p_positive.push_back(basis_unit(n, i, 2));
        cs.p_positive.push_back(basis_unit(n, n - 1, case_ix == 0 ? 2 : -2));
        cs.two_rho_n = sum_all(cs.p_positive, n);
        data.cases.push_back(std::move(cs));
      }
      break;
    }
    case Family::sl_n_H: {
      // Δ⁺(p,t) = {e_i±e_j}, Δ⁺(k,t) = Δ⁺(p,t) ∪ {2e_i} (type C_n).
      data.k_positive = reference_positive_roots(Type::C, n);
      data.k_simples = reference_simples(Type::C, n);
      RestrictedCase cs;
      cs.g_simples = data.k_simples;
      cs.fundamental_weights = fundamental_weights_for(cs.g_simples);
      cs.p_positive = reference_positive_roots(Type::D, n);
      cs.two_rho_n = sum_all(cs.p_positive, n);
      data.cases.push_back(std::move(cs));
      break;
    }
    case Family::so_odd_odd: {
      const std::size_t p = spec.p, q = spec.q;
      // Δ⁺(k,t): a B_p block on 1..p and a B_q block on p+1..p+q.
      for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = i + 1; j < p; ++j) {
          data.k_positive.push_back(e_diff(n, i, j));
          data.k_positive.push_back(e_sum(n, i, j));
        }
        data.k_positive.push_back(basis_unit(n, i));
      }
      for (std::size_t i = p; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          data.k_positive.push_back(e_diff(n, i, j));
          data.k_positive.push_back(e_sum(n, i, j));
        }
        data.k_positive.push_back(basis_unit(n, i));
      }
      std::sort(data.k_positive.begin(), data.k_positive.end());
      // k-simples: e_i−e_{i+1} within each block, e_p (if p>0) and e_{p+q}.
      std::vector<Weight> ks;
      for (std::size_t i = 0; i + 1 < p; ++i) ks.push_back(e_diff(n, i, i + 1));
      if (p > 0) ks.push_back(basis_unit(n, p - 1));
      for (std::size_t i = p; i + 1 < n; ++i) ks.push_back(e_diff(n, i, i + 1));
      ks.push_back(basis_unit(n, n - 1));
      data.k_simples = SimpleBasis::checked(std::move(ks));

      RestrictedCase cs;
      cs.g_simples = reference_simples(Type::B, n);
      cs.fundamental_weights = fundamental_weights_for(cs.g_simples);
      // Δ⁺(p,t): the cross-block roots plus every e_k (each short root has
      // one root space in k and one in p).
      for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = p; j < n; ++j) {
          cs.p_positive.push_back(e_diff(n, i, j));
          cs.p_positive.push_back(e_sum(n, i, j));
        }
      for (std::size_t i = 0; i < n; ++i) cs.p_positive.push_back(basis_unit(n, i));
      std::sort(cs.p_positive.begin(), cs.p_positive.end());
      cs.two_rho_n = sum_all(cs.p_positive, n);
      data.cases.push_back(std::move(cs));
      break;
    }
    default:
      throw error("unhandled non-equal-rank family");
  }

  data.k_fundamental_weights = fundamental_weights_for(data.k_simples);
  data.two_rho_c = sum_all(data.k_positive, n);
  return data;
}

static std::string word_str(const std::vector<std::size_t>& word) {
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i)
    s += (i ? " " : "") + std::to_string(word[i] + 1);
  return s.empty() ? "-" : s;
}

VerificationReport check_classification_all(const GroupSpec& spec,
                                            const std::vector<Chamber>& chambers) {
  VerificationReport report;
  report.subject = spec.str();
  report.check = "classification";
  std::int64_t classified = 0;
  for (const Chamber& c : chambers) {
    for (const Weight& gamma : compact_simple_roots(c)) {
      auto matches = matching_cases(spec, c, gamma);
      if (matches.size() == 1) {
        ++classified;
        continue;
      }
      Finding f;
      f.what = matches.empty() ? "no classification case matches"
                               : "several classification cases match";
      f.data.emplace_back("gamma", gamma.str());
      f.data.emplace_back("chamber_word", word_str(c.word));
      report.counterexamples.push_back(std::move(f));
    }
  }
  report.count("chambers", static_cast<std::int64_t>(chambers.size()));
  report.count("classified", classified);
  return report;
}

VerificationReport check_components_all(const GroupSpec& spec,
                                        const std::vector<Chamber>& chambers) {
  VerificationReport report;
  report.subject = spec.str();
  report.check = "components";
  std::int64_t chains = 0;
  for (const Chamber& c : chambers)
    for (const Weight& gamma : compact_simple_roots(c)) {
      VerificationReport one = check_components(c, gamma);
      chains += one.get_count("chains");
      for (Finding& f : one.counterexamples) {
        f.data.emplace_back("chamber_word", word_str(c.word));
        report.counterexamples.push_back(std::move(f));
      }
    }
  report.count("chambers", static_cast<std::int64_t>(chambers.size()));
  report.count("chains", chains);
  return report;
}

VerificationReport check_pairing_bounds_all(const GroupSpec& spec,
                                            const std::vector<Chamber>& chambers) {
  VerificationReport report;
  report.subject = spec.str();
  report.check = "pairing-bounds";
  std::int64_t pairs = 0;
  for (const Chamber& c : chambers) {
    VerificationReport one = check_pairing_bounds(c);
    pairs += one.get_count("pairs_checked");
    for (Finding& f : one.counterexamples) {
      f.data.emplace_back("chamber_word", word_str(c.word));
      report.counterexamples.push_back(std::move(f));
    }
  }
  report.count("chambers", static_cast<std::int64_t>(chambers.size()));
  report.count("pairs_checked", pairs);
  return report;
}

} // namespace ktypes
