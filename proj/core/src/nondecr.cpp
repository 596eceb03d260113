#include "ktypes/nondecr.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

namespace ktypes {

std::vector<VerificationFrame> verification_frames(const GroupData& g) {
  std::vector<VerificationFrame> frames;
  if (g.equal_rank()) {
    for (std::size_t i = 0; i < g.chambers.size(); ++i) {
      const Chamber& c = g.chambers[i];
      VerificationFrame f;
      f.label = "chamber " + std::to_string(i);
      f.equal_rank = true;
      f.index = i;
      f.g_simples = c.diagram.simples;
      f.fundamental_weights = c.fundamental_weights;
      f.two_rho_c = c.rho_c * 2;
      f.two_rho_n = c.rho_n * 2;
      f.k_simples = g.k_simples;
      f.word = c.word;
      frames.push_back(std::move(f));
    }
  } else {
    const RestrictedData& rd = *g.restricted;
    for (std::size_t i = 0; i < rd.cases.size(); ++i) {
      const RestrictedCase& cs = rd.cases[i];
      VerificationFrame f;
      f.label = cs.label.empty() ? "case" : "case " + cs.label;
      f.case_label = cs.label;
      f.equal_rank = false;
      f.index = i;
      f.g_simples = cs.g_simples;
      f.fundamental_weights = cs.fundamental_weights;
      f.two_rho_c = rd.two_rho_c;
      f.two_rho_n = cs.two_rho_n;
      f.k_simples = rd.k_simples.simples;
      f.k_fundamental_weights = rd.k_fundamental_weights;
      frames.push_back(std::move(f));
    }
  }
  return frames;
}

NonDecrCheck is_nondecreasable(const VerificationFrame& f, const Weight& mu) {
  NonDecrCheck out;
  for (const Weight& gamma : f.k_simples)
    if (pair(mu, gamma) < 0) {
      out.status = NonDecrStatus::not_k_dominant;
      return out;
    }
  // Integrality convention: integer pairings with the simple coroots for
  // equal-rank groups, integer coordinates in the k-fundamental-weight
  // basis (equivalently integer pairings with the k-simple coroots) for
  // the table-driven families.
  if (f.equal_rank) {
    for (const Weight& alpha : f.g_simples.simples)
      if (!rat_is_integer(pair(mu, alpha))) {
        out.status = NonDecrStatus::not_integral;
        return out;
      }
  } else {
    for (const Weight& gamma : f.k_simples)
      if (!rat_is_integer(pair(mu, gamma))) {
        out.status = NonDecrStatus::not_integral;
        return out;
      }
  }
  Weight shifted = mu + f.two_rho_c;
  if (!is_dominant(shifted, f.g_simples)) {
    out.status = NonDecrStatus::shift_not_g_dominant;
    return out;
  }

  const std::size_t n = f.fundamental_weights.size();
  out.reasons.resize(n);
  bool all = true;
  for (std::size_t i = 0; i < n; ++i) {
    const Weight& xi = f.fundamental_weights[i];
    Weight down = mu - xi;
    for (const Weight& gamma : f.k_simples)
      if (pair(down, gamma) < 0) {
        out.reasons[i].k_failed = true;
        break;
      }
    Weight shifted_down = shifted - xi;
    for (const Weight& alpha : f.g_simples.simples)
      if (pair(shifted_down, alpha) < 0) {
        out.reasons[i].g_failed = true;
        break;
      }
    if (!out.reasons[i].k_failed && !out.reasons[i].g_failed) all = false;
  }
  out.nondecreasable = all;
  return out;
}

SearchBox search_box(const VerificationFrame& f, int slack) {
  if (slack < 0) throw error("slack must be nonnegative");
  SearchBox box;
  box.slack = slack;
  for (const Weight& alpha : f.g_simples.simples) {
    box.lower.push_back(-pair(f.two_rho_c, alpha));
    box.upper.push_back(2 * pair(f.two_rho_n, alpha) + slack);
  }
  return box;
}

namespace {

// Rows scaled to integers (each row by the lcm of its denominators).
struct LiftedRows {
  std::vector<std::vector<std::int64_t>> mat;
  std::vector<std::int64_t> scale;
};

LiftedRows lift_rows(const std::vector<std::vector<Rat>>& rows) {
  LiftedRows out;
  for (const auto& row : rows) {
    Int l(1);
    for (const Rat& q : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    Rat scale(l);
    std::vector<std::int64_t> r;
    for (const Rat& q : row) r.push_back(rat_to_i64(q * scale));
    out.mat.push_back(std::move(r));
    out.scale.push_back(rat_to_i64(Rat(l)));
  }
  return out;
}

struct RawHit {
  std::vector<std::int64_t> coords;  // t (equal rank) or m (table case)
  std::vector<IndexFailure> reasons;
};

// Exhaustive scan of the integer box with per-level incremental row sums;
// `leaf` receives each point and the accumulated Σ_i point_i·rows[r][i].
template <typename Leaf>
void scan_box(const std::vector<std::int64_t>& lo, const std::vector<std::int64_t>& hi,
              const std::vector<std::vector<std::int64_t>>& rows, Leaf&& leaf) {
  const std::size_t n = lo.size();
  const std::size_t m = rows.size();
  for (std::size_t i = 0; i < n; ++i)
    if (lo[i] > hi[i]) return;

  std::vector<std::int64_t> point(n, 0);
  std::vector<std::vector<std::int64_t>> sums(n + 1, std::vector<std::int64_t>(m, 0));
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (depth == n) {
      leaf(point, sums[n]);
      return;
    }
    for (std::int64_t v = lo[depth]; v <= hi[depth]; ++v) {
      point[depth] = v;
      for (std::size_t r = 0; r < m; ++r)
        sums[depth + 1][r] = sums[depth][r] + v * rows[r][depth];
      self(self, depth + 1);
    }
  };
  rec(rec, 0);
}

std::int64_t floor_i64(const Rat& q) { return rat_floor_i64(q); }
std::int64_t ceil_i64(const Rat& q) { return rat_ceil_i64(q); }

// Equal-rank frame scan: enumerate integer fundamental-weight coordinates
// t over the box; k-dominance and the failure tests run on the lifted
// pairing matrix K[g][i] = pair(ξ_i, γ_g).
void scan_equal_rank_frame(const VerificationFrame& f, const SearchBox& box,
                           std::vector<RawHit>& hits, std::int64_t& points) {
  const std::size_t n = f.g_simples.rank();
  const std::size_t nk = f.k_simples.size();

  std::vector<std::int64_t> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = ceil_i64(box.lower[i]);
    hi[i] = floor_i64(box.upper[i]);
    if (lo[i] > hi[i]) return;
  }

  std::vector<std::vector<Rat>> krows(nk, std::vector<Rat>(n));
  for (std::size_t g = 0; g < nk; ++g)
    for (std::size_t i = 0; i < n; ++i)
      krows[g][i] = pair(f.fundamental_weights[i], f.k_simples[g]);
  LiftedRows lifted = lift_rows(krows);

  std::vector<std::int64_t> c(n);  // pair(2ρ_c, α_i), integers
  for (std::size_t i = 0; i < n; ++i)
    c[i] = rat_to_i64(pair(f.two_rho_c, f.g_simples[i]));

  scan_box(lo, hi, lifted.mat,
           [&](const std::vector<std::int64_t>& t, const std::vector<std::int64_t>& s) {
             ++points;
             for (std::size_t g = 0; g < nk; ++g)
               if (s[g] < 0) return;  // not k-dominant
             std::vector<IndexFailure> reasons(n);
             for (std::size_t i = 0; i < n; ++i) {
               bool g_failed = (t[i] + c[i]) == 0;
               bool k_failed = false;
               for (std::size_t g = 0; g < nk; ++g)
                 if (s[g] < lifted.mat[g][i]) {
                   k_failed = true;
                   break;
                 }
               if (!k_failed && !g_failed) return;
               reasons[i] = IndexFailure{k_failed, g_failed};
             }
             hits.push_back(RawHit{t, std::move(reasons)});
           });
}

// Upper bounds for the k-fundamental-weight coordinates that cover the
// whole search box of a table-driven case.
std::vector<std::int64_t> table_m_bounds(const GroupSpec& spec, const std::string& label,
                                         const std::vector<std::int64_t>& u) {
  const std::size_t n = u.size();
  auto clamp0 = [](std::int64_t v) { return v < 0 ? 0 : v; };
  std::vector<std::int64_t> m(n);
  switch (spec.family) {
    case Family::sl_odd_R:
    case Family::sl_n_H:
      for (std::size_t i = 0; i < n; ++i) m[i] = clamp0(u[i]);
      break;
    case Family::sl_even_R: {
      for (std::size_t i = 0; i + 2 < n; ++i) m[i] = clamp0(u[i]);
      std::int64_t spread = clamp0(2 * u[n - 1] + clamp0(u[n - 2]));
      if (label == "I") {
        m[n - 2] = clamp0(u[n - 2]);
        m[n - 1] = spread;
      } else {
        m[n - 2] = spread;
        m[n - 1] = clamp0(u[n - 2]);
      }
      break;
    }
    case Family::so_odd_odd: {
      const std::size_t p = spec.p;
      for (std::size_t i = 0; i < n; ++i) m[i] = clamp0(u[i]);
      if (p > 0) {
        // m_p = 2μ_p and μ_p telescopes through the second block
        std::int64_t tail = 0;
        for (std::size_t j = p; j + 1 < n; ++j) tail += clamp0(u[j]);
        m[p - 1] = clamp0(2 * clamp0(u[p - 1]) + 2 * tail + clamp0(u[n - 1]));
      }
      break;
    }
    default:
      throw error("not a table-driven family");
  }
  return m;
}

// Table-case scan: enumerate nonnegative integer k-fundamental-weight
// coordinates m; the box filter on the pairings t_j = Σ m_i P[j][i] is
// applied exactly through per-row lifts.
void scan_table_frame(const GroupSpec& spec, const VerificationFrame& f,
                      const SearchBox& box, std::vector<RawHit>& hits,
                      std::int64_t& points) {
  const std::size_t n = f.g_simples.rank();
  const std::size_t nk = f.k_fundamental_weights.size();

  // P rows together with the 2ρ_c pairings, lifted by a common row scale.
  std::vector<std::vector<Rat>> prows(n, std::vector<Rat>(nk + 1));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < nk; ++i)
      prows[j][i] = pair(f.k_fundamental_weights[i], f.g_simples[j]);
    prows[j][nk] = pair(f.two_rho_c, f.g_simples[j]);
  }
  LiftedRows plift = lift_rows(prows);
  std::vector<std::vector<std::int64_t>> prow_m(n);
  std::vector<std::int64_t> c_scaled(n);
  for (std::size_t j = 0; j < n; ++j) {
    prow_m[j].assign(plift.mat[j].begin(), plift.mat[j].end() - 1);
    c_scaled[j] = plift.mat[j][nk];
  }

  // scaled box bounds on s_j·t_j
  std::vector<std::int64_t> lo_t(n), hi_t(n), u_plain(n);
  for (std::size_t j = 0; j < n; ++j) {
    lo_t[j] = ceil_i64(box.lower[j] * plift.scale[j]);
    hi_t[j] = floor_i64(box.upper[j] * plift.scale[j]);
    u_plain[j] = floor_i64(box.upper[j]);
  }

  std::vector<std::int64_t> m_lo(nk, 0);
  std::vector<std::int64_t> m_hi = table_m_bounds(spec, f.case_label, u_plain);
  for (std::size_t i = 0; i < nk; ++i)
    if (m_hi[i] < 0) return;

  // Q[g][i] = pair(ξ_i, γ_g) for the k-dominance failure test; m_g is the
  // g-th coordinate directly, so lift by the ξ-pairing denominators only.
  std::vector<std::vector<Rat>> qrows(nk, std::vector<Rat>(n));
  for (std::size_t g = 0; g < nk; ++g)
    for (std::size_t i = 0; i < n; ++i)
      qrows[g][i] = pair(f.fundamental_weights[i], f.k_simples[g]);
  LiftedRows qlift = lift_rows(qrows);

  scan_box(m_lo, m_hi, prow_m,
           [&](const std::vector<std::int64_t>& m, const std::vector<std::int64_t>& st) {
             ++points;
             for (std::size_t j = 0; j < n; ++j)
               if (st[j] < lo_t[j] || st[j] > hi_t[j]) return;
             std::vector<IndexFailure> reasons(n);
             for (std::size_t i = 0; i < n; ++i) {
               // μ+2ρ_c−ξ_i fails g-dominance iff t_i + c_i < 1
               bool g_failed = st[i] + c_scaled[i] < plift.scale[i];
               bool k_failed = false;
               for (std::size_t g = 0; g < nk; ++g)
                 if (m[g] * qlift.scale[g] < qlift.mat[g][i]) {
                   k_failed = true;
                   break;
                 }
               if (!k_failed && !g_failed) return;
               reasons[i] = IndexFailure{k_failed, g_failed};
             }
             hits.push_back(RawHit{m, std::move(reasons)});
           });
}

} // namespace

std::vector<NonDecrCandidate> enumerate_nondecreasable(const GroupData& g, int slack,
                                                       int jobs) {
  std::vector<VerificationFrame> frames = verification_frames(g);
  std::vector<std::vector<RawHit>> hits(frames.size());
  std::vector<std::int64_t> points(frames.size(), 0);

  auto run_frame = [&](std::size_t fi) {
    const VerificationFrame& f = frames[fi];
    SearchBox box = search_box(f, slack);
    if (f.equal_rank)
      scan_equal_rank_frame(f, box, hits[fi], points[fi]);
    else
      scan_table_frame(g.spec, f, box, hits[fi], points[fi]);
  };

  if (jobs <= 1 || frames.size() <= 1) {
    for (std::size_t fi = 0; fi < frames.size(); ++fi) run_frame(fi);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        std::size_t fi = next.fetch_add(1);
        if (fi >= frames.size()) return;
        run_frame(fi);
      }
    };
    std::vector<std::thread> pool;
    std::size_t nthreads = std::min<std::size_t>(jobs, frames.size());
    for (std::size_t i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  // materialize, revalidate against the definitional path, deduplicate
  std::map<Weight, NonDecrCandidate> by_mu;
  for (std::size_t fi = 0; fi < frames.size(); ++fi) {
    const VerificationFrame& f = frames[fi];
    const std::vector<Weight>& basis =
        f.equal_rank ? f.fundamental_weights : f.k_fundamental_weights;
    for (const RawHit& hit : hits[fi]) {
      Weight mu = Weight::zero(basis.empty() ? g.ambient() : basis[0].dim());
      for (std::size_t i = 0; i < basis.size(); ++i)
        mu = mu + basis[i] * Rat(static_cast<long>(hit.coords[i]));

      NonDecrCheck check = is_nondecreasable(f, mu);
      if (check.status != NonDecrStatus::ok || !check.nondecreasable)
        throw error("enumeration fast path disagrees with the definition at mu=" +
                    mu.str());

      FrameHit fh;
      fh.frame_index = fi;
      fh.frame_label = f.label;
      // coordinates of μ in the ξ basis are the coroot pairings
      for (std::size_t i = 0; i < f.g_simples.rank(); ++i)
        fh.fw_coords.push_back(pair(mu, f.g_simples[i]));
      fh.reasons = check.reasons;

      auto [it, inserted] = by_mu.try_emplace(mu, NonDecrCandidate{mu, {}});
      it->second.hits.push_back(std::move(fh));
    }
  }

  std::vector<NonDecrCandidate> out;
  out.reserve(by_mu.size());
  for (auto& [mu, cand] : by_mu) out.push_back(std::move(cand));
  std::sort(out.begin(), out.end(), [&](const NonDecrCandidate& a, const NonDecrCandidate& b) {
    Weight da = dominant_representative(a.mu, g.reference);
    Weight db = dominant_representative(b.mu, g.reference);
    if (da != db) return da < db;
    return a.mu < b.mu;
  });
  return out;
}

VerificationReport verify_containment(const GroupData& g, const VerifyOptions& opt) {
  VerificationReport report;
  report.subject = g.spec.str();
  report.check = "nondecreasable-usmall";
  if (!g.rho_n_convention.empty()) report.notes.push_back(g.rho_n_convention);

  std::vector<VerificationFrame> frames = verification_frames(g);
  std::vector<NonDecrCandidate> cands = enumerate_nondecreasable(g, opt.slack, opt.jobs);

  report.count("frames", static_cast<std::int64_t>(frames.size()));
  report.count("candidates", static_cast<std::int64_t>(cands.size()));
  report.count("slack", opt.slack);

  for (const NonDecrCandidate& cand : cands) {
    USmallCertificate cert = is_usmall(g, cand.mu);
    Finding fact;
    fact.what = "candidate";
    fact.data.emplace_back("mu", cand.mu.str());
    std::string frames_str;
    for (const FrameHit& hit : cand.hits)
      frames_str += (frames_str.empty() ? "" : "; ") + hit.frame_label;
    fact.data.emplace_back("frames", frames_str);
    fact.data.emplace_back("usmall", cert.usmall ? "true" : "false");

    if (!cert.usmall) {
      Finding bad = fact;
      bad.what = "candidate is not u-small";
      report.counterexamples.push_back(std::move(bad));
      continue;
    }
    if (g.equal_rank()) {
      // strengthened conclusion: 2ρ_n − μ is g-dominant in each chamber
      // where the candidate qualifies
      for (const FrameHit& hit : cand.hits) {
        const VerificationFrame& f = frames[hit.frame_index];
        if (!is_dominant(f.two_rho_n - cand.mu, f.g_simples)) {
          Finding bad;
          bad.what = "2rho_n - mu not g-dominant in the candidate's own chamber";
          bad.data.emplace_back("mu", cand.mu.str());
          bad.data.emplace_back("chamber", f.label);
          report.counterexamples.push_back(std::move(bad));
        }
      }
    }
    report.witnesses.push_back(std::move(fact));
  }
  return report;
}

} // namespace ktypes
