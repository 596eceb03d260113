#include "ktypes/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "ktypes/serialize.hpp"

namespace ktypes {

namespace {

int parse_positive_int(const std::string& tok, const std::string& ctx) {
  if (tok.empty()) throw parse_error(ctx + ": missing number");
  for (char ch : tok)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw parse_error(ctx + ": '" + tok + "' is not a positive integer");
  long v = std::strtol(tok.c_str(), nullptr, 10);
  if (v <= 0 || v > 1000000) throw parse_error(ctx + ": '" + tok + "' out of range");
  return static_cast<int>(v);
}

} // namespace

GroupSpec parse_group(const std::string& s) {
  const std::string grammar =
      "expected su:p,q | so:a,b | sp:n,R | sp:p,q | so*:2n | sl:m,R | sl:n,H";
  std::size_t colon = s.find(':');
  if (colon == std::string::npos) throw parse_error("'" + s + "': " + grammar);
  std::string head = s.substr(0, colon);
  std::string rest = s.substr(colon + 1);
  std::size_t comma = rest.find(',');
  std::string first = comma == std::string::npos ? rest : rest.substr(0, comma);
  std::string second = comma == std::string::npos ? "" : rest.substr(comma + 1);

  GroupSpec spec{};
  if (head == "su") {
    spec.family = Family::su_pq;
    spec.p = parse_positive_int(first, s);
    spec.q = parse_positive_int(second, s);
  } else if (head == "so") {
    int a = parse_positive_int(first, s);
    int b = parse_positive_int(second, s);
    if (a % 2 != 0 && b % 2 == 0) std::swap(a, b);  // so(a,b) ≅ so(b,a)
    if (a % 2 == 0 && b % 2 == 0) {
      spec.family = Family::so_2p_2q;
      spec.p = a / 2;
      spec.q = b / 2;
    } else if (a % 2 == 0) {
      if (b == 1) {
        spec.family = Family::so_2n_1;
        spec.n = a / 2;
      } else {
        spec.family = Family::so_2p_2q1;
        spec.p = a / 2;
        spec.q = (b - 1) / 2;
      }
    } else {
      spec.family = Family::so_odd_odd;
      spec.p = (a - 1) / 2;
      spec.q = (b - 1) / 2;
      if (spec.q == 0) std::swap(spec.p, spec.q);  // keep the odd block nonempty
      if (spec.p == 0 && spec.q == 0)
        throw rank_error("so(1,1) is abelian and out of scope");
    }
  } else if (head == "sp") {
    if (second == "R") {
      spec.family = Family::sp_n_R;
      spec.n = parse_positive_int(first, s);
    } else {
      spec.family = Family::sp_pq;
      spec.p = parse_positive_int(first, s);
      spec.q = parse_positive_int(second, s);
    }
  } else if (head == "so*") {
    if (!second.empty()) throw parse_error("'" + s + "': " + grammar);
    int m = parse_positive_int(first, s);
    if (m % 2 != 0) throw parse_error("'" + s + "': so* takes an even argument 2n");
    spec.family = Family::so_star_2n;
    spec.n = m / 2;
  } else if (head == "sl") {
    if (second == "R") {
      int m = parse_positive_int(first, s);
      if (m % 2 == 1) {
        spec.family = Family::sl_odd_R;
        spec.n = (m - 1) / 2;
      } else {
        spec.family = Family::sl_even_R;
        spec.n = m / 2;
      }
    } else if (second == "H") {
      spec.family = Family::sl_n_H;
      spec.n = parse_positive_int(first, s);
    } else {
      throw parse_error("'" + s + "': sl takes ,R or ,H");
    }
  } else {
    throw parse_error("'" + s + "': " + grammar);
  }
  spec.validate();
  return spec;
}

std::string default_cache_dir() {
  if (const char* env = std::getenv("KTYPES_CACHE_DIR")) return env;
  if (const char* home = std::getenv("HOME"))
    return std::string(home) + "/.cache/ktypes";
  return ".ktypes-cache";
}

namespace {

std::string join_coords(const Weight& w) {
  std::string s;
  for (std::size_t i = 0; i < w.dim(); ++i) {
    if (i) s += ' ';
    s += rat_str(w[i]);
  }
  return s;
}

std::string join_word(const std::vector<std::size_t>& word) {
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i)
    s += (i ? " " : "") + std::to_string(word[i] + 1);
  return s.empty() ? "-" : s;
}

std::string fmt_double(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  std::string s(buf);
  return s == "-0" ? "0" : s;
}

void require_format(const CliConfig& config, bool tabular_ok) {
  if (config.format == "json") return;
  if ((config.format == "csv" || config.format == "tsv") && tabular_ok) return;
  throw parse_error("format '" + config.format + "' not supported for " + config.command);
}

struct Row {
  std::vector<std::string> cells;
};

std::string render_table(const std::vector<std::string>& header,
                         const std::vector<Row>& rows, char sep) {
  std::string out;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out += sep;
    out += header[i];
  }
  out += '\n';
  for (const Row& r : rows) {
    for (std::size_t i = 0; i < r.cells.size(); ++i) {
      if (i) out += sep;
      out += r.cells[i];
    }
    out += '\n';
  }
  return out;
}

int cmd_chambers(const CliConfig& config, const GroupData& g, std::string& out) {
  if (!g.equal_rank())
    throw parse_error(g.spec.str() +
                      ": chambers apply to equal-rank groups (this family is table-driven)");
  if (config.format == "json") {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["group"] = g.spec.str();
    j["count"] = g.chambers.size();
    Json arr = Json::array();
    for (std::size_t i = 0; i < g.chambers.size(); ++i) {
      Json jc = chamber_to_json(g.chambers[i]);
      jc["index"] = i;
      arr.push_back(std::move(jc));
    }
    j["chambers"] = arr;
    out = j.dump(2) + "\n";
  } else {
    std::vector<Row> rows;
    for (std::size_t i = 0; i < g.chambers.size(); ++i) {
      const Chamber& c = g.chambers[i];
      std::string painted;
      for (bool b : c.diagram.painted) painted += b ? '1' : '0';
      rows.push_back(Row{{std::to_string(i), join_word(c.word), painted,
                          join_coords(c.rho), join_coords(c.rho_c),
                          join_coords(c.rho_n)}});
    }
    out = render_table({"index", "word", "painted", "rho", "rho_c", "rho_n"}, rows,
                       config.format == "csv" ? ',' : '\t');
  }
  return 0;
}

int cmd_lemmas(const CliConfig& config, const GroupData& g, std::string& out) {
  require_format(config, false);
  if (!g.equal_rank())
    throw parse_error(g.spec.str() + ": the classification sweep applies to equal-rank groups");
  std::vector<VerificationReport> reports{
      check_classification_all(g.spec, g.chambers),
      check_components_all(g.spec, g.chambers),
      check_pairing_bounds_all(g.spec, g.chambers),
  };
  bool passed = true;
  Json arr = Json::array();
  for (const auto& r : reports) {
    passed = passed && r.passed();
    arr.push_back(report_to_json(r));
  }
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["group"] = g.spec.str();
  j["passed"] = passed;
  j["reports"] = arr;
  out = j.dump(2) + "\n";
  return passed ? 0 : 1;
}

Weight resolve_mu(const CliConfig& config, const GroupData& g) {
  if (!config.mu.empty() && !config.mu_fw.empty())
    throw parse_error("give either --mu or --mu-fw, not both");
  if (!config.mu.empty()) {
    Weight mu = Weight::parse(config.mu);
    if (mu.dim() != g.ambient())
      throw parse_error("--mu needs " + std::to_string(g.ambient()) +
                        " coordinates for " + g.spec.str());
    return mu;
  }
  if (!config.mu_fw.empty()) {
    std::vector<VerificationFrame> frames = verification_frames(g);
    if (config.chamber < 0 || static_cast<std::size_t>(config.chamber) >= frames.size())
      throw parse_error("--chamber index out of range (group has " +
                        std::to_string(frames.size()) + " frames)");
    const VerificationFrame& f = frames[config.chamber];
    Weight coeffs = Weight::parse(config.mu_fw);
    if (coeffs.dim() != f.fundamental_weights.size())
      throw parse_error("--mu-fw needs " +
                        std::to_string(f.fundamental_weights.size()) + " coefficients");
    Weight mu = Weight::zero(g.ambient());
    for (std::size_t i = 0; i < f.fundamental_weights.size(); ++i)
      mu = mu + f.fundamental_weights[i] * coeffs[i];
    return mu;
  }
  throw parse_error(config.command + " needs --mu or --mu-fw");
}

int cmd_usmall(const CliConfig& config, const GroupData& g, std::string& out) {
  require_format(config, false);
  Weight mu = resolve_mu(config, g);

  bool k_dominant = true;
  for (const Weight& gamma : g.k_simples)
    if (pair(mu, gamma) < 0) k_dominant = false;
  bool integral = true;
  if (g.equal_rank()) {
    for (const Weight& alpha : g.reference.simples)
      if (!rat_is_integer(pair(mu, alpha))) integral = false;
  } else {
    for (const Weight& gamma : g.k_simples)
      if (!rat_is_integer(pair(mu, gamma))) integral = false;
  }

  Json certs = Json::array();
  certs.push_back(certificate_to_json(is_usmall(g, mu)));
  certs.push_back(certificate_to_json(dominance_criterion(g, mu)));
  if (g.spec.rank() <= 3) certs.push_back(certificate_to_json(lp_oracle_certificate(g, mu)));

  Json j;
  j["schema_version"] = kSchemaVersion;
  j["group"] = g.spec.str();
  j["mu"] = weight_to_json(mu);
  j["k_dominant"] = k_dominant;
  j["g_integral"] = integral;
  j["certificates"] = certs;
  out = j.dump(2) + "\n";
  return 0;
}

int cmd_nondecreasable(const CliConfig& config, const GroupData& g, std::string& out) {
  auto cands = enumerate_nondecreasable(g, config.slack, config.jobs);
  if (config.format == "json") {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["group"] = g.spec.str();
    j["slack"] = config.slack;
    j["count"] = cands.size();
    if (!g.rho_n_convention.empty()) j["convention"] = g.rho_n_convention;
    Json arr = Json::array();
    for (const auto& c : cands) arr.push_back(candidate_to_json(c));
    j["candidates"] = arr;
    out = j.dump(2) + "\n";
  } else {
    std::vector<Row> rows;
    for (const auto& c : cands) {
      std::string labels;
      for (const FrameHit& hit : c.hits)
        labels += (labels.empty() ? "" : "; ") + hit.frame_label;
      rows.push_back(Row{{join_coords(c.mu), std::to_string(c.hits.size()), labels}});
    }
    out = render_table({"mu", "n_frames", "frames"}, rows,
                       config.format == "csv" ? ',' : '\t');
  }
  return 0;
}

} // namespace

std::vector<GroupSpec> in_scope_specs(int max_rank) {
  std::vector<GroupSpec> specs;
  auto add = [&](GroupSpec s) {
    try {
      s.validate();
    } catch (const rank_error&) {
      return;
    }
    if (s.rank() <= max_rank) specs.push_back(s);
  };
  for (int p = 1; p <= max_rank; ++p)
    for (int q = 1; p + q - 1 <= max_rank; ++q)
      add(GroupSpec{Family::su_pq, p, q, 0});
  for (int n = 2; n <= max_rank; ++n) add(GroupSpec{Family::so_2n_1, 0, 0, n});
  for (int p = 1; p < max_rank; ++p)
    for (int q = 1; p + q <= max_rank; ++q)
      add(GroupSpec{Family::so_2p_2q1, p, q, 0});
  for (int n = 3; n <= max_rank; ++n) add(GroupSpec{Family::sp_n_R, 0, 0, n});
  for (int p = 1; p < max_rank; ++p)
    for (int q = 1; p + q <= max_rank; ++q)
      add(GroupSpec{Family::sp_pq, p, q, 0});
  for (int n = 4; n <= max_rank; ++n) add(GroupSpec{Family::so_star_2n, 0, 0, n});
  for (int p = 1; p < max_rank; ++p)
    for (int q = 1; p + q <= max_rank; ++q)
      add(GroupSpec{Family::so_2p_2q, p, q, 0});
  for (int n = 1; n <= max_rank; ++n) add(GroupSpec{Family::sl_odd_R, 0, 0, n});
  for (int n = 2; n <= max_rank; ++n) add(GroupSpec{Family::sl_even_R, 0, 0, n});
  for (int n = 2; n <= max_rank; ++n) add(GroupSpec{Family::sl_n_H, 0, 0, n});
  for (int p = 0; p <= max_rank; ++p)
    for (int q = 1; p + q <= max_rank; ++q)
      add(GroupSpec{Family::so_odd_odd, p, q, 0});
  return specs;
}

namespace {

int cmd_verify(const CliConfig& config, std::string& out) {
  require_format(config, false);
  VerifyOptions opt;
  opt.slack = config.slack;
  opt.jobs = config.jobs;

  std::vector<GroupSpec> specs;
  if (config.family == "all") {
    specs = in_scope_specs(config.max_rank);
  } else if (!config.family.empty()) {
    throw parse_error("--family only accepts 'all'");
  } else {
    if (config.group.empty()) throw parse_error("verify needs --group or --family all");
    specs.push_back(parse_group(config.group));
  }

  bool passed = true;
  Json arr = Json::array();
  for (const GroupSpec& spec : specs) {
    GroupData g = load_group(spec, config.cache_dir);
    VerificationReport report = verify_containment(g, opt);
    passed = passed && report.passed();
    arr.push_back(report_to_json(report));
  }
  Json j;
  j["schema_version"] = kSchemaVersion;
  if (config.family == "all") {
    j["family"] = "all";
    j["max_rank"] = config.max_rank;
  }
  j["slack"] = opt.slack;
  j["passed"] = passed;
  j["groups"] = specs.size();
  j["reports"] = arr;
  out = j.dump(2) + "\n";
  return passed ? 0 : 1;
}

struct FigureRow {
  Weight mu;
  std::vector<std::int64_t> coords;
  std::string x, y;
  bool usmall = false;
  bool nondecreasable = false;
};

std::pair<std::string, std::string> plane_coords(const GroupData& g, const Weight& mu) {
  if (g.ambient() == 3) {
    double m1 = mu[0].get_d(), m2 = mu[1].get_d(), m3 = mu[2].get_d();
    return {fmt_double((m1 - m2) / std::sqrt(2.0)),
            fmt_double((m1 + m2 - 2 * m3) / std::sqrt(6.0))};
  }
  return {fmt_double(mu[0].get_d()), fmt_double(mu[1].get_d())};
}

std::vector<FigureRow> figure_rows(const GroupData& g) {
  const std::size_t ambient = g.ambient();
  const bool type_a_plane = g.spec.g_type() == Type::A && ambient == 3;
  if (!(type_a_plane || ambient == 2))
    throw parse_error(g.spec.str() + ": figure export needs a rank-2 weight plane");

  std::vector<VerificationFrame> frames = verification_frames(g);
  // The integral lattice is enumerated in the initial frame's
  // fundamental-weight basis for equal-rank groups and in the
  // k-fundamental-weight basis for the table-driven ones.
  const std::vector<Weight>& fw_basis = g.equal_rank()
                                            ? frames.front().fundamental_weights
                                            : g.restricted->k_fundamental_weights;
  const std::vector<Weight>& duals =
      g.equal_rank() ? g.reference.simples : g.k_simples;

  Rat nu2 = dot(g.hull_vertex, g.hull_vertex);
  // ‖μ‖ <= (3/2)‖ν‖ forces |pair(μ, β)| <= 3‖ν‖/‖β‖ for the dual roots β.
  std::vector<std::int64_t> bound;
  for (const Weight& beta : duals) {
    Rat r = 9 * nu2 / dot(beta, beta);
    Int root;
    mpz_sqrt(root.get_mpz_t(), Int(rat_floor_i64(r)).get_mpz_t());
    bound.push_back(root.get_si() + 1);
  }

  std::vector<FigureRow> rows;
  for (std::int64_t c0 = -bound[0]; c0 <= bound[0]; ++c0) {
    for (std::int64_t c1 = -bound[1]; c1 <= bound[1]; ++c1) {
      Weight mu = fw_basis[0] * Rat(static_cast<long>(c0)) +
                  fw_basis[1] * Rat(static_cast<long>(c1));
      if (4 * dot(mu, mu) > 9 * nu2) continue;
      bool k_dominant = true;
      for (const Weight& gamma : g.k_simples)
        if (pair(mu, gamma) < 0) {
          k_dominant = false;
          break;
        }
      if (!k_dominant) continue;

      FigureRow row;
      row.mu = mu;
      row.coords = {c0, c1};
      row.usmall = is_usmall(g, mu).usmall;
      for (const VerificationFrame& f : frames) {
        NonDecrCheck check = is_nondecreasable(f, mu);
        if (check.status == NonDecrStatus::ok && check.nondecreasable) {
          row.nondecreasable = true;
          break;
        }
      }
      std::tie(row.x, row.y) = plane_coords(g, mu);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string figure_basis_doc(const GroupData& g) {
  return g.ambient() == 3 ? "x = (e1-e2)/sqrt(2), y = (e1+e2-2e3)/sqrt(6)"
                          : "x = e1, y = e2";
}

int cmd_figure(const CliConfig& config, const GroupData& g, std::string& out) {
  std::vector<FigureRow> rows = figure_rows(g);
  if (config.format == "json") {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["group"] = g.spec.str();
    j["basis"] = figure_basis_doc(g);
    j["count"] = rows.size();
    Json arr = Json::array();
    for (const FigureRow& r : rows) {
      Json jr;
      jr["mu"] = weight_to_json(r.mu);
      jr["fw_coords"] = std::vector<std::int64_t>(r.coords.begin(), r.coords.end());
      jr["mu_x"] = r.x;
      jr["mu_y"] = r.y;
      jr["usmall"] = r.usmall;
      jr["nondecreasable"] = r.nondecreasable;
      arr.push_back(std::move(jr));
    }
    j["points"] = arr;
    out = j.dump(2) + "\n";
  } else {
    const char sep = config.format == "csv" ? ',' : '\t';
    std::string body;
    body += "# group: " + g.spec.str() + "\n";
    body += "# schema_version: " + std::to_string(kSchemaVersion) + "\n";
    body += "# basis: " + figure_basis_doc(g) + "\n";
    std::vector<Row> table;
    for (const FigureRow& r : rows)
      table.push_back(Row{{r.x, r.y, r.usmall ? "1" : "0", r.nondecreasable ? "1" : "0"}});
    body += render_table({"mu_x", "mu_y", "usmall", "nondecreasable"}, table, sep);
    out = std::move(body);
  }
  return 0;
}

Json error_json(const std::string& message) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["error"] = message;
  return j;
}

} // namespace

int run_cli(const CliConfig& config, std::string& out) {
  try {
    if (config.command == "verify") return cmd_verify(config, out);
    if (config.group.empty()) throw parse_error(config.command + " needs --group");
    GroupSpec spec = parse_group(config.group);
    GroupData g = load_group(spec, config.cache_dir);
    if (config.command == "chambers") return cmd_chambers(config, g, out);
    if (config.command == "lemmas") return cmd_lemmas(config, g, out);
    if (config.command == "usmall") return cmd_usmall(config, g, out);
    if (config.command == "nondecreasable") return cmd_nondecreasable(config, g, out);
    if (config.command == "figure") return cmd_figure(config, g, out);
    throw parse_error("unknown command '" + config.command + "'");
  } catch (const classification_error& e) {
    out = error_json(e.what()).dump(2) + "\n";
    return 1;
  } catch (const parse_error& e) {
    out = error_json(e.what()).dump(2) + "\n";
    return 2;
  } catch (const rank_error& e) {
    out = error_json(e.what()).dump(2) + "\n";
    return 2;
  } catch (const error& e) {
    out = error_json(e.what()).dump(2) + "\n";
    return 2;
  }
}

int cli_main(int argc, char** argv) {
  CLI::App app{"Exact Vogan-diagram calculus: chambers, u-small hulls and "
               "non-decreasable K-types for classical real Lie algebras"};
  app.require_subcommand(1);

  CliConfig config;
  config.cache_dir = default_cache_dir();

  auto add_common = [&config](CLI::App* sub) {
    sub->add_option("--group", config.group, "group spec, e.g. su:2,1 or sp:3,R");
    sub->add_option("--format", config.format, "json | csv | tsv");
    sub->add_option("--output", config.output, "write the result to a file");
    sub->add_option("--jobs", config.jobs, "worker threads for the enumeration");
    sub->add_option("--cache-dir", config.cache_dir, "chamber cache directory");
  };

  add_common(app.add_subcommand(
      "chambers", "list the positive systems containing the fixed compact one"));
  add_common(app.add_subcommand(
      "lemmas", "classification, component and pairing-bound sweeps over all chambers"));

  CLI::App* usmall = app.add_subcommand("usmall", "u-smallness certificates for one weight");
  add_common(usmall);
  usmall->add_option("--mu", config.mu, "ambient coordinates, e.g. 1,0,-1 or 3/2,1/2");
  usmall->add_option("--mu-fw", config.mu_fw, "fundamental-weight coefficients");
  usmall->add_option("--chamber", config.chamber, "frame index for --mu-fw (default 0)");

  CLI::App* nondecr =
      app.add_subcommand("nondecreasable", "enumerate the non-decreasable weights");
  add_common(nondecr);
  nondecr->add_option("--slack", config.slack, "extra margin on the search box (default 4)");

  CLI::App* verify =
      app.add_subcommand("verify", "check that every non-decreasable weight is u-small");
  add_common(verify);
  verify->add_option("--slack", config.slack, "extra margin on the search box (default 4)");
  verify->add_option("--family", config.family, "'all' sweeps every family in scope");
  verify->add_option("--max-rank", config.max_rank, "rank cap for --family all (default 4)");

  add_common(app.add_subcommand(
      "figure", "rank-2 grid of integral k-dominant weights tagged usmall/nondecreasable"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  config.command = app.get_subcommands().front()->get_name();
  std::string out;
  int code = run_cli(config, out);
  if (!config.output.empty()) {
    std::ofstream f(config.output);
    if (!f) {
      std::fprintf(stderr, "cannot write %s\n", config.output.c_str());
      return 2;
    }
    f << out;
  } else {
    std::fwrite(out.data(), 1, out.size(), stdout);
  }
  return code;
}

} // namespace ktypes
