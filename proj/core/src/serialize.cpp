#include "ktypes/serialize.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

namespace ktypes {

namespace fs = std::filesystem;

Json weight_to_json(const Weight& w) {
  Json arr = Json::array();
  for (const Rat& q : w.coords()) arr.push_back(rat_str(q));
  return arr;
}

Weight weight_from_json(const Json& j) {
  std::vector<Rat> coords;
  for (const auto& item : j) coords.push_back(rat_parse(item.get<std::string>()));
  return Weight(std::move(coords));
}

static Json rats_to_json(const std::vector<Rat>& qs) {
  Json arr = Json::array();
  for (const Rat& q : qs) arr.push_back(rat_str(q));
  return arr;
}

static Json word_to_json(const std::vector<std::size_t>& word) {
  Json arr = Json::array();
  for (std::size_t v : word) arr.push_back(v + 1);  // vertex numbers are 1-based
  return arr;
}

Json chamber_to_json(const Chamber& c) {
  Json j;
  j["word"] = word_to_json(c.word);
  j["painted"] = c.diagram.painted;
  Json simples = Json::array();
  for (const Weight& s : c.diagram.simples.simples) simples.push_back(weight_to_json(s));
  j["simples"] = simples;
  Json positives = Json::array();
  for (const Weight& r : c.positive_roots) positives.push_back(weight_to_json(r));
  j["positive_roots"] = positives;
  j["rho"] = weight_to_json(c.rho);
  j["rho_c"] = weight_to_json(c.rho_c);
  j["rho_n"] = weight_to_json(c.rho_n);
  Json fw = Json::array();
  for (const Weight& xi : c.fundamental_weights) fw.push_back(weight_to_json(xi));
  j["fundamental_weights"] = fw;
  return j;
}

Chamber chamber_from_json(const Json& j, const RootSystemData& roots) {
  std::vector<Weight> simples;
  for (const auto& s : j.at("simples")) simples.push_back(weight_from_json(s));
  std::vector<bool> painted = j.at("painted").get<std::vector<bool>>();
  std::vector<std::size_t> word;
  for (const auto& v : j.at("word")) word.push_back(v.get<std::size_t>() - 1);
  VoganDiagram d{SimpleBasis{std::move(simples)}, std::move(painted)};
  return make_chamber(roots, std::move(d), std::move(word));
}

Json certificate_to_json(const USmallCertificate& cert) {
  Json j;
  j["usmall"] = cert.usmall;
  j["method"] = method_name(cert.method);
  switch (cert.method) {
    case Method::order_test:
      if (cert.usmall) j["cone_coords"] = rats_to_json(cert.cone_coords);
      break;
    case Method::dominance_test:
      if (cert.usmall) {
        j["frame_index"] = cert.frame_index;
        j["chamber_word"] = word_to_json(cert.chamber_word);
      }
      break;
    case Method::lp_oracle:
      if (cert.usmall) j["convex_coeffs"] = rats_to_json(cert.convex_coeffs);
      break;
  }
  if (cert.central != 0) j["central_component"] = rat_str(cert.central);
  if (!cert.convention.empty()) j["convention"] = cert.convention;
  return j;
}

Json report_to_json(const VerificationReport& report) {
  Json j;
  j["subject"] = report.subject;
  j["check"] = report.check;
  j["passed"] = report.passed();
  Json counts;
  for (const auto& [k, v] : report.counts) counts[k] = v;
  j["counts"] = counts;
  if (!report.notes.empty()) j["notes"] = report.notes;
  auto findings = [](const std::vector<Finding>& fs) {
    Json arr = Json::array();
    for (const Finding& f : fs) {
      Json jf;
      jf["what"] = f.what;
      for (const auto& [k, v] : f.data) jf[k] = v;
      arr.push_back(std::move(jf));
    }
    return arr;
  };
  j["witnesses"] = findings(report.witnesses);
  j["counterexamples"] = findings(report.counterexamples);
  return j;
}

Json candidate_to_json(const NonDecrCandidate& cand) {
  Json j;
  j["mu"] = weight_to_json(cand.mu);
  Json hits = Json::array();
  for (const FrameHit& hit : cand.hits) {
    Json jh;
    jh["frame"] = hit.frame_index;
    jh["label"] = hit.frame_label;
    jh["fw_coords"] = rats_to_json(hit.fw_coords);
    Json reasons = Json::array();
    for (const IndexFailure& r : hit.reasons) {
      Json jr;
      jr["k_failed"] = r.k_failed;
      jr["g_failed"] = r.g_failed;
      reasons.push_back(std::move(jr));
    }
    jh["reasons"] = reasons;
    hits.push_back(std::move(jh));
  }
  j["hits"] = hits;
  return j;
}

static std::string cache_file_name(const GroupSpec& spec) {
  std::string key = spec.str();
  for (char& ch : key)
    if (ch == ':' || ch == ',' || ch == '*') ch = '_';
  return "chambers-" + key + ".json";
}

std::optional<std::vector<Chamber>> load_cached_chambers(const GroupSpec& spec,
                                                         const RootSystemData& roots,
                                                         const std::string& cache_dir) {
  if (cache_dir.empty()) return std::nullopt;
  fs::path file = fs::path(cache_dir) / cache_file_name(spec);
  std::ifstream in(file);
  if (!in) return std::nullopt;
  try {
    Json j = Json::parse(in);
    if (j.at("schema_version").get<int>() != kSchemaVersion) return std::nullopt;
    if (j.at("group").get<std::string>() != spec.str()) return std::nullopt;
    std::vector<Chamber> chambers;
    for (const auto& jc : j.at("chambers"))
      chambers.push_back(chamber_from_json(jc, roots));
    if (chambers.empty()) return std::nullopt;
    return chambers;
  } catch (const std::exception&) {
    return std::nullopt;  // corrupt entries are recomputed
  }
}

void store_cached_chambers(const GroupSpec& spec, const std::vector<Chamber>& chambers,
                           const std::string& cache_dir) {
  if (cache_dir.empty()) return;
  std::error_code ec;
  fs::create_directories(cache_dir, ec);
  if (ec) return;  // cache is best-effort
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["group"] = spec.str();
  Json arr = Json::array();
  for (const Chamber& c : chambers) arr.push_back(chamber_to_json(c));
  j["chambers"] = arr;

  fs::path final_path = fs::path(cache_dir) / cache_file_name(spec);
  fs::path tmp_path = final_path;
  tmp_path += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp_path);
    if (!out) return;
    out << j.dump(2) << "\n";
  }
  fs::rename(tmp_path, final_path, ec);  // atomic against concurrent writers
  if (ec) fs::remove(tmp_path, ec);
}

} // namespace ktypes
