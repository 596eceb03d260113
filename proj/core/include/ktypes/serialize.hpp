#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ktypes/group.hpp"
#include "ktypes/nondecr.hpp"
#include "ktypes/report.hpp"
#include "ktypes/smallness.hpp"

namespace ktypes {

using Json = nlohmann::ordered_json;

/// Version embedded in every serialized record; cache entries with another
/// version are discarded.
inline constexpr int kSchemaVersion = 1;

Json weight_to_json(const Weight& w);  // array of exact rational strings
Weight weight_from_json(const Json& j);

Json chamber_to_json(const Chamber& c);
/// Rebuilds the chamber from its diagram and word (derived data is
/// recomputed, which reproduces it exactly).
Chamber chamber_from_json(const Json& j, const RootSystemData& roots);

Json certificate_to_json(const USmallCertificate& cert);
Json report_to_json(const VerificationReport& report);
Json candidate_to_json(const NonDecrCandidate& cand);

/// Chamber cache: one JSON file per group under cache_dir, written with
/// create-then-rename.  Returns nullopt on miss, version mismatch or a
/// corrupt entry.
std::optional<std::vector<Chamber>> load_cached_chambers(const GroupSpec& spec,
                                                         const RootSystemData& roots,
                                                         const std::string& cache_dir);
void store_cached_chambers(const GroupSpec& spec, const std::vector<Chamber>& chambers,
                           const std::string& cache_dir);

} // namespace ktypes
