#pragma once

#include <string>

#include "ktypes/rootsys.hpp"

namespace ktypes {

/// Parsed command line.  run_cli computes everything from this, so tests
/// can drive the surface without a process boundary.
struct CliConfig {
  std::string command;  // chambers | lemmas | usmall | nondecreasable | verify | figure
  std::string group;
  int slack = 4;
  std::string format = "json";  // json | csv | tsv
  std::string output;           // file path, empty = stdout
  int jobs = 1;
  std::string cache_dir;  // resolved; empty disables the cache
  std::string mu;         // ambient coordinates "1,0,-1"
  std::string mu_fw;      // fundamental-weight coefficients
  int chamber = 0;        // frame index for --mu-fw
  std::string family;     // "all" for the verify sweep
  int max_rank = 4;
};

/// Grammar: su:p,q | so:a,b | sp:n,R | sp:p,q | so*:2n | sl:m,R | sl:n,H.
/// so:a,b dispatches on the parities of a,b; arguments are normalized so
/// that so(even,odd) leads with the even part.  Throws parse_error on
/// malformed input and rank_error (naming the bound) below the hypotheses.
GroupSpec parse_group(const std::string& s);

/// Executes one command; the serialized output lands in `out`.
/// Returns 0 on success, 1 on a verification counterexample, 2 on a
/// usage/parse error.
int run_cli(const CliConfig& config, std::string& out);

/// argv wrapper around run_cli (option parsing, --output handling).
int cli_main(int argc, char** argv);

/// Cache directory resolution: explicit flag, else KTYPES_CACHE_DIR, else
/// $HOME/.cache/ktypes, else ./.ktypes-cache.
std::string default_cache_dir();

/// Every family at every in-scope parameter choice with rank <= max_rank
/// (the population `verify --family all` sweeps).
std::vector<GroupSpec> in_scope_specs(int max_rank);

} // namespace ktypes
