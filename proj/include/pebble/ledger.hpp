#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pebble/configuration.hpp"
#include "pebble/graph.hpp"
#include "pebble/numbers.hpp"

namespace pebble {

enum class ClaimStatus { Confirmed, Mismatch, Skipped, NotApplicable };
enum class ClaimClass { Engine, Empirical };

const char* to_string(ClaimStatus s);
const char* to_string(ClaimClass c);

/// One checked claim: a closed form or inequality evaluated at an instance,
/// bound to an engine computation. Confirmed requires exact equality for "="
/// claims and satisfaction for "<=" claims; Mismatch entries carry both
/// numbers. Claims whose source argument is informal are labeled Empirical;
/// a mismatch on them is a reportable finding, not an engine failure.
struct LedgerEntry {
  std::string id;
  std::string kind;
  std::string statement;
  std::string recipe;
  std::string relation;  // "eq", "le", or "" for composite checks
  ClaimClass claim_class = ClaimClass::Engine;
  std::string budget_class;  // "small" or "full"
  ClaimStatus status = ClaimStatus::Skipped;
  std::optional<long long> expected;
  std::optional<long long> engine_value;
  /// Named side values (bounds, both typo readings, witness sizes, ...).
  std::vector<std::pair<std::string, long long>> details;
  std::string note;
};

struct ManifestEntry {
  std::string id;
  std::string kind;
  std::string statement;
  std::string recipe;  // primary instance recipe (informational; echoed)
  nlohmann::json params;
  std::string relation;
  ClaimClass claim_class = ClaimClass::Engine;
  std::string budget_class = "small";
};

using Manifest = std::vector<ManifestEntry>;

/// The manifest compiled into the binary (a copy of data/paper_claims.json).
const std::string& default_manifest_json();

Manifest load_manifest(const std::string& json_text);

struct VerifyOptions {
  std::string budget = "small";  // "small" runs small entries; "full" runs all
  std::string only_id;           // when nonempty, run just this claim id
  std::uint64_t state_cap = 50'000'000;  // per-entry cap
  int workers = 0;                       // 0 = hardware concurrency
};

/// Evaluates manifest entries (in manifest order; entries may run
/// concurrently) and returns the deterministic report.
std::vector<LedgerEntry> verify_paper(const Manifest& manifest,
                                      const VerifyOptions& opts = {});

/// 0 when everything is Confirmed/Skipped/NotApplicable, 4 on any Mismatch of
/// an engine-verified claim, 5 when only empirical claims mismatch.
int report_exit_code(const std::vector<LedgerEntry>& report);

/// max(n, 2^{diam(G)}).
long long pi_lower_bound(const Graph& g);

struct CoronaBounds {
  long long upper_four_pi;    // 4*pi(G) + g*h
  long long upper_three_pi2;  // 3*pi_2(G) + g*h
  long long exact_two_pi2;    // g*h + 2*(pi_2(G) - 1)
};

CoronaBounds corona_bound_values(long long g, long long h, long long pi_g,
                                 long long pi2_g);

/// Checks pi(G box H) against pi(G)*pi(H) and against the improved bound
/// (2 - 1/min{pi(G),pi(H)}) * pi(G)*pi(H), compared in exact integers.
LedgerEntry graham_check(const Graph& g, const Graph& h,
                         const ComputeOptions& opts = {});

/// A named unsolvable-witness family instantiated at one parameter.
struct WitnessInstance {
  std::string name;
  std::string recipe;
  Graph graph;
  VertexId target;
  Configuration config;
  long long declared_size;
};

struct WitnessSpec {
  std::string name;
  std::string description;
  int param_min;
  int param_max;  // desk-scale range
  std::function<WitnessInstance(int)> instantiate;
};

/// The four witness families: friendship leaf target (size 2n+1), book hub
/// target (size 2n+1), book page target (size 2n+3, embedding the
/// search-derived B_2 block), and K_3 * K_m copy target (size 3m+3).
const std::vector<WitnessSpec>& witness_registry();

}  // namespace pebble
