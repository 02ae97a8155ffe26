#include "pebble/ledger.hpp"

#include <algorithm>

#include "pebble/detail/parallel.hpp"
#include "pebble/expr.hpp"
#include "pebble/families.hpp"
#include "pebble/manifest_data.hpp"
#include "pebble/solve.hpp"

namespace pebble {

namespace {

long long pow_ll(long long base, int exp) {
  long long out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

struct EvalContext {
  Budget budget{};
  ComputeOptions copts() const { return ComputeOptions{budget, 1, true}; }
};

// Engine probes return nullopt when the state budget runs out; the entry is
// then recorded as Skipped, never as a verdict.
std::optional<long long> engine_pi(const Graph& g, long long t,
                                   const EvalContext& cx) {
  const QuantityResult q = pebbling_number(g, t, cx.copts());
  if (q.status == RunStatus::Limit) return std::nullopt;
  return q.value;
}

std::optional<long long> engine_gamma_search(const Graph& g,
                                             const EvalContext& cx) {
  const QuantityResult q = cover_pebbling_search(g, cx.copts());
  if (q.status == RunStatus::Limit) return std::nullopt;
  return q.value;
}

std::optional<long long> engine_pistar(const Graph& g, const EvalContext& cx) {
  const QuantityResult q = optimal_pebbling_number(g, cx.copts());
  if (q.status == RunStatus::Limit) return std::nullopt;
  return q.value;
}

void finish(LedgerEntry& e, long long expected,
            std::optional<long long> engine) {
  e.expected = expected;
  if (!engine) {
    e.status = ClaimStatus::Skipped;
    e.note = "state budget exhausted";
    return;
  }
  e.engine_value = engine;
  bool ok = false;
  if (e.relation == "eq") ok = *engine == expected;
  else if (e.relation == "le") ok = *engine <= expected;
  else if (e.relation == "ge") ok = *engine >= expected;
  else throw Error("entry '" + e.id + "' has no relation to check");
  e.status = ok ? ClaimStatus::Confirmed : ClaimStatus::Mismatch;
}

Graph recipe_graph(const nlohmann::json& params, const char* key) {
  if (!params.contains(key) || !params[key].is_string())
    throw Error(std::string("manifest entry needs string param '") + key + "'");
  return graph_from_expr_text(params[key].get<std::string>());
}

int int_param(const nlohmann::json& params, const char* key) {
  if (!params.contains(key) || !params[key].is_number_integer())
    throw Error(std::string("manifest entry needs integer param '") + key +
                "'");
  return params[key].get<int>();
}

void eval_kind(LedgerEntry& e, const ManifestEntry& m, const EvalContext& cx) {
  const auto& p = m.params;
  const std::string& kind = m.kind;

  if (kind == "gamma_cycle_even") {
    const int k = int_param(p, "k");
    finish(e, 3 * (pow_ll(2, k) - 1),
           cover_pebbling_stacking(build_cycle(2 * k)));
  } else if (kind == "gamma_cycle_odd") {
    const int k = int_param(p, "k");
    finish(e, pow_ll(2, k + 1) - 3,
           cover_pebbling_stacking(build_cycle(2 * k - 1)));
  } else if (kind == "gamma_hypercube") {
    const int d = int_param(p, "d");
    finish(e, pow_ll(3, d), cover_pebbling_stacking(build_hypercube(d)));
  } else if (kind == "gamma_complete") {
    const int n = int_param(p, "n");
    finish(e, 2LL * n - 1, cover_pebbling_stacking(build_complete(n)));
  } else if (kind == "gamma_path") {
    const int n = int_param(p, "n");
    finish(e, pow_ll(2, n) - 1, cover_pebbling_stacking(build_path(n)));
  } else if (kind == "gamma_search_agrees") {
    const Graph g = recipe_graph(p, "recipe");
    finish(e, cover_pebbling_stacking(g), engine_gamma_search(g, cx));
  } else if (kind == "pi_path") {
    const int n = int_param(p, "n");
    finish(e, pow_ll(2, n - 1), engine_pi(build_path(n), 1, cx));
  } else if (kind == "pi_complete") {
    const int n = int_param(p, "n");
    finish(e, n, engine_pi(build_complete(n), 1, cx));
  } else if (kind == "pi_hypercube") {
    const int d = int_param(p, "d");
    finish(e, pow_ll(2, d), engine_pi(build_hypercube(d), 1, cx));
  } else if (kind == "pi2_complete") {
    const int n = int_param(p, "n");
    finish(e, n + 2, engine_pi(build_complete(n), 2, cx));
  } else if (kind == "friendship_class1") {
    const int n = int_param(p, "n");
    finish(e, 2LL * n + 2, engine_pi(build_friendship(n), 1, cx));
    if (e.status == ClaimStatus::Confirmed) e.note = "Class 1 (pi = n + 1)";
  } else if (kind == "pi_book") {
    const int n = int_param(p, "n");
    finish(e, 2LL * n + 4, engine_pi(build_book(n), 1, cx));
  } else if (kind == "book_le_cycle6") {
    const auto pi_c6 = engine_pi(build_cycle(6), 1, cx);
    if (!pi_c6) {
      e.status = ClaimStatus::Skipped;
      e.note = "state budget exhausted";
      return;
    }
    e.details.emplace_back("pi_cycle6", *pi_c6);
    finish(e, *pi_c6, engine_pi(build_book(2), 1, cx));
  } else if (kind == "lower_bound_n") {
    const Graph g = recipe_graph(p, "recipe");
    finish(e, g.order(), engine_pi(g, 1, cx));
  } else if (kind == "lower_bound_diam_readings") {
    const Graph g = recipe_graph(p, "recipe");
    const int diam = g.diameter();
    const long long presumed = pow_ll(2, diam);
    const long long literal = 2LL * diam;
    e.details.emplace_back("reading_2_pow_diam", presumed);
    e.details.emplace_back("reading_2_times_diam", literal);
    finish(e, presumed, engine_pi(g, 1, cx));
    if (e.engine_value) {
      e.details.emplace_back("literal_reading_holds",
                             *e.engine_value >= literal ? 1 : 0);
      e.note = "presumed reading 2^diam checked; literal 2*diam shown in details";
    }
  } else if (kind == "sandwich") {
    const Graph g = recipe_graph(p, "recipe");
    const auto pi1 = engine_pi(g, 1, cx);
    const auto pi2 = engine_pi(g, 2, cx);
    if (!pi1 || !pi2) {
      e.status = ClaimStatus::Skipped;
      e.note = "state budget exhausted";
      return;
    }
    e.details.emplace_back("pi", *pi1);
    e.details.emplace_back("pi_2", *pi2);
    e.details.emplace_back("two_pi", 2 * *pi1);
    e.status = (*pi1 <= *pi2 && *pi2 <= 2 * *pi1) ? ClaimStatus::Confirmed
                                                  : ClaimStatus::Mismatch;
  } else if (kind == "diam2_theorem") {
    const Graph g = recipe_graph(p, "recipe");
    if (g.diameter() != 2) {
      e.status = ClaimStatus::NotApplicable;
      e.note = "diameter is not 2";
      return;
    }
    finish(e, g.order() + 1LL, engine_pi(g, 1, cx));
  } else if (kind == "corona_upper_4pi" || kind == "corona_upper_3pi2" ||
             kind == "corona_exact_2pi2") {
    const Graph g = recipe_graph(p, "g");
    const Graph h = recipe_graph(p, "h");
    const Graph product = corona(g, h);
    const auto pi_g = engine_pi(g, 1, cx);
    const auto pi2_g = engine_pi(g, 2, cx);
    if (!pi_g || !pi2_g) {
      e.status = ClaimStatus::Skipped;
      e.note = "state budget exhausted";
      return;
    }
    const CoronaBounds bounds =
        corona_bound_values(g.order(), h.order(), *pi_g, *pi2_g);
    e.details.emplace_back("pi_g", *pi_g);
    e.details.emplace_back("pi2_g", *pi2_g);
    const long long expected = kind == "corona_upper_4pi" ? bounds.upper_four_pi
                               : kind == "corona_upper_3pi2"
                                   ? bounds.upper_three_pi2
                                   : bounds.exact_two_pi2;
    finish(e, expected, engine_pi(product, 1, cx));
  } else if (kind == "corona_complete_formula") {
    const int n = int_param(p, "n");
    const Graph h = recipe_graph(p, "h");
    const Graph product = corona(build_complete(n), h);
    finish(e, static_cast<long long>(n) * h.order() + 2LL * n + 2,
           engine_pi(product, 1, cx));
  } else if (kind == "prop1_ncorona_le_corona") {
    const Graph g = recipe_graph(p, "g");
    const Graph h = recipe_graph(p, "h");
    const Graph nc = neighbourhood_corona(g, h);  // throws for |V(G)| = 1
    const Graph co = corona(g, h);
    const auto pi_corona = engine_pi(co, 1, cx);
    if (!pi_corona) {
      e.status = ClaimStatus::Skipped;
      e.note = "state budget exhausted";
      return;
    }
    finish(e, *pi_corona, engine_pi(nc, 1, cx));
  } else if (kind == "ncorona_k3_class1") {
    const int mm = int_param(p, "m");
    const Graph g = neighbourhood_corona(build_complete(3), build_complete(mm));
    finish(e, g.order() + 1LL, engine_pi(g, 1, cx));
    if (e.status == ClaimStatus::Confirmed) e.note = "Class 1";
  } else if (kind == "ncorona_k3_h_class1") {
    const Graph h = recipe_graph(p, "h");
    const Graph g = neighbourhood_corona(build_complete(3), h);
    finish(e, g.order() + 1LL, engine_pi(g, 1, cx));
    if (e.status == ClaimStatus::Confirmed) e.note = "Class 1";
  } else if (kind == "ncorona_class0") {
    const int n = int_param(p, "n");
    if (n < 4) {
      e.status = ClaimStatus::NotApplicable;
      e.note = "theorem requires n >= 4";
      return;
    }
    const Graph h = recipe_graph(p, "h");
    const Graph g = neighbourhood_corona(build_complete(n), h);
    finish(e, g.order(), engine_pi(g, 1, cx));
    if (e.status == ClaimStatus::Confirmed) e.note = "Class 0";
  } else if (kind == "graham") {
    const Graph g = recipe_graph(p, "g");
    const Graph h = recipe_graph(p, "h");
    LedgerEntry checked = graham_check(g, h, cx.copts());
    e.status = checked.status;
    e.expected = checked.expected;
    e.engine_value = checked.engine_value;
    e.details = checked.details;
    if (e.note.empty()) e.note = checked.note;
  } else if (kind == "pistar_complete") {
    const int n = int_param(p, "n");
    finish(e, 2, engine_pistar(build_complete(n), cx));
  } else if (kind == "pistar_corona_complete") {
    const int n = int_param(p, "n");
    if (n < 3) {
      e.status = ClaimStatus::NotApplicable;
      e.note = "theorem requires n >= 3";
      return;
    }
    const Graph h = recipe_graph(p, "h");
    finish(e, 4, engine_pistar(corona(build_complete(n), h), cx));
  } else if (kind == "pistar_ncorona_complete") {
    const int n = int_param(p, "n");
    if (n < 2) {
      e.status = ClaimStatus::NotApplicable;
      e.note = "theorem requires n >= 2";
      return;
    }
    const Graph h = recipe_graph(p, "h");
    finish(e, 3, engine_pistar(neighbourhood_corona(build_complete(n), h), cx));
  } else if (kind == "witness_friendship" || kind == "witness_book_hub" ||
             kind == "witness_book_page" || kind == "witness_ncorona_k3") {
    const int param = p.contains("n") ? int_param(p, "n") : int_param(p, "m");
    const WitnessSpec* spec = nullptr;
    for (const auto& s : witness_registry())
      if ((kind == "witness_friendship" && s.name == "friendship-leaf") ||
          (kind == "witness_book_hub" && s.name == "book-hub") ||
          (kind == "witness_book_page" && s.name == "book-page") ||
          (kind == "witness_ncorona_k3" && s.name == "ncorona-k3-copy"))
        spec = &s;
    if (!spec) throw Error("witness spec not found for kind " + kind);
    if (param < spec->param_min || param > spec->param_max) {
      e.status = ClaimStatus::NotApplicable;
      e.note = "parameter outside the spec range";
      return;
    }
    const WitnessInstance inst = spec->instantiate(param);
    e.expected = inst.declared_size;
    e.engine_value = inst.config.size();
    e.details.emplace_back("target", inst.target);
    const SolveVerdict verdict =
        is_t_solvable(inst.graph, inst.config, inst.target, 1, cx.budget);
    if (verdict.outcome == Outcome::Limit) {
      e.status = ClaimStatus::Skipped;
      e.note = "state budget exhausted";
      return;
    }
    const bool unsolvable = verdict.outcome == Outcome::Unsolvable;
    const bool size_ok = inst.config.size() == inst.declared_size;
    e.details.emplace_back("engine_unsolvable", unsolvable ? 1 : 0);
    e.status = (unsolvable && size_ok) ? ClaimStatus::Confirmed
                                       : ClaimStatus::Mismatch;
    if (!unsolvable) e.note = "declared witness is solvable";
    else if (!size_ok) e.note = "generated size differs from declared formula";
  } else {
    throw Error("unknown manifest kind: " + kind);
  }
}

LedgerEntry evaluate_entry(const ManifestEntry& m, const EvalContext& cx) {
  LedgerEntry e;
  e.id = m.id;
  e.kind = m.kind;
  e.statement = m.statement;
  e.recipe = m.recipe;
  e.relation = m.relation;
  e.claim_class = m.claim_class;
  e.budget_class = m.budget_class;
  try {
    eval_kind(e, m, cx);
  } catch (const ParseError& err) {
    e.status = ClaimStatus::NotApplicable;
    e.note = err.what();
  } catch (const Error& err) {
    // Construction preconditions (K_1 neighbourhood corona, ...) surface here.
    const std::string what = err.what();
    if (what.find("unknown manifest kind") != std::string::npos ||
        what.find("manifest entry needs") != std::string::npos)
      throw;
    e.status = ClaimStatus::NotApplicable;
    e.note = what;
  }
  return e;
}

}  // namespace

const char* to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Confirmed: return "CONFIRMED";
    case ClaimStatus::Mismatch: return "MISMATCH";
    case ClaimStatus::Skipped: return "SKIPPED";
    case ClaimStatus::NotApplicable: return "NOT_APPLICABLE";
  }
  return "?";
}

const char* to_string(ClaimClass c) {
  return c == ClaimClass::Engine ? "engine" : "empirical";
}

const std::string& default_manifest_json() {
  static const std::string text = detail::kDefaultManifestJson;
  return text;
}

Manifest load_manifest(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("invalid manifest JSON: ") + e.what());
  }
  if (!j.is_array()) throw Error("manifest must be a JSON array");
  Manifest out;
  for (const auto& item : j) {
    ManifestEntry m;
    m.id = item.at("id").get<std::string>();
    m.kind = item.at("kind").get<std::string>();
    m.statement = item.value("statement", std::string{});
    m.recipe = item.value("recipe", std::string{});
    m.params = item.value("params", nlohmann::json::object());
    m.relation = item.value("relation", std::string{});
    const std::string cls = item.value("class", std::string{"engine"});
    if (cls != "engine" && cls != "empirical")
      throw Error("manifest entry '" + m.id + "' has unknown class: " + cls);
    m.claim_class =
        cls == "engine" ? ClaimClass::Engine : ClaimClass::Empirical;
    m.budget_class = item.value("budget", std::string{"small"});
    if (m.budget_class != "small" && m.budget_class != "full")
      throw Error("manifest entry '" + m.id +
                  "' has unknown budget class: " + m.budget_class);
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<LedgerEntry> verify_paper(const Manifest& manifest,
                                      const VerifyOptions& opts) {
  std::vector<const ManifestEntry*> selected;
  for (const auto& m : manifest) {
    if (!opts.only_id.empty()) {
      if (m.id == opts.only_id) selected.push_back(&m);
    } else if (opts.budget == "full" || m.budget_class == "small") {
      selected.push_back(&m);
    }
  }
  if (!opts.only_id.empty() && selected.empty())
    throw Error("no manifest entry with id '" + opts.only_id + "'");

  EvalContext cx;
  cx.budget.max_states = opts.state_cap;

  std::vector<LedgerEntry> report(selected.size());
  detail::run_parallel(detail::effective_workers(opts.workers),
                       static_cast<int>(selected.size()), [&](int i) {
                         report[i] = evaluate_entry(*selected[i], cx);
                       });
  return report;
}

int report_exit_code(const std::vector<LedgerEntry>& report) {
  bool engine_mismatch = false, empirical_mismatch = false;
  for (const auto& e : report) {
    if (e.status != ClaimStatus::Mismatch) continue;
    (e.claim_class == ClaimClass::Engine ? engine_mismatch
                                         : empirical_mismatch) = true;
  }
  if (engine_mismatch) return 4;
  if (empirical_mismatch) return 5;
  return 0;
}

long long pi_lower_bound(const Graph& g) {
  g.require_connected("pi lower bound");
  return std::max<long long>(g.order(), pow_ll(2, g.diameter()));
}

CoronaBounds corona_bound_values(long long g, long long h, long long pi_g,
                                 long long pi2_g) {
  CoronaBounds b;
  b.upper_four_pi = 4 * pi_g + g * h;
  b.upper_three_pi2 = 3 * pi2_g + g * h;
  b.exact_two_pi2 = g * h + 2 * (pi2_g - 1);
  return b;
}

LedgerEntry graham_check(const Graph& g, const Graph& h,
                         const ComputeOptions& opts) {
  LedgerEntry e;
  e.kind = "graham";
  e.relation = "le";
  e.recipe = "cartesian(" + g.family() + "," + h.family() + ")";
  e.statement = "pi(G x H) <= pi(G) pi(H), and within the improved bound";

  const QuantityResult qg = pebbling_number(g, 1, opts);
  const QuantityResult qh = pebbling_number(h, 1, opts);
  if (qg.status == RunStatus::Limit || qh.status == RunStatus::Limit) {
    e.status = ClaimStatus::Skipped;
    e.note = "state budget exhausted";
    return e;
  }
  const QuantityResult qp = pebbling_number(cartesian_product(g, h), 1, opts);
  if (qp.status == RunStatus::Limit) {
    e.status = ClaimStatus::Skipped;
    e.note = "state budget exhausted";
    return e;
  }

  const long long bound = qg.value * qh.value;
  const long long m = std::min(qg.value, qh.value);
  e.expected = bound;
  e.engine_value = qp.value;
  e.details.emplace_back("pi_g", qg.value);
  e.details.emplace_back("pi_h", qh.value);
  // improved bound compared exactly: m*pi <= (2m - 1)*pi(G)pi(H)
  e.details.emplace_back("improved_lhs_m_times_pi", m * qp.value);
  e.details.emplace_back("improved_rhs_2m_minus_1_times_bound",
                         (2 * m - 1) * bound);
  const bool ok = qp.value <= bound && m * qp.value <= (2 * m - 1) * bound;
  e.status = ok ? ClaimStatus::Confirmed : ClaimStatus::Mismatch;
  return e;
}

const std::vector<WitnessSpec>& witness_registry() {
  static const std::vector<WitnessSpec> registry = [] {
    std::vector<WitnessSpec> specs;

    specs.push_back(WitnessSpec{
        "friendship-leaf",
        "target a leaf; hub and target empty, 3 pebbles on a vertex of "
        "another triangle, 1 pebble everywhere else (size 2n + 1)",
        2, 4, [](int n) {
          Graph g = build_friendship(n);
          std::vector<int> c(g.order(), 1);
          c[0] = 0;  // hub
          c[1] = 0;  // the target leaf
          c[3] = 3;  // first leaf of the second triangle
          return WitnessInstance{"friendship-leaf",
                                 "friendship(" + std::to_string(n) + ")",
                                 g,
                                 1,
                                 Configuration(c),
                                 2LL * n + 1};
        }});

    specs.push_back(WitnessSpec{
        "book-hub",
        "target the hub u; 3 pebbles on the far page vertex b_1, nothing on "
        "b_1's neighbours or the target, 1 pebble elsewhere (size 2n + 1)",
        2, 4, [](int n) {
          Graph g = build_book(n);
          std::vector<int> c(g.order(), 1);
          c[0] = 0;  // target u
          c[1] = 0;  // v, neighbour of the stack
          c[2] = 0;  // a_1, neighbour of the stack
          c[3] = 3;  // b_1
          return WitnessInstance{"book-hub",
                                 "book(" + std::to_string(n) + ")",
                                 g,
                                 0,
                                 Configuration(c),
                                 2LL * n + 1};
        }});

    specs.push_back(WitnessSpec{
        "book-page",
        "target a page vertex; the search-derived maximum unsolvable block on "
        "the B_2 sub-book, 1 pebble on every remaining page vertex "
        "(size 2(n-2) + 7 = 2n + 3)",
        2, 4, [](int n) {
          // The size-7 block is not spelled out in print; the exhaustive
          // search supplies the lexicographically smallest one, computed once.
          static const std::vector<int> block = [] {
            const Graph b2 = build_book(2);
            const RootedResult r = rooted_pebbling_number(b2, 2, 1);
            if (r.status != RunStatus::Complete || r.value != 8)
              throw Error("internal error: B_2 page-target search failed");
            return r.witness.counts();
          }();
          Graph g = build_book(n);
          std::vector<int> c(g.order(), 1);
          for (int v = 0; v < 6; ++v) c[v] = block[v];
          return WitnessInstance{"book-page",
                                 "book(" + std::to_string(n) + ")",
                                 g,
                                 2,
                                 Configuration(c),
                                 2LL * n + 3};
        }});

    specs.push_back(WitnessSpec{
        "ncorona-k3-copy",
        "target in copy 1 of K_3 * K_m; 3 pebbles on one vertex of each other "
        "copy, 1 pebble on the remaining copy vertices, hubs empty "
        "(size 3m + 3)",
        1, 3, [](int m) {
          Graph g = neighbourhood_corona(build_complete(3), build_complete(m));
          std::vector<int> c(g.order(), 1);
          c[0] = c[1] = c[2] = 0;  // hubs
          c[3] = 0;                // target: first vertex of copy 1
          c[3 + m] = 3;            // first vertex of copy 2
          c[3 + 2 * m] = 3;        // first vertex of copy 3
          return WitnessInstance{
              "ncorona-k3-copy",
              "ncorona(complete(3),complete(" + std::to_string(m) + "))",
              g,
              3,
              Configuration(c),
              3LL * m + 3};
        }});

    return specs;
  }();
  return registry;
}

}  // namespace pebble
