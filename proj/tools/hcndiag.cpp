// hcndiag: build, verify, simulate and diagnose on hierarchical cubic networks.
//
// Exit codes: 0 pass, 1 check failure or runtime error, 2 usage, 3 budget
// exceeded, 4 ambiguous diagnosis.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hcndiag/diagnosability.hpp"
#include "hcndiag/report.hpp"
#include "hcndiag/structure.hpp"
#include "hcndiag/syndrome.hpp"
#include "hcndiag/topology.hpp"

using namespace hcndiag;
using nlohmann::json;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kBudget = 3, kAmbiguous = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- verify rows

enum class Status { pass, fail, budget };

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::budget: return "budget";
  }
  return "?";
}

struct Row {
  std::string check;
  int n = 0;
  int g = -1;  // -1: not applicable
  std::string model = "-";
  json expected;
  json measured;
  Status status = Status::pass;
  json report;  // full report for the json output, or null
  std::string note;
};

Status status_of(bool ok) { return ok ? Status::pass : Status::fail; }

std::string cell(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

Status overall(const std::vector<Row>& rows) {
  bool budget = false;
  for (const auto& r : rows) {
    if (r.status == Status::fail) return Status::fail;
    budget = budget || r.status == Status::budget;
  }
  return budget ? Status::budget : Status::pass;
}

void print_rows(const std::string& check, const std::vector<Row>& rows, const std::string& output) {
  const auto total = overall(rows);
  if (output == "json") {
    json out = {{"command", "verify"}, {"check", check}, {"status", to_string(total)}, {"rows", json::array()}};
    for (const auto& r : rows) {
      out["rows"].push_back({{"check", r.check},
                             {"n", r.n},
                             {"g", r.g < 0 ? json(nullptr) : json(r.g)},
                             {"model", r.model},
                             {"expected", r.expected},
                             {"measured", r.measured},
                             {"status", to_string(r.status)},
                             {"report", r.report}});
    }
    std::cout << out.dump(2) << '\n';
    return;
  }
  if (output == "csv") {
    std::cout << "check,n,g,model,expected,measured,status\n";
    for (const auto& r : rows) {
      std::cout << r.check << ',' << r.n << ',' << (r.g < 0 ? std::string() : std::to_string(r.g)) << ','
                << r.model << ',' << cell(r.expected) << ',' << cell(r.measured) << ',' << to_string(r.status)
                << '\n';
    }
    return;
  }
  std::printf("%-22s %3s %3s %-5s %12s %12s  %s\n", "check", "n", "g", "model", "expected", "measured", "status");
  for (const auto& r : rows) {
    std::printf("%-22s %3d %3s %-5s %12s %12s  %s\n", r.check.c_str(), r.n,
                r.g < 0 ? "-" : std::to_string(r.g).c_str(), r.model.c_str(), cell(r.expected).c_str(),
                cell(r.measured).c_str(), std::string(to_string(r.status)).c_str());
  }
  for (const auto& r : rows) {
    if (!r.note.empty()) std::printf("%s\n", r.note.c_str());
  }
  std::printf("%s\n", total == Status::pass ? "all checks passed"
                      : total == Status::fail ? "some checks failed"
                                              : "budget exceeded before a verdict");
}

int exit_for(Status s) { return s == Status::pass ? kPass : s == Status::fail ? kFail : kBudget; }

// ---------------------------------------------------------------- verify kinds

std::vector<Row> verify_props(int n) {
  const auto h = build_hcn(n);
  std::vector<Row> rows;
  auto add = [&](std::string check, json expected, json measured) {
    const bool ok = expected == measured;
    rows.push_back({std::move(check), n, -1, "-", std::move(expected), std::move(measured), status_of(ok), nullptr, {}});
  };
  add("vertices", std::uint64_t{1} << (2 * n), h.vertex_count());
  add("edges", (std::uint64_t{1} << (2 * n)) * (n + 1) / 2, h.edge_count());
  add("regular_degree", n + 1, h.min_degree() == h.max_degree() ? json(h.min_degree()) : json("irregular"));
  add("triangle_free", true, is_triangle_free(h));

  std::vector<int> crossing(h.vertex_count(), 0);
  for (const auto& e : crossing_edges(n)) {
    ++crossing[e.u];
    ++crossing[e.v];
  }
  add("crossing_matching", true, std::all_of(crossing.begin(), crossing.end(), [](int d) { return d == 1; }));

  const std::uint32_t cubes = 1u << n;
  bool pair_counts = true;
  for (std::uint32_t x = 0; x < cubes; ++x) {
    for (std::uint32_t y = x + 1; y < cubes; ++y) {
      pair_counts = pair_counts && crossing_edges_between(n, x, y).size() == ((x ^ y) == cubes - 1 ? 2u : 1u);
    }
  }
  add("cube_pair_crossings", true, pair_counts);

  // Common neighbors through two-step walks: at most 2 inside a cube, at most 1 across cubes.
  std::size_t worst_inside = 0, worst_across = 0;
  std::vector<std::size_t> count(h.vertex_count(), 0);
  for (VertexIndex u = 0; u < h.vertex_count(); ++u) {
    std::vector<VertexIndex> touched;
    for (auto w : h.neighbors(u)) {
      for (auto v : h.neighbors(w)) {
        if (v <= u) continue;
        if (count[v]++ == 0) touched.push_back(v);
      }
    }
    for (auto v : touched) {
      auto& worst = cube_of(n, u) == cube_of(n, v) ? worst_inside : worst_across;
      worst = std::max(worst, count[v]);
      count[v] = 0;
    }
  }
  add("common_nbrs_in_cube", "<=2", worst_inside <= 2 ? json("<=2") : json(worst_inside));
  add("common_nbrs_across", "<=1", worst_across <= 1 ? json("<=1") : json(worst_across));
  return rows;
}

std::vector<Row> verify_kappa(int n, const std::vector<int>& gs, DiagMode mode, std::uint64_t budget_cap) {
  std::vector<Row> rows;
  for (int g : gs) {
    CutReport r;
    if (mode == DiagMode::formula) {
      r = kappa_formula_report(n, g);
    } else if (mode == DiagMode::certificate) {
      if (g < 1) throw UsageError("kappa certificate needs g >= 1");
      r = kappa_certificate(hcn_graph(n), g);
    } else {
      Budget budget(budget_cap);
      r = kappa_exact(hcn_graph(n), g, budget);
    }
    const auto expected = kappa_formula(n, g);
    Row row{"kappa", n, g, "-", expected, r.value, status_of(r.value == expected), to_json(r), {}};
    if (r.budget_state == BudgetState::exceeded) {
      row.status = Status::budget;
      row.measured = (g == 0 ? "<=" : ">=") + std::to_string(r.value);
    }
    if (r.witness) row.note = "g=" + std::to_string(g) + " witness " + r.witness->to_string();
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Row> verify_tg(int n, const std::vector<int>& gs, DiagModel model, DiagMode mode,
                           std::uint64_t budget_cap, unsigned threads, std::uint64_t probes, std::uint64_t seed) {
  std::vector<Row> rows;
  const auto h = hcn_graph(n);
  for (int g : gs) {
    DiagReport r;
    if (mode == DiagMode::formula) {
      r = tg_formula_report(n, g, model);
    } else if (mode == DiagMode::certificate) {
      r = tg_certificate(h, g, model);
    } else {
      Budget budget(budget_cap);
      r = tg_exact(h, g, model, budget, mode, threads);
    }
    const auto expected = static_cast<std::int64_t>(tg_formula(n, g));
    auto report = to_json(r);
    Row row{"tg", n, g, std::string(to_string(model)), expected, r.t, status_of(r.t == expected), {}, {}};
    if (r.budget_state == BudgetState::exceeded) {
      // Still a failure if the bracket already excludes the formula value.
      const bool possible = r.t_lower <= expected && expected <= r.t_upper;
      row.status = possible ? Status::budget : Status::fail;
      row.measured = "[" + std::to_string(r.t_lower) + "," + std::to_string(r.t_upper) + "]";
    }
    if (mode == DiagMode::certificate) {
      // A certificate only bounds t from above.
      row.measured = "<=" + std::to_string(r.t_upper);
      row.status = status_of(r.t_upper == expected);
    }
    if (r.witness) {
      row.note = "g=" + std::to_string(g) + " " + std::string(to_string(model)) + " witness " +
                 r.witness->f1().to_string() + " / " + r.witness->f2().to_string();
    }
    // elapsed_ms is the one field that differs between identical runs.
    report.erase("elapsed_ms");
    row.report = std::move(report);
    rows.push_back(std::move(row));

    if (probes > 0) {
      if (h.vertex_count() > 64) throw UsageError("--probes needs n <= 3");
      const auto p = probe_random_pairs(h, g, static_cast<std::uint64_t>(expected), model, probes, seed);
      Row probe_row{"tg_probes", n, g, std::string(to_string(model)), 0, p.violations,
                    status_of(p.violations == 0), json::object(), {}};
      probe_row.report = {{"probes", p.probes}, {"violations", p.violations}, {"above_bound_hits", p.above_bound_hits}};
      if (p.first_violation) {
        probe_row.note = "g=" + std::to_string(g) + " probe violation " + p.first_violation->f1().to_string() +
                         " / " + p.first_violation->f2().to_string();
      }
      rows.push_back(std::move(probe_row));
    }
  }
  return rows;
}

std::vector<Row> verify_extremal(int n, const std::vector<int>& gs) {
  std::vector<Row> rows;
  const auto h = hcn_graph(n);
  for (int g : gs) {
    const auto p = extremal_pair(h, g);
    const auto small = std::uint64_t{1} << g;
    const auto f1_size = small * (n + 1 - g), f2_size = small * (n + 2 - g);
    rows.push_back({"extremal_f1_size", n, g, "-", f1_size, p.f1().size(), status_of(p.f1().size() == f1_size), nullptr, {}});
    rows.push_back({"extremal_f2_size", n, g, "-", f2_size, p.f2().size(), status_of(p.f2().size() == f2_size), nullptr, {}});
    const bool good = is_g_good_neighbor_set(h, p.f1(), g) && is_g_good_neighbor_set(h, p.f2(), g) &&
                      p.f2().size() < h.vertex_count();
    rows.push_back({"extremal_g_good", n, g, "-", true, good, status_of(good), nullptr, {}});
    for (auto model : {DiagModel::pmc, DiagModel::mm_star}) {
      const bool same = !distinguishable(h, p, model);
      rows.push_back({"extremal_indisting", n, g, std::string(to_string(model)), true, same, status_of(same),
                      nullptr, {}});
    }
    rows.back().report = {{"f1", to_json(p.f1())}, {"f2", to_json(p.f2())}};
  }
  return rows;
}

// ---------------------------------------------------------------- helpers

std::uint64_t default_budget() {
  const char* env = std::getenv("HCNDIAG_BUDGET");
  if (env == nullptr || *env == '\0') return kDefaultBudget;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(env, &used);
    if (used != std::string(env).size() || v == 0) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("HCNDIAG_BUDGET is not a positive integer: ") + env);
  }
}

std::vector<int> g_values(int n, std::optional<int> g, int first) {
  if (g) {
    if (*g < 0 || *g >= n + 1) throw UsageError("--g must lie in [0, n]");
    return {*g};
  }
  std::vector<int> out;
  for (int v = first; v <= n - 1; ++v) out.push_back(v);
  return out;
}

FaultSet parse_faults(const std::string& text, std::size_t vertices) {
  std::vector<VertexIndex> ids;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw UsageError("bad vertex id in --faults: " + item);
    if (v >= vertices) throw UsageError("vertex id out of range in --faults: " + item);
    ids.push_back(static_cast<VertexIndex>(v));
  }
  return FaultSet(std::move(ids));
}

LiarPolicy make_policy(const std::string& name, std::uint64_t seed) {
  if (name == "random") return LiarPolicy::seeded_random(seed);
  if (name == "zero") return LiarPolicy::all_zero();
  if (name == "one") return LiarPolicy::all_one();
  if (name == "adversarial") return LiarPolicy::adversarial(seed);
  throw UsageError("unknown policy: " + name);
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("cannot write " + path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Diagnosability tools for hierarchical cubic networks"};
  app.require_subcommand(1);

  // build
  auto* build = app.add_subcommand("build", "Write the edge list of HCN_n");
  int build_n = 0;
  bool labels = false;
  std::string build_out;
  build->add_option("--n", build_n, "Dimension")->required()->check(CLI::Range(2, kMaxMaterializedHcn));
  build->add_flag("--labels", labels, "Append (x,y) labels to every edge");
  build->add_option("--out", build_out, "Output file (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "Check structural and diagnosability claims");
  std::string check;
  int verify_n = 0;
  std::optional<int> verify_g;
  std::string model_name = "pmc", mode_name, output = "text";
  std::optional<std::uint64_t> budget_flag;
  unsigned threads = 1;
  std::uint64_t probes = 0, seed = 0;
  verify->add_option("check", check, "props | kappa | tg | extremal")
      ->required()
      ->check(CLI::IsMember({"props", "kappa", "tg", "extremal"}));
  verify->add_option("--n", verify_n, "Dimension")->required()->check(CLI::Range(2, kMaxDimension));
  verify->add_option("--g", verify_g, "Good-neighbor level (default: every level)");
  verify->add_option("--model", model_name, "pmc | mm");
  verify->add_option("--mode", mode_name, "formula | certificate | exact | oracle");
  verify->add_option("--budget", budget_flag, "Candidate cap for exact searches")->check(CLI::PositiveNumber);
  verify->add_option("--threads", threads, "Worker threads for pair enumeration")->check(CLI::Range(1u, 256u));
  verify->add_option("--probes", probes, "Random pair probes below the bound (tg, n <= 3)");
  verify->add_option("--seed", seed, "Seed for probes");
  verify->add_option("--output", output, "text | json | csv")->check(CLI::IsMember({"text", "json", "csv"}));

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Generate a syndrome file for a fault set");
  int sim_n = 0, sim_g = 1;
  std::string faults_text, policy_name = "random", sim_out;
  std::optional<std::size_t> random_faults;
  bool extremal = false;
  std::uint64_t sim_seed = 0;
  simulate->add_option("--n", sim_n, "Dimension")->required()->check(CLI::Range(2, kMaxMaterializedHcn));
  simulate->add_option("--g", sim_g, "Good-neighbor level of the fault set")->check(CLI::NonNegativeNumber);
  simulate->add_option("--model", model_name, "pmc | mm");
  auto* faults_opt = simulate->add_option("--faults", faults_text, "Comma-separated vertex ids");
  auto* random_opt = simulate->add_option("--random-faults", random_faults, "Sample k faults until g-good");
  auto* extremal_opt = simulate->add_flag("--extremal", extremal, "Faulty N(X) answering as if N[X] were faulty");
  faults_opt->excludes(random_opt)->excludes(extremal_opt);
  random_opt->excludes(extremal_opt);
  simulate->add_option("--seed", sim_seed, "Seed for sampling and the random policy");
  simulate->add_option("--policy", policy_name, "random | zero | one | adversarial")
      ->check(CLI::IsMember({"random", "zero", "one", "adversarial"}));
  simulate->add_option("--out", sim_out, "Output file (default stdout)");

  // diagnose
  auto* diag = app.add_subcommand("diagnose", "List fault sets consistent with a syndrome file");
  std::string diag_in;
  int diag_g = 1, diag_t = 0;
  diag->add_option("--in", diag_in, "Syndrome file")->required();
  diag->add_option("--g", diag_g, "Good-neighbor level")->check(CLI::NonNegativeNumber);
  diag->add_option("--t", diag_t, "Largest fault set size")->required()->check(CLI::NonNegativeNumber);
  diag->add_option("--budget", budget_flag, "Candidate cap")->check(CLI::PositiveNumber);
  diag->add_option("--output", output, "text | json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*build) {
      const auto g = build_hcn(build_n);
      std::ostringstream text;
      export_edge_list(g, text, labels);
      write_output(build_out, text.str());
      (build_out.empty() ? std::cerr : std::cout)
          << "HCN_" << build_n << ": " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
      return kPass;
    }

    const auto model = parse_model(model_name);
    if (!model) throw UsageError("unknown model: " + model_name);
    const std::uint64_t budget_cap = budget_flag ? *budget_flag : default_budget();

    if (*verify) {
      std::vector<Row> rows;
      if (check == "props") {
        if (verify_n > kMaxMaterializedHcn) throw UsageError("props needs n <= 7");
        rows = verify_props(verify_n);
      } else if (check == "extremal") {
        rows = verify_extremal(verify_n, g_values(verify_n, verify_g, 1));
      } else {
        const auto mode = parse_mode(mode_name.empty() ? "formula" : mode_name);
        if (!mode) throw UsageError("unknown mode: " + mode_name);
        if (check == "kappa") {
          if (*mode == DiagMode::oracle) throw UsageError("kappa has no oracle mode");
          if (*mode == DiagMode::exact && verify_n > kMaxMaterializedHcn) throw UsageError("exact kappa needs n <= 7");
          rows = verify_kappa(verify_n, g_values(verify_n, verify_g, *mode == DiagMode::certificate ? 1 : 0), *mode,
                              budget_cap);
        } else {
          rows = verify_tg(verify_n, g_values(verify_n, verify_g, 1), *model, *mode, budget_cap, threads, probes,
                           seed);
        }
      }
      print_rows(check, rows, output);
      return exit_for(overall(rows));
    }

    if (*simulate) {
      const auto h = build_hcn(sim_n);
      FaultSet faults;
      LiarPolicy policy = make_policy(policy_name, sim_seed);
      if (extremal) {
        if (sim_g < 1 || sim_g > sim_n - 1) throw UsageError("--extremal needs 1 <= g <= n-1");
        const auto p = extremal_pair(h, sim_g);
        faults = p.f1();
        policy = LiarPolicy::mimic(p.f2());
      } else if (random_faults) {
        if (*random_faults > h.vertex_count()) throw UsageError("--random-faults exceeds the vertex count");
        std::mt19937_64 rng(sim_seed);
        std::uniform_int_distribution<VertexIndex> pick(0, static_cast<VertexIndex>(h.vertex_count() - 1));
        bool found = false;
        for (int attempt = 0; attempt < 10'000 && !found; ++attempt) {
          FaultSet f;
          while (f.size() < *random_faults) f = f.with(pick(rng));
          if (f.size() < h.vertex_count() && is_g_good_neighbor_set(h, f, sim_g)) {
            faults = std::move(f);
            found = true;
          }
        }
        if (!found) {
          std::cerr << "error: no " << sim_g << "-good-neighbor fault set of size " << *random_faults
                    << " after 10000 attempts\n";
          return kFail;
        }
      } else {
        faults = parse_faults(faults_text, h.vertex_count());
      }
      const auto plan = enumerate_tests(h, *model);
      const auto s = generate_syndrome(h, faults, *model, policy);
      std::ostringstream text;
      write_syndrome(text, plan, s, sim_n);
      write_output(sim_out, text.str());
      (sim_out.empty() ? std::cerr : std::cout) << "faults " << faults.to_string() << ", " << plan.size()
                                                << " test results\n";
      return kPass;
    }

    if (*diag) {
      std::ifstream in(diag_in, std::ios::binary);
      if (!in) throw std::runtime_error("cannot read " + diag_in);
      const auto file = read_syndrome(in);
      const auto h = build_hcn(file.n);
      if (h.vertex_count() > 64) throw UsageError("diagnose needs n <= 3");
      Budget budget(budget_cap);
      const auto d = diagnose(h, file.syndrome, diag_g, diag_t, budget);
      if (output == "json") {
        json out = {{"command", "diagnose"},
                    {"model", to_string(file.model)},
                    {"n", file.n},
                    {"g", diag_g},
                    {"t", diag_t},
                    {"candidates", json::array()},
                    {"budget_state", to_string(d.budget_state)}};
        for (const auto& c : d.candidates) out["candidates"].push_back(to_json(c));
        std::cout << out.dump(2) << '\n';
      } else {
        std::cout << d.candidates.size() << " candidate" << (d.candidates.size() == 1 ? "" : "s") << '\n';
        for (const auto& c : d.candidates) std::cout << c.to_string() << '\n';
        if (d.budget_state == BudgetState::exceeded) std::cout << "budget exceeded; list is incomplete\n";
      }
      if (d.budget_state == BudgetState::exceeded) return kBudget;
      if (d.candidates.empty()) return kFail;
      return d.candidates.size() == 1 ? kPass : kAmbiguous;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
  return kUsage;
}
