#include "hcndiag/syndrome.hpp"

#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "hcndiag/detail/small_graph.hpp"
#include "hcndiag/structure.hpp"
#include "hcndiag/topology.hpp"

namespace hcndiag {

TestPlan enumerate_tests(const Graph& g, DiagModel model) {
  TestPlan plan;
  plan.model = model;
  for (VertexIndex u = 0; u < g.vertex_count(); ++u) {
    const auto nbrs = g.neighbors(u);
    if (model == DiagModel::pmc) {
      for (auto v : nbrs) plan.pmc.push_back({u, v});
    } else {
      for (std::size_t i = 0; i < nbrs.size(); ++i) {
        for (std::size_t j = i + 1; j < nbrs.size(); ++j) plan.mm.push_back({u, nbrs[i], nbrs[j]});
      }
    }
  }
  return plan;
}

std::uint8_t honest_result(const TestPlan& plan, std::size_t i, const FaultSet& faults) {
  if (plan.model == DiagModel::pmc) return faults.contains(plan.pmc[i].testee) ? 1 : 0;
  const auto& c = plan.mm[i];
  return faults.contains(c.left) || faults.contains(c.right) ? 1 : 0;
}

std::size_t faulty_result_count(const TestPlan& plan, const FaultSet& faults) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < plan.size(); ++i) count += faults.contains(plan.unit(i)) ? 1 : 0;
  return count;
}

Syndrome generate_syndrome(const Graph& g, const FaultSet& faults, DiagModel model, const LiarPolicy& policy) {
  if (!faults.empty() && !g.contains(faults.max_member())) {
    throw std::out_of_range("generate_syndrome: fault outside graph");
  }
  const auto plan = enumerate_tests(g, model);
  if (policy.mode() == LiarPolicy::Mode::adversarial_enumerate &&
      faulty_result_count(plan, faults) > kMaxAdversarialBits) {
    throw std::invalid_argument("generate_syndrome: adversarial policy limited to 20 faulty results");
  }
  Syndrome s{model, std::vector<std::uint8_t>(plan.size(), 0)};
  std::mt19937_64 rng(policy.value());
  std::size_t faulty_index = 0;
  for (std::size_t i = 0; i < plan.size(); ++i) {
    if (!faults.contains(plan.unit(i))) {
      s.results[i] = honest_result(plan, i, faults);
      continue;
    }
    switch (policy.mode()) {
      case LiarPolicy::Mode::seeded_random: s.results[i] = static_cast<std::uint8_t>(rng() & 1U); break;
      case LiarPolicy::Mode::all_zero: s.results[i] = 0; break;
      case LiarPolicy::Mode::all_one: s.results[i] = 1; break;
      case LiarPolicy::Mode::adversarial_enumerate:
        s.results[i] = static_cast<std::uint8_t>((policy.value() >> faulty_index) & 1U);
        break;
      case LiarPolicy::Mode::mimic: s.results[i] = honest_result(plan, i, policy.pretend()); break;
    }
    ++faulty_index;
  }
  return s;
}

namespace {

bool consistent_with_plan(const TestPlan& plan, const FaultSet& faults, const Syndrome& s) {
  for (std::size_t i = 0; i < plan.size(); ++i) {
    if (!faults.contains(plan.unit(i)) && s.results[i] != honest_result(plan, i, faults)) return false;
  }
  return true;
}

}  // namespace

bool is_consistent(const Graph& g, const FaultSet& faults, const Syndrome& s) {
  const auto plan = enumerate_tests(g, s.model);
  if (plan.size() != s.results.size()) throw std::invalid_argument("is_consistent: syndrome does not match test plan");
  return consistent_with_plan(plan, faults, s);
}

std::optional<Syndrome> shared_syndrome(const Graph& g, const FaultSet& f1, const FaultSet& f2, DiagModel model) {
  const auto plan = enumerate_tests(g, model);
  Syndrome s{model, std::vector<std::uint8_t>(plan.size(), 0)};
  for (std::size_t i = 0; i < plan.size(); ++i) {
    const bool forced1 = !f1.contains(plan.unit(i));
    const bool forced2 = !f2.contains(plan.unit(i));
    const auto r1 = honest_result(plan, i, f1);
    const auto r2 = honest_result(plan, i, f2);
    if (forced1 && forced2 && r1 != r2) return std::nullopt;
    s.results[i] = forced1 ? r1 : (forced2 ? r2 : 0);
  }
  return s;
}

Diagnosis diagnose(const Graph& g, const Syndrome& s, int min_good, int t, Budget& budget) {
  if (t < 0 || min_good < 0) throw std::invalid_argument("diagnose: t and g must be >= 0");
  const auto plan = enumerate_tests(g, s.model);
  if (plan.size() != s.results.size()) throw std::invalid_argument("diagnose: syndrome does not match test plan");
  const detail::SmallGraph sg(g);
  Diagnosis out;
  const int bound = std::min(t, sg.vertex_count - 1);
  for (int k = 0; k <= bound; ++k) {
    const bool finished = detail::for_each_combination(sg.vertex_count, k, [&](std::uint64_t f) {
      if (!budget.charge()) return false;
      if (!sg.faulty_set(f, min_good)) return true;
      auto candidate = VertexSet::from_mask(f);
      if (consistent_with_plan(plan, candidate, s)) out.candidates.push_back(std::move(candidate));
      return true;
    });
    if (!finished) {
      out.budget_state = BudgetState::exceeded;
      break;
    }
  }
  return out;
}

void write_syndrome(std::ostream& out, const TestPlan& plan, const Syndrome& s, int n) {
  if (plan.size() != s.results.size() || plan.model != s.model) {
    throw std::invalid_argument("write_syndrome: syndrome does not match test plan");
  }
  out << "# model=" << to_string(s.model) << " n=" << n << '\n';
  for (std::size_t i = 0; i < plan.size(); ++i) {
    if (plan.model == DiagModel::pmc) {
      out << plan.pmc[i].tester << ' ' << plan.pmc[i].testee;
    } else {
      out << plan.mm[i].comparator << ' ' << plan.mm[i].left << ' ' << plan.mm[i].right;
    }
    out << ' ' << static_cast<int>(s.results[i]) << '\n';
  }
  if (!out) throw std::runtime_error("write_syndrome: write failed");
}

SyndromeFile read_syndrome(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("syndrome: missing header");
  std::istringstream header(line);
  std::string hash, model_field, n_field;
  header >> hash >> model_field >> n_field;
  if (hash != "#" || model_field.rfind("model=", 0) != 0 || n_field.rfind("n=", 0) != 0) {
    throw std::runtime_error("syndrome: malformed header");
  }
  const auto model = parse_model(model_field.substr(6));
  if (!model) throw std::runtime_error("syndrome: unknown model " + model_field.substr(6));
  int n = 0;
  try {
    n = std::stoi(n_field.substr(2));
  } catch (const std::exception&) {
    throw std::runtime_error("syndrome: bad n");
  }
  if (n < 2 || n > kMaxMaterializedHcn) throw std::runtime_error("syndrome: n out of range");

  const auto plan = enumerate_tests(build_hcn(n), *model);
  SyndromeFile file{*model, n, Syndrome{*model, {}}};
  file.syndrome.results.reserve(plan.size());
  std::size_t i = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    long long a = -1, b = -1, c = -1, r = -1;
    bool ok = false;
    if (i < plan.size()) {
      if (*model == DiagModel::pmc) {
        ok = static_cast<bool>(row >> a >> b >> r) && a == plan.pmc[i].tester && b == plan.pmc[i].testee;
      } else {
        ok = static_cast<bool>(row >> a >> b >> c >> r) && a == plan.mm[i].comparator && b == plan.mm[i].left &&
             c == plan.mm[i].right;
      }
    }
    std::string trailing;
    if (!ok || (r != 0 && r != 1) || (row >> trailing)) {
      throw std::runtime_error("syndrome: line " + std::to_string(i + 2) + " does not match the test plan");
    }
    file.syndrome.results.push_back(static_cast<std::uint8_t>(r));
    ++i;
  }
  if (i != plan.size()) throw std::runtime_error("syndrome: expected " + std::to_string(plan.size()) + " results");
  return file;
}

}  // namespace hcndiag
