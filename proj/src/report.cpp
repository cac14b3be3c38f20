#include "hcndiag/report.hpp"

namespace hcndiag {

nlohmann::json to_json(const VertexSet& s) {
  auto arr = nlohmann::json::array();
  for (auto v : s) arr.push_back(v);
  return arr;
}

nlohmann::json to_json(const CutReport& r) {
  return {
      {"kind", to_string(r.kind)},
      {"g", r.g},
      {"value", r.value},
      {"witness", r.witness ? to_json(*r.witness) : nlohmann::json(nullptr)},
      {"budget_state", to_string(r.budget_state)},
  };
}

nlohmann::json to_json(const DiagReport& r) {
  return {
      {"model", to_string(r.model)},
      {"mode", to_string(r.mode)},
      {"n", r.n},
      {"g", r.g},
      {"t", r.t},
      {"t_lower", r.t_lower},
      {"t_upper", r.t_upper},
      {"witness_f1", r.witness ? to_json(r.witness->f1()) : nlohmann::json(nullptr)},
      {"witness_f2", r.witness ? to_json(r.witness->f2()) : nlohmann::json(nullptr)},
      {"budget_state", to_string(r.budget_state)},
      {"elapsed_ms", r.elapsed_ms},
      {"in_claimed_range", r.in_claimed_range},
  };
}

}  // namespace hcndiag
