#pragma once

#include "json.hpp"

#include "hcndiag/diagnosability.hpp"
#include "hcndiag/structure.hpp"

namespace hcndiag {

/// {kind, g, value, witness: [ids] | null, budget_state}
[[nodiscard]] nlohmann::json to_json(const CutReport& r);

/// {model, mode, n, g, t, t_lower, t_upper, witness_f1, witness_f2,
///  budget_state, elapsed_ms, in_claimed_range}
[[nodiscard]] nlohmann::json to_json(const DiagReport& r);

[[nodiscard]] nlohmann::json to_json(const VertexSet& s);

}  // namespace hcndiag
