// Copyright 2026 The linecons Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "core.hpp"
#include "cycles.hpp"
#include "line_graph.hpp"
#include "structure.hpp"
#include "witness.hpp"

namespace linecons {

/// Every decision procedure run on one graph, checked against the
/// definitional oracle.
struct CrossCheck {
  bool oracle = true;
  bool condition_i = true;
  bool condition_ii = true;
  bool condition_iii = true;
  bool structure = true;
  std::optional<bool> theorem1;    // simple graphs only
  std::optional<bool> corollary3;  // when applicable
  /// Methods whose negative verdict did not yield a valid negative witness.
  std::vector<std::string> bad_witnesses;

  bool verdicts_agree() const {
    return condition_i == oracle && condition_ii == oracle && condition_iii == oracle &&
           structure == oracle && (!theorem1 || *theorem1 == oracle) &&
           (!corollary3 || *corollary3 == oracle);
  }
  bool witnesses_valid() const { return bad_witnesses.empty(); }
  bool ok() const { return verdicts_agree() && witnesses_valid(); }

  friend bool operator==(const CrossCheck&, const CrossCheck&) = default;
};

inline CrossCheck cross_check(const SignedGraph& g, EnumerationLimits limits = {}) {
  CrossCheck r;
  const MarkedGraph line = line_graph(g);
  r.oracle = is_consistent_oracle(line, limits).consistent;

  std::vector<std::pair<std::string, Verdict>> verdicts{
      {"i", check_condition_i(g)},
      {"ii", check_condition_ii(g)},
      {"iii", check_condition_iii(g)},
      {"structure", check_structure(g)},
  };
  if (g.is_simple()) verdicts.emplace_back("thm1", check_theorem1_simple(g, limits));

  r.condition_i = verdicts[0].second.line_consistent;
  r.condition_ii = verdicts[1].second.line_consistent;
  r.condition_iii = verdicts[2].second.line_consistent;
  r.structure = verdicts[3].second.line_consistent;
  if (verdicts.size() > 4) r.theorem1 = verdicts[4].second.line_consistent;
  r.corollary3 = check_corollary_3(g);

  for (const auto& [method, verdict] : verdicts) {
    if (verdict.line_consistent) continue;
    try {
      Circle w = find_witness(g, verdict, limits);
      if (!is_circle_of(line, w) || !is_negative(circle_vertex_sign(line, w))) {
        r.bad_witnesses.push_back(method);
      }
    } catch (const std::logic_error&) {
      r.bad_witnesses.push_back(method);
    }
  }
  return r;
}

}  // namespace linecons
