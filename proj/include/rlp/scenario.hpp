#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "rlp/attack.hpp"
#include "rlp/damage.hpp"
#include "rlp/defense.hpp"
#include "rlp/graph.hpp"
#include "rlp/ilp.hpp"
#include "rlp/loss.hpp"
#include "rlp/metrics.hpp"
#include "rlp/rng.hpp"
#include "rlp/targets.hpp"

namespace rlp {

// ---- generators ----------------------------------------------------------

// Preferential attachment. Starts from a clique on m_attach + 1 nodes; each
// later node links to m_attach distinct earlier nodes chosen with probability
// proportional to degree. Requires 1 <= m_attach < n.
Graph gen_ba(std::size_t n, std::size_t m_attach, Rng& rng);

// Configuration model with i.i.d. degrees floor(X), X Pareto with density
// proportional to x^-gamma on [1, inf), redrawn while above n - 1. The last
// degree is redrawn until the degree sum is even; stubs are matched at random
// and self-loops and repeated edges are dropped. Requires gamma > 1, n >= 2.
Graph gen_powerlaw_config(std::size_t n, double gamma, Rng& rng);

// Induced subgraph on the first target_n distinct nodes met by a random walk
// that jumps back to its start with probability restart_prob per step. The
// start is uniform over the largest component. When 100 * target_n steps pass
// without a new node the walk moves to a fresh random start (at most 10
// times) and then throws std::runtime_error. Node i of the result is the i-th
// smallest visited id.
Graph rw_sample(const Graph& g, std::size_t target_n, double restart_prob,
                Rng& rng);

// ---- scenarios -----------------------------------------------------------

enum class ScenarioClass { kTca, kTsa, kRca, kRsa };

std::string_view scenario_name(ScenarioClass c);  // TCA, TSA, RCA, RSA
ScenarioClass parse_scenario(std::string_view name);
// Attack target drawn among target-node pairs (TCA, TSA).
bool is_targeted(ScenarioClass c);
// Target nodes drawn among high-degree nodes (TCA, RCA).
bool is_clustering(ScenarioClass c);

enum class VdMode { kClustering, kSparse };

// Chooses `size` target nodes and relabels `g` so they become nodes
// 0..size-1 (in ascending original id), followed by the other nodes in
// ascending original id. Clustering draws uniformly from the
// max(size, min(ceil(n/10), ceil(hub_pool_factor * size))) highest-degree
// nodes (degree ties by smaller id); sparse draws from all nodes. Throws
// std::invalid_argument when size > n.
LabeledGraph assign_vd(const Graph& g, VdMode mode, std::size_t size,
                       Rng& rng, double hub_pool_factor = 1.5);

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SourceConfig {
  enum class Kind { kBa, kPowerLaw, kEdgeList };
  Kind kind = Kind::kBa;
  std::size_t n = 200;
  std::size_t m_attach = 5;
  double gamma = 2.0;
  std::filesystem::path path;
  std::size_t sample_size = 500;
  double restart_prob = 0.15;
};

struct ScenarioConfig {
  SourceConfig source;
  ScenarioClass scenario_class = ScenarioClass::kTca;
  std::size_t vd_size = 10;
  std::uint64_t seed = 1;
  std::size_t num_planning_samples = 100;  // K
  std::size_t num_eval_attacks = 100;
  MetricKind metric = MetricKind::kCommonNeighbors;
  LossParams loss;
  bool auto_theta = true;  // theta is replaced by calibrate_theta()
  std::vector<std::size_t> budgets;
  std::vector<double> budget_fractions;  // of budget_universe()
  std::vector<AttackKind> attacks = {AttackKind::kLinkDel};
  std::vector<DefenseKind> defenses = {DefenseKind::kNone, DefenseKind::kIdOpt,
                                       DefenseKind::kIdRank, DefenseKind::kPpn};
  double randdel_p = 0.5;
  DamageSign damage_sign = DamageSign::kAfterMinusBefore;
  SolverLimits solver;
  double hub_pool_factor = 1.5;

  // Node count of every sample graph.
  std::size_t sample_nodes() const;
  // Node pairs with exactly one endpoint in V_D: vd_size * (n - vd_size).
  std::size_t budget_universe() const;
  // Explicit budgets followed by the fractions rounded against the universe.
  std::vector<std::size_t> resolved_budgets() const;

  // Throws ConfigError naming the offending key.
  void validate() const;
  static ScenarioConfig from_json(const nlohmann::json& j);
  static ScenarioConfig from_file(const std::filesystem::path& path);
  nlohmann::json to_json() const;
};

// Draws sample graphs according to a source configuration. An imported edge
// list is read once and sampled by rw_sample().
class GraphSource {
 public:
  explicit GraphSource(const SourceConfig& cfg);
  Graph draw(Rng& rng) const;

 private:
  SourceConfig cfg_;
  std::shared_ptr<const Graph> base_;
};

// One draw from the attacker-type prior: a fresh labeled sample graph and the
// edge the attacker wants to hide.
struct AttackerTypeSample {
  LabeledGraph sample;
  NodePair h_a{0, 1};
  bool h_a_in_hd = false;  // h_a is one of the target pairs
};

// Targeted classes draw h_a uniformly among edges inside V_D, random classes
// among all edges. A sample without an eligible edge is redrawn up to 50
// times, then std::runtime_error.
AttackerTypeSample sample_attacker_type(const ScenarioConfig& cfg,
                                        const GraphSource& source, Rng& rng);

}  // namespace rlp
