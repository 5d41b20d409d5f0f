#include "rlp/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "rlp/edge_list.hpp"

namespace rlp {

Graph gen_ba(std::size_t n, std::size_t m_attach, Rng& rng) {
  if (m_attach < 1 || m_attach >= n) {
    throw std::invalid_argument("gen_ba: need 1 <= m_attach < n");
  }
  std::vector<NodePair> edges;
  // Node u appears once per incident edge, so a uniform pick from this list
  // is a degree-proportional pick.
  std::vector<NodeId> ends;
  for (NodeId u = 0; u <= m_attach; ++u) {
    for (NodeId v = u + 1; v <= m_attach; ++v) {
      edges.emplace_back(u, v);
      ends.push_back(u);
      ends.push_back(v);
    }
  }
  std::vector<NodeId> picked;
  for (auto u = static_cast<NodeId>(m_attach + 1); u < n; ++u) {
    picked.clear();
    while (picked.size() < m_attach) {
      const NodeId v = ends[rng.uniform_below(ends.size())];
      if (std::find(picked.begin(), picked.end(), v) == picked.end()) {
        picked.push_back(v);
      }
    }
    for (NodeId v : picked) {
      edges.emplace_back(v, u);
      ends.push_back(v);
      ends.push_back(u);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph gen_powerlaw_config(std::size_t n, double gamma, Rng& rng) {
  if (n < 2) throw std::invalid_argument("gen_powerlaw_config: need n >= 2");
  if (!(gamma > 1.0)) {
    throw std::invalid_argument("gen_powerlaw_config: need gamma > 1");
  }
  const double kmax = static_cast<double>(n - 1);
  auto draw_degree = [&] {
    for (;;) {
      const double x = std::pow(1.0 - rng.uniform01(), -1.0 / (gamma - 1.0));
      if (x < kmax + 1.0) return static_cast<std::size_t>(x);
    }
  };
  std::vector<std::size_t> degree(n);
  std::size_t sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    degree[i] = draw_degree();
    sum += degree[i];
  }
  while (sum % 2 != 0) {
    sum -= degree[n - 1];
    degree[n - 1] = draw_degree();
    sum += degree[n - 1];
  }
  std::vector<NodeId> stubs;
  stubs.reserve(sum);
  for (std::size_t i = 0; i < n; ++i) {
    stubs.insert(stubs.end(), degree[i], static_cast<NodeId>(i));
  }
  rng.shuffle(std::span<NodeId>(stubs));
  std::vector<NodePair> edges;
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
    if (stubs[i] != stubs[i + 1]) edges.emplace_back(stubs[i], stubs[i + 1]);
  }
  return Graph::from_edges(n, edges);  // merges repeated edges
}

Graph rw_sample(const Graph& g, std::size_t target_n, double restart_prob,
                Rng& rng) {
  if (target_n == 0 || target_n > g.num_nodes()) {
    throw std::invalid_argument("rw_sample: need 1 <= target_n <= n");
  }
  if (!(restart_prob > 0.0 && restart_prob < 1.0)) {
    throw std::invalid_argument("rw_sample: restart_prob must be in (0, 1)");
  }
  const std::vector<NodeId> lcc = largest_component(g);
  std::vector<bool> seen(g.num_nodes(), false);
  std::vector<NodeId> visited;
  auto visit = [&](NodeId u) {
    if (!seen[u]) {
      seen[u] = true;
      visited.push_back(u);
      return true;
    }
    return false;
  };

  NodeId start = lcc[rng.uniform_below(lcc.size())];
  visit(start);
  NodeId cur = start;
  int restarts = 0;
  std::size_t idle = 0;
  while (visited.size() < target_n) {
    if (rng.bernoulli(restart_prob)) {
      cur = start;
    } else {
      const auto nbrs = g.neighbors(cur);
      cur = nbrs.empty() ? start : nbrs[rng.uniform_below(nbrs.size())];
    }
    if (visit(cur)) {
      idle = 0;
      continue;
    }
    if (++idle >= 100 * target_n) {
      if (++restarts > 10) {
        throw std::runtime_error("rw_sample: walk stagnated at " +
                                 std::to_string(visited.size()) + " of " +
                                 std::to_string(target_n) + " nodes");
      }
      start = lcc[rng.uniform_below(lcc.size())];
      cur = start;
      visit(start);
      idle = 0;
    }
  }
  std::sort(visited.begin(), visited.end());
  return induced_subgraph(g, visited);
}

std::string_view scenario_name(ScenarioClass c) {
  switch (c) {
    case ScenarioClass::kTca: return "TCA";
    case ScenarioClass::kTsa: return "TSA";
    case ScenarioClass::kRca: return "RCA";
    case ScenarioClass::kRsa: return "RSA";
  }
  return "?";
}

ScenarioClass parse_scenario(std::string_view name) {
  std::string up(name);
  for (char& ch : up) ch = static_cast<char>(std::toupper(ch));
  if (up == "TCA") return ScenarioClass::kTca;
  if (up == "TSA") return ScenarioClass::kTsa;
  if (up == "RCA") return ScenarioClass::kRca;
  if (up == "RSA") return ScenarioClass::kRsa;
  throw std::invalid_argument("unknown scenario class '" + std::string(name) +
                              "' (expected TCA, TSA, RCA or RSA)");
}

bool is_targeted(ScenarioClass c) {
  return c == ScenarioClass::kTca || c == ScenarioClass::kTsa;
}

bool is_clustering(ScenarioClass c) {
  return c == ScenarioClass::kTca || c == ScenarioClass::kRca;
}

LabeledGraph assign_vd(const Graph& g, VdMode mode, std::size_t size,
                       Rng& rng, double hub_pool_factor) {
  const std::size_t n = g.num_nodes();
  if (size > n) throw std::invalid_argument("assign_vd: size exceeds n");
  std::vector<NodeId> pool(n);
  std::iota(pool.begin(), pool.end(), NodeId{0});
  if (mode == VdMode::kClustering) {
    std::stable_sort(pool.begin(), pool.end(), [&](NodeId a, NodeId b) {
      return g.degree(a) > g.degree(b);
    });
    const auto decile = static_cast<std::size_t>(
        std::ceil(static_cast<double>(n) / 10.0));
    const auto capped = static_cast<std::size_t>(
        std::ceil(hub_pool_factor * static_cast<double>(size)));
    pool.resize(std::max(size, std::min(decile, capped)));
  }
  std::vector<NodeId> chosen;
  for (std::size_t i : rng.sample_indices(pool.size(), size)) {
    chosen.push_back(pool[i]);
  }
  std::sort(chosen.begin(), chosen.end());

  std::vector<bool> in_vd(n, false);
  for (NodeId u : chosen) in_vd[u] = true;
  std::vector<NodeId> order = chosen;
  for (NodeId u = 0; u < n; ++u) {
    if (!in_vd[u]) order.push_back(u);
  }
  LabeledGraph out;
  out.graph = induced_subgraph(g, order);
  std::vector<NodeId> vd(size);
  std::iota(vd.begin(), vd.end(), NodeId{0});
  out.targets = TargetSet::from_graph(out.graph, std::move(vd));
  return out;
}

// ---- configuration -------------------------------------------------------

std::size_t ScenarioConfig::sample_nodes() const {
  return source.kind == SourceConfig::Kind::kEdgeList ? source.sample_size
                                                      : source.n;
}

std::size_t ScenarioConfig::budget_universe() const {
  const std::size_t n = sample_nodes();
  return n > vd_size ? vd_size * (n - vd_size) : 0;
}

std::vector<std::size_t> ScenarioConfig::resolved_budgets() const {
  std::vector<std::size_t> out = budgets;
  for (double f : budget_fractions) {
    out.push_back(static_cast<std::size_t>(
        std::llround(f * static_cast<double>(budget_universe()))));
  }
  return out;
}

void ScenarioConfig::validate() const {
  auto fail = [](const std::string& key, const std::string& what) {
    throw ConfigError("config: " + key + ": " + what);
  };
  if (vd_size < 2) fail("vd_size", "must be at least 2");
  if (vd_size > sample_nodes()) fail("vd_size", "exceeds the sample size");
  if (num_planning_samples < 1) fail("K", "must be at least 1");
  if (num_eval_attacks < 1) fail("num_eval_attacks", "must be at least 1");
  if (!(loss.beta > 0.0)) fail("loss.beta", "must be positive");
  if (!(randdel_p >= 0.0 && randdel_p <= 1.0)) {
    fail("randdel_p", "must be in [0, 1]");
  }
  for (double f : budget_fractions) {
    if (!(f >= 0.0 && f <= 1.0)) fail("budget_fractions", "must be in [0, 1]");
  }
  if (!(hub_pool_factor >= 1.0)) fail("hub_pool_factor", "must be >= 1");
  switch (source.kind) {
    case SourceConfig::Kind::kBa:
      if (source.m_attach < 1 || source.m_attach >= source.n) {
        fail("source.m", "need 1 <= m < n");
      }
      break;
    case SourceConfig::Kind::kPowerLaw:
      if (source.n < 2) fail("source.n", "must be at least 2");
      if (!(source.gamma > 1.0)) fail("source.gamma", "must exceed 1");
      break;
    case SourceConfig::Kind::kEdgeList:
      if (source.path.empty()) fail("source.path", "missing");
      if (source.sample_size < 1) fail("source.sample_size", "must be >= 1");
      if (!(source.restart_prob > 0.0 && source.restart_prob < 1.0)) {
        fail("source.restart_prob", "must be in (0, 1)");
      }
      break;
  }
}

namespace {

using nlohmann::json;

// Reads optional keys of one JSON object and rejects unknown ones, naming
// the full key path in every error.
class ObjectReader {
 public:
  ObjectReader(const json& j, std::string path)
      : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ConfigError("config: " + where() + ": expected an object");
  }

  template <typename T>
  void read(const char* key, T& out) {
    seen_.insert(key);
    if (!j_.contains(key)) return;
    try {
      out = j_.at(key).get<T>();
    } catch (const json::exception& e) {
      throw ConfigError("config: " + key_path(key) + ": " + e.what());
    }
  }

  template <typename Fn>
  void read_with(const char* key, Fn&& parse) {
    seen_.insert(key);
    if (!j_.contains(key)) return;
    try {
      parse(j_.at(key));
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      throw ConfigError("config: " + key_path(key) + ": " + e.what());
    }
  }

  const json& raw() const { return j_; }
  std::string key_path(const std::string& key) const {
    return path_.empty() ? key : path_ + "." + key;
  }

  void finish() const {
    for (const auto& [key, value] : j_.items()) {
      if (!seen_.count(key)) {
        throw ConfigError("config: " + key_path(key) + ": unknown key");
      }
    }
  }

 private:
  std::string where() const { return path_.empty() ? "<root>" : path_; }

  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

SourceConfig parse_source(const json& j) {
  SourceConfig s;
  ObjectReader r(j, "source");
  std::string kind = "ba";
  r.read("kind", kind);
  if (kind == "ba") {
    s.kind = SourceConfig::Kind::kBa;
  } else if (kind == "powerlaw") {
    s.kind = SourceConfig::Kind::kPowerLaw;
  } else if (kind == "edgelist") {
    s.kind = SourceConfig::Kind::kEdgeList;
  } else {
    throw ConfigError("config: source.kind: unknown kind '" + kind +
                      "' (expected ba, powerlaw or edgelist)");
  }
  r.read("n", s.n);
  r.read("m", s.m_attach);
  r.read("gamma", s.gamma);
  std::string path;
  r.read("path", path);
  s.path = path;
  r.read("sample_size", s.sample_size);
  r.read("restart_prob", s.restart_prob);
  r.finish();
  return s;
}

}  // namespace

ScenarioConfig ScenarioConfig::from_json(const json& j) {
  ScenarioConfig cfg;
  ObjectReader r(j, "");
  r.read_with("source", [&](const json& v) { cfg.source = parse_source(v); });
  r.read_with("scenario_class", [&](const json& v) {
    cfg.scenario_class = parse_scenario(v.get<std::string>());
  });
  r.read("vd_size", cfg.vd_size);
  r.read("seed", cfg.seed);
  r.read("K", cfg.num_planning_samples);
  r.read("num_eval_attacks", cfg.num_eval_attacks);
  r.read_with("metric", [&](const json& v) {
    cfg.metric = parse_metric(v.get<std::string>());
  });
  r.read_with("loss", [&](const json& v) {
    ObjectReader lr(v, "loss");
    lr.read("beta", cfg.loss.beta);
    lr.read_with("theta", [&](const json& t) {
      if (t.is_string()) {
        if (t.get<std::string>() != "auto") {
          throw ConfigError("config: loss.theta: expected a number or \"auto\"");
        }
        cfg.auto_theta = true;
      } else {
        cfg.loss.theta = t.get<double>();
        cfg.auto_theta = false;
      }
    });
    lr.finish();
  });
  r.read("budgets", cfg.budgets);
  r.read("budget_fractions", cfg.budget_fractions);
  r.read_with("attacks", [&](const json& v) {
    cfg.attacks.clear();
    for (const auto& a : v) cfg.attacks.push_back(parse_attack(a.get<std::string>()));
  });
  r.read_with("defenses", [&](const json& v) {
    cfg.defenses.clear();
    for (const auto& d : v) {
      cfg.defenses.push_back(parse_defense(d.get<std::string>()));
    }
  });
  r.read("randdel_p", cfg.randdel_p);
  r.read_with("damage_sign", [&](const json& v) {
    cfg.damage_sign = parse_damage_sign(v.get<std::string>());
  });
  r.read_with("solver", [&](const json& v) {
    ObjectReader sr(v, "solver");
    sr.read("max_nodes", cfg.solver.max_nodes);
    sr.read("time_limit", cfg.solver.time_limit);
    sr.finish();
  });
  r.read("hub_pool_factor", cfg.hub_pool_factor);
  r.finish();
  cfg.validate();
  return cfg;
}

ScenarioConfig ScenarioConfig::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("config: " + path.string() + ": " + e.what());
  }
  ScenarioConfig cfg = from_json(j);
  if (cfg.source.kind == SourceConfig::Kind::kEdgeList &&
      cfg.source.path.is_relative()) {
    cfg.source.path = path.parent_path() / cfg.source.path;
  }
  return cfg;
}

json ScenarioConfig::to_json() const {
  json src;
  switch (source.kind) {
    case SourceConfig::Kind::kBa:
      src = {{"kind", "ba"}, {"n", source.n}, {"m", source.m_attach}};
      break;
    case SourceConfig::Kind::kPowerLaw:
      src = {{"kind", "powerlaw"}, {"n", source.n}, {"gamma", source.gamma}};
      break;
    case SourceConfig::Kind::kEdgeList:
      src = {{"kind", "edgelist"},
             {"path", source.path.string()},
             {"sample_size", source.sample_size},
             {"restart_prob", source.restart_prob}};
      break;
  }
  json attacks_j = json::array();
  for (AttackKind a : attacks) attacks_j.push_back(std::string(attack_name(a)));
  json defenses_j = json::array();
  for (DefenseKind d : defenses) {
    defenses_j.push_back(std::string(defense_name(d)));
  }
  json loss_j = {{"beta", loss.beta}};
  if (auto_theta) {
    loss_j["theta"] = "auto";
  } else {
    loss_j["theta"] = loss.theta;
  }
  return {{"source", src},
          {"scenario_class", std::string(scenario_name(scenario_class))},
          {"vd_size", vd_size},
          {"seed", seed},
          {"K", num_planning_samples},
          {"num_eval_attacks", num_eval_attacks},
          {"metric", std::string(metric_name(metric))},
          {"loss", loss_j},
          {"budgets", budgets},
          {"budget_fractions", budget_fractions},
          {"attacks", attacks_j},
          {"defenses", defenses_j},
          {"randdel_p", randdel_p},
          {"damage_sign", std::string(damage_sign_name(damage_sign))},
          {"solver",
           {{"max_nodes", solver.max_nodes},
            {"time_limit", solver.time_limit}}},
          {"hub_pool_factor", hub_pool_factor}};
}

// ---- sampling ------------------------------------------------------------

GraphSource::GraphSource(const SourceConfig& cfg) : cfg_(cfg) {
  if (cfg_.kind == SourceConfig::Kind::kEdgeList) {
    base_ = std::make_shared<const Graph>(read_edge_list(cfg_.path).graph);
    if (cfg_.sample_size > base_->num_nodes()) {
      throw ConfigError("config: source.sample_size: exceeds the " +
                        std::to_string(base_->num_nodes()) +
                        " nodes of " + cfg_.path.string());
    }
  }
}

Graph GraphSource::draw(Rng& rng) const {
  switch (cfg_.kind) {
    case SourceConfig::Kind::kBa: return gen_ba(cfg_.n, cfg_.m_attach, rng);
    case SourceConfig::Kind::kPowerLaw:
      return gen_powerlaw_config(cfg_.n, cfg_.gamma, rng);
    case SourceConfig::Kind::kEdgeList:
      return rw_sample(*base_, cfg_.sample_size, cfg_.restart_prob, rng);
  }
  throw std::logic_error("GraphSource: unknown kind");
}

AttackerTypeSample sample_attacker_type(const ScenarioConfig& cfg,
                                        const GraphSource& source, Rng& rng) {
  const VdMode mode = is_clustering(cfg.scenario_class) ? VdMode::kClustering
                                                        : VdMode::kSparse;
  const bool targeted = is_targeted(cfg.scenario_class);
  for (int attempt = 0; attempt <= 50; ++attempt) {
    AttackerTypeSample s;
    s.sample =
        assign_vd(source.draw(rng), mode, cfg.vd_size, rng, cfg.hub_pool_factor);
    std::vector<NodePair> eligible;
    if (targeted) {
      const TargetSet& t = s.sample.targets;
      for (std::size_t i = 0; i < t.pairs.size(); ++i) {
        if (t.labels[i] > 0) eligible.push_back(t.pairs[i]);
      }
    } else {
      eligible = s.sample.graph.edges();
    }
    if (eligible.empty()) continue;
    s.h_a = eligible[rng.uniform_below(eligible.size())];
    s.h_a_in_hd = s.sample.targets.contains_pair(s.h_a);
    return s;
  }
  throw std::runtime_error(
      "sample_attacker_type: no eligible attack target after 50 redraws");
}

}  // namespace rlp
