#include "cutmatch/graph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace cutmatch {

using nlohmann::json;

void SolverConfig::validate() const {
  if (lambda1 <= 0 || lambda2 <= 0) throw std::invalid_argument("config: lambda1 and lambda2 must be > 0");
  if (eps <= 0) throw std::invalid_argument("config: eps must be > 0");
  if (tau_feas <= 0 || tau_obj <= 0 || tau_step <= 0 || tau_proj <= 0)
    throw std::invalid_argument("config: tolerances must be > 0");
  if (max_outer <= 0 || max_ibgp <= 0 || max_proj <= 0)
    throw std::invalid_argument("config: iteration caps must be > 0");
}

void GroundTruth::validate(int n) const {
  if (labels.size() != n || static_cast<int>(correspondence.size()) != n)
    throw std::invalid_argument("ground_truth: size mismatch");
  int pos = 0;
  for (int i = 0; i < n; ++i) {
    if (labels[i] != 1 && labels[i] != -1)
      throw std::invalid_argument("ground_truth: labels must be -1 or +1");
    if (labels[i] == 1) ++pos;
  }
  if (2 * pos != n)
    throw std::invalid_argument("ground_truth: label classes must have equal size");
  for (int i = 0; i < n; ++i) {
    int p = correspondence[i];
    if (p < 0 || p >= n || p == i || correspondence[p] != i)
      throw std::invalid_argument("ground_truth: correspondence must be a fixed-point-free involution");
    if (labels[i] == labels[p])
      throw std::invalid_argument("ground_truth: corresponding nodes must have opposite labels");
  }
}

void Graph::validate() const {
  if (n < 4) throw std::invalid_argument("graph: n must be >= 4");
  if (n % 2 != 0) throw std::invalid_argument("graph: odd n");
  if (positions.rows() != n) throw std::invalid_argument("graph: positions must have n rows");
  if (features.rows() != n) throw std::invalid_argument("graph: features must have n rows");
  std::set<std::pair<int, int>> seen;
  for (const auto& [i, j] : edges) {
    if (i == j) throw std::invalid_argument("graph: self-loop edge");
    if (i < 0 || j < 0 || i >= n || j >= n)
      throw std::invalid_argument("graph: edge index out of range");
    auto key = std::minmax(i, j);
    if (!seen.insert(key).second) throw std::invalid_argument("graph: duplicate edge");
  }
  if (ground_truth) ground_truth->validate(n);
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::runtime_error("graph parse failure: " + std::string(e.what()));
  }

  Graph g;
  try {
    g.n = j.at("n").get<int>();
    const int d = j.at("feature_dim").get<int>();
    if (g.n <= 0 || d <= 0) throw std::runtime_error("graph: n and feature_dim must be positive");
    if (g.n % 2 != 0) throw std::runtime_error("graph: odd n");
    const auto& nodes = j.at("nodes");
    if (static_cast<int>(nodes.size()) != g.n)
      throw std::runtime_error("graph: node count does not match n");
    g.positions.resize(g.n, 2);
    g.features.resize(g.n, d);
    for (const auto& node : nodes) {
      const int id = node.at("id").get<int>();
      if (id < 0 || id >= g.n) throw std::runtime_error("graph: node id out of range");
      const auto& pos = node.at("pos");
      if (pos.size() != 2) throw std::runtime_error("graph: pos must have 2 entries");
      g.positions(id, 0) = pos[0].get<double>();
      g.positions(id, 1) = pos[1].get<double>();
      const auto& feat = node.at("feat");
      if (static_cast<int>(feat.size()) != d)
        throw std::runtime_error("graph: inconsistent feature dimension");
      for (int k = 0; k < d; ++k) g.features(id, k) = feat[k].get<double>();
    }
    for (const auto& e : j.at("edges")) {
      if (e.size() != 2) throw std::runtime_error("graph: edge must have 2 endpoints");
      int a = e[0].get<int>(), b = e[1].get<int>();
      if (a == b) throw std::runtime_error("graph: self-loop edge");
      g.edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    if (j.contains("ground_truth")) {
      GroundTruth gt;
      const auto& jg = j["ground_truth"];
      const auto& labels = jg.at("labels");
      gt.labels.resize(labels.size());
      for (int i = 0; i < static_cast<int>(labels.size()); ++i) gt.labels[i] = labels[i].get<int>();
      gt.correspondence = jg.at("correspondence").get<std::vector<int>>();
      g.ground_truth = std::move(gt);
    }
  } catch (const json::exception& e) {
    throw std::runtime_error("graph parse failure: " + std::string(e.what()));
  }
  g.validate();
  return g;
}

void save_graph(const Graph& g, const std::string& path) {
  g.validate();
  json j;
  j["n"] = g.n;
  j["feature_dim"] = g.feature_dim();
  json nodes = json::array();
  for (int i = 0; i < g.n; ++i) {
    json node;
    node["id"] = i;
    node["pos"] = {g.positions(i, 0), g.positions(i, 1)};
    json feat = json::array();
    for (int k = 0; k < g.feature_dim(); ++k) feat.push_back(g.features(i, k));
    node["feat"] = std::move(feat);
    nodes.push_back(std::move(node));
  }
  j["nodes"] = std::move(nodes);
  json edges = json::array();
  for (const auto& [a, b] : g.edges) edges.push_back({a, b});
  j["edges"] = std::move(edges);
  if (g.ground_truth) {
    json jg;
    jg["labels"] = std::vector<int>(g.ground_truth->labels.data(),
                                    g.ground_truth->labels.data() + g.ground_truth->labels.size());
    jg["correspondence"] = g.ground_truth->correspondence;
    j["ground_truth"] = std::move(jg);
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write graph file: " + path);
  out << j.dump(2) << "\n";
}

double FeasibilityReport::max_violation() const {
  return std::max({row_sum, col_sum, box, diagonal, symmetry});
}

FeasibilityReport check_feasible(const MatchingMatrix& X) {
  const int n = static_cast<int>(X.rows());
  if (X.cols() != n) throw std::invalid_argument("check_feasible: X must be square");
  FeasibilityReport r;
  r.row_sum = (X.rowwise().sum().array() - 1.0).abs().maxCoeff();
  r.col_sum = (X.colwise().sum().array() - 1.0).abs().maxCoeff();
  r.box = std::max(0.0, std::max(-X.minCoeff(), X.maxCoeff() - 1.0));
  r.diagonal = X.diagonal().cwiseAbs().maxCoeff();
  r.symmetry = (X - X.transpose()).cwiseAbs().maxCoeff();
  return r;
}

}  // namespace cutmatch
