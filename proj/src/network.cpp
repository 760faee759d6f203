#include "qnet/network.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "qnet/rng.hpp"

namespace qnet {

namespace {

double dist_km(const NetNode& u, const NetNode& v) {
  return std::hypot(u.x - v.x, u.y - v.y);
}

}  // namespace

int QuantumNetwork::find_link(int u, int v) const {
  if (u < 0 || v < 0 || u >= node_count() || v >= node_count()) return -1;
  for (int li : incident_[u]) {
    const NetLink& l = links[li];
    if ((l.a == u && l.b == v) || (l.a == v && l.b == u)) return li;
  }
  return -1;
}

void QuantumNetwork::finalize() {
  params.validate();
  const int n = node_count();
  if (n < 1) throw std::invalid_argument("network needs at least one node");
  for (int i = 0; i < n; ++i) {
    if (nodes[i].id != i) throw std::invalid_argument("node ids must be 0..n-1 in order");
    if (nodes[i].memory_capacity && *nodes[i].memory_capacity < 2)
      throw std::invalid_argument("memory_capacity must be >= 2 when set");
  }
  incident_.assign(n, {});
  for (std::size_t li = 0; li < links.size(); ++li) {
    NetLink& l = links[li];
    if (l.a == l.b) throw std::invalid_argument("self-loop link");
    if (l.a < 0 || l.b < 0 || l.a >= n || l.b >= n) throw std::invalid_argument("link endpoint out of range");
    l.length_km = dist_km(nodes[l.a], nodes[l.b]);
    incident_[l.a].push_back(static_cast<int>(li));
    incident_[l.b].push_back(static_cast<int>(li));
  }
  for (std::size_t li = 0; li < links.size(); ++li) {
    const NetLink& l = links[li];
    for (int other : incident_[l.a])
      if (other != static_cast<int>(li)) {
        const NetLink& o = links[other];
        if ((o.a == l.a && o.b == l.b) || (o.a == l.b && o.b == l.a))
          throw std::invalid_argument("parallel link between nodes " + std::to_string(l.a) + " and " +
                                      std::to_string(l.b));
      }
  }
  if (max_active_links_per_node && *max_active_links_per_node < 1)
    throw std::invalid_argument("max_active_links_per_node must be >= 1 when set");
  if (!is_connected()) throw std::invalid_argument("network graph is not connected");
}

bool QuantumNetwork::is_connected() const {
  const int n = node_count();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int visited = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int li : incident_[u]) {
      int v = links[li].a == u ? links[li].b : links[li].a;
      if (!seen[v]) {
        seen[v] = 1;
        ++visited;
        queue.push_back(v);
      }
    }
  }
  return visited == n;
}

double link_success_prob(const QuantumNetwork& net, const NetLink& link) {
  const PhysicalParams& p = net.params;
  double ep = p.half_link_transmit_ep;
  if (p.distance_dependent_ep) ep = std::exp(-link.length_km / (2.0 * p.attenuation_length_km));
  double prob = p.gen_success_gp * p.gen_success_gp * ep * ep * p.optical_bsm_php;
  if (!(prob > 0.0))
    throw std::domain_error("link-EP generation has zero success probability");
  return prob;
}

double link_expected_latency(const QuantumNetwork& net, const NetLink& link) {
  return net.params.gen_latency_gt / link_success_prob(net, link);
}

double waxman_link_probability(double dist_km, double alpha, double beta, double d_max_km) {
  return beta * std::exp(-dist_km / (alpha * d_max_km));
}

QuantumNetwork waxman_generate(int n, double width_km, double height_km, double alpha, double beta,
                               std::uint64_t seed, const PhysicalParams& params) {
  if (n < 1) throw std::invalid_argument("waxman_generate: node count must be >= 1");
  if (!(width_km > 0.0) || !(height_km > 0.0))
    throw std::invalid_argument("waxman_generate: degenerate area");
  if (!(alpha > 0.0) || alpha > 1.0 || !(beta > 0.0) || beta > 1.0)
    throw std::invalid_argument("waxman_generate: alpha and beta must be in (0, 1]");

  QuantumNetwork net;
  net.params = params;
  Rng rng(seed);
  for (int i = 0; i < n; ++i)
    net.nodes.push_back({i, rng.uniform(0.0, width_km), rng.uniform(0.0, height_km), std::nullopt});

  const double d_max = std::hypot(width_km, height_km);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      double d = dist_km(net.nodes[u], net.nodes[v]);
      if (rng.next_double() < waxman_link_probability(d, alpha, beta, d_max))
        net.links.push_back({u, v, d});
    }

  // Connectivity repair: join the closest pair of nodes in different
  // components until one component remains.
  std::vector<int> comp(n);
  auto recompute_components = [&]() {
    std::iota(comp.begin(), comp.end(), 0);
    std::vector<std::vector<int>> adj(n);
    for (const NetLink& l : net.links) {
      adj[l.a].push_back(l.b);
      adj[l.b].push_back(l.a);
    }
    int n_comp = 0;
    std::fill(comp.begin(), comp.end(), -1);
    for (int i = 0; i < n; ++i) {
      if (comp[i] >= 0) continue;
      comp[i] = n_comp;
      std::deque<int> queue{i};
      while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : adj[u])
          if (comp[v] < 0) {
            comp[v] = n_comp;
            queue.push_back(v);
          }
      }
      ++n_comp;
    }
    return n_comp;
  };

  while (recompute_components() > 1) {
    double best = std::numeric_limits<double>::infinity();
    int bu = -1, bv = -1;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        if (comp[u] == comp[v]) continue;
        double d = dist_km(net.nodes[u], net.nodes[v]);
        if (d < best) {
          best = d;
          bu = u;
          bv = v;
        }
      }
    net.links.push_back({bu, bv, best});
  }

  net.finalize();
  return net;
}

QuantumNetwork line_network(int n_nodes, double spacing_km, const PhysicalParams& params) {
  if (n_nodes < 1) throw std::invalid_argument("line_network: node count must be >= 1");
  QuantumNetwork net;
  net.params = params;
  for (int i = 0; i < n_nodes; ++i) net.nodes.push_back({i, spacing_km * i, 0.0, std::nullopt});
  for (int i = 0; i + 1 < n_nodes; ++i) net.links.push_back({i, i + 1, spacing_km});
  net.finalize();
  return net;
}

int hop_distance(const QuantumNetwork& net, int s, int d) {
  auto path = shortest_path(net, s, d);
  return path.empty() ? -1 : static_cast<int>(path.size()) - 1;
}

std::vector<int> shortest_path(const QuantumNetwork& net, int s, int d) {
  const int n = net.node_count();
  if (s < 0 || d < 0 || s >= n || d >= n) return {};
  if (s == d) return {s};
  std::vector<int> prev(n, -1);
  std::vector<char> seen(n, 0);
  std::deque<int> queue{s};
  seen[s] = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    std::vector<int> nbrs;
    for (int li : net.links_of(u)) {
      const NetLink& l = net.links[li];
      nbrs.push_back(l.a == u ? l.b : l.a);
    }
    std::sort(nbrs.begin(), nbrs.end());
    for (int v : nbrs)
      if (!seen[v]) {
        seen[v] = 1;
        prev[v] = u;
        if (v == d) {
          std::vector<int> path{d};
          for (int x = d; x != s; x = prev[x]) path.push_back(prev[x]);
          std::reverse(path.begin(), path.end());
          return path;
        }
        queue.push_back(v);
      }
  }
  return {};
}

std::string network_to_json(const QuantumNetwork& net) {
  nlohmann::json j;
  const PhysicalParams& p = net.params;
  j["params"] = {{"gen_latency_gt", p.gen_latency_gt},
                 {"gen_success_gp", p.gen_success_gp},
                 {"half_link_transmit_ep", p.half_link_transmit_ep},
                 {"optical_bsm_php", p.optical_bsm_php},
                 {"atomic_bsm_latency_bt", p.atomic_bsm_latency_bt},
                 {"atomic_bsm_bp", p.atomic_bsm_bp},
                 {"decoherence_tau", p.decoherence_tau},
                 {"distance_dependent_ep", p.distance_dependent_ep},
                 {"attenuation_length_km", p.attenuation_length_km}};
  j["nodes"] = nlohmann::json::array();
  for (const NetNode& node : net.nodes) {
    nlohmann::json jn = {{"id", node.id}, {"x", node.x}, {"y", node.y}};
    if (node.memory_capacity) jn["memory_capacity"] = *node.memory_capacity;
    j["nodes"].push_back(jn);
  }
  j["links"] = nlohmann::json::array();
  for (const NetLink& l : net.links) j["links"].push_back({{"a", l.a}, {"b", l.b}});
  if (net.max_active_links_per_node) j["max_active_links_per_node"] = *net.max_active_links_per_node;
  return j.dump(2);
}

QuantumNetwork network_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  QuantumNetwork net;
  const nlohmann::json& jp = j.at("params");
  PhysicalParams& p = net.params;
  p.gen_latency_gt = jp.at("gen_latency_gt").get<double>();
  p.gen_success_gp = jp.at("gen_success_gp").get<double>();
  p.half_link_transmit_ep = jp.at("half_link_transmit_ep").get<double>();
  p.optical_bsm_php = jp.at("optical_bsm_php").get<double>();
  p.atomic_bsm_latency_bt = jp.at("atomic_bsm_latency_bt").get<double>();
  p.atomic_bsm_bp = jp.at("atomic_bsm_bp").get<double>();
  p.decoherence_tau = jp.at("decoherence_tau").get<double>();
  p.distance_dependent_ep = jp.value("distance_dependent_ep", false);
  p.attenuation_length_km = jp.value("attenuation_length_km", 22.0);
  for (const auto& jn : j.at("nodes")) {
    NetNode node;
    node.id = jn.at("id").get<int>();
    node.x = jn.at("x").get<double>();
    node.y = jn.at("y").get<double>();
    if (jn.contains("memory_capacity")) node.memory_capacity = jn.at("memory_capacity").get<int>();
    net.nodes.push_back(node);
  }
  for (const auto& jl : j.at("links")) net.links.push_back({jl.at("a").get<int>(), jl.at("b").get<int>(), 0.0});
  if (j.contains("max_active_links_per_node"))
    net.max_active_links_per_node = j.at("max_active_links_per_node").get<int>();
  net.finalize();
  return net;
}

void save_network(const QuantumNetwork& net, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << network_to_json(net) << "\n";
}

QuantumNetwork load_network(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return network_from_json(buf.str());
}

}  // namespace qnet
