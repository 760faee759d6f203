#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qnet/params.hpp"

namespace qnet {

struct NetNode {
  int id = 0;
  double x = 0.0;  // km
  double y = 0.0;  // km
  std::optional<int> memory_capacity;  // qubit slots; >= 2 when set
};

struct NetLink {
  int a = 0;
  int b = 0;
  double length_km = 0.0;  // Euclidean distance between endpoints
};

// A quantum network: simple connected graph plus one PhysicalParams set.
// Immutable after construction; safe to share read-only across episodes.
struct QuantumNetwork {
  std::vector<NetNode> nodes;
  std::vector<NetLink> links;
  PhysicalParams params;
  // Optional cap on simultaneously generating links incident to one node.
  std::optional<int> max_active_links_per_node;

  int node_count() const { return static_cast<int>(nodes.size()); }
  int link_count() const { return static_cast<int>(links.size()); }

  // Index of the link joining u and v, or -1.
  int find_link(int u, int v) const;
  const std::vector<int>& links_of(int node) const { return incident_[node]; }

  // Recomputes link lengths and adjacency; validates invariants. Builders
  // and the loader call this; call it again after manual edits.
  void finalize();

  bool is_connected() const;

 private:
  std::vector<std::vector<int>> incident_;
};

// Per-attempt link-EP success probability: g_p^2 * e_p^2 * p_hp, where e_p
// is either the constant or exp(-len / (2 L_att)) under the distance model.
double link_success_prob(const QuantumNetwork& net, const NetLink& link);

// Expected link-EP generation latency g_t / p_link.
double link_expected_latency(const QuantumNetwork& net, const NetLink& link);

// Probability that a Waxman graph joins two nodes at the given distance.
double waxman_link_probability(double dist_km, double alpha, double beta, double d_max_km);

// Random geometric topology: n nodes uniform in a width x height rectangle,
// each pair joined with probability beta * exp(-d / (alpha * diagonal)).
// If the sample is disconnected, the shortest edge between components is
// added repeatedly until it is not. Deterministic in the seed.
QuantumNetwork waxman_generate(int n, double width_km, double height_km, double alpha, double beta,
                               std::uint64_t seed, const PhysicalParams& params = {});

// n_nodes nodes on a horizontal line with uniform spacing; links join
// consecutive nodes. Used for small fixed scenarios.
QuantumNetwork line_network(int n_nodes, double spacing_km, const PhysicalParams& params = {});

// Hop count of the shortest path, or -1 if unreachable.
int hop_distance(const QuantumNetwork& net, int s, int d);

// Shortest path by hop count (BFS, lowest-id tie-break), empty if unreachable.
std::vector<int> shortest_path(const QuantumNetwork& net, int s, int d);

// JSON document with params, nodes (id, x, y) and links (a, b).
std::string network_to_json(const QuantumNetwork& net);
QuantumNetwork network_from_json(const std::string& text);
void save_network(const QuantumNetwork& net, const std::string& path);
QuantumNetwork load_network(const std::string& path);

}  // namespace qnet
