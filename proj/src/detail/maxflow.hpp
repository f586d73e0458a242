#pragma once

#include <vector>

namespace gip::detail {

// Dinic max-flow over integer capacities. Desk-scale graphs only.
class MaxFlow {
 public:
  explicit MaxFlow(int nodes) : graph_(nodes) {}

  void add_edge(int from, int to, long long cap);
  long long run(int source, int sink);

  // Nodes reachable from source in the residual graph; call after run.
  std::vector<bool> residual_reachable(int source) const;

 private:
  struct Edge {
    int to;
    long long cap;
    int rev;
  };

  bool bfs(int source, int sink);
  long long dfs(int node, int sink, long long limit);

  std::vector<std::vector<Edge>> graph_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

}  // namespace gip::detail
