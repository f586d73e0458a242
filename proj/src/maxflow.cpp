#include "detail/maxflow.hpp"

#include <limits>
#include <queue>

namespace gip::detail {

void MaxFlow::add_edge(int from, int to, long long cap) {
  graph_[from].push_back({to, cap, static_cast<int>(graph_[to].size())});
  graph_[to].push_back({from, 0, static_cast<int>(graph_[from].size()) - 1});
}

bool MaxFlow::bfs(int source, int sink) {
  level_.assign(graph_.size(), -1);
  std::queue<int> queue;
  level_[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    int node = queue.front();
    queue.pop();
    for (const Edge& e : graph_[node]) {
      if (e.cap > 0 && level_[e.to] < 0) {
        level_[e.to] = level_[node] + 1;
        queue.push(e.to);
      }
    }
  }
  return level_[sink] >= 0;
}

long long MaxFlow::dfs(int node, int sink, long long limit) {
  if (node == sink) return limit;
  for (int& it = iter_[node]; it < static_cast<int>(graph_[node].size()); ++it) {
    Edge& e = graph_[node][it];
    if (e.cap <= 0 || level_[e.to] != level_[node] + 1) continue;
    long long pushed = dfs(e.to, sink, std::min(limit, e.cap));
    if (pushed > 0) {
      e.cap -= pushed;
      graph_[e.to][e.rev].cap += pushed;
      return pushed;
    }
  }
  return 0;
}

long long MaxFlow::run(int source, int sink) {
  long long flow = 0;
  while (bfs(source, sink)) {
    iter_.assign(graph_.size(), 0);
    long long pushed;
    while ((pushed = dfs(source, sink,
                         std::numeric_limits<long long>::max())) > 0) {
      flow += pushed;
    }
  }
  return flow;
}

std::vector<bool> MaxFlow::residual_reachable(int source) const {
  std::vector<bool> seen(graph_.size(), false);
  std::queue<int> queue;
  seen[source] = true;
  queue.push(source);
  while (!queue.empty()) {
    int node = queue.front();
    queue.pop();
    for (const Edge& e : graph_[node]) {
      if (e.cap > 0 && !seen[e.to]) {
        seen[e.to] = true;
        queue.push(e.to);
      }
    }
  }
  return seen;
}

}  // namespace gip::detail
