#include "gip/assignment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace gip {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double edge_cost(const Instance& inst, int j, int i, const Tolerances& tol) {
  const double s = unit_dot(inst.u(j), inst.v(i));
  if (s <= tol.eps_dot) return kInf;
  return -std::log(s);
}

}  // namespace

double assignment_value(const Instance& inst, const Assignment& f,
                        const Tolerances& tol) {
  check_capacity(inst, f);
  double sum = 0.0;
  for (int j = 0; j < inst.k(); ++j) {
    const double s = unit_dot(inst.u(j), inst.v(f.map[j]));
    if (s <= tol.eps_dot) return -kInf;
    sum += std::log(s);
  }
  return sum;
}

// Successive shortest paths with Dijkstra and node potentials. All edge
// costs are -log of a dot in (0, 1], hence nonnegative, so zero potentials
// are valid initially. Edges are scanned in insertion order and the heap
// breaks distance ties by node id, which makes the solver deterministic.
MaximizerResult maximize_assignment(const Instance& inst,
                                    const Tolerances& tol) {
  const int m = inst.m();
  const int k = inst.k();
  const int source = k + m;
  const int sink = k + m + 1;
  const int nodes = k + m + 2;

  struct Edge {
    int to;
    int cap;
    double cost;
    int rev;
  };
  std::vector<std::vector<Edge>> graph(nodes);
  auto add_edge = [&](int from, int to, int cap, double cost) {
    graph[from].push_back({to, cap, cost, static_cast<int>(graph[to].size())});
    graph[to].push_back(
        {from, 0, -cost, static_cast<int>(graph[from].size()) - 1});
  };

  for (int j = 0; j < k; ++j) add_edge(source, j, 1, 0.0);
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < m; ++i) {
      const double c = edge_cost(inst, j, i, tol);
      if (c != kInf) add_edge(j, k + i, 1, c);
    }
  }
  for (int i = 0; i < m; ++i) {
    add_edge(k + i, sink, static_cast<int>(inst.mu.weights[i]), 0.0);
  }

  std::vector<double> potential(nodes, 0.0);
  std::vector<double> dist(nodes);
  std::vector<int> prev_node(nodes), prev_edge(nodes);

  for (int unit = 0; unit < k; ++unit) {
    std::fill(dist.begin(), dist.end(), kInf);
    dist[source] = 0.0;
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    heap.push({0.0, source});
    while (!heap.empty()) {
      auto [d, node] = heap.top();
      heap.pop();
      if (d > dist[node]) continue;
      for (int e = 0; e < static_cast<int>(graph[node].size()); ++e) {
        const Edge& edge = graph[node][e];
        if (edge.cap <= 0) continue;
        const double nd = d + edge.cost + potential[node] - potential[edge.to];
        if (nd < dist[edge.to]) {
          dist[edge.to] = nd;
          prev_node[edge.to] = node;
          prev_edge[edge.to] = e;
          heap.push({nd, edge.to});
        }
      }
    }
    if (dist[sink] == kInf) {
      throw Error(ErrorCode::InfeasibleTransport,
                  "no capacity-respecting map has finite value");
    }
    for (int x = 0; x < nodes; ++x) {
      potential[x] += std::min(dist[x], dist[sink]);
    }
    for (int x = sink; x != source; x = prev_node[x]) {
      Edge& e = graph[prev_node[x]][prev_edge[x]];
      e.cap -= 1;
      graph[x][e.rev].cap += 1;
    }
  }

  MaximizerResult result;
  result.best.map.assign(k, -1);
  for (int j = 0; j < k; ++j) {
    for (const Edge& e : graph[j]) {
      if (e.to >= k && e.to < k + m && e.cap == 0) {
        result.best.map[j] = e.to - k;
        break;
      }
    }
  }
  result.value = assignment_value(inst, result.best, tol);
  return result;
}

std::vector<std::vector<double>> transport_matrix(const Instance& inst,
                                                  const Assignment& f) {
  check_capacity(inst, f);
  std::vector<std::vector<double>> c(inst.m(),
                                     std::vector<double>(inst.k(), 0.0));
  for (int j = 0; j < inst.k(); ++j) c[f.map[j]][j] = 1.0;
  return c;
}

Assignment apply_cycle(const Assignment& f, const AssignmentCycle& cycle) {
  const size_t len = cycle.v_cycle.size();
  if (len < 2 || cycle.u_labels.size() != len) {
    throw Error(ErrorCode::InconsistentCertificate,
                "cycle needs matching index lists of length >= 2");
  }
  Assignment out = f;
  for (size_t t = 0; t < len; ++t) {
    const int j = cycle.u_labels[t];
    if (j < 0 || j >= static_cast<int>(f.map.size()) ||
        f.map[j] != cycle.v_cycle[t]) {
      throw Error(ErrorCode::InconsistentCertificate,
                  "cycle labels disagree with the assignment");
    }
    out.map[j] = cycle.v_cycle[(t + 1) % len];
  }
  return out;
}

namespace {

struct ResidualEdge {
  int from;
  int to;
  double cost;    // raw cost: +c for free pairs, -c for assigned pairs
  int u_index;    // lambda atom of the pair
  int v_index;    // mu atom of the pair
  bool backward;  // true: edge v -> u (unassigning), false: u -> v
};

// Turns a residual cycle (edge index sequence) into the (v_cycle, u_labels)
// form. Residual cycles alternate assigned and free pairs, so the node walk
// visits v_i1, u_j1, v_i2, u_j2, ...
AssignmentCycle cycle_from_edges(const std::vector<ResidualEdge>& edges,
                                 const std::vector<int>& idx) {
  AssignmentCycle cycle;
  size_t start = 0;
  while (start < idx.size() && !edges[idx[start]].backward) ++start;
  if (start == idx.size()) {
    throw Error(ErrorCode::InconsistentCertificate,
                "residual cycle contains no assigned pair");
  }
  double change = 0.0;
  const size_t len = idx.size();
  for (size_t t = 0; t < len; ++t) {
    const ResidualEdge& e = edges[idx[(start + t) % len]];
    change -= e.cost;
    if (e.backward) {
      cycle.v_cycle.push_back(e.v_index);
      cycle.u_labels.push_back(e.u_index);
    }
  }
  cycle.value_change = change;
  if (cycle.v_cycle.size() * 2 != len) {
    throw Error(ErrorCode::InconsistentCertificate,
                "residual cycle does not alternate assigned and free pairs");
  }
  const size_t pos =
      std::min_element(cycle.v_cycle.begin(), cycle.v_cycle.end()) -
      cycle.v_cycle.begin();
  std::rotate(cycle.v_cycle.begin(), cycle.v_cycle.begin() + pos,
              cycle.v_cycle.end());
  std::rotate(cycle.u_labels.begin(), cycle.u_labels.begin() + pos,
              cycle.u_labels.end());
  return cycle;
}

}  // namespace

// Residual-cycle analysis via Floyd-Warshall over slightly shifted costs.
// The shift makes exact tie cycles strictly positive, so all-pairs distances
// stay well defined unless best admits a genuinely improving cycle; the raw
// cost of the extracted cycle then separates NotOptimal from NonUnique and
// AmbiguousWithinTolerance.
UniquenessResult uniqueness_certificate(const Instance& inst,
                                        const Assignment& best,
                                        const Tolerances& tol) {
  const int m = inst.m();
  const int k = inst.k();
  const int nodes = k + m;  // u_j at j, v_i at k + i

  const double value = assignment_value(inst, best, tol);
  if (value == -kInf) {
    throw Error(ErrorCode::NotOptimal,
                "assignment with value -infinity cannot be optimal");
  }
  const double zero_band = tol.eps_tie * std::max(1.0, std::abs(value));
  const double ambiguous_band = zero_band * m;
  const double shift = zero_band / (2.0 * (nodes + 1));

  std::vector<ResidualEdge> edges;
  std::vector<int> edge_at(static_cast<size_t>(nodes) * nodes, -1);
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < m; ++i) {
      const double c = edge_cost(inst, j, i, tol);
      if (c == kInf) continue;
      ResidualEdge e;
      if (best.map[j] == i) {
        e = {k + i, j, -c, j, i, true};
      } else {
        e = {j, k + i, c, j, i, false};
      }
      edge_at[static_cast<size_t>(e.from) * nodes + e.to] =
          static_cast<int>(edges.size());
      edges.push_back(e);
    }
  }

  std::vector<double> dist(static_cast<size_t>(nodes) * nodes, kInf);
  std::vector<int> next(static_cast<size_t>(nodes) * nodes, -1);
  auto at = [nodes](int a, int b) {
    return static_cast<size_t>(a) * nodes + b;
  };
  for (const ResidualEdge& e : edges) {
    const double c = e.cost + shift;
    if (c < dist[at(e.from, e.to)]) {
      dist[at(e.from, e.to)] = c;
      next[at(e.from, e.to)] = e.to;
    }
  }
  for (int mid = 0; mid < nodes; ++mid) {
    for (int a = 0; a < nodes; ++a) {
      const double da = dist[at(a, mid)];
      if (da == kInf) continue;
      for (int b = 0; b < nodes; ++b) {
        const double nd = da + dist[at(mid, b)];
        if (nd < dist[at(a, b)]) {
          dist[at(a, b)] = nd;
          next[at(a, b)] = next[at(a, mid)];
        }
      }
    }
  }

  int anchor = -1;
  double min_diag = kInf;
  for (int a = 0; a < nodes; ++a) {
    if (dist[at(a, a)] < min_diag) {
      min_diag = dist[at(a, a)];
      anchor = a;
    }
  }

  UniquenessResult result;
  if (anchor == -1) {
    result.kind = UniquenessKind::Unique;
    return result;
  }

  // Walk the next pointers around the anchor cycle; a walk that fails to
  // close means distances were poisoned by a strongly negative cycle.
  std::vector<int> cycle_edges;
  int x = anchor;
  bool closed = false;
  for (int steps = 0; steps < nodes + 1; ++steps) {
    const int y = next[at(x, anchor)];
    if (y == -1) break;
    const int e = edge_at[at(x, y)];
    if (e == -1) break;
    cycle_edges.push_back(e);
    x = y;
    if (x == anchor) {
      closed = true;
      break;
    }
  }
  if (!closed) {
    throw Error(ErrorCode::NotOptimal,
                "assignment admits an improving cycle beyond tolerance");
  }

  double raw = 0.0;
  for (int e : cycle_edges) raw += edges[e].cost;
  if (raw < -zero_band) {
    throw Error(ErrorCode::NotOptimal,
                "assignment admits an improving cycle beyond tolerance");
  }

  if (std::abs(raw) <= zero_band) {
    AssignmentCycle cycle = cycle_from_edges(edges, cycle_edges);
    result.kind = UniquenessKind::NonUnique;
    result.alternative = apply_cycle(best, cycle);
    result.gap = std::abs(raw);
    result.cycle = std::move(cycle);
  } else if (raw <= ambiguous_band) {
    result.kind = UniquenessKind::AmbiguousWithinTolerance;
    result.gap = raw;
  } else {
    result.kind = UniquenessKind::Unique;
    result.gap = raw;
  }
  return result;
}

}  // namespace gip
