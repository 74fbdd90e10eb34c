#include "maxflow.hpp"

#include <algorithm>
#include <queue>

namespace abeldim::detail {

MaxFlow::MaxFlow(std::size_t nodes) : out_(nodes), level_(nodes), it_(nodes) {}

void MaxFlow::add_edge(std::size_t from, std::size_t to, std::int64_t cap) {
  if (cap <= 0) return;
  out_[from].push_back(edges_.size());
  edges_.push_back({to, cap});
  out_[to].push_back(edges_.size());
  edges_.push_back({from, 0});
}

bool MaxFlow::bfs(std::size_t s, std::size_t t) {
  std::fill(level_.begin(), level_.end(), -1);
  std::queue<std::size_t> q;
  level_[s] = 0;
  q.push(s);
  while (!q.empty()) {
    auto v = q.front();
    q.pop();
    for (auto id : out_[v]) {
      const auto& e = edges_[id];
      if (e.cap > 0 && level_[e.to] < 0) {
        level_[e.to] = level_[v] + 1;
        q.push(e.to);
      }
    }
  }
  return level_[t] >= 0;
}

std::int64_t MaxFlow::dfs(std::size_t v, std::size_t t, std::int64_t pushed) {
  if (v == t) return pushed;
  for (auto& i = it_[v]; i < out_[v].size(); ++i) {
    const auto id = out_[v][i];
    auto& e = edges_[id];
    if (e.cap <= 0 || level_[e.to] != level_[v] + 1) continue;
    const auto got = dfs(e.to, t, std::min(pushed, e.cap));
    if (got > 0) {
      e.cap -= got;
      edges_[id ^ 1].cap += got;
      return got;
    }
  }
  return 0;
}

std::int64_t MaxFlow::run(std::size_t source, std::size_t sink) {
  std::int64_t flow = 0;
  while (bfs(source, sink)) {
    std::fill(it_.begin(), it_.end(), 0);
    while (auto f = dfs(source, sink, kInfinity)) flow += f;
  }
  return flow;
}

std::vector<bool> MaxFlow::source_side_min(std::size_t source) const {
  std::vector<bool> seen(out_.size(), false);
  std::vector<std::size_t> stack{source};
  seen[source] = true;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto id : out_[v]) {
      const auto& e = edges_[id];
      if (e.cap > 0 && !seen[e.to]) {
        seen[e.to] = true;
        stack.push_back(e.to);
      }
    }
  }
  return seen;
}

std::vector<bool> MaxFlow::source_side_max(std::size_t sink) const {
  // u reaches the sink iff some residual edge u->w has w reaching the sink.
  // Walk backwards: edge id goes from edges_[id ^ 1].to to edges_[id].to.
  std::vector<bool> reaches(out_.size(), false);
  std::vector<std::size_t> stack{sink};
  reaches[sink] = true;
  while (!stack.empty()) {
    auto w = stack.back();
    stack.pop_back();
    for (auto rid : out_[w]) {
      const auto fwd = rid ^ 1;  // the edge u->w paired with w->u
      const auto u = edges_[rid].to;
      if (edges_[fwd].cap > 0 && !reaches[u]) {
        reaches[u] = true;
        stack.push_back(u);
      }
    }
  }
  std::vector<bool> side(out_.size());
  for (std::size_t v = 0; v < side.size(); ++v) side[v] = !reaches[v];
  return side;
}

}  // namespace abeldim::detail
