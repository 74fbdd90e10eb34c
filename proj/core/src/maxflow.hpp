#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace abeldim::detail {

// Dinic max-flow on an explicit residual graph.
class MaxFlow {
 public:
  static constexpr std::int64_t kInfinity = std::numeric_limits<std::int64_t>::max() / 4;

  explicit MaxFlow(std::size_t nodes);

  void add_edge(std::size_t from, std::size_t to, std::int64_t cap);
  std::int64_t run(std::size_t source, std::size_t sink);

  // After run(): nodes reachable from the source in the residual graph
  // (the source side of the minimal min cut).
  std::vector<bool> source_side_min(std::size_t source) const;
  // After run(): nodes that cannot reach the sink in the residual graph
  // (the source side of the maximal min cut).
  std::vector<bool> source_side_max(std::size_t sink) const;

 private:
  struct Edge {
    std::size_t to;
    std::int64_t cap;
  };

  bool bfs(std::size_t s, std::size_t t);
  std::int64_t dfs(std::size_t v, std::size_t t, std::int64_t pushed);

  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<int> level_;
  std::vector<std::size_t> it_;
};

}  // namespace abeldim::detail
