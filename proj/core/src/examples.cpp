#include "abeldim/examples.hpp"

#include <algorithm>

#include "abeldim/error.hpp"

namespace abeldim {

namespace {

struct BranchShape {
  std::vector<GraphSpec::Vertex> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::string attach;
};

BranchShape shape(StarBranch branch, const std::string& p) {
  BranchShape s;
  switch (branch) {
    case StarBranch::Gamma:
      s.vertices = {{p + "a", -3}, {p + "b", -1}, {p + "c", -13}, {p + "d", -1},
                    {p + "e", -3}, {p + "b2", -2}, {p + "d2", -2}};
      s.edges = {{p + "a", p + "b"}, {p + "b", p + "c"}, {p + "c", p + "d"},
                 {p + "d", p + "e"}, {p + "b", p + "b2"}, {p + "d", p + "d2"}};
      s.attach = p + "c";
      break;
    case StarBranch::E237:
      s.vertices = {{p + "h", -1}, {p + "x2", -2}, {p + "x3", -3}, {p + "x7", -7}};
      s.edges = {{p + "h", p + "x2"}, {p + "h", p + "x3"}, {p + "h", p + "x7"}};
      s.attach = p + "h";
      break;
  }
  return s;
}

BuiltinExample assemble(const std::string& name, const std::vector<StarBranch>& branches, std::int64_t b) {
  GraphSpec spec;
  spec.vertices.push_back({"v0", -b});
  std::vector<std::vector<std::string>> branch_ids;
  for (std::size_t i = 0; i < branches.size(); ++i) {
    auto s = shape(branches[i], "g" + std::to_string(i + 1) + "_");
    std::vector<std::string> ids;
    for (const auto& v : s.vertices) {
      spec.vertices.push_back(v);
      ids.push_back(v.id);
    }
    spec.edges.insert(spec.edges.end(), s.edges.begin(), s.edges.end());
    spec.edges.emplace_back("v0", s.attach);
    branch_ids.push_back(std::move(ids));
  }
  BuiltinExample ex;
  ex.name = name;
  ex.graph = build_graph(spec);
  ex.center = ex.graph.index_of("v0");
  for (const auto& ids : branch_ids) {
    VertexSet set;
    for (const auto& id : ids) set.push_back(ex.graph.index_of(id));
    std::sort(set.begin(), set.end());
    ex.branches.push_back(std::move(set));
  }
  ex.lprime.a.assign(ex.graph.size(), 0);
  return ex;
}

}  // namespace

PlumbingGraph branch_graph(StarBranch branch) {
  auto s = shape(branch, "");
  GraphSpec spec;
  spec.vertices = s.vertices;
  spec.edges = s.edges;
  return build_graph(spec);
}

BuiltinExample twin_gamma(std::int64_t b) {
  if (b < 3) fail(ErrorCode::InvalidArgument, "twin_gamma needs b >= 3");
  auto ex = assemble("twin_gamma", {StarBranch::Gamma, StarBranch::Gamma}, b);
  ex.lprime.a[ex.center] = b - 2;
  return ex;
}

BuiltinExample star(const std::vector<StarBranch>& branches, std::int64_t b, std::int64_t n) {
  if (branches.empty()) fail(ErrorCode::InvalidArgument, "star needs at least one branch");
  if (n < 0) fail(ErrorCode::InvalidArgument, "star needs n >= 0");
  if (b <= 0) {
    // The graph is negative definite iff b exceeds the sum over branches of
    // the attachment-vertex entry of -I_branch^{-1}.
    Rational sum = 0;
    for (auto br : branches) {
      const auto G = branch_graph(br);
      const auto u = G.index_of(shape(br, "").attach);
      sum += dual_cycle(G, u)[u];
    }
    b = floor_of(sum).convert_to<std::int64_t>() + 2;
  }
  auto ex = assemble("star", branches, b);
  ex.lprime.a[ex.center] = n;
  return ex;
}

}  // namespace abeldim
