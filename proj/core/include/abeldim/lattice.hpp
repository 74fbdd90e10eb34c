#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace abeldim {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Sorted list of vertex indices.
using VertexSet = std::vector<std::size_t>;

BigInt floor_of(const Rational& q);
BigInt ceil_of(const Rational& q);

// Integer element of L, stored densely over the vertices of one graph.
class Cycle {
 public:
  Cycle() = default;
  explicit Cycle(std::size_t n) : c_(n, 0) {}
  explicit Cycle(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) {}

  static Cycle basis(std::size_t n, std::size_t v);
  // E_J = sum of E_v over v in J; E_V when J is omitted.
  static Cycle reduced(std::size_t n);
  static Cycle reduced(std::size_t n, const VertexSet& J);

  std::size_t size() const noexcept { return c_.size(); }
  std::int64_t operator[](std::size_t v) const { return c_[v]; }
  std::int64_t& operator[](std::size_t v) { return c_[v]; }
  const std::vector<std::int64_t>& coeffs() const noexcept { return c_; }

  bool is_zero() const noexcept;
  bool is_effective() const noexcept;
  std::int64_t total() const noexcept;

  Cycle& operator+=(const Cycle& o);
  Cycle& operator-=(const Cycle& o);
  friend Cycle operator+(Cycle a, const Cycle& b) { return a += b; }
  friend Cycle operator-(Cycle a, const Cycle& b) { return a -= b; }
  friend Cycle operator*(std::int64_t k, Cycle a);
  friend bool operator==(const Cycle&, const Cycle&) = default;

 private:
  std::vector<std::int64_t> c_;
};

// Componentwise partial order and lattice operations.
bool leq(const Cycle& a, const Cycle& b);
Cycle meet(const Cycle& a, const Cycle& b);
Cycle join(const Cycle& a, const Cycle& b);

// Rational element of L tensor Q.
class QCycle {
 public:
  QCycle() = default;
  explicit QCycle(std::size_t n) : c_(n) {}
  explicit QCycle(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {}
  explicit QCycle(const Cycle& x);

  std::size_t size() const noexcept { return c_.size(); }
  const Rational& operator[](std::size_t v) const { return c_[v]; }
  Rational& operator[](std::size_t v) { return c_[v]; }
  const std::vector<Rational>& coeffs() const noexcept { return c_; }

  bool is_integral() const;
  // Requires is_integral().
  Cycle to_cycle() const;

  QCycle& operator+=(const QCycle& o);
  QCycle& operator-=(const QCycle& o);
  friend QCycle operator+(QCycle a, const QCycle& b) { return a += b; }
  friend QCycle operator-(QCycle a, const QCycle& b) { return a -= b; }
  friend QCycle operator*(const Rational& k, QCycle a);
  friend QCycle operator-(QCycle a);
  friend bool operator==(const QCycle&, const QCycle&) = default;

 private:
  std::vector<Rational> c_;
};

QCycle floor_cycle(const QCycle& x);
Cycle floor_to_cycle(const QCycle& x);
Cycle ceil_to_cycle(const QCycle& x);

struct GraphSpec {
  struct Vertex {
    std::string id;
    std::int64_t e = -2;
  };
  std::vector<Vertex> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
};

class PlumbingGraph {
 public:
  std::size_t size() const noexcept { return ids_.size(); }
  const std::string& id(std::size_t v) const { return ids_[v]; }
  const std::vector<std::string>& ids() const noexcept { return ids_; }
  std::optional<std::size_t> find(std::string_view id) const;
  // Throws UnknownVertex.
  std::size_t index_of(std::string_view id) const;

  std::int64_t self_intersection(std::size_t v) const { return e_[v]; }
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_[v]; }
  // Each edge once, as (smaller index, larger index), sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }
  std::int64_t intersection(std::size_t v, std::size_t w) const;

  GraphSpec spec() const;

  // Columns of -I^{-1}; computed once and shared between copies.
  const std::vector<QCycle>& dual_basis() const;

 private:
  friend PlumbingGraph build_graph(const GraphSpec& spec);
  friend PlumbingGraph build_graph_unchecked(const GraphSpec& spec);

  struct Cache;

  std::vector<std::string> ids_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::int64_t> e_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::shared_ptr<Cache> cache_;
};

// Validates tree shape and negative definiteness (exact leading minors of -I).
// Throws NotATree, NotNegativeDefinite, DuplicateEdge, UnknownVertex.
PlumbingGraph build_graph(const GraphSpec& spec);

// Structural checks only; for graphs negative definite by construction
// (blow-ups of a validated graph).
PlumbingGraph build_graph_unchecked(const GraphSpec& spec);

// Leading principal minors of -I, in vertex order.
std::vector<BigInt> leading_minors(const PlumbingGraph& G);
// |det I| = order of L'/L.
BigInt determinant_abs(const PlumbingGraph& G);

std::int64_t pairing(const PlumbingGraph& G, const Cycle& x, const Cycle& y);
Rational pairing(const PlumbingGraph& G, const QCycle& x, const QCycle& y);
Rational pairing(const PlumbingGraph& G, const QCycle& x, const Cycle& y);
// (x, E_v).
Rational pairing_with_basis(const PlumbingGraph& G, const QCycle& x, std::size_t v);
std::int64_t pairing_with_basis(const PlumbingGraph& G, const Cycle& x, std::size_t v);

QCycle dual_cycle(const PlumbingGraph& G, std::size_t v);
QCycle canonical_cycle(const PlumbingGraph& G);

Rational chi(const PlumbingGraph& G, const QCycle& x);
std::int64_t chi(const PlumbingGraph& G, const Cycle& x);

bool in_lipman_cone(const PlumbingGraph& G, const QCycle& x);
bool in_lipman_cone(const PlumbingGraph& G, const Cycle& x);

struct BlowupMap {
  std::size_t source_size = 0;
  std::size_t blown_up = 0;
  std::size_t new_vertex = 0;
  std::string new_id;
  // matrix[u] = pullback of E_u, a cycle on the target graph.
  std::vector<Cycle> matrix;

  Cycle pull(const Cycle& x) const;
  QCycle pull(const QCycle& x) const;
};

// Blow-up of a generic point of E_v. The new vertex gets id `new_id`, or
// id(v) + "'" repeated until unused.
std::pair<PlumbingGraph, BlowupMap> blow_up_generic(const PlumbingGraph& G, std::size_t v,
                                                    std::optional<std::string> new_id = {});

VertexSet support(const Cycle& x);
Cycle restrict(const Cycle& x, const VertexSet& J);
VertexSet complement(std::size_t n, const VertexSet& J);
VertexSet intersect(const VertexSet& a, const VertexSet& b);
// Connected components of the induced subgraph on J, each sorted, ordered by
// smallest member.
std::vector<VertexSet> components(const PlumbingGraph& G, const VertexSet& J);
bool is_connected(const PlumbingGraph& G, const VertexSet& J);

// Coefficients a_v >= 0 of -l' = sum a_v E_v^*.
struct EStarCombination {
  std::vector<std::int64_t> a;

  std::size_t size() const noexcept { return a.size(); }
  bool is_zero() const noexcept;
  std::int64_t total() const noexcept;
};

// Throws NotInLipmanCone on a negative coefficient, VertexMismatch on size.
void validate(const PlumbingGraph& G, const EStarCombination& lp);
// E*-support I = {v : a_v != 0}.
VertexSet estar_support(const EStarCombination& lp);
// -l' as a rational cycle.
QCycle minus_lprime(const PlumbingGraph& G, const EStarCombination& lp);
// (l', x) = sum a_v x_v.
std::int64_t lprime_pairing(const EStarCombination& lp, const Cycle& x);
// Inverse of minus_lprime for classes in -S'. Throws NotInLipmanCone.
EStarCombination estar_from_qcycle(const PlumbingGraph& G, const QCycle& minus_lp);

}  // namespace abeldim
