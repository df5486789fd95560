#include "bcoh/gkm.hpp"

#include <algorithm>
#include <numeric>

#include "bcoh/error.hpp"

namespace bcoh::gkm {
namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

}  // namespace

Graph::Graph(ComponentSet vertices, std::vector<Edge> edges) : edges_(std::move(edges)) {
  if (vertices.empty()) throw ValidationError("GKM graph needs at least one vertex");
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw ValidationError("GKM graph has repeated vertices");
  if (vertices.front() < 1) throw ValidationError("GKM vertex labels start at 1");
  vertices_ = std::move(vertices);

  UnionFind uf(vertices_.size());
  for (const auto& e : edges_) {
    if (e.i == e.j) throw ValidationError("GKM graph has a self-loop at " + std::to_string(e.i));
    if (e.multiplicity < 1) throw ValidationError("GKM edge multiplicity must be >= 1");
    uf.unite(position(e.i), position(e.j));
  }
  for (std::size_t k = 0; k < vertices_.size(); ++k)
    if (uf.find(k) == k) ++connected_components_;
}

std::size_t Graph::position(std::size_t label) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), label);
  if (it == vertices_.end() || *it != label)
    throw ValidationError("edge endpoint " + std::to_string(label) + " is not a vertex");
  return static_cast<std::size_t>(it - vertices_.begin());
}

int Graph::max_multiplicity() const {
  int m = 0;
  for (const auto& e : edges_) m = std::max(m, e.multiplicity);
  return m;
}

std::vector<Tuple> CongruenceRing::basis(int d) const {
  if (d < 0) throw ValidationError("negative degree");
  UnionFind uf(graph_.size());
  for (const auto& e : graph_.edges())
    if (d < e.multiplicity) uf.unite(graph_.position(e.i), graph_.position(e.j));
  std::vector<Tuple> out;
  for (std::size_t root = 0; root < graph_.size(); ++root) {
    if (uf.find(root) != root) continue;
    Tuple t = Tuple::zero(graph_.size(), d);
    for (std::size_t k = 0; k < graph_.size(); ++k)
      if (uf.find(k) == root) t.coeffs[k] = Rational(1);
    out.push_back(std::move(t));
  }
  return out;
}

bool CongruenceRing::contains(const Tuple& t) const {
  if (t.size() != graph_.size()) throw ValidationError("tuple component count differs from graph");
  for (const auto& e : graph_.edges())
    if (t.degree < e.multiplicity && t.coeffs[graph_.position(e.i)] != t.coeffs[graph_.position(e.j)])
      return false;
  return true;
}

CongruenceRing gkm_ring(const Graph& g) { return CongruenceRing(g); }

OrdinaryBetti gkm_ordinary_betti(const Graph& g, int max_degree) {
  OrdinaryBetti out;
  if (g.connected_components() != 1)
    out.warnings.push_back("graph has " + std::to_string(g.connected_components()) +
                           " connected components; Betti numbers add over them");
  out.dims = successive_differences(hilbert_function(gkm_ring(g), max_degree));
  for (long x : out.dims)
    if (x < 0) throw ValidationError("GKM graph gives negative Betti numbers (non-formal input)");
  return out;
}

std::string status_name(Status s) {
  switch (s) {
    case Status::Principal: return "Principal";
    case Status::NotPrincipal: return "NotPrincipal";
    case Status::InconclusiveAtBound: return "InconclusiveAtBound";
  }
  return "?";
}

HilbertComparison compare_hilbert(const GradedSubalgebra& sub, const CongruenceRing& ring,
                                  int max_degree) {
  if (sub.components() != ring.components())
    throw ValidationError("subring and GKM ring have different component counts");
  HilbertComparison out;
  out.sub_hilbert = hilbert_function(sub, max_degree);
  out.gkm_hilbert = hilbert_function(ring, max_degree);
  for (int d = 0; d <= max_degree; ++d) {
    const auto k = static_cast<std::size_t>(d);
    if (out.sub_hilbert[k] > out.gkm_hilbert[k])
      throw InvariantViolation("subring larger than the congruence ring containing it");
    if (out.sub_hilbert[k] < out.gkm_hilbert[k]) {
      out.outcome = HilbertComparison::Outcome::Deficit;
      out.witness = d;
      return out;
    }
  }
  const std::size_t full = ring.components();
  const auto last = static_cast<std::size_t>(max_degree);
  out.outcome = out.sub_hilbert[last] == full && out.gkm_hilbert[last] == full
                    ? HilbertComparison::Outcome::Equal
                    : HilbertComparison::Outcome::Undecided;
  return out;
}

PrincipalityVerdict principal_verdict(const curve::CurveRing& cr, const Graph& g, int max_degree) {
  if (max_degree < 0) throw ValidationError("negative degree bound");
  if (g.vertices().back() > cr.r())
    throw ValidationError("GKM vertex " + std::to_string(g.vertices().back()) +
                          " is not a fixed point of X (r = " + std::to_string(cr.r()) + ")");
  PrincipalityVerdict verdict;
  verdict.bound = max_degree;
  if (g.vertices().front() != 1)
    verdict.warnings.push_back("fixed point 1 (o) is not in Y; a nonempty B-invariant Y contains o");

  GradedSubalgebra image = curve::restrict(cr, g.vertices());
  CongruenceRing ring = gkm_ring(g);
  for (const auto& gen : image.generators())
    if (!ring.contains(gen))
      throw ValidationError("restriction of " + gen.str() +
                            " violates the GKM congruences; the graph does not model H_T(Y)");

  HilbertComparison cmp = compare_hilbert(image, ring, max_degree);
  verdict.image_hilbert = std::move(cmp.sub_hilbert);
  verdict.gkm_hilbert = std::move(cmp.gkm_hilbert);
  verdict.witness = cmp.witness;
  switch (cmp.outcome) {
    case HilbertComparison::Outcome::Equal: verdict.status = Status::Principal; break;
    case HilbertComparison::Outcome::Deficit: verdict.status = Status::NotPrincipal; break;
    case HilbertComparison::Outcome::Undecided: verdict.status = Status::InconclusiveAtBound; break;
  }
  return verdict;
}

}  // namespace bcoh::gkm
