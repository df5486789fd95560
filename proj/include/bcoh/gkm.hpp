#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bcoh/curve.hpp"
#include "bcoh/graded.hpp"

namespace bcoh::gkm {

struct Edge {
  std::size_t i = 0;
  std::size_t j = 0;
  int multiplicity = 1;  // f_i = f_j mod v^multiplicity
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Moment graph over a one-dimensional torus: the vertices are fixed-point
// labels, an edge (i, j, m) is a stable curve imposing f_i = f_j mod v^m.
class Graph {
 public:
  Graph(ComponentSet vertices, std::vector<Edge> edges);

  [[nodiscard]] const ComponentSet& vertices() const { return vertices_; }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] std::size_t size() const { return vertices_.size(); }
  // Position of a label in vertices().
  [[nodiscard]] std::size_t position(std::size_t label) const;
  [[nodiscard]] std::size_t connected_components() const { return connected_components_; }
  [[nodiscard]] int max_multiplicity() const;

 private:
  ComponentSet vertices_;
  std::vector<Edge> edges_;
  std::size_t connected_components_ = 0;
};

// The congruence ring: degree d piece is { c : c_i = c_j for every edge
// with d < m }. Components follow graph.vertices() order.
class CongruenceRing {
 public:
  explicit CongruenceRing(Graph graph) : graph_(std::move(graph)) {}

  [[nodiscard]] const Graph& graph() const { return graph_; }
  [[nodiscard]] std::size_t components() const { return graph_.size(); }
  [[nodiscard]] std::size_t dimension(int d) const { return basis(d).size(); }
  // Indicator vectors of the classes glued in degree d.
  [[nodiscard]] std::vector<Tuple> basis(int d) const;
  [[nodiscard]] bool contains(const Tuple& t) const;

 private:
  Graph graph_;
};

CongruenceRing gkm_ring(const Graph& g);

struct OrdinaryBetti {
  std::vector<long> dims;
  std::vector<std::string> warnings;
};

// Successive differences of the Hilbert function of gkm_ring(g). Throws
// ValidationError if an entry is negative (non-formal input).
OrdinaryBetti gkm_ordinary_betti(const Graph& g, int max_degree);

enum class Status { Principal, NotPrincipal, InconclusiveAtBound };
std::string status_name(Status s);

struct PrincipalityVerdict {
  Status status = Status::InconclusiveAtBound;
  std::optional<int> witness;  // first degree where the image is smaller
  int bound = 0;
  std::vector<std::size_t> image_hilbert;  // restriction of the curve ring
  std::vector<std::size_t> gkm_hilbert;
  std::vector<std::string> warnings;
};

// Shared degree-by-degree comparison of a subring against the congruence
// ring it must sit in. `full_rank` is the number of components.
struct HilbertComparison {
  enum class Outcome { Equal, Deficit, Undecided } outcome = Outcome::Undecided;
  std::optional<int> witness;
  std::vector<std::size_t> sub_hilbert;
  std::vector<std::size_t> gkm_hilbert;
};
HilbertComparison compare_hilbert(const GradedSubalgebra& sub, const CongruenceRing& ring,
                                  int max_degree);

// Compares the image of restriction from X (the curve ring restricted to
// the graph's vertices) with the modelled H_T(Y). Throws ValidationError if
// the vertex labels exceed r, or if the image does not lie in the
// congruence ring (then the graph cannot model H_T(Y)).
PrincipalityVerdict principal_verdict(const curve::CurveRing& cr, const Graph& g, int max_degree);

}  // namespace bcoh::gkm
