#include "bcoh/chern.hpp"

#include <algorithm>

#include "bcoh/action.hpp"

namespace bcoh::chern {

BundleData::BundleData(std::size_t rank, std::map<std::size_t, Fibre> fibres)
    : rank_(rank), fibres_(std::move(fibres)) {
  if (fibres_.empty()) throw ValidationError("bundle needs at least one fibre");
  for (const auto& [label, fibre] : fibres_) {
    const std::string where = " at fixed point " + std::to_string(label);
    if (label < 1) throw ValidationError("fixed-point labels start at 1");
    if (const auto* w = std::get_if<Weights>(&fibre)) {
      if (w->size() != rank_) throw ValidationError("fibre rank mismatch" + where);
      continue;
    }
    const auto& pair = std::get<MatrixPair>(fibre);
    if (pair.rho_w.rows() != rank_ || !pair.rho_w.is_square() || pair.rho_v.rows() != rank_ ||
        !pair.rho_v.is_square())
      throw ValidationError("fibre matrices must be rank x rank" + where);
    if (commutator(pair.rho_w, pair.rho_v) != Rational(2) * pair.rho_v)
      throw ValidationError("[rho_W, rho_V] = 2 rho_V fails" + where);
    if (!pair.rho_v.pow(static_cast<unsigned>(rank_)).is_zero())
      throw ValidationError("rho_V is not nilpotent" + where);
  }
}

ComponentSet BundleData::support() const {
  ComponentSet out;
  for (const auto& [label, fibre] : fibres_) out.push_back(label);
  return out;
}

BundleData tangent_bundle(const action::ActionModel& model) {
  action::ActionModel valid = action::validate(model);
  std::map<std::size_t, Fibre> fibres;
  for (std::size_t j = 0; j < valid.h_weights.size(); ++j) {
    Weights w;
    for (std::size_t i = 0; i < valid.h_weights.size(); ++i)
      if (i != j) w.push_back(valid.h_weights[j] - valid.h_weights[i]);
    fibres.emplace(j + 1, std::move(w));
  }
  return BundleData(static_cast<std::size_t>(valid.n), std::move(fibres));
}

namespace {

MatrixPair as_matrices(const Fibre& f) {
  if (const auto* pair = std::get_if<MatrixPair>(&f)) return *pair;
  const auto& w = std::get<Weights>(f);
  MatrixPair out{Matrix<Rational>(w.size(), w.size()), Matrix<Rational>(w.size(), w.size())};
  for (std::size_t i = 0; i < w.size(); ++i) out.rho_w(i, i) = Rational(w[i]);
  return out;
}

Matrix<Rational> block_diagonal(const Matrix<Rational>& a, const Matrix<Rational>& b) {
  Matrix<Rational> out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

}  // namespace

BundleData direct_sum(const BundleData& a, const BundleData& b) {
  if (a.support() != b.support()) throw ValidationError("direct sum needs a common support");
  std::map<std::size_t, Fibre> fibres;
  for (const auto& [label, fa] : a.fibres()) {
    const Fibre& fb = b.fibres().at(label);
    const auto* wa = std::get_if<Weights>(&fa);
    const auto* wb = std::get_if<Weights>(&fb);
    if (wa != nullptr && wb != nullptr) {
      Weights w = *wa;
      w.insert(w.end(), wb->begin(), wb->end());
      fibres.emplace(label, std::move(w));
      continue;
    }
    MatrixPair pa = as_matrices(fa), pb = as_matrices(fb);
    fibres.emplace(label, MatrixPair{block_diagonal(pa.rho_w, pb.rho_w),
                                     block_diagonal(pa.rho_v, pb.rho_v)});
  }
  return BundleData(a.rank() + b.rank(), std::move(fibres));
}

Rational elementary_symmetric(const std::vector<Rational>& values, std::size_t k) {
  // e[j] after processing a prefix; standard recurrence.
  std::vector<Rational> e(k + 1, Rational(0));
  e[0] = Rational(1);
  for (const auto& x : values)
    for (std::size_t j = k; j >= 1; --j) e[j] += x * e[j - 1];
  return e[k];
}

Tuple chern_tuple(const BundleData& bd, std::size_t k, const curve::CurveRing& cr) {
  if (k > bd.rank()) throw ValidationError("Chern class degree exceeds the bundle rank");
  const ComponentSet support = bd.support();
  if (support.back() > cr.r())
    throw ValidationError("bundle fibre at " + std::to_string(support.back()) +
                          " is not over a fixed point of X");
  Tuple out;
  out.degree = static_cast<int>(k);
  const Poly v = Poly::variable();
  for (const auto& [label, fibre] : bd.fibres()) {
    if (const auto* w = std::get_if<Weights>(&fibre)) {
      std::vector<Rational> vals(w->begin(), w->end());
      out.coeffs.push_back(elementary_symmetric(vals, k));
      continue;
    }
    const auto& pair = std::get<MatrixPair>(fibre);
    Matrix<Poly> section = v * Matrix<Poly>::from(pair.rho_w) - Poly(2) * Matrix<Poly>::from(pair.rho_v);
    Poly trace = exterior_trace(section, k);
    if (!trace.is_monomial() || (!trace.is_zero() && trace.degree() != static_cast<int>(k)))
      throw InvariantViolation("exterior trace of v rho_W - 2 rho_V is not c v^k at fixed point " +
                               std::to_string(label));
    out.coeffs.push_back(trace.coeff(static_cast<int>(k)));
  }
  return out;
}

bool chern_membership(const BundleData& bd, std::size_t k, const curve::CurveRing& cr) {
  return member(chern_tuple(bd, k, cr), curve::restrict(cr, bd.support()));
}

std::string status_name(SubalgebraStatus s) {
  switch (s) {
    case SubalgebraStatus::Generates: return "Generates";
    case SubalgebraStatus::ProperSubalgebra: return "ProperSubalgebra";
    case SubalgebraStatus::InconclusiveAtBound: return "InconclusiveAtBound";
  }
  return "?";
}

SubalgebraVerdict chern_subalgebra_verdict(const std::vector<Tuple>& generators,
                                           const gkm::Graph& g, int max_degree) {
  if (max_degree < 0) throw ValidationError("negative degree bound");
  gkm::CongruenceRing ring = gkm::gkm_ring(g);
  std::vector<Tuple> gens{Tuple::ones(g.size(), 1)};
  for (const auto& t : generators) {
    if (t.size() != g.size())
      throw ValidationError("generator " + t.str() + " has the wrong number of components");
    if (!ring.contains(t))
      throw ValidationError("generator " + t.str() + " violates the GKM congruences");
    gens.push_back(t);
  }
  GradedSubalgebra sub(g.size(), std::move(gens));
  gkm::HilbertComparison cmp = gkm::compare_hilbert(sub, ring, max_degree);

  SubalgebraVerdict out;
  out.bound = max_degree;
  out.witness = cmp.witness;
  out.subalgebra_hilbert = std::move(cmp.sub_hilbert);
  out.gkm_hilbert = std::move(cmp.gkm_hilbert);
  switch (cmp.outcome) {
    case gkm::HilbertComparison::Outcome::Equal: out.status = SubalgebraStatus::Generates; break;
    case gkm::HilbertComparison::Outcome::Deficit: out.status = SubalgebraStatus::ProperSubalgebra; break;
    case gkm::HilbertComparison::Outcome::Undecided:
      out.status = SubalgebraStatus::InconclusiveAtBound;
      break;
  }
  return out;
}

}  // namespace bcoh::chern
