#include "bcoh/rootsystems.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <unordered_set>

#include "bcoh/error.hpp"
#include "bcoh/linalg.hpp"
#include "bcoh/poly.hpp"

namespace bcoh::roots {
namespace {

constexpr long long kWeylGuard = 1'000'000;

IntVector unit(int dim, int i, long scale = 1) {
  IntVector v(static_cast<std::size_t>(dim), 0);
  v[static_cast<std::size_t>(i)] = scale;
  return v;
}

IntVector add(IntVector a, const IntVector& b, long sb = 1) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += sb * b[k];
  return a;
}

IntVector negate(IntVector a) {
  for (auto& x : a) x = -x;
  return a;
}

long dot(const IntVector& a, const IntVector& b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0L);
}

void check_rank(Family f, int rank) {
  bool ok = false;
  switch (f) {
    case Family::A: ok = rank >= 1 && rank <= 8; break;
    case Family::B: ok = rank >= 2 && rank <= 8; break;
    case Family::C: ok = rank >= 2 && rank <= 8; break;
    case Family::D: ok = rank >= 3 && rank <= 8; break;
    case Family::G: ok = rank == 2; break;
    case Family::F: ok = rank == 4; break;
  }
  if (!ok)
    throw ValidationError("unsupported root system " + family_name(f) + " of rank " + std::to_string(rank));
}

// All roots (both signs) and the simple roots, from the classical lists.
std::pair<std::vector<IntVector>, std::vector<IntVector>> all_roots(Family f, int n) {
  std::vector<IntVector> roots, simple;
  auto pm_pairs = [&](int dim, bool with_plus) {
    for (int i = 0; i < dim; ++i)
      for (int j = i + 1; j < dim; ++j)
        for (long s : {1L, -1L}) {
          roots.push_back(add(unit(dim, i, s), unit(dim, j), -s));
          if (with_plus) roots.push_back(add(unit(dim, i, s), unit(dim, j), s));
        }
  };
  switch (f) {
    case Family::A:
      pm_pairs(n + 1, false);
      for (int i = 0; i < n; ++i) simple.push_back(add(unit(n + 1, i), unit(n + 1, i + 1), -1));
      break;
    case Family::B:
    case Family::C: {
      const long scale = f == Family::B ? 1 : 2;
      pm_pairs(n, true);
      for (int i = 0; i < n; ++i)
        for (long s : {1L, -1L}) roots.push_back(unit(n, i, s * scale));
      for (int i = 0; i + 1 < n; ++i) simple.push_back(add(unit(n, i), unit(n, i + 1), -1));
      simple.push_back(unit(n, n - 1, scale));
      break;
    }
    case Family::D:
      pm_pairs(n, true);
      for (int i = 0; i + 1 < n; ++i) simple.push_back(add(unit(n, i), unit(n, i + 1), -1));
      simple.push_back(add(unit(n, n - 2), unit(n, n - 1)));
      break;
    case Family::G:
      // Inside the plane x1 + x2 + x3 = 0 of R^3.
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j)
          if (i != j) roots.push_back(add(unit(3, i), unit(3, j), -1));
        IntVector long_root{-1, -1, -1};
        long_root[static_cast<std::size_t>(i)] = 2;
        roots.push_back(long_root);
        roots.push_back(negate(long_root));
      }
      simple = {{1, -1, 0}, {-2, 1, 1}};
      break;
    case Family::F:
      pm_pairs(4, true);
      for (auto& r : roots) r = add(r, r);  // long roots 2(+-e_i +- e_j)
      for (int i = 0; i < 4; ++i)
        for (long s : {1L, -1L}) roots.push_back(unit(4, i, 2 * s));
      for (int mask = 0; mask < 16; ++mask) {
        IntVector v(4);
        for (int i = 0; i < 4; ++i) v[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? -1 : 1;
        roots.push_back(v);
      }
      simple = {{0, 2, -2, 0}, {0, 0, 2, -2}, {0, 0, 0, 2}, {1, -1, -1, -1}};
      break;
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return {roots, simple};
}

std::optional<IntVector> solve_in_simple_basis(const std::vector<IntVector>& simple,
                                               const IntVector& root) {
  Matrix<Rational> a(root.size(), simple.size());
  for (std::size_t k = 0; k < simple.size(); ++k)
    for (std::size_t i = 0; i < root.size(); ++i) a(i, k) = Rational(simple[k][i]);
  RationalVector b;
  for (long x : root) b.emplace_back(x);
  auto x = solve_linear(a, b);
  if (!x) return std::nullopt;
  IntVector out;
  for (const auto& c : *x) {
    if (!c.is_integer()) return std::nullopt;
    out.push_back(c.to_long());
  }
  return out;
}

Poly one_minus_t_pow(int k) { return Poly(Rational(1)) - Poly::monomial(Rational(1), k); }

std::optional<PoincarePoly> product_formula(const std::vector<int>& degrees) {
  Poly num(Rational(1)), den(Rational(1));
  for (int d : degrees) {
    num *= one_minus_t_pow(d + 1);
    den *= one_minus_t_pow(d);
  }
  auto [q, rem] = num.divmod(den);
  if (!rem.is_zero()) return std::nullopt;
  PoincarePoly out;
  for (const auto& c : q.coeffs()) {
    if (!c.is_integer() || c.sign() < 0) return std::nullopt;
    out.coeffs.push_back(c.to_long());
  }
  return out;
}

struct VectorHash {
  std::size_t operator()(const IntVector& v) const {
    std::size_t h = 1469598103934665603ULL;
    for (long x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
    return h;
  }
};

}  // namespace

Family parse_family(std::string_view name) {
  if (name == "A") return Family::A;
  if (name == "B") return Family::B;
  if (name == "C") return Family::C;
  if (name == "D") return Family::D;
  if (name == "G" || name == "G2") return Family::G;
  if (name == "F" || name == "F4") return Family::F;
  throw ValidationError("unsupported root system family \"" + std::string(name) + "\"");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::G: return "G2";
    case Family::F: return "F4";
  }
  return "?";
}

IntVector RootSystem::simple_coordinates(const IntVector& root) const {
  auto c = solve_in_simple_basis(simple_roots, root);
  if (!c) throw ValidationError("vector is not in the root lattice");
  return *c;
}

std::vector<int> RootSystem::heights() const {
  std::vector<int> out;
  for (const auto& r : positive_roots) {
    IntVector c = simple_coordinates(r);
    out.push_back(static_cast<int>(std::accumulate(c.begin(), c.end(), 0L)));
  }
  return out;
}

RootSystem positive_roots(Family family, int rank) {
  check_rank(family, rank);
  auto [roots, simple] = all_roots(family, rank);
  RootSystem rs{family, rank, {}, simple};
  for (const auto& r : roots) {
    auto c = solve_in_simple_basis(simple, r);
    if (!c) throw InvariantViolation("root outside the simple-root lattice");
    bool nonneg = std::all_of(c->begin(), c->end(), [](long x) { return x >= 0; });
    bool nonpos = std::all_of(c->begin(), c->end(), [](long x) { return x <= 0; });
    if (nonneg == nonpos) throw InvariantViolation("root with mixed-sign simple coordinates");
    if (nonneg) rs.positive_roots.push_back(r);
  }
  if (rs.positive_roots.size() * 2 != roots.size())
    throw InvariantViolation("positive roots are not half of all roots");
  return rs;
}

long long PoincarePoly::value_at_one() const {
  return std::accumulate(coeffs.begin(), coeffs.end(), 0LL);
}

bool PoincarePoly::is_palindromic() const {
  return std::equal(coeffs.begin(), coeffs.end(), coeffs.rbegin());
}

PoincarePoly km_poincare(const RootSystem& rs) {
  auto p = product_formula(rs.heights());
  if (!p) throw InvariantViolation("product over root heights is not a polynomial");
  return *p;
}

PoincarePoly poincare_from_degrees(const std::vector<int>& degrees) {
  for (int d : degrees)
    if (d < 1) throw ValidationError("degrees must be positive integers");
  auto p = product_formula(degrees);
  if (!p) throw ValidationError("degrees do not come from a B-regular variety");
  return *p;
}

long long weyl_group_order(Family family, int rank) {
  check_rank(family, rank);
  long long fact = 1;
  for (int k = 2; k <= rank; ++k) fact *= k;
  switch (family) {
    case Family::A: return fact * (rank + 1);
    case Family::B:
    case Family::C: return fact << rank;
    case Family::D: return fact << (rank - 1);
    case Family::G: return 12;
    case Family::F: return 1152;
  }
  return 0;
}

PoincarePoly weyl_length_genfun(Family family, int rank) {
  if (weyl_group_order(family, rank) > kWeylGuard)
    throw ValidationError("Weyl group too large to enumerate (|W| > 10^6)");
  RootSystem rs = positive_roots(family, rank);

  IntVector two_rho(rs.positive_roots.front().size(), 0);
  for (const auto& r : rs.positive_roots) two_rho = add(two_rho, r);

  auto reflect = [](const IntVector& x, const IntVector& alpha) {
    long num = 2 * dot(x, alpha);
    long den = dot(alpha, alpha);
    if (num % den != 0) throw InvariantViolation("non-integral reflection on root lattice");
    return add(x, alpha, -(num / den));
  };

  std::unordered_set<IntVector, VectorHash> seen{two_rho};
  std::vector<IntVector> layer{two_rho};
  PoincarePoly out;
  while (!layer.empty()) {
    out.coeffs.push_back(static_cast<long long>(layer.size()));
    std::vector<IntVector> next;
    for (const auto& x : layer)
      for (const auto& alpha : rs.simple_roots) {
        IntVector y = reflect(x, alpha);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    layer = std::move(next);
  }
  return out;
}

}  // namespace bcoh::roots
