#include "bcoh/json_io.hpp"

#include <string>

#include "bcoh/error.hpp"

namespace bcoh::io {
namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("invalid ") + what + ": " + e.what());
  }
}

Matrix<Rational> parse_matrix(const Json& j, const char* what) {
  if (!j.is_array()) throw ValidationError(std::string(what) + " must be a list of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j.at(0).size();
  Matrix<Rational> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw ValidationError(std::string(what) + " rows must have equal length");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = parse_rational(j[i][k]);
  }
  return m;
}

}  // namespace

Rational parse_rational(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw ValidationError("rational must be a string \"p/q\" or an integer, got " + j.dump());
}

Json to_json(const Rational& r) { return r.str(); }

Tuple parse_tuple(const Json& j) {
  return guarded("tuple", [&] {
    Tuple t;
    t.degree = j.at("degree").get<int>();
    if (t.degree < 0) throw ValidationError("tuple degree must be >= 0");
    for (const auto& c : j.at("coeffs")) t.coeffs.push_back(parse_rational(c));
    return t;
  });
}

Json to_json(const Tuple& t) {
  Json coeffs = Json::array();
  for (const auto& c : t.coeffs) coeffs.push_back(c.str());
  return Json{{"degree", t.degree}, {"coeffs", coeffs}};
}

std::vector<Tuple> parse_tuples(const Json& j) {
  return guarded("tuple list", [&] {
    const Json& list = j.is_object() ? j.at("generators") : j;
    if (!list.is_array()) throw ValidationError("expected a list of tuples");
    std::vector<Tuple> out;
    for (const auto& t : list) out.push_back(parse_tuple(t));
    return out;
  });
}

Json to_json(const Poly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.str());
  return out;
}

Json to_json(const Matrix<Rational>& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).str());
    out.push_back(std::move(row));
  }
  return out;
}

action::ActionModel parse_action(const Json& j) {
  return guarded("action spec", [&] {
    action::ActionModel m;
    m.n = j.at("n").get<int>();
    if (m.n < 1) throw ValidationError("n must be >= 1");
    m.h_weights = j.at("h_weights").get<std::vector<long>>();
    const Json& e = j.at("e_matrix");
    const auto dim = static_cast<std::size_t>(m.n) + 1;
    if (e.is_string()) {
      if (e.get<std::string>() != "principal")
        throw ValidationError("e_matrix shorthand must be \"principal\"");
      m.e = action::principal_model(m.n).e;
    } else {
      m.e = parse_matrix(e, "e_matrix");
    }
    if (m.e.rows() != dim || m.e.cols() != dim) throw ValidationError("e_matrix must be (n+1)x(n+1)");
    return m;
  });
}

Json to_json(const action::ActionModel& m) {
  Json order = Json::array();
  for (auto i : m.coordinate_order) order.push_back(i + 1);
  return Json{{"n", m.n}, {"h_weights", m.h_weights}, {"e_matrix", to_json(m.e)},
              {"coordinate_order", order}};
}

gkm::Graph parse_graph(const Json& j) {
  return guarded("GKM graph", [&] {
    ComponentSet vertices;
    for (const auto& v : j.at("vertices")) {
      long label = v.get<long>();
      if (label < 1) throw ValidationError("GKM vertex labels start at 1");
      vertices.push_back(static_cast<std::size_t>(label));
    }
    std::vector<gkm::Edge> edges;
    for (const auto& e : j.value("edges", Json::array())) {
      if (!e.is_array() || e.size() < 2 || e.size() > 3)
        throw ValidationError("GKM edge must be [i, j] or [i, j, m]");
      long i = e[0].get<long>(), k = e[1].get<long>();
      if (i < 1 || k < 1) throw ValidationError("GKM edge endpoints start at 1");
      edges.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(k),
                       e.size() == 3 ? e[2].get<int>() : 1});
    }
    return gkm::Graph(std::move(vertices), std::move(edges));
  });
}

chern::BundleData parse_bundle(const Json& j) {
  return guarded("bundle spec", [&] {
    const long rank = j.at("rank").get<long>();
    if (rank < 0) throw ValidationError("bundle rank must be >= 0");
    std::map<std::size_t, chern::Fibre> fibres;
    for (const auto& [key, fibre] : j.at("fibres").items()) {
      std::size_t label = 0;
      try {
        label = std::stoul(key);
      } catch (const std::exception&) {
        throw ValidationError("fibre key \"" + key + "\" is not a fixed-point label");
      }
      if (fibre.contains("weights")) {
        fibres.emplace(label, fibre.at("weights").get<chern::Weights>());
      } else {
        fibres.emplace(label, chern::MatrixPair{parse_matrix(fibre.at("rho_W"), "rho_W"),
                                                parse_matrix(fibre.at("rho_V"), "rho_V")});
      }
    }
    return chern::BundleData(static_cast<std::size_t>(rank), std::move(fibres));
  });
}

}  // namespace bcoh::io
