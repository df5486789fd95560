#include "bcoh/cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <array>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "bcoh/chern.hpp"
#include "bcoh/curve.hpp"
#include "bcoh/error.hpp"
#include "bcoh/gkm.hpp"
#include "bcoh/json_io.hpp"
#include "bcoh/rootsystems.hpp"

namespace bcoh::cli {
namespace {

using io::Json;

std::string sha256_hex(const std::string& data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
    throw InvariantViolation("SHA-256 digest failed");
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i)
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return hex.str();
}

// Collects inputs and results for one invocation.
class Report {
 public:
  explicit Report(const std::vector<std::string>& args) {
    std::string command = "bcoh";
    for (const auto& a : args) command += " " + a;
    json_["command"] = command;
    json_["inputs"] = Json::array();
    json_["exact_arithmetic"] = true;
    json_["truncation_degree"] = nullptr;
    json_["results"] = Json::object();
  }

  Json load(const std::string& role, const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot read " + role + " file \"" + path + "\"");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    json_["inputs"].push_back(Json{{"role", role}, {"path", path}, {"sha256", sha256_hex(text)}});
    try {
      return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ValidationError(role + " file \"" + path + "\" is not valid JSON: " + e.what());
    }
  }

  void builtin(const std::string& role, const std::string& name) {
    json_["inputs"].push_back(Json{{"role", role}, {"builtin", name}});
  }

  void set_bound(int d) { json_["truncation_degree"] = d; }
  Json& results() { return json_["results"]; }
  [[nodiscard]] const Json& json() const { return json_; }

 private:
  Json json_ = Json::object();
};

void render_table(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items())
      render_table(value, prefix.empty() ? key : prefix + "." + key, out);
    return;
  }
  if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& x) { return x.is_structured(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) render_table(j[i], prefix + "[" + std::to_string(i) + "]", out);
    return;
  }
  out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

Json sizes(const std::vector<std::size_t>& v) { return Json(v); }

Json tuples(const std::vector<Tuple>& ts) {
  Json out = Json::array();
  for (const auto& t : ts) out.push_back(io::to_json(t));
  return out;
}

Json labels(const ComponentSet& s) { return Json(s); }

struct Options {
  std::string family;
  int rank = 0;
  std::vector<int> degrees;
  bool check_oracle = false;
  std::string spec;
  std::string gkm;
  std::string bundle;
  std::string generators;
  std::vector<std::size_t> components;
  int max_degree = -1;
  int k = 1;
  bool test_membership = false;
  bool table = false;
};

int resolve_bound(const Options& o, int fallback) { return o.max_degree >= 0 ? o.max_degree : fallback; }

void cmd_poincare(const Options& o, Report& report) {
  Json& res = report.results();
  if (!o.degrees.empty()) {
    if (!o.family.empty()) throw ValidationError("give either --family/--rank or --degrees");
    res["degrees"] = o.degrees;
    res["poly"] = roots::poincare_from_degrees(o.degrees).coeffs;
    return;
  }
  if (o.family.empty()) throw ValidationError("poincare needs --family and --rank, or --degrees");
  roots::RootSystem rs = roots::positive_roots(roots::parse_family(o.family), o.rank);
  roots::PoincarePoly p = roots::km_poincare(rs);
  res["family"] = roots::family_name(rs.family);
  res["rank"] = rs.rank;
  res["positive_roots"] = rs.positive_roots.size();
  res["heights"] = rs.heights();
  res["poly"] = p.coeffs;
  res["value_at_one"] = p.value_at_one();
  if (o.check_oracle) {
    roots::PoincarePoly oracle = roots::weyl_length_genfun(rs.family, rs.rank);
    res["weyl_length_genfun"] = oracle.coeffs;
    res["oracle_agrees"] = oracle == p;
  }
}

action::ActionModel load_model(const Options& o, Report& report) {
  if (o.spec.empty()) throw ValidationError("--spec is required");
  return action::validate(io::parse_action(report.load("spec", o.spec)));
}

void cmd_action(const std::string& sub, const Options& o, Report& report) {
  Json& res = report.results();
  if (sub == "sl2-checks") {
    action::Sl2Report r = action::sl2_family_checks();
    res["mat_id"] = r.mat_id;
    res["conjugation"] = r.conjugation;
    res["section"] = r.section;
    res["section_at_zero_in_lie_u"] = r.section_at_zero_in_lie_u;
    Json limits = Json::array();
    for (const auto& s : r.limits)
      limits.push_back(Json{{"epsilon", s.epsilon.str()}, {"sign", s.sign}, {"limit", io::to_json(s.limit)},
                            {"unipotent_up_to_sign", s.unipotent_up_to_sign}, {"converges", s.converges}});
    res["limits"] = limits;
    return;
  }
  action::ActionModel m = load_model(o, report);
  res["model"] = io::to_json(m);
  if (sub == "validate") {
    res["regular"] = true;
    res["big_cell_degrees"] = action::big_cell_degrees(m);
  } else if (sub == "fixed-points") {
    Json pts = Json::array();
    for (const auto& p : action::fixed_points(m)) {
      Json pj = Json::array();
      for (const auto& c : p) pj.push_back(c.str());
      pts.push_back(pj);
    }
    res["fixed_points"] = pts;
  } else if (sub == "curve") {
    res["big_cell_degrees"] = action::big_cell_degrees(m);
    Json comps = Json::array();
    for (std::size_t j = 1; j <= static_cast<std::size_t>(m.n) + 1; ++j) {
      action::CurveComponent c = action::component_parametrization(m, j);
      Json coords = Json::array(), text = Json::array();
      for (const auto& u : c.chart_coords) {
        coords.push_back(io::to_json(u));
        text.push_back(u.str());
      }
      comps.push_back(Json{{"index", j}, {"chart_coords", coords}, {"display", text}});
    }
    res["components"] = comps;
  }
}

void cmd_curve(const std::string& sub, const Options& o, Report& report) {
  curve::CurveRing cr = curve::build_curve_ring(load_model(o, report));
  const int bound = resolve_bound(o, cr.default_degree_bound());
  report.set_bound(bound);
  Json& res = report.results();
  if (sub == "ring") {
    res["r"] = cr.r();
    res["generators"] = tuples(cr.algebra.generators());
    res["hilbert"] = sizes(hilbert_function(cr.algebra, bound));
  } else if (sub == "betti") {
    res["hilbert"] = sizes(hilbert_function(cr.algebra, bound));
    res["betti"] = curve::betti_numbers(cr, bound);
  } else {
    if (o.components.empty()) throw ValidationError("--components is required for curve " + sub);
    ComponentSet s = normalize_components(o.components, cr.r());
    res["components"] = labels(s);
    if (sub == "restrict") {
      GradedSubalgebra sub_ring = curve::restrict(cr, s);
      res["generators"] = tuples(sub_ring.generators());
      res["hilbert"] = sizes(hilbert_function(sub_ring, bound));
      std::vector<long> q = quotient_by_v_dims(sub_ring, bound);
      while (q.size() > 1 && q.back() == 0) q.pop_back();
      res["betti"] = q;
    } else {
      res["ideal_hilbert"] = sizes(curve::ideal_hilbert(cr, s, bound));
      res["expected_rank"] = cr.r() - s.size();
    }
  }
}

void cmd_principal(const Options& o, Report& report) {
  curve::CurveRing cr = curve::build_curve_ring(load_model(o, report));
  if (o.gkm.empty()) throw ValidationError("--gkm is required");
  gkm::Graph g = io::parse_graph(report.load("gkm", o.gkm));
  const int bound = resolve_bound(o, cr.default_degree_bound());
  report.set_bound(bound);
  gkm::PrincipalityVerdict v = gkm::principal_verdict(cr, g, bound);
  gkm::OrdinaryBetti betti = gkm::gkm_ordinary_betti(g, bound);
  Json& res = report.results();
  res["vertices"] = labels(g.vertices());
  res["status"] = gkm::status_name(v.status);
  res["witness_degree"] = v.witness ? Json(*v.witness) : Json(nullptr);
  res["image_hilbert"] = sizes(v.image_hilbert);
  res["gkm_hilbert"] = sizes(v.gkm_hilbert);
  res["gkm_betti"] = betti.dims;
  Json warnings(v.warnings);
  for (const auto& w : betti.warnings) warnings.push_back(w);
  res["warnings"] = warnings;
}

void cmd_chern(const Options& o, Report& report) {
  curve::CurveRing cr = curve::build_curve_ring(load_model(o, report));
  const int bound = resolve_bound(o, cr.default_degree_bound());
  report.set_bound(bound);
  Json& res = report.results();

  std::optional<chern::BundleData> bundle;
  if (o.bundle == "tangent") {
    report.builtin("bundle", "tangent");
    bundle = chern::tangent_bundle(cr.model);
  } else if (!o.bundle.empty()) {
    bundle = io::parse_bundle(report.load("bundle", o.bundle));
  }

  std::vector<Tuple> generators;
  if (bundle) {
    if (o.k < 0) throw ValidationError("--k must be >= 0");
    const auto k = static_cast<std::size_t>(o.k);
    res["support"] = labels(bundle->support());
    res["rank"] = bundle->rank();
    res["k"] = o.k;
    res["tuple"] = io::to_json(chern::chern_tuple(*bundle, k, cr));
    if (o.test_membership) res["membership"] = chern::chern_membership(*bundle, k, cr);
    for (std::size_t i = 1; i <= bundle->rank(); ++i) generators.push_back(chern::chern_tuple(*bundle, i, cr));
  }
  if (!o.generators.empty()) {
    std::vector<Tuple> extra = io::parse_tuples(report.load("generators", o.generators));
    generators.insert(generators.end(), extra.begin(), extra.end());
  }
  if (!bundle && o.generators.empty()) throw ValidationError("chern needs --bundle or --generators");

  if (!o.gkm.empty()) {
    gkm::Graph g = io::parse_graph(report.load("gkm", o.gkm));
    if (bundle && bundle->support() != g.vertices())
      throw ValidationError("bundle support differs from the GKM vertices");
    chern::SubalgebraVerdict v = chern::chern_subalgebra_verdict(generators, g, bound);
    res["verdict"] = Json{{"status", chern::status_name(v.status)},
                          {"witness_degree", v.witness ? Json(*v.witness) : Json(nullptr)},
                          {"generators", tuples(generators)},
                          {"subalgebra_hilbert", sizes(v.subalgebra_hilbert)},
                          {"gkm_hilbert", sizes(v.gkm_hilbert)}};
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equivariant cohomology of B-regular projective models, exact arithmetic", "bcoh"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--table", o.table, "Render as key: value lines instead of JSON");
  app.add_flag("--json", [&o](std::int64_t) { o.table = false; }, "Render as JSON (default)");

  auto* poincare = app.add_subcommand("poincare", "Poincare polynomials from roots or degrees");
  poincare->add_option("--family", o.family, "A, B, C, D, G2 or F4");
  poincare->add_option("--rank", o.rank, "Rank of the root system");
  poincare->add_option("--degrees", o.degrees, "Comma-separated big-cell degrees")->delimiter(',');
  poincare->add_flag("--check-oracle", o.check_oracle, "Also enumerate the Weyl group");

  auto add_spec = [&o](CLI::App* cmd) { cmd->add_option("--spec", o.spec, "Action spec JSON"); };
  auto add_bound = [&o](CLI::App* cmd) {
    cmd->add_option("--max-degree", o.max_degree, "Truncation degree (default 2 r max d_i)");
  };

  auto* action_cmd = app.add_subcommand("action", "Inspect a regular action on P^n");
  action_cmd->require_subcommand(1);
  for (const char* name : {"validate", "fixed-points", "curve"}) add_spec(action_cmd->add_subcommand(name));
  action_cmd->add_subcommand("sl2-checks", "Verify the SL2 identities");

  auto* curve_cmd = app.add_subcommand("curve", "Coordinate ring of the curve");
  curve_cmd->require_subcommand(1);
  for (const char* name : {"ring", "betti", "restrict", "ideal"}) {
    auto* c = curve_cmd->add_subcommand(name);
    add_spec(c);
    add_bound(c);
    c->add_option("--components", o.components, "Comma-separated fixed-point labels")->delimiter(',');
  }

  auto* principal = app.add_subcommand("principal", "Decide principality against a GKM graph");
  add_spec(principal);
  add_bound(principal);
  principal->add_option("--gkm", o.gkm, "GKM graph JSON");

  auto* chern_cmd = app.add_subcommand("chern", "Equivariant Chern classes on the curve");
  add_spec(chern_cmd);
  add_bound(chern_cmd);
  chern_cmd->add_option("--bundle", o.bundle, "Bundle JSON, or 'tangent'");
  chern_cmd->add_option("--k", o.k, "Chern class degree");
  chern_cmd->add_flag("--test-membership", o.test_membership, "Test c_k against the curve ring");
  chern_cmd->add_option("--gkm", o.gkm, "GKM graph JSON for the subalgebra verdict");
  chern_cmd->add_option("--generators", o.generators, "Extra generator tuples JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  Report report(args);
  try {
    if (poincare->parsed()) {
      cmd_poincare(o, report);
    } else if (action_cmd->parsed()) {
      cmd_action(action_cmd->get_subcommands().front()->get_name(), o, report);
    } else if (curve_cmd->parsed()) {
      cmd_curve(curve_cmd->get_subcommands().front()->get_name(), o, report);
    } else if (principal->parsed()) {
      cmd_principal(o, report);
    } else if (chern_cmd->parsed()) {
      cmd_chern(o, report);
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }

  if (o.table) {
    render_table(report.json(), "", out);
  } else {
    out << report.json().dump(2) << "\n";
  }
  return kOk;
}

}  // namespace bcoh::cli
