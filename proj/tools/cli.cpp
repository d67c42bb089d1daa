#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "posetfano/catalog.hpp"
#include "posetfano/constructions.hpp"
#include "posetfano/ehrhart.hpp"
#include "posetfano/io.hpp"
#include "posetfano/reflexive.hpp"
#include "posetfano/toric.hpp"

using json = nlohmann::ordered_json;
using namespace posetfano;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitClaimFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

json rat_json(const Rat& r) {
  json j;
  j["num"] = numerator(r).str();
  j["den"] = denominator(r).str();
  return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void emit_to(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-")
    std::cout << text << "\n";
  else
    io::write_file(path, text);
}

Poset load_poset(const std::string& path) {
  return io::parse_poset(io::read_file(path));
}

int cmd_build(const std::string& kind, const std::vector<std::string>& inputs,
              const std::string& output) {
  static const std::map<std::string, PairKind> pair_kinds = {
      {"gamma-oo", PairKind::GammaOO}, {"gamma-oc", PairKind::GammaOC},
      {"gamma-cc", PairKind::GammaCC}, {"omega-oo", PairKind::OmegaOO},
      {"omega-oc", PairKind::OmegaOC}, {"omega-cc", PairKind::OmegaCC}};
  LatticePolytope poly = [&] {
    Poset p = load_poset(inputs.at(0));
    if (kind == "order") return order_polytope(p);
    if (kind == "chain") return chain_polytope(p);
    Poset q = inputs.size() > 1 ? load_poset(inputs.at(1)) : p;
    return build_pair(pair_kinds.at(kind), p, q);
  }();
  emit_to(output, io::serialize_polytope(poly));
  return kExitPass;
}

int cmd_analyze(const std::string& input, int max_level,
                long long point_budget) {
  LatticePolytope poly = io::parse_polytope(io::read_file(input));
  NormalityOptions opts;
  opts.max_level = max_level;
  opts.point_budget = point_budget;
  AnalysisReport rep = reflexivity_report(poly, opts);
  std::cout << io::serialize_report(rep) << "\n";
  return kExitPass;
}

int cmd_ehrhart(const std::string& input) {
  LatticePolytope poly = io::parse_polytope(io::read_file(input));
  EhrhartPolynomial e = ehrhart_polynomial(poly);
  json j;
  j["ehrhart"] = json::array();
  for (const Rat& c : e.coeffs) j["ehrhart"].push_back(rat_json(c));
  emit(j);
  return kExitPass;
}

int cmd_volume(const std::vector<std::string>& methods,
               const std::vector<std::string>& inputs) {
  Poset p = load_poset(inputs.at(0));
  Poset q = inputs.size() > 1 ? load_poset(inputs.at(1)) : p;
  std::optional<Rat> by_ehrhart, by_linext;
  for (const std::string& m : methods) {
    if (m == "ehrhart")
      by_ehrhart = volume(build_pair(PairKind::OmegaOC, p, q));
    else
      by_linext = volume_omega_formula(p, q);
  }
  json j;
  if (by_ehrhart) j["ehrhart"] = rat_json(*by_ehrhart);
  if (by_linext) j["linext"] = rat_json(*by_linext);
  bool match = !(by_ehrhart && by_linext) || *by_ehrhart == *by_linext;
  if (by_ehrhart && by_linext) j["match"] = match;
  emit(j);
  return match ? kExitPass : kExitClaimFailed;
}

int cmd_groebner(const std::string& family_str, int degree,
                 const std::vector<std::string>& inputs) {
  Poset p = load_poset(inputs.at(0));
  Poset q = inputs.size() > 1 ? load_poset(inputs.at(1)) : p;
  Family family = family_str == "oo"   ? Family::OO
                  : family_str == "oc" ? Family::OC
                                       : Family::CC;
  if (family == Family::OO && !p.has_common_linear_extension(q))
    throw NoCommonLinearExtension("family oo requires a common linear extension");
  BinomialSystem sys(family, p, q);
  json j;
  j["family"] = family_str;
  j["variables"] = sys.var_count();
  j["generators"] = (long long)sys.generators().size();
  bool spair_ok = sys.spair_reduce_verify();
  j["spair_ok"] = spair_ok;
  bool squarefree = is_squarefree(sys.initial_ideal());
  j["squarefree"] = squarefree;
  bool spanning = sys.lattice_spanning();
  j["lattice_spanning"] = spanning;
  LatticePolytope om = sys.omega_polytope();
  bool all_ok = spair_ok && squarefree && spanning;
  j["degrees"] = json::array();
  for (int n = 0; n <= degree; ++n) {
    Int count = sys.standard_monomial_count(n);
    Int points = om.lattice_point_count(n);
    json dj;
    dj["degree"] = n;
    dj["standard_monomials"] = count.str();
    dj["lattice_points"] = points.str();
    dj["hilbert_match"] = (count == points);
    all_ok = all_ok && count == points;
    j["degrees"].push_back(dj);
  }
  bool injective = sys.injectivity_check(degree);
  j["injective"] = injective;
  all_ok = all_ok && injective;
  j["verified"] = all_ok;
  emit(j);
  return all_ok ? kExitPass : kExitClaimFailed;
}

int cmd_classify2d() {
  std::vector<ReflexiveClass> classes = classify_reflexive_2d();
  json j;
  j["class_count"] = (long long)classes.size();
  std::map<int, int> histogram;
  j["classes"] = json::array();
  for (const ReflexiveClass& c : classes) {
    ++histogram[c.boundary_points];
    json cj;
    cj["vertices"] = json::array();
    for (const Vec& v : c.representative.vertices()) cj["vertices"].push_back(v);
    cj["boundary_points"] = c.boundary_points;
    cj["ehrhart"] = json::array();
    for (const Rat& x : c.ehrhart.coeffs) cj["ehrhart"].push_back(rat_json(x));
    cj["normal"] = c.normal;
    j["classes"].push_back(cj);
  }
  j["histogram_by_boundary_points"] = json::object();
  for (auto [b, n] : histogram)
    j["histogram_by_boundary_points"][std::to_string(b)] = n;
  emit(j);
  bool ok = classes.size() == 16 &&
            histogram == std::map<int, int>{{3, 1}, {4, 3}, {5, 2}, {6, 4},
                                            {7, 2}, {8, 3}, {9, 1}};
  return ok ? kExitPass : kExitClaimFailed;
}

int cmd_examples() {
  int failures = 0;
  auto claim = [&](const std::string& name, bool ok) {
    std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "\n";
    if (!ok) ++failures;
  };

  {
    LatticePolytope p9 = catalog::p9_polytope();
    claim("p9-is-normal", is_normal(p9).normal);
    LatticePolytope om = omega(p9, p9);
    claim("omega-p9-reflexive", is_reflexive(om));
    NormalityCertificate cert = is_normal(om);
    claim("omega-p9-not-normal", !cert.normal);
    claim("omega-p9-witness-rechecks", recheck_witness(om, cert));
  }
  {
    Poset p = catalog::six_element_poset();
    Poset pb = p.adjoin_bottom();
    FVector f_om = build_pair(PairKind::OmegaCC, p, p).f_vector();
    claim("f-vector-separation-oo",
          !(f_om == build_pair(PairKind::GammaOO, pb, pb).f_vector()));
    claim("f-vector-separation-cc",
          !(f_om == build_pair(PairKind::GammaCC, pb, pb).f_vector()));
  }
  {
    Poset pb = catalog::six_element_poset().adjoin_bottom();
    LatticePolytope base = build_pair(PairKind::GammaCC, pb, pb);
    bool same = true;
    for (int k = 1; k <= 3; ++k) {
      Poset pk = catalog::seven_element_poset(k);
      same = same && build_pair(PairKind::GammaCC, pk, pk) == base;
    }
    claim("gamma-cc-vertex-set-identities", same);
    claim("equi-ehrhart-family",
          ehrhart_equal(catalog::equi_ehrhart_family()).equal);
  }
  {
    bool ok = true;
    for (int d = 2; d <= 4; ++d) {
      EhrhartPolynomial e =
          ehrhart_polynomial(catalog::standard_reflexive_simplex(d));
      for (int n = 0; n <= 2 * d && ok; ++n) {
        Int expect = 0;
        for (int i = 0; i <= d; ++i) expect += binomial(Int(n + d - i), d);
        ok = e.evaluate(n) == Rat(expect);
      }
    }
    claim("simplex-ehrhart-formula", ok);
  }
  {
    std::vector<ReflexiveClass> classes = classify_reflexive_2d();
    std::map<int, int> histogram;
    for (const ReflexiveClass& c : classes) ++histogram[c.boundary_points];
    claim("census-16-classes", classes.size() == 16);
    claim("census-histogram",
          histogram == std::map<int, int>{{3, 1}, {4, 3}, {5, 2}, {6, 4},
                                          {7, 2}, {8, 3}, {9, 1}});
  }
  return failures == 0 ? kExitPass : kExitClaimFailed;
}

json error_json(const std::string& type, const std::string& message) {
  json j;
  j["error"]["type"] = type;
  j["error"]["message"] = message;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact geometry of poset polytopes and their reflexive pairings"};
  app.require_subcommand(1);

  std::string kind, output;
  std::vector<std::string> inputs;
  auto* build = app.add_subcommand("build", "Construct a polytope from posets");
  build->add_option("--kind", kind, "Construction")
      ->required()
      ->check(CLI::IsMember({"order", "chain", "gamma-oo", "gamma-oc",
                             "gamma-cc", "omega-oo", "omega-oc", "omega-cc"}));
  build->add_option("inputs", inputs, "Poset JSON files")->expected(1, 2);
  build->add_option("-o,--output", output, "Output file (default stdout)");

  std::string analyze_input;
  int max_level = 0;
  long long point_budget = 50'000'000;
  auto* analyze = app.add_subcommand("analyze", "Full invariant report");
  analyze->add_option("input", analyze_input, "Polytope JSON file")->required();
  analyze->add_flag("--reflexive", "Included in the report (always computed)");
  analyze->add_flag("--normal", "Included in the report (always computed)");
  analyze->add_option("--max-level", max_level, "Deepest normality dilation");
  analyze->add_option("--point-budget", point_budget, "Normality point budget");

  std::string ehrhart_input;
  auto* ehr = app.add_subcommand("ehrhart", "Ehrhart polynomial of a polytope");
  ehr->add_option("input", ehrhart_input, "Polytope JSON file")->required();

  std::vector<std::string> methods;
  std::vector<std::string> vol_inputs;
  auto* vol = app.add_subcommand(
      "volume", "Volume of the omega pairing of order and chain polytopes");
  vol->add_option("--method", methods, "ehrhart and/or linext")
      ->check(CLI::IsMember({"ehrhart", "linext"}))
      ->allow_extra_args(false);
  vol->add_option("inputs", vol_inputs, "Poset JSON files")->expected(1, 2);

  std::string family = "oc";
  int degree = 4;
  std::vector<std::string> gro_inputs;
  auto* gro = app.add_subcommand("groebner", "Binomial basis verification suite");
  gro->add_option("--family", family, "oo, oc or cc")
      ->check(CLI::IsMember({"oo", "oc", "cc"}));
  gro->add_option("--degree", degree, "Hilbert check depth");
  gro->add_option("inputs", gro_inputs, "Poset JSON files")->expected(1, 2);

  app.add_subcommand("classify2d", "Census of reflexive polygons");
  app.add_subcommand("paper-examples",
                     "Replay the built-in example fixtures and their claims");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (build->parsed()) return cmd_build(kind, inputs, output);
    if (analyze->parsed())
      return cmd_analyze(analyze_input, max_level, point_budget);
    if (ehr->parsed()) return cmd_ehrhart(ehrhart_input);
    if (vol->parsed()) {
      if (methods.empty()) methods = {"ehrhart", "linext"};
      return cmd_volume(methods, vol_inputs);
    }
    if (gro->parsed()) return cmd_groebner(family, degree, gro_inputs);
    if (app.get_subcommand("classify2d")->parsed()) return cmd_classify2d();
    if (app.get_subcommand("paper-examples")->parsed()) return cmd_examples();
  } catch (const ParseError& e) {
    emit(error_json("parse", e.what()));
    return kExitUsage;
  } catch (const CycleDetected& e) {
    emit(error_json("cycle", e.what()));
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    emit(error_json("budget", e.what()));
    return kExitBudget;
  } catch (const SearchBudgetExceeded& e) {
    emit(error_json("budget", e.what()));
    return kExitBudget;
  } catch (const Error& e) {
    emit(error_json("domain", e.what()));
    return kExitClaimFailed;
  } catch (const std::exception& e) {
    emit(error_json("internal", e.what()));
    return kExitClaimFailed;
  }
  return kExitUsage;
}
