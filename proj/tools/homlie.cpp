// Command-line front end: one JSON report on stdout per invocation.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "homlie/acceptance.hpp"
#include "homlie/deriv_spaces.hpp"
#include "homlie/homlie_reps.hpp"
#include "homlie/report.hpp"

using namespace homlie;

namespace {

std::vector<Rational> parse_list(const std::string& text, std::size_t expected, const char* flag) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (expected != 0 && out.size() != expected)
    throw std::invalid_argument(std::string(flag) + " expects " + std::to_string(expected) + " comma-separated values");
  return out;
}

GenDer5 parse_tuple(const std::string& text) {
  const auto v = parse_list(text, 5, "--d");
  return GenDer5::from(v);
}

LieAlgebra load_algebra(const std::string& spec) {
  if (spec == "sl2") return sl2();
  if (const auto c = parse_classical_name(spec)) return classical(c->first, c->second);
  std::ifstream in(spec);
  if (!in) throw std::invalid_argument("--algebra: unknown algebra or unreadable file '" + spec + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_lie_algebra_json(buf.str(), spec);
}

std::string error_kind(const MathError& e) {
  if (dynamic_cast<const NoCanonicalForm*>(&e)) return "NoCanonicalForm";
  if (dynamic_cast<const ZeroDerivation*>(&e)) return "ZeroDerivation";
  if (dynamic_cast<const SkewViolation*>(&e)) return "SkewViolation";
  if (dynamic_cast<const JacobiViolation*>(&e)) return "JacobiViolation";
  if (dynamic_cast<const SingularMatrix*>(&e)) return "SingularMatrix";
  if (dynamic_cast<const NotAGenDer*>(&e)) return "NotAGenDer";
  if (dynamic_cast<const Unsupported*>(&e)) return "Unsupported";
  if (dynamic_cast<const NotInvariant*>(&e)) return "NotInvariant";
  if (dynamic_cast<const RepresentationViolation*>(&e)) return "RepresentationViolation";
  return "MathError";
}

Json der_results(const LieAlgebra& g, const std::vector<Rational>& t) {
  const auto basis = gen_derivations(g, {t[0], t[1], t[2]});
  return Json{{"algebra", g.name()},
              {"type", Json::array({to_json(t[0]), to_json(t[1]), to_json(t[2])})},
              {"dim", basis.dim()},
              {"basis", endomorphism_basis_json(basis)}};
}

Json hl_results(const LieAlgebra& g, bool is_sl2) {
  const auto basis = homlie_space(g);
  Json out{{"algebra", g.name()}, {"type", "HLJ"}, {"dim", basis.dim()}, {"basis", endomorphism_basis_json(basis)}};
  if (is_sl2) {
    Json weights = Json::array();
    for (const auto& [w, b] : ad_h_weight_decomposition(basis, g))
      weights.push_back(Json{{"weight", w}, {"dim", b.dim()}, {"basis", endomorphism_basis_json(b)}});
    out["weights"] = std::move(weights);
    const auto split = traceless_split(basis);
    out["traceless"] = Json{{"dim", split.traceless.dim()},
                            {"has_identity", split.has_identity},
                            {"equals_der_minus1", split.traceless.same_span(gen_derivations(g, {-1, 1, 1}))},
                            {"basis", endomorphism_basis_json(split.traceless)}};
  }
  return out;
}

Json classify_results(const GenDer5& d) {
  const ClassLabel label = classify(d);
  Json out = to_json(label);
  const Invariants inv = invariants(d);
  Json invj = to_json(inv);
  invj["det"] = to_json(determinant(tuple_to_matrix(d)));
  out["invariants"] = std::move(invj);
  return out;
}

Json rep_results(int m, const GenDer5& d) {
  const auto sol = solve_rep_extension(RepSpec::with_identity(Sl2Module::irreducible(m)), d);
  Json out{{"m", m}, {"d", to_json(d)}};
  const Json sj = to_json(sol);
  for (const auto& [k, v] : sj.items()) out[k] = v;
  return out;
}

Json extend_results(const GenDer5& d, const std::optional<std::vector<int>>& module) {
  const HomLieAlgebra h = extend_sl2(d);
  Json out{{"d", to_json(d)},
           {"algebra", to_json(h)},
           {"homlie_jacobi", to_json(check_homlie_jacobi(h))},
           {"identity_twist", to_json(check_homlie_jacobi(with_twist(h, QMatrix::identity(4))))}};
  if (module) {
    const RepSpec spec = RepSpec::with_identity(Sl2Module::direct_sum(*module));
    const auto sol = solve_rep_extension(spec, d);
    Json ext{{"module", *module}, {"rho_D_solvable", sol.solvable}};
    if (sol.solvable) {
      const HomLieAlgebra dx = double_extension(d, spec, *sol.particular);
      ext["rho_D"] = to_json(*sol.particular);
      ext["algebra"] = to_json(dx);
      ext["homlie_jacobi"] = to_json(check_homlie_jacobi(dx));
    } else {
      ext["algebra"] = nullptr;
    }
    out["double_extension"] = std::move(ext);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hom-Lie structures on sl2: derivations, classification, representations"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "seed for randomized sweeps")->capture_default_str();

  std::string algebra, type_text, d_text, module_text;
  int m = 0;

  auto* der = app.add_subcommand("der", "basis of (a,b,c)-derivations");
  der->add_option("--algebra", algebra, "sl2, slN, spN, soN or a structure-constant JSON file")->required();
  der->add_option("--type", type_text, "a,b,c")->required()->allow_extra_args(false);

  auto* hl = app.add_subcommand("hl", "Hom-Lie twist space");
  hl->add_option("--algebra", algebra)->required();

  auto* cls = app.add_subcommand("classify", "orbit label of D = (zeta,eta,sigma,lambda,mu)");
  cls->add_option("--d", d_text, "zeta,eta,sigma,lambda,mu")->required();

  auto* canon = app.add_subcommand("canon", "canonical form with reduction trace");
  canon->add_option("--d", d_text)->required();

  auto* rep = app.add_subcommand("rep", "solve for rho(D) on V(m)");
  rep->add_option("--m", m)->required()->check(CLI::NonNegativeNumber);
  rep->add_option("--d", d_text)->required();

  auto* ext = app.add_subcommand("extend", "validate sl2[D] and optional double extension");
  ext->add_option("--d", d_text)->required();
  ext->add_option("--module", module_text, "highest weights, e.g. 2 or 2,2");

  auto* ver = app.add_subcommand("verify", "run the acceptance suite");

  for (auto* sub : {der, hl, cls, canon, rep, ext, ver})
    sub->add_option("--seed", seed, "seed for randomized sweeps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Json inputs = Json::object();
  std::string command;
  bool approximate = false;
  std::optional<std::uint64_t> report_seed;
  Json results;
  int status = 0;
  try {
    if (der->parsed()) {
      command = "der";
      const auto t = parse_list(type_text, 3, "--type");
      const LieAlgebra g = load_algebra(algebra);
      inputs = Json{{"algebra", algebra}, {"type", Json::array({to_json(t[0]), to_json(t[1]), to_json(t[2])})}};
      results = der_results(g, t);
    } else if (hl->parsed()) {
      command = "hl";
      const LieAlgebra g = load_algebra(algebra);
      inputs = Json{{"algebra", algebra}};
      results = hl_results(g, algebra == "sl2");
    } else if (cls->parsed()) {
      command = "classify";
      const GenDer5 d = parse_tuple(d_text);
      inputs = Json{{"d", to_json(d)}};
      results = classify_results(d);
    } else if (canon->parsed()) {
      command = "canon";
      const GenDer5 d = parse_tuple(d_text);
      inputs = Json{{"d", to_json(d)}};
      const auto r = canonical_form(d);
      approximate = r.approximate();
      results = to_json(r);
    } else if (rep->parsed()) {
      command = "rep";
      const GenDer5 d = parse_tuple(d_text);
      inputs = Json{{"m", m}, {"d", to_json(d)}};
      results = rep_results(m, d);
    } else if (ext->parsed()) {
      command = "extend";
      const GenDer5 d = parse_tuple(d_text);
      std::optional<std::vector<int>> module;
      inputs = Json{{"d", to_json(d)}};
      if (!module_text.empty()) {
        std::vector<int> ws;
        for (const auto& q : parse_list(module_text, 0, "--module")) {
          if (q.get_den() != 1 || q < 0) throw std::invalid_argument("--module expects non-negative integers");
          ws.push_back(static_cast<int>(q.get_num().get_si()));
        }
        module = ws;
        inputs["module"] = ws;
      }
      results = extend_results(d, module);
    } else {
      command = "verify";
      report_seed = seed;
      inputs = Json{{"seed", seed}};
      const auto crit = run_acceptance(seed);
      Json list = Json::array();
      bool all = true;
      for (const auto& c : crit) {
        list.push_back(Json{{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        all = all && c.pass;
      }
      results = Json{{"criteria", std::move(list)}, {"all_pass", all}};
      status = all ? 0 : 1;
    }
  } catch (const MathError& e) {
    Json report = make_report(command, inputs, nullptr, approximate, report_seed);
    report["error"] = Json{{"type", error_kind(e)}, {"message", e.what()}};
    std::cout << report.dump(2) << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cout << make_report(command, inputs, results, approximate, report_seed).dump(2) << "\n";
  return status;
}
