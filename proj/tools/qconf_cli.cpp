// qconf: command-line front end for the verification suites.
//
// Exit status: 0 when no check fails (recorded discrepancies and out-of-scope
// entries do not count), 1 when a check fails, 2 on usage or input errors.

#include "qconf/catalog.hpp"
#include "qconf/parse.hpp"
#include "qconf/physmaps.hpp"
#include "qconf/report.hpp"
#include "qconf/star.hpp"
#include "qconf/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace {

using namespace qconf;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string suite = "all";
  std::vector<std::string> claims;
  std::string algebra;
  std::string rmatrix;
  std::string star;
  std::string params;
  std::string format = "text";
  int order = 6;
  bool compare_printed = false;
  bool no_timing = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string residual_witness(const ThreeTensor& t) {
  return std::to_string(t.size()) + " nonzero components, e.g. " + t.first_term();
}

// --algebra takes a catalog name or a definition file.
AlgebraPtr resolve_algebra(const std::string& spec) {
  if (spec.empty()) return nullptr;
  if (std::filesystem::is_regular_file(spec)) return parse_definitions(read_file(spec)).algebra;
  return algebra_by_name(spec);
}

Definitions load_rmatrix(const std::string& path, const AlgebraPtr& fallback) {
  Definitions d = parse_definitions(read_file(path), fallback);
  if (!d.algebra) throw UsageError(path + ": no algebra given (use --algebra or an `algebra` header)");
  if (!d.r) throw UsageError(path + ": no `r = ...` statement");
  return d;
}

std::map<std::string, Rational> parse_params(const std::string& text) {
  std::map<std::string, Rational> out;
  std::istringstream ss(text);
  std::string kv;
  while (std::getline(ss, kv, ',')) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw UsageError("parameter '" + kv + "' is not key=value");
    const Scalar v = parse_scalar(kv.substr(eq + 1));
    if (!v.is_rational()) throw UsageError("parameter '" + kv + "' must be rational");
    out[kv.substr(0, eq)] = v.re();
  }
  return out;
}

Rational param(const std::map<std::string, Rational>& p, const std::string& key) {
  const auto it = p.find(key);
  return it == p.end() ? Rational(0) : it->second;
}

int emit(const VerificationReport& r, const Options& o) {
  std::cout << (o.format == "json" ? to_json(r, !o.no_timing) : to_text(r));
  return r.failed() ? kExitFail : 0;
}

bool claim_matches(const std::string& id, const std::vector<std::string>& claims) {
  for (const auto& c : claims)
    if (id == c || (id.size() > c.size() && id.compare(0, c.size(), c) == 0 && id[c.size()] == '.')) return true;
  return false;
}

int cmd_verify(const Options& o) {
  SuiteOptions so;
  so.hopf_order = o.order;
  VerificationReport r = run_suite(o.suite, so);
  if (!o.claims.empty()) {
    std::vector<Check> kept;
    for (auto& c : r.checks)
      if (claim_matches(c.id, o.claims)) kept.push_back(std::move(c));
    if (kept.empty()) throw UsageError("no check matches the given --claim");
    r.checks = std::move(kept);
  }
  return emit(r, o);
}

int cmd_check_cybe(const Options& o) {
  if (o.rmatrix.empty()) {
    VerificationReport r = run_suite("cybe");
    return emit(r, o);
  }
  const Definitions d = load_rmatrix(o.rmatrix, resolve_algebra(o.algebra));
  const ThreeTensor res = cybe_residual(*d.r);
  VerificationReport r;
  r.suite = "check-cybe";
  r.add(make_check("rmatrix.cybe", "CYBE residual of " + o.rmatrix + " over " + d.algebra->name() + " vanishes",
                   res.is_zero(), res.is_zero() ? "" : residual_witness(res)));
  return emit(r, o);
}

int cmd_check_jacobi(const Options& o) {
  if (o.algebra.empty()) return emit(run_suite("jacobi"), o);
  const AlgebraPtr g = resolve_algebra(o.algebra);
  const auto rep = jacobi_residual(g);
  VerificationReport r;
  r.suite = "check-jacobi";
  std::string w;
  if (!rep.zero)
    w = "[[" + g->label((*rep.triple)[0]) + "," + g->label((*rep.triple)[1]) + "]," + g->label((*rep.triple)[2]) +
        "] + cyclic = " + rep.residual.str();
  r.add(make_check(g->name() + ".jacobi",
                   "Jacobi identity on all " + std::to_string(rep.triples_checked) + " basis triples of " + g->name(),
                   rep.zero, w));
  return emit(r, o);
}

int cmd_check_reality(const Options& o) {
  if (o.star.empty()) {
    if (!o.rmatrix.empty()) throw UsageError("--rmatrix needs --star");
    return emit(run_suite("reality"), o);
  }
  const Involution star = star_by_spec(o.star);
  VerificationReport r;
  r.suite = "check-reality";
  r.add_all(check_antiautomorphism(star, "star"));
  if (!o.rmatrix.empty()) {
    const Definitions d = load_rmatrix(o.rmatrix, star.algebra());
    if (d.algebra != star.algebra())
      throw UsageError(o.rmatrix + " is over " + d.algebra->name() + " but the involution acts on " +
                       star.algebra()->name());
    const TwoTensor res = reality_residual(*d.r, star);
    r.add(make_check("rmatrix.reality", o.rmatrix + " is invariant under " + star.name(), res.is_zero(),
                     "star(r) - r = " + res.str()));
  }
  return emit(r, o);
}

int cmd_map_basis(const Options& o) {
  const auto p = parse_params(o.params);
  VerificationReport r;
  r.suite = "map-basis";
  TwoTensor image;
  std::string params_text;
  if (o.algebra == "so32") {
    const Rational c1 = param(p, "c1"), c2 = param(p, "c2");
    params_text = "c1=" + c1.str() + ", c2=" + c2.str();
    image = so32().cw_to_physical.map(so5_rmatrix(Scalar(c1), Scalar(c2)));
    const D3Transform t = d3_transform_rmatrix(c1, c2);
    r.add(make_check("so32.map.tabulated", "image equals the tabulated D=3 form with M_i = 2/c_i",
                     t.image.r == t.expected.r, coefficient_diff(t.image.r, t.expected.r)));
  } else if (o.algebra == "so42") {
    Rational c1 = param(p, "c1"), c2 = param(p, "c2");
    if (p.count("M")) {
      if (p.at("M").is_zero()) throw UsageError("M must be nonzero");
      c1 = Rational(1) / p.at("M");
      c2 = c1 * Rational(2);
    }
    params_text = "c1=" + c1.str() + ", c2=" + c2.str();
    image = so42().sl4_to_physical.map(sl4_rmatrix(Scalar(c1), Scalar(c2)));
    if (c2 == c1 * Rational(2) && !c1.is_zero()) {
      const TwoTensor expected = d4_tabulated(c1);
      r.add(make_check("so42.map.tabulated", "image equals the tabulated D=4 form with M = 1/c1", image == expected,
                       coefficient_diff(image, expected)));
    }
  } else {
    throw UsageError("map-basis needs --algebra so32 or so42");
  }
  if (o.format == "json") {
    auto j = nlohmann::ordered_json::parse(to_json(r, false));
    j["algebra"] = image.algebra()->name();
    j["params"] = params_text;
    j["image"] = image.str();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "# " << image.algebra()->name() << " at " << params_text << "\n" << serialize(image);
    for (const auto& c : r.checks) {
      std::cout << "# [" << to_string(c.status) << "] " << c.id << "\n";
      if (!c.witness.empty()) std::cout << "#   " << c.witness << "\n";
    }
  }
  return r.failed() ? kExitFail : 0;
}

int cmd_hopf_verify(const Options& o) {
  if (o.order < 2) throw UsageError("--order must be at least 2");
  VerificationReport r;
  r.suite = "hopf-verify order " + std::to_string(o.order);
  run_groups(r, hopf_groups(o.order, o.compare_printed, SuiteOptions{}.confluence_length));
  return emit(r, o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Lie bialgebra and Hopf algebra claims"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* verify = app.add_subcommand("verify", "Run a named suite, optionally restricted to claim ids");
  verify->add_option("--suite", o.suite, "Suite name")->check(CLI::IsMember(suite_names()));
  verify->add_option("--claim", o.claims, "Claim id or id prefix (repeatable)");
  verify->add_option("--order", o.order, "Hopf truncation order");
  verify->add_flag("--no-timing", o.no_timing, "Omit the timing metadata from JSON");
  add_format(verify);

  auto* report = app.add_subcommand("report", "Emit the report of a suite");
  report->add_option("--suite", o.suite, "Suite name")->check(CLI::IsMember(suite_names()));
  report->add_option("--order", o.order, "Hopf truncation order");
  report->add_flag("--no-timing", o.no_timing, "Omit the timing metadata from JSON");
  add_format(report);

  auto* cybe = app.add_subcommand("check-cybe", "CYBE residual of an r-matrix file, or the cybe suite");
  cybe->add_option("--rmatrix", o.rmatrix, "r-matrix definition file");
  cybe->add_option("--algebra", o.algebra, "Catalog algebra name or definition file");
  add_format(cybe);

  auto* jacobi = app.add_subcommand("check-jacobi", "Jacobi identity of one algebra, or the jacobi suite");
  jacobi->add_option("--algebra", o.algebra, "Catalog algebra name or definition file");
  add_format(jacobi);

  auto* reality = app.add_subcommand("check-reality", "Involution checks and reality of an r-matrix");
  reality->add_option("--star", o.star, "Involution, e.g. so32:lambda=1,eps=-1");
  reality->add_option("--rmatrix", o.rmatrix, "r-matrix definition file over the involution's algebra");
  add_format(reality);

  auto* map = app.add_subcommand("map-basis", "Push the Cartan-Weyl r-matrix into the physical basis");
  map->add_option("--algebra", o.algebra, "so32 or so42")->required();
  map->add_option("--params", o.params, "c1=...,c2=... (so42 also takes M=...)")->required();
  add_format(map);

  auto* hopf = app.add_subcommand("hopf-verify", "Hopf axioms of the Jordanian deformation up to u^N");
  hopf->add_option("--order", o.order, "Truncation order N");
  hopf->add_flag("--compare-printed-antipode", o.compare_printed, "Compare with the tabulated antipode");
  add_format(hopf);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify || *report) return cmd_verify(o);
    if (*cybe) return cmd_check_cybe(o);
    if (*jacobi) return cmd_check_jacobi(o);
    if (*reality) return cmd_check_reality(o);
    if (*map) return cmd_map_basis(o);
    if (*hopf) return cmd_hopf_verify(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
