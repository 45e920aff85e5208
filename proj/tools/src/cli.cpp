#include "symquartic_cli/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "symquartic/certificate_io.hpp"
#include "symquartic/decide.hpp"
#include "symquartic/frontier.hpp"
#include "symquartic/oracle.hpp"

namespace symquartic::cli {
namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational scalar(const std::string& name, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError("--" + name + ": " + e.what());
  }
}

Domain domain_arg(const std::string& text) {
  try {
    return parse_domain(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--domain: ") + e.what());
  }
}

// Enough decimals for an approximation good to eps.
int digits_for(const Rational& eps) {
  const double e = to_double(eps);
  if (!(e > 0.0)) return 12;
  return std::clamp(static_cast<int>(std::ceil(-std::log10(e))) + 1, 6, 200);
}

json poly_json(const UniPoly& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_string(c));
  return out;
}

json algebraic_json(const AlgebraicNumber& x, const Rational& eps, const StepBudget& budget) {
  json out;
  if (x.is_rational()) out["exact"] = to_string(x.rational());
  out["approx"] = to_decimal(x.approx(eps, budget), digits_for(eps));
  out["defining_polynomial"] = poly_json(x.defining());
  out["isolating_interval"] = {to_string(x.lo()), to_string(x.hi())};
  return out;
}

json form_json(const QuarticForm& f) {
  return {{"a", to_string(f.a)}, {"b", to_string(f.b)}, {"c", to_string(f.c)},
          {"domain", std::string(to_string(f.domain))}};
}

json base(const std::string& command) { return {{"schema_version", kSchemaVersion}, {"command", command}}; }

json counterexample_json(const Counterexample& cx) {
  json point = json::array();
  for (const auto& x : cx.point) point.push_back(to_string(x));
  return {{"point", point},
          {"value", to_string(cx.value)},
          {"value_approx", to_double(cx.value)},
          {"restriction", cx.restriction}};
}

json bound_json(const BoundResult& r, const Rational& eps, const StepBudget& budget) {
  json out;
  out["kind"] = r.kind == BoundResult::Kind::ClosedForm ? "closed-form" : "parametric";
  out["rule"] = r.rule;
  out["value"] = algebraic_json(r.value, eps, budget);
  out["value_approx"] = to_decimal(r.approx, digits_for(eps));
  out["defining_polynomial"] = poly_json(r.value.defining());
  if (r.t) out["t"] = algebraic_json(*r.t, eps, budget);
  json point = json::array();
  for (const auto& x : r.equality_point) point.push_back(algebraic_json(x, eps, budget));
  out["equality_point"] = point;
  return out;
}

struct Args {
  std::string a = "0", b = "0", c = "0", t, domain = "real", eps = "1e-12", cert, out;
  bool certify = false;
  std::size_t budget = 10000;
  std::uint64_t seed = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw UsageError("cannot write " + path);
}

QuarticForm form_from(const Args& a) {
  return {scalar("a", a.a), scalar("b", a.b), scalar("c", a.c), domain_arg(a.domain)};
}

int cmd_decide(const Args& args, json& out) {
  const QuarticForm form = form_from(args);
  out["input"] = form_json(form);
  const Decision d = decide(form, {args.certify});
  out["holds"] = d.holds;
  if (d.counterexample) out["counterexample"] = counterexample_json(*d.counterexample);
  if (d.certificate) out["certificate"] = json::parse(to_json(*d.certificate));
  if (args.certify && d.holds) out["certificate_unavailable"] = d.certificate_unavailable;
  return d.holds ? kOk : kNegative;
}

Rational eps_from(const Args& args) {
  const Rational eps = scalar("eps", args.eps);
  if (sgn(eps) <= 0) throw UsageError("--eps must be positive");
  return eps;
}

int cmd_bmin(const Args& args, json& out) {
  const Rational a = scalar("a", args.a), c = scalar("c", args.c), eps = eps_from(args);
  out["input"] = {{"a", to_string(a)}, {"c", to_string(c)}, {"eps", to_string(eps)}};
  FrontierOptions opts{eps, {}};
  out.update(bound_json(bmin_real(a, c, opts), eps, opts.budget));
  return kOk;
}

int cmd_cmin(const Args& args, json& out) {
  const Rational a = scalar("a", args.a), b = scalar("b", args.b), eps = eps_from(args);
  out["input"] = {{"a", to_string(a)}, {"b", to_string(b)}, {"eps", to_string(eps)}};
  FrontierOptions opts{eps, {}};
  const auto r = cmin_nonneg(a, b, opts);
  if (const auto* inf = std::get_if<Infeasible>(&r)) {
    out["infeasible"] = true;
    out["reason"] = inf->reason;
  } else {
    out["infeasible"] = false;
    out.update(bound_json(std::get<BoundResult>(r), eps, opts.budget));
  }
  return kOk;
}

json case_label(const Rational& a, const Rational& t, Section section) {
  try {
    const CaseSet cases = case_intervals(a, section);
    if (cases.contains(AlgebraicNumber(t))) return cases.label;
  } catch (const RangeError&) {
  }
  return nullptr;
}

int cmd_param(const Args& args, json& out) {
  if (args.t.empty()) throw UsageError("--t is required");
  const Rational a = scalar("a", args.a), t = scalar("t", args.t);
  out["input"] = {{"a", to_string(a)}, {"t", to_string(t)}};
  PQK<Rational> s;
  Rational bt, ct;
  try {
    bt = b_of_t(a, t);
    ct = c_of_t(a, t);
    s = pqk(a, t);
  } catch (const PoleError& e) {
    throw UsageError(e.what());
  }
  auto put = [&](const char* key, const Rational& v) {
    out[key] = to_string(v);
    out[std::string(key) + "_approx"] = to_double(v);
  };
  put("b", bt);
  put("c", ct);
  put("p", s.p);
  put("q", s.q);
  if (s.k) {
    put("k", *s.k);
  } else {
    out["k"] = nullptr;
  }
  out["k_irrelevant"] = !s.k.has_value();
  out["cases"] = {{"real", case_label(a, t, Section::RealCase)}, {"nonneg", case_label(a, t, Section::NonnegCase)}};
  return kOk;
}

int cmd_certify(const Args& args, json& out) {
  const QuarticForm form = form_from(args);
  out["input"] = form_json(form);
  const Decision d = decide(form, {true});
  out["holds"] = d.holds;
  if (!d.holds) {
    out["counterexample"] = counterexample_json(*d.counterexample);
    return kNegative;
  }
  if (!d.certificate) {
    out["certificate_unavailable"] = true;
    return kNegative;
  }
  const std::string text = to_json(*d.certificate);
  out["kind"] = std::string(to_string(d.certificate->kind));
  if (args.out.empty()) {
    out["certificate"] = json::parse(text);
  } else {
    write_file(args.out, text);
    out["certificate_file"] = args.out;
  }
  return kOk;
}

int cmd_verify(const Args& args, json& out) {
  if (args.cert.empty()) throw UsageError("--cert is required");
  out["input"] = {{"cert", args.cert}};
  const Certificate cert = certificate_from_json(read_file(args.cert));
  const Verification v = verify(cert, cert.form);
  out["form"] = form_json(cert.form);
  out["valid"] = v.valid();
  out["status"] = std::string(to_string(v.status));
  if (!v.valid()) out["reason"] = v.reason;
  return v.valid() ? kOk : kNegative;
}

int cmd_oracle(const Args& args, json& out) {
  const QuarticForm form = form_from(args);
  if (args.budget < 1) throw UsageError("--budget must be at least 1");
  out["input"] = form_json(form);
  out["input"]["budget"] = args.budget;
  out["input"]["seed"] = args.seed;
  const OracleReport r = numeric_min(form, {args.budget, args.seed});
  out["min_estimate"] = r.min_estimate;
  out["argmin"] = r.argmin;
  out["samples"] = r.samples;
  out["hint"] = std::string(to_string(r.hint));
  out["tolerance"] = tolerance(form);
  return kOk;
}

void form_options(CLI::App* sub, Args& args, bool with_domain) {
  sub->add_option("--a", args.a, "coefficient of w3")->required();
  sub->add_option("--b", args.b, "coefficient of w2")->required();
  sub->add_option("--c", args.c, "coefficient of w1")->required();
  if (with_domain) sub->add_option("--domain", args.domain, "real | nonneg")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact positivity engine for w4 + a w3 + b w2 + c w1", "symquartic"};
  app.require_subcommand(1);
  Args args;

  auto* decide_cmd = app.add_subcommand("decide", "decide f >= 0 on the domain");
  form_options(decide_cmd, args, true);
  decide_cmd->add_flag("--certify", args.certify, "attach a verified certificate");

  auto* bmin_cmd = app.add_subcommand("bmin", "smallest b with f >= 0 on the reals");
  bmin_cmd->add_option("--a", args.a)->required();
  bmin_cmd->add_option("--c", args.c)->required();
  bmin_cmd->add_option("--eps", args.eps, "approximation tolerance")->capture_default_str();

  auto* cmin_cmd = app.add_subcommand("cmin", "smallest c with f >= 0 on the orthant");
  cmin_cmd->add_option("--a", args.a)->required();
  cmin_cmd->add_option("--b", args.b)->required();
  cmin_cmd->add_option("--eps", args.eps, "approximation tolerance")->capture_default_str();

  auto* param_cmd = app.add_subcommand("param", "frontier quantities at parameter t");
  param_cmd->add_option("--a", args.a)->required();
  param_cmd->add_option("--t", args.t)->required();

  auto* certify_cmd = app.add_subcommand("certify", "write a positivity certificate");
  form_options(certify_cmd, args, true);
  certify_cmd->add_option("--out", args.out, "certificate file (default: embed in the response)");

  auto* verify_cmd = app.add_subcommand("verify", "re-check a certificate file exactly");
  verify_cmd->add_option("--cert", args.cert, "certificate file")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "floating-point minimum of f");
  form_options(oracle_cmd, args, true);
  oracle_cmd->add_option("--budget", args.budget)->capture_default_str();
  oracle_cmd->add_option("--seed", args.seed)->capture_default_str();

  try {
    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "symquartic: " << e.what() << "\n";
    return kUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  json response = base(chosen->get_name());
  int code = kInternal;
  try {
    if (chosen == decide_cmd) code = cmd_decide(args, response);
    if (chosen == bmin_cmd) code = cmd_bmin(args, response);
    if (chosen == cmin_cmd) code = cmd_cmin(args, response);
    if (chosen == param_cmd) code = cmd_param(args, response);
    if (chosen == certify_cmd) code = cmd_certify(args, response);
    if (chosen == verify_cmd) code = cmd_verify(args, response);
    if (chosen == oracle_cmd) code = cmd_oracle(args, response);
  } catch (const UsageError& e) {
    response["error"] = e.what();
    err << "symquartic: " << e.what() << "\n";
    code = kUsage;
  } catch (const MalformedCertificate& e) {
    response["error"] = e.what();
    err << "symquartic: malformed certificate: " << e.what() << "\n";
    code = kUsage;
  } catch (const std::exception& e) {
    response["error"] = e.what();
    err << "symquartic: internal error: " << e.what() << "\n";
    code = kInternal;
  }
  out << response.dump(2) << "\n";
  return code;
}

}  // namespace symquartic::cli
