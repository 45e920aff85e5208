#include "symquartic/certificate_io.hpp"

#include <memory>
#include <utility>

#include <json.hpp>

#include "symquartic/roots.hpp"

namespace symquartic {
namespace {

using nlohmann::json;

[[noreturn]] void malformed(const std::string& what) { throw MalformedCertificate(what); }

json scalar_to_json(const FieldElem& value) {
  if (value.is_rational()) return to_string(value.rational());
  json coeffs = json::array();
  for (const auto& c : value.representation().coefficients()) coeffs.push_back(to_string(c));
  return coeffs;
}

json poly_to_json(const FieldMultiPoly& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({{"exponent", {e[0], e[1], e[2]}}, {"coefficient", scalar_to_json(c)}});
  return out;
}

const json& field(const json& object, const char* key) {
  if (!object.is_object()) malformed("expected an object around \"" + std::string(key) + "\"");
  auto it = object.find(key);
  if (it == object.end()) malformed("missing field \"" + std::string(key) + "\"");
  return *it;
}

Rational rational_from(const json& value, const char* what) {
  if (!value.is_string()) malformed(std::string(what) + ": expected a string scalar");
  try {
    return parse_rational(value.get<std::string>());
  } catch (const std::invalid_argument& e) {
    malformed(std::string(what) + ": " + e.what());
  }
}

UniPoly poly_from(const json& value, const char* what) {
  if (!value.is_array() || value.empty()) malformed(std::string(what) + ": expected a non-empty coefficient array");
  std::vector<Rational> coeffs;
  for (const auto& c : value) coeffs.push_back(rational_from(c, what));
  return UniPoly(std::move(coeffs));
}

FieldElem scalar_from(const json& value, const FieldElem::Generator& gen, const char* what) {
  if (value.is_string()) return FieldElem(rational_from(value, what));
  if (!gen) malformed(std::string(what) + ": irrational scalar without an algebraic t");
  return FieldElem(gen, poly_from(value, what));
}

AlgebraicNumber t_from(const json& value) {
  if (!value.is_object()) malformed("t: expected an object");
  if (value.contains("rational")) return AlgebraicNumber(rational_from(value["rational"], "t"));
  const UniPoly defining = poly_from(field(value, "defining"), "t.defining");
  const json& interval = field(value, "interval");
  if (!interval.is_array() || interval.size() != 2) malformed("t.interval: expected [lo, hi]");
  const Rational lo = rational_from(interval[0], "t.interval");
  const Rational hi = rational_from(interval[1], "t.interval");
  if (defining.degree() < 1) malformed("t.defining: degree must be at least 1");
  if (!(lo < hi) || sgn(defining(lo)) == 0 || sgn(defining(hi)) == 0 ||
      sturm_root_count(defining, lo, hi) != 1) {
    malformed("t.interval does not isolate exactly one root of t.defining");
  }
  return AlgebraicNumber::from_root(defining, {lo, hi});
}

FieldMultiPoly square_from(const json& value, const FieldElem::Generator& gen) {
  if (!value.is_array()) malformed("square: expected an array of monomials");
  FieldMultiPoly out;
  for (const auto& m : value) {
    const json& e = field(m, "exponent");
    if (!e.is_array() || e.size() != 3) malformed("square: exponent must have three entries");
    Exponent exp{};
    for (std::size_t i = 0; i < 3; ++i) {
      if (!e[i].is_number_integer() || e[i].get<int>() < 0) malformed("square: exponents must be nonnegative integers");
      exp[i] = e[i].get<int>();
    }
    out.add_term(exp, scalar_from(field(m, "coefficient"), gen, "square coefficient"));
  }
  return out;
}

}  // namespace

std::string to_json(const Certificate& cert) {
  json doc;
  doc["version"] = kCertificateVersion;
  doc["kind"] = std::string(to_string(cert.kind));
  doc["domain"] = std::string(to_string(cert.domain));
  doc["form"] = {{"a", to_string(cert.form.a)}, {"b", to_string(cert.form.b)}, {"c", to_string(cert.form.c)}};
  if (cert.t) {
    if (cert.t->is_rational()) {
      doc["t"] = {{"rational", to_string(cert.t->rational())}};
    } else {
      json defining = json::array();
      for (const auto& c : cert.t->defining().coefficients()) defining.push_back(to_string(c));
      doc["t"] = {{"defining", defining}, {"interval", {to_string(cert.t->lo()), to_string(cert.t->hi())}}};
    }
  }
  json terms = json::array();
  for (const auto& term : cert.terms) {
    json entry{{"multiplier", scalar_to_json(term.multiplier)}};
    if (const auto* f = std::get_if<FactTerm>(&term.body)) {
      entry["fact"] = f->name;
    } else {
      entry["square"] = poly_to_json(std::get<SquareTerm>(term.body).base);
    }
    terms.push_back(std::move(entry));
  }
  doc["terms"] = std::move(terms);
  return doc.dump(2) + "\n";
}

Certificate certificate_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    malformed(std::string("not valid JSON: ") + e.what());
  }
  try {
    const json& version = field(doc, "version");
    if (!version.is_number_integer() || version.get<int>() != kCertificateVersion) malformed("unsupported version");

    Certificate cert;
    const json& kind = field(doc, "kind");
    const json& domain = field(doc, "domain");
    if (!kind.is_string() || !domain.is_string()) malformed("kind and domain must be strings");
    try {
      cert.kind = parse_certificate_kind(kind.get<std::string>());
      cert.domain = parse_domain(domain.get<std::string>());
    } catch (const std::invalid_argument& e) {
      malformed(e.what());
    }
    const json& form = field(doc, "form");
    cert.form = {rational_from(field(form, "a"), "form.a"), rational_from(field(form, "b"), "form.b"),
                 rational_from(field(form, "c"), "form.c"), cert.domain};

    FieldElem::Generator gen;
    if (doc.contains("t")) {
      cert.t = t_from(doc["t"]);
      if (!cert.t->is_rational()) gen = std::make_shared<const AlgebraicNumber>(*cert.t);
    }

    const json& terms = field(doc, "terms");
    if (!terms.is_array()) malformed("terms: expected an array");
    for (const auto& entry : terms) {
      CertTerm term{scalar_from(field(entry, "multiplier"), gen, "multiplier"), FactTerm{}};
      const bool has_fact = entry.contains("fact");
      const bool has_square = entry.contains("square");
      if (has_fact == has_square) malformed("each term needs exactly one of \"fact\" or \"square\"");
      if (has_fact) {
        if (!entry["fact"].is_string()) malformed("fact: expected a string");
        term.body = FactTerm{entry["fact"].get<std::string>()};
      } else {
        term.body = SquareTerm{square_from(entry["square"], gen)};
      }
      cert.terms.push_back(std::move(term));
    }
    return cert;
  } catch (const json::exception& e) {
    malformed(std::string("bad certificate structure: ") + e.what());
  }
}

}  // namespace symquartic
