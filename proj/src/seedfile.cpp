#include "gca/seedfile.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

#include "gca/errors.hpp"
#include "gca/textio.hpp"

namespace gca {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void bad_field(const std::string& field, const std::string& why) {
  throw ParseError("seed file: field '" + field + "': " + why);
}

// `label` is the field's path for error messages; `key` the JSON member name.
const Json& need(const Json& obj, const std::string& key, const std::string& label) {
  if (!obj.is_object()) bad_field(label, "enclosing value is not an object");
  auto it = obj.find(key);
  if (it == obj.end()) bad_field(label, "missing");
  return *it;
}

const Json& need(const Json& obj, const std::string& key) { return need(obj, key, key); }

std::int64_t need_int(const Json& obj, const std::string& key, const std::string& label) {
  const Json& v = need(obj, key, label);
  if (!v.is_number_integer()) bad_field(label, "must be an integer");
  return v.get<std::int64_t>();
}

// "⊕" is display typography for semifield sums; accept it as "+" on input.
std::string plusified(std::string text) {
  const std::string oplus = "\xE2\x8A\x95";
  for (std::size_t at = text.find(oplus); at != std::string::npos; at = text.find(oplus, at))
    text.replace(at, oplus.size(), "+");
  return text;
}

TropElement parse_trop(const std::string& text, const std::string& field) {
  LaurentPoly p;
  try {
    p = parse_poly(text);
  } catch (const ParseError& e) {
    bad_field(field, e.what());
  }
  if (p.term_count() != 1 || p.terms().begin()->second <= 0)
    bad_field(field, "a tropical element is a monomial with a positive coefficient");
  return TropElement(p.terms().begin()->first);
}

UsfElement parse_usf(const std::string& text, const std::string& field) {
  RatFunc f;
  try {
    f = parse_ratfunc(plusified(text));
  } catch (const ParseError& e) {
    bad_field(field, e.what());
  }
  return UsfElement(std::move(f));  // positivity is validated by the element
}

SemifieldElement parse_element(const std::string& text, SemifieldKind kind,
                               const std::string& field) {
  if (kind == SemifieldKind::Tropical) return parse_trop(text, field);
  return parse_usf(text, field);
}

SemifieldElement int_element(std::int64_t c, SemifieldKind kind, const std::string& field) {
  if (c <= 0) bad_field(field, "coefficients must be positive");
  if (kind == SemifieldKind::Tropical) return TropElement{};  // positive constants are the unit
  return UsfElement(RatFunc::constant(static_cast<long>(c)));
}

IntMat parse_matrix(const Json& v, int n) {
  IntMat B(n, n);
  if (v.is_array() && !v.empty() && v.front().is_array()) {
    if (static_cast<int>(v.size()) != n)
      throw DimensionMismatch("seed file: B has " + std::to_string(v.size()) +
                              " rows, expected " + std::to_string(n));
    for (int i = 0; i < n; ++i) {
      const Json& row = v[static_cast<std::size_t>(i)];
      if (!row.is_array() || static_cast<int>(row.size()) != n)
        throw DimensionMismatch("seed file: B row " + std::to_string(i + 1) +
                                " does not have " + std::to_string(n) + " entries");
      for (int j = 0; j < n; ++j) {
        const Json& e = row[static_cast<std::size_t>(j)];
        if (!e.is_number_integer()) bad_field("B", "entries must be integers");
        B(i, j) = e.get<std::int64_t>();
      }
    }
    return B;
  }
  if (v.is_array()) {
    if (static_cast<int>(v.size()) != n * n)
      throw DimensionMismatch("seed file: flat B has " + std::to_string(v.size()) +
                              " entries, expected " + std::to_string(n * n));
    for (int i = 0; i < n * n; ++i) {
      const Json& e = v[static_cast<std::size_t>(i)];
      if (!e.is_number_integer()) bad_field("B", "entries must be integers");
      B(i / n, i % n) = e.get<std::int64_t>();
    }
    return B;
  }
  bad_field("B", "must be an array of rows or a flat array");
}

ExchangePoly parse_exchange(const Json& entry, int index, SemifieldKind kind) {
  const std::string field = "Z[" + std::to_string(index - 1) + "]";
  const std::int64_t d = need_int(entry, "d", field + ".d");
  if (d < 1) bad_field(field + ".d", "degree must be at least 1");
  auto coeffs = entry.find("coeffs");
  if (coeffs == entry.end() || (coeffs->is_string() && *coeffs == "formal"))
    return ExchangePoly::formal(index, static_cast<int>(d));
  if (!coeffs->is_array())
    bad_field(field + ".coeffs", "must be \"formal\" or a list of d+1 entries");
  if (static_cast<std::int64_t>(coeffs->size()) != d + 1)
    bad_field(field + ".coeffs",
              "needs " + std::to_string(d + 1) + " entries for degree " + std::to_string(d));
  bool all_ints = true;
  for (const Json& c : *coeffs) all_ints = all_ints && c.is_number_integer();
  if (all_ints) {
    std::vector<long> cs;
    for (const Json& c : *coeffs) cs.push_back(c.get<long>());
    return ExchangePoly::numeric(index, cs, kind);
  }
  std::vector<ExchangePoly::Coeff> cs;
  for (std::size_t s = 0; s < coeffs->size(); ++s) {
    const Json& c = (*coeffs)[s];
    const std::string at = field + ".coeffs[" + std::to_string(s) + "]";
    if (c.is_number_integer())
      cs.emplace_back(int_element(c.get<std::int64_t>(), kind, at));
    else if (c.is_string())
      cs.emplace_back(parse_element(c.get<std::string>(), kind, at));
    else
      bad_field(at, "must be an integer or an element string");
  }
  return ExchangePoly(index, std::move(cs));
}

std::string element_text(const SemifieldElement& e) {
  if (const TropElement* t = std::get_if<TropElement>(&e)) return to_string(t->monomial());
  const UsfElement& u = std::get<UsfElement>(e);
  return to_string(RatFunc(u.num(), u.den()));
}

Json exchange_json(const ExchangePoly& Z, const Semifield& P) {
  Json entry;
  entry["d"] = Z.degree();
  bool interior_formal = true;
  for (int s = 1; s < Z.degree(); ++s) interior_formal = interior_formal && Z.is_formal(s);
  if (Z.degree() <= 1 || interior_formal) {
    entry["coeffs"] = "formal";
    return entry;
  }
  for (int s = 0; s <= Z.degree(); ++s)
    if (Z.degree() > 1 && 0 < s && s < Z.degree() && Z.is_formal(s))
      throw Error("cannot serialize an exchange polynomial mixing formal and explicit coefficients");
  Json list = Json::array();
  for (int s = 0; s <= Z.degree(); ++s) list.push_back(element_text(Z.value(s, P)));
  entry["coeffs"] = std::move(list);
  return entry;
}

}  // namespace

GenSeed parse_seed_file(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("seed file: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("seed file: top-level value must be an object");

  const std::int64_t n = need_int(doc, "n", "n");
  if (n < 1) bad_field("n", "rank must be positive");

  const Json& sf = need(doc, "semifield");
  if (!sf.is_string()) bad_field("semifield", "must be \"universal\" or \"tropical\"");
  SemifieldKind kind;
  if (sf == "universal")
    kind = SemifieldKind::Universal;
  else if (sf == "tropical")
    kind = SemifieldKind::Tropical;
  else
    bad_field("semifield", "must be \"universal\" or \"tropical\"");

  IntMat B = parse_matrix(need(doc, "B"), static_cast<int>(n));

  const Json& zlist = need(doc, "Z");
  if (!zlist.is_array()) bad_field("Z", "must be a list with one entry per direction");
  if (static_cast<std::int64_t>(zlist.size()) != n)
    bad_field("Z", "has " + std::to_string(zlist.size()) + " entries, expected " +
                       std::to_string(n));
  std::vector<ExchangePoly> Z;
  for (std::int64_t i = 0; i < n; ++i)
    Z.push_back(parse_exchange(zlist[static_cast<std::size_t>(i)], static_cast<int>(i) + 1, kind));

  std::vector<SemifieldElement> y;
  if (auto it = doc.find("y"); it != doc.end()) {
    if (!it->is_array() || static_cast<std::int64_t>(it->size()) != n)
      bad_field("y", "must be a list of " + std::to_string(n) + " element strings");
    for (std::int64_t j = 0; j < n; ++j) {
      const Json& e = (*it)[static_cast<std::size_t>(j)];
      const std::string at = "y[" + std::to_string(j) + "]";
      if (!e.is_string()) bad_field(at, "must be an element string");
      y.push_back(parse_element(e.get<std::string>(), kind, at));
    }
  }

  return validate_seed(kind, std::move(B), std::move(Z), std::move(y));
}

GenSeed load_seed_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open seed file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_seed_file(buf.str());
}

std::string render_seed_file(const GenSeed& s) {
  Json doc;
  doc["n"] = s.n;
  doc["semifield"] = s.P.kind == SemifieldKind::Tropical ? "tropical" : "universal";
  Json rows = Json::array();
  for (int i = 0; i < s.n; ++i) {
    Json row = Json::array();
    for (int j = 0; j < s.n; ++j) row.push_back(s.B(i, j));
    rows.push_back(std::move(row));
  }
  doc["B"] = std::move(rows);
  Json zlist = Json::array();
  for (const ExchangePoly& Z : s.Z) zlist.push_back(exchange_json(Z, s.P));
  doc["Z"] = std::move(zlist);
  Json ylist = Json::array();
  for (const SemifieldElement& e : s.y) ylist.push_back(element_text(e));
  doc["y"] = std::move(ylist);
  return doc.dump(2) + "\n";
}

}  // namespace gca
