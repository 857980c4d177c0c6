#include "gca/report.hpp"

#include <cstddef>
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

std::string prefix_text(const MutationWord& w) { return w.empty() ? "-" : w.str(); }

std::string state_header(std::size_t t, const MutationWord& prefix) {
  return "state " + std::to_string(t) + "  (prefix: " + prefix_text(prefix) + ")";
}

std::string pad(std::string label, std::size_t width) {
  while (label.size() < width) label.push_back(' ');
  return label;
}

std::string element_text(const SemifieldElement& e) { return to_string(e); }

std::string exchange_entry_text(const ExchangePoly& Z, int s, const Semifield& P) {
  if (Z.is_formal(s)) return var_name(std::get<VarId>(Z.coeffs()[static_cast<std::size_t>(s)]));
  return element_text(Z.value(s, P));
}

std::string exchange_text(const ExchangePoly& Z, const Semifield& P) {
  std::string out = "[";
  for (int s = 0; s <= Z.degree(); ++s) {
    if (s) out += ", ";
    out += exchange_entry_text(Z, s, P);
  }
  return out + "]";
}

Json word_json(const MutationWord& w) {
  Json a = Json::array();
  for (int k : w.letters()) a.push_back(k);
  return a;
}

Json matrix_json(const IntMat& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json poly_json(const LaurentPoly& p) {
  const std::vector<VarId> vars = p.support();
  Json vj = Json::array();
  for (VarId v : vars) vj.push_back(var_name(v));
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json e = Json::array();
    for (VarId v : vars) e.push_back(static_cast<std::int64_t>(m.exponent(v)));
    Json term;
    term["e"] = std::move(e);
    term["c"] = c.get_str();
    terms.push_back(std::move(term));
  }
  Json out;
  out["vars"] = std::move(vj);
  out["terms"] = std::move(terms);
  return out;
}

Json ratfunc_json(const RatFunc& f) {
  Json out;
  out["num"] = poly_json(f.num());
  out["den"] = poly_json(f.den());
  return out;
}

Json element_json(const SemifieldElement& e) {
  Json out;
  if (const TropElement* t = std::get_if<TropElement>(&e)) {
    out["kind"] = "tropical";
    out["value"] = poly_json(LaurentPoly::term(t->monomial(), 1));
    return out;
  }
  const UsfElement& u = std::get<UsfElement>(e);
  out["kind"] = "universal";
  out["num"] = poly_json(u.num());
  out["den"] = poly_json(u.den());
  return out;
}

Json exchange_json(const ExchangePoly& Z, const Semifield& P) {
  Json entry;
  entry["d"] = Z.degree();
  bool interior_formal = true;
  for (int s = 1; s < Z.degree(); ++s) interior_formal = interior_formal && Z.is_formal(s);
  if (interior_formal) {
    entry["coeffs"] = "formal";
    return entry;
  }
  Json list = Json::array();
  for (int s = 0; s <= Z.degree(); ++s) list.push_back(exchange_entry_text(Z, s, P));
  entry["coeffs"] = std::move(list);
  return entry;
}

Json check_json(const CompanionCheck& c) {
  Json out;
  out["prefix"] = word_json(c.prefix);
  out["c_transform"] = c.c_transform;
  out["g_transform"] = c.g_transform;
  out["f_special"] = c.f_special;
  out["variables"] = c.variables;
  return out;
}

Json verification_json(const CompanionReport& r) {
  Json out;
  out["side"] = r.side == CompanionSide::Left ? "left" : "right";
  out["word"] = word_json(r.checks.empty() ? MutationWord() : r.checks.back().prefix);
  out["pass"] = r.pass;
  out["counterexample"] = r.counterexample;
  Json checks = Json::array();
  for (const CompanionCheck& c : r.checks) checks.push_back(check_json(c));
  out["checks"] = std::move(checks);
  return out;
}

std::string verification_text(const CompanionReport& r) {
  const char* side = r.side == CompanionSide::Left ? "left" : "right";
  const MutationWord w = r.checks.empty() ? MutationWord() : r.checks.back().prefix;
  std::string out = std::string(side) + " verification along '" + prefix_text(w) +
                    "': " + (r.pass ? "PASS" : "FAIL") + " (" +
                    std::to_string(r.checks.size()) + " prefixes)\n";
  for (const CompanionCheck& c : r.checks) {
    if (c.pass()) continue;
    out += "  prefix " + prefix_text(c.prefix) + ":";
    out += std::string(" c-transform ") + (c.c_transform ? "ok" : "FAIL");
    out += std::string(", g-transform ") + (c.g_transform ? "ok" : "FAIL");
    out += std::string(", f-specialization ") + (c.f_special ? "ok" : "FAIL");
    out += std::string(", variables ") + (c.variables ? "ok" : "FAIL");
    out += "\n";
  }
  if (!r.counterexample.empty()) out += "  counterexample: " + r.counterexample + "\n";
  return out;
}

// Cluster generators set to one; everything else kept.  Principal-coefficient
// cluster functions restrict to the F-polynomials under this map.
RatFunc at_unit_cluster(const RatFunc& f) {
  Substitution s;
  for (const LaurentPoly* p : {&f.num(), &f.den()})
    for (VarId v : p->support()) {
      if (v.kind == VarKind::X || v.kind == VarKind::U)
        s.set(v, RatFunc::constant(1));
      else
        s.set(v, RatFunc::var(v));
    }
  return substitute(f, s);
}

}  // namespace

RunReport run_word(const GenSeed& s, const MutationWord& w, bool with_seeds) {
  RunReport rep;
  rep.initial = s;
  rep.word = w.reduced();
  rep.states = pattern_along(s.B, s.degrees(), rep.word);
  if (with_seeds) rep.seeds = seeds_via_separation(s, rep.word);
  return rep;
}

std::string render_tables(const RunReport& rep, TableKind table, OutputFormat format) {
  const int n = rep.initial.n;
  if (table != TableKind::Cgf && rep.seeds.size() != rep.word.size() + 1)
    throw Error("table rendering needs the seed walk; rebuild the report with seeds");

  if (format == OutputFormat::Json) {
    Json doc;
    doc["word"] = word_json(rep.word);
    doc["table"] = table == TableKind::Cgf ? "cgf" : table == TableKind::Xy ? "xy" : "seeds";
    if (table != TableKind::Cgf)
      doc["semifield"] =
          rep.initial.P.kind == SemifieldKind::Tropical ? "tropical" : "universal";
    Json states = Json::array();
    for (std::size_t p = 0; p <= rep.word.size(); ++p) {
      Json st;
      st["t"] = p + 1;
      st["prefix"] = word_json(rep.word.prefix(p));
      if (table == TableKind::Cgf) {
        const PatternState& ps = rep.states[p];
        st["C"] = matrix_json(ps.C);
        st["G"] = matrix_json(ps.G);
        Json fs = Json::array();
        for (const LaurentPoly& f : ps.F) fs.push_back(poly_json(f));
        st["F"] = std::move(fs);
      } else {
        const GenSeed& sd = rep.seeds[p];
        if (table == TableKind::Seeds) {
          st["B"] = matrix_json(sd.B);
          Json zs = Json::array();
          for (const ExchangePoly& z : sd.Z) zs.push_back(exchange_json(z, sd.P));
          st["Z"] = std::move(zs);
        }
        Json xs = Json::array();
        for (const RatFunc& x : sd.x) xs.push_back(ratfunc_json(x));
        st["x"] = std::move(xs);
        Json ys = Json::array();
        for (const SemifieldElement& y : sd.y) ys.push_back(element_json(y));
        st["y"] = std::move(ys);
      }
      states.push_back(std::move(st));
    }
    doc["states"] = std::move(states);
    if (!rep.verifications.empty()) {
      Json vs = Json::array();
      for (const CompanionReport& r : rep.verifications) vs.push_back(verification_json(r));
      doc["verifications"] = std::move(vs);
    }
    return doc.dump(2) + "\n";
  }

  const std::size_t width = std::to_string(n).size() + 1;  // "F12" aligns with "C"
  std::string out;
  for (std::size_t p = 0; p <= rep.word.size(); ++p) {
    if (p) out += "\n";
    out += state_header(p + 1, rep.word.prefix(p)) + "\n";
    if (table == TableKind::Cgf) {
      const PatternState& ps = rep.states[p];
      out += "  " + pad("C", width) + " = " + to_string(ps.C) + "\n";
      out += "  " + pad("G", width) + " = " + to_string(ps.G) + "\n";
      for (int j = 0; j < n; ++j)
        out += "  " + pad("F" + std::to_string(j + 1), width) + " = " +
               to_string(ps.F[static_cast<std::size_t>(j)]) + "\n";
    } else {
      const GenSeed& sd = rep.seeds[p];
      if (table == TableKind::Seeds) {
        out += "  " + pad("B", width) + " = " + to_string(sd.B) + "\n";
        for (int i = 0; i < n; ++i)
          out += "  " + pad("Z" + std::to_string(i + 1), width) + " = " +
                 exchange_text(sd.Z[static_cast<std::size_t>(i)], sd.P) + "\n";
      }
      for (int i = 0; i < n; ++i)
        out += "  " + pad("x" + std::to_string(i + 1), width) + " = " +
               to_string(sd.x[static_cast<std::size_t>(i)]) + "\n";
      for (int j = 0; j < n; ++j)
        out += "  " + pad("y" + std::to_string(j + 1), width) + " = " +
               element_text(sd.y[static_cast<std::size_t>(j)]) + "\n";
    }
  }
  for (const CompanionReport& r : rep.verifications) out += "\n" + verification_text(r);
  return out;
}

std::string render_verification(const std::vector<CompanionReport>& reports,
                                OutputFormat format) {
  if (format == OutputFormat::Json) {
    Json doc;
    bool pass = true;
    for (const CompanionReport& r : reports) pass = pass && r.pass;
    doc["pass"] = pass;
    Json vs = Json::array();
    for (const CompanionReport& r : reports) vs.push_back(verification_json(r));
    doc["verifications"] = std::move(vs);
    return doc.dump(2) + "\n";
  }
  std::string out;
  for (const CompanionReport& r : reports) out += verification_text(r);
  return out;
}

OracleDiff oracle_compare(const GenSeed& s, const MutationWord& w) {
  OracleDiff diff;
  diff.word = w.reduced();
  const std::vector<PatternState> rec = pattern_along(s.B, s.degrees(), diff.word);
  const std::vector<XYState> xy = xy_functions(s.B, s.Z, diff.word);
  diff.states = rec.size();
  for (std::size_t p = 0; p < rec.size(); ++p) {
    const std::string at = "state " + std::to_string(p + 1) + " (prefix " +
                           prefix_text(diff.word.prefix(p)) + "): ";
    const IntMat ct = c_from_tropical(xy[p].y_trop, s.n);
    if (!(ct == rec[p].C))
      diff.mismatches.push_back(at + "C differs: recursion " + to_string(rec[p].C) +
                                " vs tropical route " + to_string(ct));
    const IntMat gg = g_from_grading(xy[p].X, s.B);
    if (!(gg == rec[p].G))
      diff.mismatches.push_back(at + "G differs: recursion " + to_string(rec[p].G) +
                                " vs grading route " + to_string(gg));
    for (int j = 0; j < s.n; ++j) {
      const RatFunc fx = at_unit_cluster(xy[p].X[static_cast<std::size_t>(j)]);
      if (!fx.equals(RatFunc(rec[p].F[static_cast<std::size_t>(j)])))
        diff.mismatches.push_back(at + "F" + std::to_string(j + 1) +
                                  " differs: recursion " +
                                  to_string(rec[p].F[static_cast<std::size_t>(j)]) +
                                  " vs cluster-function route " + to_string(fx));
    }
  }
  return diff;
}

std::string render_oracle(const OracleDiff& d, OutputFormat format) {
  if (format == OutputFormat::Json) {
    Json doc;
    doc["word"] = word_json(d.word);
    doc["states"] = d.states;
    doc["pass"] = d.pass();
    Json ms = Json::array();
    for (const std::string& m : d.mismatches) ms.push_back(m);
    doc["mismatches"] = std::move(ms);
    return doc.dump(2) + "\n";
  }
  std::string out = "oracle comparison along '" + prefix_text(d.word) + "': ";
  if (d.pass()) {
    out += "PASS (" + std::to_string(d.states) +
           " states; recursion and principal-coefficient routes agree)\n";
  } else {
    out += "FAIL (" + std::to_string(d.mismatches.size()) + " mismatches)\n";
    for (const std::string& m : d.mismatches) out += "  " + m + "\n";
  }
  return out;
}

}  // namespace gca
