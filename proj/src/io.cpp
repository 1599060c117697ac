#include "vex/io.hpp"

#include "vex/errors.hpp"

namespace vex {

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "latex") return Format::Latex;
  if (s == "plain") return Format::Plain;
  throw ParseError("unknown format: " + s);
}

namespace {

Variable parse_variable(const std::string& name) {
  static const std::string kFamilies = "xytzhuq";
  if (name.size() < 2) throw ParseError("bad variable: " + name);
  const auto f = kFamilies.find(name[0]);
  if (f == std::string::npos) throw ParseError("bad variable: " + name);
  int index = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9') throw ParseError("bad variable: " + name);
    index = index * 10 + (name[i] - '0');
    if (index > 1023) throw ParseError("variable index too large: " + name);
  }
  if (index < 1) throw ParseError("bad variable: " + name);
  return {static_cast<Family>(f), index};
}

std::string latex_dyadic(const Dyadic& c) {
  if (c.is_integer()) return c.num().str();
  const std::string sign = c.sign() < 0 ? "-" : "";
  const BigInt num = c.sign() < 0 ? BigInt(-c.num()) : c.num();
  return sign + "\\frac{" + num.str() + "}{" + (BigInt(1) << c.log2den()).str() + "}";
}

std::string latex_monomial(const Monomial& m) {
  std::string s;
  for (const auto& [key, e] : m.factors()) {
    const Variable v = Variable::from_key(key);
    s += std::string(1, family_char(v.family)) + "_{" + std::to_string(v.index) + "}";
    if (e != 1) s += "^{" + std::to_string(e) + "}";
  }
  return s;
}

std::string latex_partition(const StrictPartition& la) {
  std::string s;
  for (int p : la.parts()) s += (s.empty() ? "" : ",") + std::to_string(p);
  return s;
}

}  // namespace

nlohmann::json terms_to_json(const GammaElement& e) {
  nlohmann::json out = nlohmann::json::array();
  for (auto it = e.combo().rbegin(); it != e.combo().rend(); ++it) {
    for (const auto& t : it->second.terms()) {
      nlohmann::json mono = nlohmann::json::object();
      for (const auto& [key, exp] : t.mono.factors()) mono[Variable::from_key(key).name()] = exp;
      out.push_back({{"q", it->first.parts()},
                     {"coeff", {{"num", t.coeff.num().str()}, {"log2den", t.coeff.log2den()}}},
                     {"mono", std::move(mono)}});
    }
  }
  return out;
}

GammaElement terms_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("terms must be an array");
  std::map<StrictPartition, PolyBuilder> acc;
  try {
    for (const auto& term : j) {
      StrictPartition la(term.at("q").get<std::vector<int>>());
      const auto& coeff = term.at("coeff");
      const Dyadic c(BigInt(coeff.at("num").get<std::string>()), coeff.at("log2den").get<int>());
      Monomial m;
      for (const auto& [name, e] : term.at("mono").items()) m = m * Monomial::of(parse_variable(name), e.get<int>());
      acc[la].add(m, c);
    }
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("bad term: ") + ex.what());
  } catch (const std::invalid_argument& ex) {
    throw ParseError(std::string("bad term: ") + ex.what());
  } catch (const std::runtime_error& ex) {
    throw ParseError(std::string("bad term: ") + ex.what());
  }
  GammaElement::Combo combo;
  for (auto& [la, b] : acc) {
    Polynomial p = b.finish();
    if (!p.is_zero()) combo.emplace(la, std::move(p));
  }
  return GammaElement::from_combo(std::move(combo));
}

nlohmann::json triple_to_json(const Triple& t) {
  return {{"k", t.k}, {"p", t.p}, {"q", t.q}, {"type", std::string(1, type_char(t.type))}, {"text", t.to_string()}};
}

nlohmann::json report_to_json(const Report& r) {
  return {{"suite", r.suite}, {"pass", r.pass}, {"lines", r.lines}, {"failures", r.failures}};
}

std::string render_polynomial(const Polynomial& p, Format f) {
  if (f != Format::Latex) return p.to_string();
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : p.terms()) {
    Dyadic c = t.coeff;
    if (!first) {
      s += c.sign() < 0 ? " - " : " + ";
      if (c.sign() < 0) c = -c;
    } else if (c == Dyadic(-1) && !t.mono.empty()) {
      s += "-";
      c = -c;
    }
    first = false;
    if (t.mono.empty()) {
      s += latex_dyadic(c);
    } else {
      if (!c.is_one()) s += latex_dyadic(c) + " ";
      s += latex_monomial(t.mono);
    }
  }
  return s;
}

std::string render_gamma(const GammaElement& e, Basis basis, Format f) {
  if (e.is_zero()) return "0";
  const std::string sym = basis == Basis::Q ? "Q" : "P";
  std::string s;
  for (auto it = e.combo().rbegin(); it != e.combo().rend(); ++it) {
    const Polynomial c = e.coefficient(it->first, basis);
    const std::string cs = render_polynomial(c, f);
    std::string term;
    if (it->first.empty()) {
      term = c.size() > 1 && !s.empty() ? "(" + cs + ")" : cs;
    } else {
      const std::string q = f == Format::Latex ? sym + "_{" + latex_partition(it->first) + "}" : sym + "_" + it->first.to_string();
      if (c == Polynomial(1)) {
        term = q;
      } else if (c == Polynomial(-1)) {
        term = "-" + q;
      } else if (c.size() == 1) {
        term = cs + (f == Format::Latex ? " " : "*") + q;
      } else {
        term = "(" + cs + ")" + (f == Format::Latex ? " " : "*") + q;
      }
    }
    if (s.empty()) {
      s = term;
    } else if (term.front() == '-') {
      s += " - " + term.substr(1);
    } else {
      s += " + " + term;
    }
  }
  return s;
}

std::string render_schubert(const SchubertPolynomial& s, Format f) {
  if (s.type == WeylType::A) return render_polynomial(s.polynomial(), f);
  return render_gamma(s.value, s.type == WeylType::C ? Basis::Q : Basis::P, f);
}

}  // namespace vex
