#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "vex/errors.hpp"
#include "vex/io.hpp"
#include "vex/schubert.hpp"
#include "vex/triples.hpp"
#include "vex/verify.hpp"

using namespace vex;
using nlohmann::json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

/// Usage-level failure: bad input rather than a failed computation.
struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Args {
  std::string type = "C";
  std::string w;
  std::string triple;
  std::optional<int> n;
  std::optional<int> r;
  std::string format = "plain";
  std::string suite;
  std::uint64_t seed = 20240611;
  int threads = 1;
  bool vexillary_only = false;
  bool expand = false;
};

WeylType group_of(WeylType t) { return t == WeylType::B ? WeylType::C : t; }

std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : sep) + std::to_string(x);
  return s;
}

std::string symbol(WeylType t) {
  switch (t) {
    case WeylType::A: return "S";
    case WeylType::B: return "B";
    case WeylType::C: return "C";
    case WeylType::D: return "D";
  }
  return "?";
}

std::string latex_symbol(WeylType t) {
  return t == WeylType::A ? "\\mathfrak{S}" : "\\mathfrak{" + symbol(t) + "}";
}

int cmd_schubert(const Args& a) {
  const WeylType type = parse_type(a.type);
  const SignedPermutation w = parse_word(a.w);
  if (type == WeylType::A && !w.is_unsigned()) throw WrongType("type A needs an unsigned permutation");
  const int n = a.n.value_or(std::max(1, w.trimmed().size()));
  if (n > 5) throw BoundExceeded("--n must be at most 5");
  const SchubertPolynomial s = schubert(w.size() < n ? w.embedded(n) : w, type, n);
  const Format f = parse_format(a.format);
  if (f == Format::Json) {
    json out{{"type", a.type}, {"w", s.w.to_string()}, {"n", n}, {"basis", "Q"}, {"terms", terms_to_json(s.value)}};
    std::cout << out.dump(2) << "\n";
  } else if (f == Format::Latex) {
    std::cout << latex_symbol(type) << "_{" << s.w.to_latex() << "} = " << render_schubert(s, f) << "\n";
  } else {
    std::cout << render_schubert(s, f) << "\n";
  }
  return kPass;
}

/// Text of the Pfaffian or determinant with its row series, one block per (p, q).
std::string formula_text(const Triple& t, Format f) {
  const std::vector<int> la = lambda_parts(t);
  const bool tex = f == Format::Latex;
  std::string head;
  switch (t.type) {
    case WeylType::A: head = tex ? "\\det(a(i)_{\\lambda_i+j-i})" : "det(a(i)_{la_i+j-i})"; break;
    case WeylType::B: head = tex ? "2^{-r}\\mathrm{Pf}_\\lambda(c(1),\\ldots,c(r))" : "2^-r Pf_la(c(1), ..., c(r))"; break;
    case WeylType::C: head = tex ? "\\mathrm{Pf}_\\lambda(c(1),\\ldots,c(r))" : "Pf_la(c(1), ..., c(r))"; break;
    case WeylType::D:
      head = tex ? "2^{-r}\\mathrm{Pf}_\\lambda(c(1)|Qc(1),\\ldots,c(r)|Qc(r))" : "2^-r Pf_la(c(1)|Q c(1), ..., c(r)|Q c(r))";
      break;
  }
  std::string s = head + (tex ? ",\\quad \\lambda = (" : ", la = (") + join(la) + "), r = " + std::to_string(la.size());
  const int shift = t.type == WeylType::B || t.type == WeylType::C ? -1 : 0;
  int first = 1;
  for (std::size_t i = 0; i < t.k.size(); ++i) {
    const int p = t.p[i] + shift;
    const int q = t.q[i] + shift;
    const std::string rows = std::to_string(first) + ".." + std::to_string(t.k[i]);
    first = t.k[i] + 1;
    if (t.type == WeylType::A) {
      s += tex ? "; a(" + rows + ") = \\prod_{j\\le " + std::to_string(p) + "}(1+x_j)/\\prod_{j\\le " + std::to_string(q) + "}(1+y_j)"
               : "; a(" + rows + ") = prod_{j<=" + std::to_string(p) + "}(1+x_j) / prod_{j<=" + std::to_string(q) + "}(1+y_j)";
    } else {
      const std::string lead = t.type == WeylType::D ? "" : "Q ";
      s += tex ? "; c(" + rows + ") = " + (t.type == WeylType::D ? "" : "Q") + "\\prod_{j\\le " + std::to_string(p) +
                     "}(1+x_j)\\prod_{j\\le " + std::to_string(q) + "}(1+y_j)"
               : "; c(" + rows + ") = " + lead + "prod_{j<=" + std::to_string(p) + "}(1+x_j) prod_{j<=" + std::to_string(q) + "}(1+y_j)";
    }
  }
  return s;
}

int cmd_vexillary(const Args& a) {
  const WeylType type = parse_type(a.type);
  const Format f = parse_format(a.format);
  Triple tau;
  SignedPermutation w;
  bool vexillary = true;
  if (!a.triple.empty()) {
    tau = parse_triple(a.triple);
    if (!a.w.empty()) throw Usage("give --w or --triple, not both");
    w = tau.empty() ? SignedPermutation::identity(1) : w_of_triple(tau);
  } else {
    w = parse_word(a.w);
    if (w.size() == 0) w = SignedPermutation::identity(1);
    if (type == WeylType::A && !w.is_unsigned()) throw WrongType("type A needs an unsigned permutation");
    auto found = triple_of_w(w, group_of(type));
    vexillary = found.has_value();
    if (found) {
      tau = *found;
      tau.type = type;
    }
  }
  if (!vexillary) {
    if (f == Format::Json) {
      std::cout << json{{"type", a.type}, {"w", w.to_string()}, {"vexillary", false}}.dump(2) << "\n";
    } else {
      std::cout << w.to_string() << ": not vexillary\n";
    }
    return kPass;
  }
  const std::vector<int> la = lambda_parts(tau);
  int size = 0;
  for (int p : la) size += p;
  const bool expand = a.expand || size <= 12;
  std::optional<SchubertPolynomial> poly;
  if (expand) poly = vexillary_polynomial(tau);
  if (f == Format::Json) {
    json out{{"type", std::string(1, type_char(tau.type))}, {"w", w.to_string()}, {"vexillary", true},
             {"triple", triple_to_json(tau)}, {"lambda", la}, {"formula", formula_text(tau, Format::Plain)}};
    out["terms"] = poly ? terms_to_json(poly->value) : json(nullptr);
    std::cout << out.dump(2) << "\n";
    return kPass;
  }
  const bool tex = f == Format::Latex;
  std::cout << "w: " << (tex ? w.to_latex() : w.to_string()) << "\n";
  std::cout << "triple: (" << join(tau.k, " ") << "; " << join(tau.p, " ") << "; " << join(tau.q, " ") << ")\n";
  std::cout << "lambda: (" << join(la) << ")\n";
  std::cout << "formula: " << formula_text(tau, f) << "\n";
  if (poly) {
    std::cout << "polynomial: " << render_schubert(*poly, f) << "\n";
  } else {
    std::cout << "polynomial: not expanded (|lambda| = " << size << "; pass --expand)\n";
  }
  return kPass;
}

void print_report(const Report& r, Format f) {
  if (f == Format::Json) {
    std::cout << report_to_json(r).dump(2) << "\n";
    return;
  }
  const bool tex = f == Format::Latex;
  std::cout << (tex ? "\\paragraph{" + r.suite + "} " : "suite " + r.suite + ": ") << (r.pass ? "PASS" : "FAIL") << "\n";
  for (const auto& l : r.lines) std::cout << (tex ? "  \\item " : "  ") << l << "\n";
  const std::size_t shown = std::min<std::size_t>(r.failures.size(), 20);
  for (std::size_t i = 0; i < shown; ++i) std::cout << (tex ? "  \\item FAIL " : "  FAIL ") << r.failures[i] << "\n";
  if (r.failures.size() > shown) std::cout << "  ... " << r.failures.size() - shown << " more failures\n";
}

int cmd_verify(const Args& a) {
  const std::string& suite = a.suite;
  if (suite.empty()) throw Usage("verify needs a suite name");
  const Format f = parse_format(a.format);
  VerifyOptions opts;
  if (a.type != "") opts.type = parse_type(a.type);
  opts.n = a.n;
  opts.r = a.r;
  opts.seed = a.seed;
  opts.threads = std::max(1, a.threads);
  std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
  bool pass = true;
  json all = json::array();
  for (const auto& name : names) {
    const Report r = run_suite(name, opts);
    pass = pass && r.pass;
    std::cerr << name << ": " << r.seconds << " s\n";
    if (f == Format::Json && names.size() > 1) {
      all.push_back(report_to_json(r));
    } else {
      print_report(r, f);
    }
  }
  if (f == Format::Json && names.size() > 1) std::cout << all.dump(2) << "\n";
  return pass ? kPass : kFail;
}

int cmd_enumerate(const Args& a) {
  const WeylType type = parse_type(a.type);
  const int n = a.n.value_or(3);
  const int limit = type == WeylType::A ? 8 : 6;
  if (n < 1 || n > limit) throw BoundExceeded("--n must lie in [1, " + std::to_string(limit) + "] for type " + a.type);
  const Format f = parse_format(a.format);
  json rows = json::array();
  for (const auto& w : enumerate_group(n, group_of(type))) {
    auto tau = triple_of_w(w, group_of(type));
    if (a.vexillary_only && !tau) continue;
    if (tau) tau->type = type;
    const int len = length(w, group_of(type));
    if (f == Format::Json) {
      json row{{"w", w.to_string()}, {"length", len}, {"vexillary", tau.has_value()}};
      row["triple"] = tau ? triple_to_json(*tau) : json(nullptr);
      row["lambda"] = tau ? json(lambda_parts(*tau)) : json(nullptr);
      rows.push_back(std::move(row));
    } else if (f == Format::Latex) {
      std::cout << w.to_latex() << " & " << len << " & " << (tau ? "yes" : "no") << " & "
                << (tau ? "(" + join(tau->k, " ") + "; " + join(tau->p, " ") + "; " + join(tau->q, " ") + ")" : "")
                << " & " << (tau ? "(" + join(lambda_parts(*tau)) + ")" : "") << " \\\\\n";
    } else {
      std::cout << w.to_string() << "\t" << len << "\t" << (tau ? "vexillary" : "-") << "\t"
                << (tau ? tau->to_string() : "-") << "\t" << (tau ? "(" + join(lambda_parts(*tau)) + ")" : "-") << "\n";
    }
  }
  if (f == Format::Json) std::cout << rows.dump(2) << "\n";
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vexillary signed permutations and double Schubert polynomials"};
  app.require_subcommand(1);
  Args a;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--type", a.type, "Weyl type")->check(CLI::IsMember({"A", "B", "C", "D"}));
    sub->add_option("--format", a.format, "Output format")->check(CLI::IsMember({"json", "latex", "plain"}));
    sub->add_option("--threads", a.threads, "Worker threads");
  };
  auto* schub = app.add_subcommand("schubert", "Double Schubert polynomial of a signed permutation");
  common(schub);
  schub->add_option("--w", a.w, "One-line word such as \"2 -1\"")->required();
  schub->add_option("--n", a.n, "Ambient rank");

  auto* vexi = app.add_subcommand("vexillary", "Triple, partition and Pfaffian formula of a vexillary element");
  common(vexi);
  vexi->add_option("--w", a.w, "One-line word");
  vexi->add_option("--triple", a.triple, "Triple such as k=2,3;p=8,6;q=6,5;type=C");
  vexi->add_flag("--expand", a.expand, "Expand the polynomial even when large");

  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  common(ver);
  ver->add_option("suite,--suite", a.suite, "Suite name, or all");
  ver->add_option("--n", a.n, "Rank bound");
  ver->add_option("--r", a.r, "Pfaffian size bound");
  ver->add_option("--seed", a.seed, "Seed for randomized checks");

  auto* en = app.add_subcommand("enumerate", "List group elements with their vexillary data");
  common(en);
  en->add_option("--n", a.n, "Rank");
  en->add_flag("--vexillary-only", a.vexillary_only, "Only vexillary elements");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }
  // verify defaults to every type unless --type is given.
  if (ver->parsed() && ver->count("--type") == 0) a.type.clear();

  try {
    if (schub->parsed()) return cmd_schubert(a);
    if (vexi->parsed()) return cmd_vexillary(a);
    if (ver->parsed()) return cmd_verify(a);
    if (en->parsed()) return cmd_enumerate(a);
  } catch (const Usage& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnknownSuite& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidTriple& e) {
    std::cerr << "invalid triple: " << e.what() << "\n";
    return kUsage;
  } catch (const WrongType& e) {
    std::cerr << "wrong type: " << e.what() << "\n";
    return kUsage;
  } catch (const SizeMismatch& e) {
    std::cerr << "size mismatch: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
