#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "vex/io.hpp"
#include "vex/schubert.hpp"
#include "vex/verify.hpp"

using namespace vex;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome from_reports(std::initializer_list<Report> reports) {
  Outcome o{true, ""};
  for (const auto& r : reports) {
    o.pass = o.pass && r.pass;
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += r.suite + (r.pass ? " ok" : " failed: " + (r.failures.empty() ? std::string("?") : r.failures.front()));
    for (const auto& line : r.lines) o.detail += " | " + line;
  }
  return o;
}

Outcome census_counts() {
  const auto start = std::chrono::steady_clock::now();
  const Report r = run_suite("census");
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool counts = !r.lines.empty() && r.lines.front() == "C: 33/48 vexillary, D: 18/24";
  return {counts && r.pass && s < 5.0, (r.lines.empty() ? "" : r.lines.front()) + " in " + std::to_string(s) + " s"};
}

Outcome theorem_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  const Report w3 = run_suite("theorem-equivalence");
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  VerifyOptions stretch;
  stretch.type = WeylType::C;
  stretch.n = 4;
  const Report w4 = run_suite("theorem-equivalence", stretch);
  Outcome o = from_reports({w3});
  o.pass = o.pass && s < 120.0;
  o.detail += " (W_3, " + std::to_string(s) + " s); stretch C W_4: " + (w4.pass ? "ok" : "failed") + ", " + w4.lines.front();
  return o;
}

Outcome witness() {
  const SignedPermutation w = parse_word("-3 2 -1");
  const GammaElement top = top_term(schubert(w, WeylType::C, 3).value, length(w, WeylType::C));
  const GammaElement expect = GammaElement::q_basis(StrictPartition({3, 2})) + GammaElement::q_basis(StrictPartition({4, 1}));
  const bool vexillary = triple_of_w(w, WeylType::C).has_value();
  return {top == expect && !vexillary, "top term " + render_gamma(top, Basis::Q, Format::Plain)};
}

Outcome inverse_symmetry() {
  VerifyOptions a;
  a.type = WeylType::A;
  return from_reports({run_suite("inverse-swap"), run_suite("inverse-swap", a)});
}

Outcome positivity() {
  const Report r = run_suite("positivity");
  return {r.pass, r.lines.front()};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
    bool blocking = true;
  };
  const std::vector<Criterion> criteria{
      {1, "vexillary census of W_3", census_counts},
      {2, "theorem equivalence on W_3", theorem_equivalence},
      {3, "well-definedness and stability", [] { return from_reports({run_suite("stability")}); }},
      {4, "type B scaling", [] { return from_reports({run_suite("b-scaling")}); }},
      {5, "inverse symmetry", inverse_symmetry},
      {6, "skew-symmetry and redundancy invariance", [] { return from_reports({run_suite("redundancy")}); }},
      {7, "specialization vanishing of Q_{k,l}", [] { return from_reports({run_suite("lemma25")}); }},
      {8, "identities (2) and (3)", [] { return from_reports({run_suite("identity-2-3")}); }},
      {9, "non-vexillary witness", witness},
      {10, "type A determinants and worked triple", [] { return from_reports({run_suite("type-a")}); }},
      {11, "appendix identities", [] { return from_reports({run_suite("appendix-a1"), run_suite("appendix-a2")}); }},
      {12, "positivity (exploratory, non-blocking)", positivity, false},
  };
  bool all = true;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const char* verdict = o.pass ? "PASS" : (c.blocking ? "FAIL" : "FINDING");
    std::printf("criterion %2d %-8s %s: %s\n", c.id, verdict, c.name, o.detail.c_str());
    std::fflush(stdout);
    if (c.blocking && !o.pass) all = false;
  }
  return all ? 0 : 1;
}
