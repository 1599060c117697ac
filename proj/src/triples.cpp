#include "vex/triples.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "vex/errors.hpp"

namespace vex {

namespace {

bool is_signed_type(WeylType t) { return t != WeylType::A; }

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

std::vector<int> parse_list(const std::string& s) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t used = 0;
    try {
      out.push_back(std::stoi(tok, &used));
    } catch (const std::exception&) {
      throw ParseError("bad integer '" + tok + "'");
    }
    if (used != tok.size()) throw ParseError("bad integer '" + tok + "'");
  }
  return out;
}

/// Left minus right side of the defining inequality between terms i and i+1
/// (positive: strict, zero: redundant).
int slack(const Triple& t, std::size_t i) {
  const int dk = t.k[i + 1] - t.k[i];
  if (t.type == WeylType::A) return (t.p[i] - t.p[i + 1]) + (t.q[i + 1] - t.q[i]) - dk;
  return (t.p[i] - t.p[i + 1]) + (t.q[i] - t.q[i + 1]) - dk;
}

void require_valid(const Triple& t) {
  if (validate(t) == Validity::Invalid) throw InvalidTriple("invalid triple " + t.to_string());
}

/// One-line construction for types B/C: returns values for positions 1..N.
std::vector<int> build_signed(const Triple& t) {
  int n = 2;
  for (std::size_t i = 0; i < t.k.size(); ++i) n = std::max(n, t.p[i] + t.q[i] + t.k.back() + 2);
  std::vector<int> pos(static_cast<std::size_t>(n + 1), 0);
  std::vector<bool> used(static_cast<std::size_t>(n + 1), false);
  int prev = 0;
  for (std::size_t i = 0; i < t.k.size(); ++i) {
    const int cnt = t.k[i] - prev;
    prev = t.k[i];
    std::vector<int> vals;
    for (int b = t.q[i]; b <= n && static_cast<int>(vals.size()) < cnt; ++b)
      if (!used[static_cast<std::size_t>(b)]) vals.push_back(b);
    std::vector<int> slots;
    for (int a = t.p[i]; a <= n && static_cast<int>(slots.size()) < cnt; ++a)
      if (pos[static_cast<std::size_t>(a)] == 0) slots.push_back(a);
    if (static_cast<int>(vals.size()) < cnt || static_cast<int>(slots.size()) < cnt)
      throw InvalidTriple("construction ran out of room for " + t.to_string());
    std::sort(vals.rbegin(), vals.rend());
    for (int j = 0; j < cnt; ++j) {
      pos[static_cast<std::size_t>(slots[static_cast<std::size_t>(j)])] = -vals[static_cast<std::size_t>(j)];
      used[static_cast<std::size_t>(vals[static_cast<std::size_t>(j)])] = true;
    }
  }
  int next = 1;
  for (int a = 1; a <= n; ++a) {
    if (pos[static_cast<std::size_t>(a)] != 0) continue;
    while (used[static_cast<std::size_t>(next)]) ++next;
    pos[static_cast<std::size_t>(a)] = next;
    used[static_cast<std::size_t>(next)] = true;
  }
  return {pos.begin() + 1, pos.end()};
}

std::vector<int> build_unsigned(const Triple& t) {
  int n = 2;
  for (std::size_t i = 0; i < t.k.size(); ++i) n = std::max(n, t.p[i] + t.q[i] + t.k.back() + 2);
  std::vector<int> pos(static_cast<std::size_t>(n + 1), 0);
  std::vector<bool> used(static_cast<std::size_t>(n + 1), false);
  int prev = 0;
  for (std::size_t i = 0; i < t.k.size(); ++i) {
    const int cnt = t.k[i] - prev;
    prev = t.k[i];
    std::vector<int> vals;
    for (int b = t.q[i]; b >= 1 && static_cast<int>(vals.size()) < cnt; --b)
      if (!used[static_cast<std::size_t>(b)]) vals.push_back(b);
    std::vector<int> slots;
    for (int a = t.p[i] + 1; a <= n && static_cast<int>(slots.size()) < cnt; ++a)
      if (pos[static_cast<std::size_t>(a)] == 0) slots.push_back(a);
    if (static_cast<int>(vals.size()) < cnt || static_cast<int>(slots.size()) < cnt)
      throw InvalidTriple("construction ran out of room for " + t.to_string());
    std::sort(vals.begin(), vals.end());
    for (int j = 0; j < cnt; ++j) {
      pos[static_cast<std::size_t>(slots[static_cast<std::size_t>(j)])] = vals[static_cast<std::size_t>(j)];
      used[static_cast<std::size_t>(vals[static_cast<std::size_t>(j)])] = true;
    }
  }
  int next = 1;
  for (int a = 1; a <= n; ++a) {
    if (pos[static_cast<std::size_t>(a)] != 0) continue;
    while (used[static_cast<std::size_t>(next)]) ++next;
    pos[static_cast<std::size_t>(a)] = next;
    used[static_cast<std::size_t>(next)] = true;
  }
  return {pos.begin() + 1, pos.end()};
}

int unsigned_rank(const SignedPermutation& w, int p, int q) {
  int c = 0;
  const int n = std::max(w.size(), p);
  for (int j = p + 1; j <= n; ++j)
    if (w(j) <= q) ++c;
  return c;
}

/// Peels a type B/C triple off a signed permutation following the
/// last-descent / consecutive-barred-run description. No validation.
std::optional<Triple> peel_signed(const SignedPermutation& w) {
  const int n = w.size();
  std::vector<bool> pos_done(static_cast<std::size_t>(n + 2), false);
  std::vector<bool> val_done(static_cast<std::size_t>(n + 2), false);
  Triple t;
  t.type = WeylType::C;
  int total = 0;
  for (;;) {
    std::vector<int> open;
    for (int a = 1; a <= n; ++a)
      if (!pos_done[static_cast<std::size_t>(a)]) open.push_back(a);
    if (std::none_of(open.begin(), open.end(), [&](int a) { return w(a) < 0; })) break;
    // Last descent in 0, w(open...), with position 0 holding 0.
    std::size_t start = 0;  // index into open of the first position after the last descent
    int before = 0;
    for (std::size_t i = 0; i < open.size(); ++i) {
      const int cur = w(open[i]);
      if (before > cur) start = i;
      before = cur;
    }
    int p = open[start];
    while (p > 1 && pos_done[static_cast<std::size_t>(p - 1)]) --p;
    // Run of barred values consecutive modulo values already taken.
    int count = 0;
    int last = 0;
    for (std::size_t i = start; i < open.size(); ++i) {
      const int x = w(open[i]);
      if (x >= 0) break;
      const int b = -x;
      if (count > 0) {
        if (b >= last) break;
        bool gap = false;
        for (int v = b + 1; v < last; ++v)
          if (!val_done[static_cast<std::size_t>(v)]) gap = true;
        if (gap) break;
      }
      last = b;
      ++count;
    }
    if (count == 0) return std::nullopt;
    for (std::size_t i = start; i < start + static_cast<std::size_t>(count); ++i) {
      pos_done[static_cast<std::size_t>(open[i])] = true;
      val_done[static_cast<std::size_t>(-w(open[i]))] = true;
    }
    int q = last;
    while (q > 1 && val_done[static_cast<std::size_t>(q - 1)]) --q;
    total += count;
    t.k.push_back(total);
    t.p.push_back(p);
    t.q.push_back(q);
  }
  return t;
}

/// Essential-set reading of a permutation as a type A triple. No validation.
std::optional<Triple> essential_unsigned(const SignedPermutation& w) {
  const int n = w.size();
  const SignedPermutation inv = w.inverse();
  auto in_diagram = [&](int i, int j) { return i <= n && j <= n && j < w(i) && i < inv(j); };
  struct Box {
    int k, p, q;
  };
  std::vector<Box> boxes;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (!in_diagram(i, j) || in_diagram(i + 1, j) || in_diagram(i, j + 1)) continue;
      int r = 0;
      for (int a = 1; a <= i; ++a)
        if (w(a) <= j) ++r;
      boxes.push_back({j - r, i, j});
    }
  }
  std::sort(boxes.begin(), boxes.end(), [](const Box& a, const Box& b) {
    return a.k != b.k ? a.k < b.k : (a.p != b.p ? a.p > b.p : a.q < b.q);
  });
  Triple t;
  t.type = WeylType::A;
  for (const auto& b : boxes) {
    t.k.push_back(b.k);
    t.p.push_back(b.p);
    t.q.push_back(b.q);
  }
  return t;
}

}  // namespace

std::vector<int> Triple::l_values() const {
  std::vector<int> l;
  for (std::size_t i = 0; i < k.size(); ++i) l.push_back(p[i] - q[i] + k[i]);
  return l;
}

std::string Triple::to_string() const {
  return "k=" + join(k) + ";p=" + join(p) + ";q=" + join(q) + ";type=" + type_char(type);
}

Triple parse_triple(const std::string& s) {
  Triple t;
  bool have_k = false, have_p = false, have_q = false;
  std::stringstream in(s);
  std::string field;
  while (std::getline(in, field, ';')) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) throw ParseError("missing '=' in '" + field + "'");
    const std::string key = field.substr(0, eq);
    const std::string val = field.substr(eq + 1);
    if (key == "k") {
      t.k = parse_list(val);
      have_k = true;
    } else if (key == "p") {
      t.p = parse_list(val);
      have_p = true;
    } else if (key == "q") {
      t.q = parse_list(val);
      have_q = true;
    } else if (key == "type") {
      t.type = parse_type(val);
    } else {
      throw ParseError("unknown triple field '" + key + "'");
    }
  }
  if (!have_k || !have_p || !have_q) throw ParseError("triple needs k, p and q");
  if (t.k.size() != t.p.size() || t.k.size() != t.q.size()) throw ParseError("k, p, q lengths differ");
  return t;
}

Validity validate(const Triple& t) {
  const std::size_t s = t.k.size();
  if (t.p.size() != s || t.q.size() != s) return Validity::Invalid;
  const int floor_pq = t.type == WeylType::D ? 0 : 1;
  for (std::size_t i = 0; i < s; ++i) {
    if (t.k[i] < 1) return Validity::Invalid;
    if (i + 1 < s && t.k[i + 1] <= t.k[i]) return Validity::Invalid;
    if (i + 1 < s && t.p[i + 1] > t.p[i]) return Validity::Invalid;
    if (t.type == WeylType::A) {
      if (t.p[i] < 1 || t.q[i] < 1 || t.k[i] > t.q[i]) return Validity::Invalid;
      if (i + 1 < s && t.q[i + 1] < t.q[i]) return Validity::Invalid;
    } else {
      if (t.p[i] < floor_pq || t.q[i] < floor_pq) return Validity::Invalid;
      if (i + 1 < s && t.q[i + 1] > t.q[i]) return Validity::Invalid;
    }
  }
  if (t.type == WeylType::A && s > 0 && t.p[s - 1] - t.q[s - 1] + t.k[s - 1] <= 0) return Validity::Invalid;
  bool redundant = false;
  for (std::size_t i = 0; i + 1 < s; ++i) {
    const int d = slack(t, i);
    if (d < 0) return Validity::Invalid;
    if (d == 0) redundant = true;
  }
  return redundant ? Validity::Redundant : Validity::Strict;
}

Triple reduce_redundant(const Triple& t) {
  require_valid(t);
  Triple out;
  out.type = t.type;
  for (std::size_t i = 0; i < t.k.size(); ++i) {
    if (i + 1 < t.k.size() && slack(t, i) == 0) continue;
    out.k.push_back(t.k[i]);
    out.p.push_back(t.p[i]);
    out.q.push_back(t.q[i]);
  }
  return out;
}

std::vector<int> lambda_parts(const Triple& t) {
  if (validate(t) == Validity::Invalid) throw InvalidTriple("λ needs a valid triple: " + t.to_string());
  std::vector<int> la(static_cast<std::size_t>(t.rank()));
  int lo = 0;
  for (std::size_t i = 0; i < t.k.size(); ++i) {
    int pinned = 0;
    switch (t.type) {
      case WeylType::A: pinned = t.p[i] - t.q[i] + t.k[i]; break;
      case WeylType::B:
      case WeylType::C: pinned = t.p[i] + t.q[i] - 1; break;
      case WeylType::D: pinned = t.p[i] + t.q[i]; break;
    }
    for (int k = lo + 1; k <= t.k[i]; ++k)
      la[static_cast<std::size_t>(k - 1)] = t.type == WeylType::A ? pinned : pinned + t.k[i] - k;
    lo = t.k[i];
  }
  return la;
}

StrictPartition lambda_of(const Triple& t) {
  if (t.type == WeylType::A || t.type == WeylType::D) throw WrongType("strict λ is for types B and C");
  return StrictPartition(lambda_parts(t));
}

TypeDPartition lambda_of_d(const Triple& t) {
  if (t.type != WeylType::D) throw WrongType("type-D λ needs a type D triple");
  return TypeDPartition(lambda_parts(t));
}

SignedPermutation w_of_triple(const Triple& t) {
  require_valid(t);
  if (t.type == WeylType::D) {
    const SignedPermutation w = w_of_triple(plus_map(t));
    for (std::size_t i = 0; i < t.k.size(); ++i)
      if (rank_function(w, t.p[i], t.q[i], true) != t.k[i])
        throw InvalidTriple("strict rank check failed for " + t.to_string());
    return w;
  }
  const bool signed_type = is_signed_type(t.type);
  const SignedPermutation w = SignedPermutation(signed_type ? build_signed(t) : build_unsigned(t)).trimmed();
  for (std::size_t i = 0; i < t.k.size(); ++i) {
    const int r = signed_type ? rank_function(w, t.p[i], t.q[i], false) : unsigned_rank(w, t.p[i], t.q[i]);
    if (r != t.k[i]) throw InvalidTriple("rank check failed for " + t.to_string());
  }
  return w;
}

std::optional<Triple> triple_of_w(const SignedPermutation& w, WeylType type) {
  if (type == WeylType::A && !w.is_unsigned()) throw WrongType("type A needs an unsigned permutation");
  std::optional<Triple> cand = type == WeylType::A ? essential_unsigned(w) : peel_signed(w);
  if (!cand) return std::nullopt;
  if (type == WeylType::D) {
    for (std::size_t i = 0; i < cand->k.size(); ++i) {
      --cand->p[i];
      --cand->q[i];
    }
  }
  cand->type = type;
  if (validate(*cand) == Validity::Invalid) return std::nullopt;
  Triple t = reduce_redundant(*cand);
  if (w_of_triple(t).trimmed() != w.trimmed()) return std::nullopt;
  return t;
}

Triple dual(const Triple& t) {
  if (t.type != WeylType::A) throw WrongType("duality is defined for type A triples");
  Triple d;
  d.type = WeylType::A;
  d.k = t.l_values();
  d.p = t.q;
  d.q = t.p;
  std::reverse(d.k.begin(), d.k.end());
  std::reverse(d.p.begin(), d.p.end());
  std::reverse(d.q.begin(), d.q.end());
  return d;
}

Triple plus_map(const Triple& t) {
  if (t.type != WeylType::D) throw WrongType("the shift map needs a type D triple");
  Triple c = t;
  c.type = WeylType::C;
  for (auto& x : c.p) ++x;
  for (auto& x : c.q) ++x;
  return c;
}

std::vector<Triple> enumerate_triples(WeylType type, int max_k, int max_p, int max_q, bool redundant) {
  std::vector<Triple> out;
  const int lo = type == WeylType::D ? 0 : 1;
  Triple cur;
  cur.type = type;
  std::function<void()> rec = [&]() {
    if (!cur.empty() && (validate(cur) == Validity::Redundant) == redundant) out.push_back(cur);
    const int k0 = cur.empty() ? 0 : cur.k.back();
    const int p_hi = cur.empty() ? max_p : cur.p.back();
    for (int k = k0 + 1; k <= max_k; ++k) {
      for (int p = lo; p <= p_hi; ++p) {
        const int q_lo = type == WeylType::A ? (cur.empty() ? lo : cur.q.back()) : lo;
        const int q_hi = type == WeylType::A ? max_q : (cur.empty() ? max_q : cur.q.back());
        for (int q = q_lo; q <= q_hi; ++q) {
          cur.k.push_back(k);
          cur.p.push_back(p);
          cur.q.push_back(q);
          const Validity v = validate(cur);
          if (v == Validity::Strict || (redundant && v == Validity::Redundant)) rec();
          cur.k.pop_back();
          cur.p.pop_back();
          cur.q.pop_back();
        }
      }
    }
  };
  rec();
  return out;
}

}  // namespace vex
