#include "vex/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "vex/errors.hpp"

namespace vex {

char type_char(WeylType t) {
  switch (t) {
    case WeylType::A: return 'A';
    case WeylType::B: return 'B';
    case WeylType::C: return 'C';
    case WeylType::D: return 'D';
  }
  return '?';
}

WeylType parse_type(const std::string& s) {
  if (s == "A") return WeylType::A;
  if (s == "B") return WeylType::B;
  if (s == "C" || s == "BC") return WeylType::C;
  if (s == "D") return WeylType::D;
  throw ParseError("unknown type '" + s + "'");
}

SignedPermutation::SignedPermutation(std::vector<int> values) : v_(std::move(values)) {
  std::vector<bool> seen(v_.size() + 1, false);
  for (int x : v_) {
    const int a = std::abs(x);
    if (a < 1 || a > size() || seen[static_cast<std::size_t>(a)])
      throw std::invalid_argument("not a signed permutation: " + to_string());
    seen[static_cast<std::size_t>(a)] = true;
  }
}

SignedPermutation SignedPermutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return SignedPermutation(std::move(v));
}

int SignedPermutation::bar_count() const {
  return static_cast<int>(std::count_if(v_.begin(), v_.end(), [](int x) { return x < 0; }));
}

SignedPermutation SignedPermutation::embedded(int n) const {
  if (n < size()) throw SizeMismatch("cannot embed into a smaller rank");
  std::vector<int> v = v_;
  for (int i = size() + 1; i <= n; ++i) v.push_back(i);
  return SignedPermutation(std::move(v));
}

SignedPermutation SignedPermutation::trimmed() const {
  std::vector<int> v = v_;
  while (!v.empty() && v.back() == static_cast<int>(v.size())) v.pop_back();
  return SignedPermutation(std::move(v));
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> inv(v_.size());
  for (int i = 1; i <= size(); ++i) {
    const int x = v_[static_cast<std::size_t>(i - 1)];
    inv[static_cast<std::size_t>(std::abs(x) - 1)] = x > 0 ? i : -i;
  }
  return SignedPermutation(std::move(inv));
}

SignedPermutation SignedPermutation::times_generator(int g) const {
  const int need = g == kHatOne ? 2 : std::max(g + 1, 1);
  std::vector<int> v = embedded(std::max(size(), need)).v_;
  if (g == kHatOne) {
    const int a = v[0];
    v[0] = -v[1];
    v[1] = -a;
  } else if (g == 0) {
    v[0] = -v[0];
  } else {
    std::swap(v[static_cast<std::size_t>(g - 1)], v[static_cast<std::size_t>(g)]);
  }
  return SignedPermutation(std::move(v));
}

std::string SignedPermutation::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(v_[i]);
  }
  return s;
}

std::string SignedPermutation::to_latex() const {
  std::string s;
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (i) s += "\\;";
    s += v_[i] < 0 ? "\\bar{" + std::to_string(-v_[i]) + "}" : std::to_string(v_[i]);
  }
  return s;
}

SignedPermutation parse_word(const std::string& s) {
  std::istringstream in(s);
  std::vector<int> v;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int x = 0;
    try {
      x = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw ParseError("bad entry '" + tok + "' in word");
    }
    if (used != tok.size()) throw ParseError("bad entry '" + tok + "' in word");
    v.push_back(x);
  }
  try {
    return SignedPermutation(std::move(v));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

SignedPermutation compose(const SignedPermutation& w, const SignedPermutation& v) {
  if (w.size() != v.size()) throw SizeMismatch("compose: sizes differ");
  std::vector<int> out;
  for (int i = 1; i <= v.size(); ++i) {
    const int x = v(i);
    out.push_back(x > 0 ? w(x) : -w(-x));
  }
  return SignedPermutation(std::move(out));
}

SignedPermutation inverse(const SignedPermutation& w) { return w.inverse(); }

int length(const SignedPermutation& w, WeylType type) {
  const auto& v = w.values();
  const int n = w.size();
  int inv = 0, neg_pairs = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (v[static_cast<std::size_t>(i)] > v[static_cast<std::size_t>(j)]) ++inv;
      if (v[static_cast<std::size_t>(i)] + v[static_cast<std::size_t>(j)] < 0) ++neg_pairs;
    }
  }
  switch (type) {
    case WeylType::A: return inv;
    case WeylType::B:
    case WeylType::C: return inv + neg_pairs + w.bar_count();
    case WeylType::D: return inv + neg_pairs;
  }
  return inv;
}

std::vector<int> generators(int n, WeylType type) {
  std::vector<int> g;
  if (type == WeylType::D && n >= 2) g.push_back(kHatOne);
  if (type == WeylType::B || type == WeylType::C) g.push_back(0);
  for (int i = 1; i < n; ++i) g.push_back(i);
  return g;
}

std::vector<int> right_descents(const SignedPermutation& w, WeylType type, int n) {
  const SignedPermutation e = w.embedded(std::max(n, w.size()));
  const int l = length(e, type);
  std::vector<int> out;
  for (int g : generators(e.size(), type))
    if (length(e.times_generator(g), type) < l) out.push_back(g);
  return out;
}

std::vector<int> reduced_word(const SignedPermutation& w, WeylType type) {
  std::vector<int> seq;
  SignedPermutation cur = w;
  for (;;) {
    const auto d = right_descents(cur, type, cur.size());
    if (d.empty()) break;
    seq.push_back(d.front());
    cur = cur.times_generator(d.front());
  }
  if (cur != SignedPermutation::identity(cur.size()))
    throw WrongType("element " + w.to_string() + " is not in the group of type " + type_char(type));
  std::reverse(seq.begin(), seq.end());
  return seq;
}

SignedPermutation word_product(const std::vector<int>& word, int n) {
  SignedPermutation w = SignedPermutation::identity(n);
  for (int g : word) w = w.times_generator(g);
  return w;
}

SignedPermutation longest_element(int n, WeylType type) {
  std::vector<int> v;
  switch (type) {
    case WeylType::A:
      for (int i = n; i >= 1; --i) v.push_back(i);
      break;
    case WeylType::B:
    case WeylType::C:
      for (int i = 1; i <= n; ++i) v.push_back(-i);
      break;
    case WeylType::D:
      if (n < 2) throw std::invalid_argument("type D needs rank at least 2");
      for (int i = 1; i <= n; ++i) v.push_back(i == 1 && n % 2 == 1 ? 1 : -i);
      break;
  }
  return SignedPermutation(std::move(v));
}

int rank_function(const SignedPermutation& w, int p, int q, bool strict) {
  int count = 0;
  for (int a = 1; a <= w.size(); ++a) {
    const int x = w(a);
    if (x >= 0) continue;
    const int b = -x;
    if (strict ? (a > p && b > q) : (a >= p && b >= q)) ++count;
  }
  return count;
}

std::vector<SignedPermutation> enumerate_group(int n, WeylType type, bool odd_coset) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<SignedPermutation> out;
  do {
    if (type == WeylType::A) {
      out.emplace_back(perm);
      continue;
    }
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (type == WeylType::D && !odd_coset && __builtin_popcount(mask) % 2 != 0) continue;
      std::vector<int> v = perm;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) v[static_cast<std::size_t>(i)] = -v[static_cast<std::size_t>(i)];
      out.emplace_back(std::move(v));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end(), [&](const SignedPermutation& a, const SignedPermutation& b) {
    const int la = length(a, type == WeylType::A ? WeylType::A : type);
    const int lb = length(b, type == WeylType::A ? WeylType::A : type);
    return la != lb ? la < lb : a < b;
  });
  return out;
}

}  // namespace vex
