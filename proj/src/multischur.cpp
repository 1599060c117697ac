#include "vex/multischur.hpp"

#include <string>

#include "vex/errors.hpp"
#include "vex/pfaffian.hpp"

namespace vex {

namespace {

void require_sizes(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw SizeMismatch(std::string(what) + ": index count differs from series count");
}

bool lemma_degree_criterion(const std::vector<int>& indices, const std::vector<GeneratorSeries>& c) {
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (!c[k].has_q || c[k].multiplier.degree() >= indices[k]) return false;
  }
  return true;
}

}  // namespace

GammaElement multischur_entry(int lk, int ll, const GeneratorSeries& ck, const GeneratorSeries& cl) {
  if (ll < 0) return {};
  return q_pair(lk, ll, ck, cl);
}

GammaElement multischur_pf(const std::vector<int>& indices, const std::vector<GeneratorSeries>& c,
                           SkewPolicy policy) {
  require_sizes(indices.size(), c.size(), "multischur_pf");
  const int r = static_cast<int>(indices.size());
  if (policy == SkewPolicy::Verify && !lemma_degree_criterion(indices, c)) {
    for (int k = 0; k < r; ++k) {
      for (int l = k + 1; l < r; ++l) {
        const GammaElement up = multischur_entry(indices[k], indices[l], c[k], c[l]);
        const GammaElement down = multischur_entry(indices[l], indices[k], c[l], c[k]);
        if (up + down != GammaElement()) {
          throw SkewCheckFailed("entry matrix is not antisymmetric at (" + std::to_string(k + 1) + "," +
                                std::to_string(l + 1) + ")");
        }
      }
    }
  }
  return pfaffian<GammaElement>(
      r, [&](int k, int l) { return multischur_entry(indices[k], indices[l], c[k], c[l]); },
      [&](int k) { return series_coeff(c[k], indices[k]); }, GammaElement(), GammaElement(1));
}

GammaElement multischur_pf(const StrictPartition& la, const std::vector<GeneratorSeries>& c, SkewPolicy policy) {
  return multischur_pf(la.parts(), c, policy);
}

void check_paired_series(const std::vector<int>& indices, const std::vector<DPairedSeries>& pairs) {
  require_sizes(indices.size(), pairs.size(), "multischur_pf_D");
  const std::size_t r = pairs.size();
  for (std::size_t i = 0; i < r; ++i) {
    const Polynomial& ci = pairs[i].c;
    if (ci.constant_term() != Dyadic(1)) throw DomainError("paired series c must have constant term 1");
    if (ci.degree() > std::max(indices[i], 0)) {
      throw DomainError("paired series c(" + std::to_string(i + 1) + ") exceeds its index degree");
    }
    try {
      (void)exact_divide(pairs[i].d.multiplier, ci);
      for (std::size_t j = 0; j < i; ++j) (void)exact_divide(pairs[j].c, ci);
    } catch (const NotDivisible&) {
      throw DivisibilityFailed("c(" + std::to_string(i + 1) + ") does not divide its d or an earlier c");
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      if (pairs[i].d.has_q != pairs[j].d.has_q) {
        throw StarRelationFailed("paired series mix Q and plain d");
      }
      const int top = indices[i] + indices[j];
      const Polynomial lhs = Polynomial::multiply_truncated(pairs[i].d.multiplier, star(pairs[j].d.multiplier), top);
      const Polynomial rhs = Polynomial::multiply_truncated(pairs[i].c, star(pairs[j].c), top);
      if (lhs != rhs) {
        throw StarRelationFailed("d(i) d(j)* != c(i) c(j)* for (" + std::to_string(i + 1) + "," +
                                 std::to_string(j + 1) + ")");
      }
    }
  }
}

GammaElement multischur_pf_D(const std::vector<int>& indices, const std::vector<DPairedSeries>& pairs, bool check) {
  if (check) {
    check_paired_series(indices, pairs);
  } else {
    require_sizes(indices.size(), pairs.size(), "multischur_pf_D");
  }
  const int r = static_cast<int>(indices.size());
  auto d_part = [&](int k, int m) { return series_coeff_gen(pairs[static_cast<std::size_t>(k)].d, m); };
  auto c_part = [&](int k) {
    const int m = indices[static_cast<std::size_t>(k)];
    return m < 0 ? Polynomial() : pairs[static_cast<std::size_t>(k)].c.homogeneous_part(m);
  };
  auto entry = [&](int k, int l) {
    const int lk = indices[static_cast<std::size_t>(k)];
    const int ll = indices[static_cast<std::size_t>(l)];
    Polynomial g = (d_part(k, lk) - c_part(k)) * (d_part(l, ll) + c_part(l));
    for (int j = 1; j <= ll; ++j) {
      Polynomial t = d_part(k, lk + j) * d_part(l, ll - j) * 2;
      if (j % 2 == 1) {
        g -= t;
      } else {
        g += t;
      }
    }
    return straighten(g);
  };
  auto border = [&](int k) { return straighten(d_part(k, indices[static_cast<std::size_t>(k)]) + c_part(k)); };
  return pfaffian<GammaElement>(r, entry, border, GammaElement(), GammaElement(1));
}

GammaElement multischur_pf_D(const TypeDPartition& la, const std::vector<DPairedSeries>& pairs, bool check) {
  return multischur_pf_D(la.parts(), pairs, check);
}

Polynomial multischur_det(const std::vector<int>& la, const std::vector<GeneratorSeries>& a) {
  require_sizes(la.size(), a.size(), "multischur_det");
  for (const auto& s : a) {
    if (s.has_q) throw WrongType("multischur_det takes plain series");
  }
  const int r = static_cast<int>(la.size());
  return determinant<Polynomial>(
      r,
      [&](int i, int j) {
        const int m = la[static_cast<std::size_t>(i)] + j - i;
        return m < 0 ? Polynomial() : a[static_cast<std::size_t>(i)].multiplier.homogeneous_part(m);
      },
      Polynomial(), Polynomial(1));
}

Polynomial elementary_series(int k, Family f) { return one_plus_product(f, k); }

GammaElement q_lambda_t(const StrictPartition& la) {
  std::vector<GeneratorSeries> c;
  for (int part : la.parts()) c.push_back(GeneratorSeries::q_times(elementary_series(part - 1)));
  return multischur_pf(la, c, SkewPolicy::Trust);
}

GammaElement p_lambda_t(const StrictPartition& la) {
  GammaElement e = q_lambda_t(la) * Polynomial(Dyadic::pow2(-la.length()));
  return e.with_view(GammaView::GammaPrime);
}

GammaElement r_lambda_t(const TypeDPartition& la) {
  std::vector<DPairedSeries> pairs;
  for (int part : la.parts()) {
    Polynomial e = elementary_series(part);
    pairs.push_back({e, GeneratorSeries::q_times(e)});
  }
  GammaElement e = multischur_pf_D(la, pairs, false) * Polynomial(Dyadic::pow2(-la.length()));
  return e.with_view(GammaView::GammaPrime);
}

}  // namespace vex
