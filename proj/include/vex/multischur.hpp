#pragma once

#include <vector>

#include "vex/gamma.hpp"
#include "vex/partition.hpp"
#include "vex/polynomial.hpp"

namespace vex {

/// How multischur_pf guards the antisymmetry of its entry matrix.
enum class SkewPolicy {
  Verify,  // accept the degree criterion, otherwise compare m(k,l) with -m(l,k) exactly
  Trust,   // skip all checks
};

/// Pf_λ(c(1), ..., c(r)) for an arbitrary integer index sequence.
/// Entry (k,l): c(k)_{λk} c(l)_{λl} + 2 sum_{j=1}^{λl} (-1)^j c(k)_{λk+j} c(l)_{λl-j};
/// for odd r the border entry is c(k)_{λk}.
GammaElement multischur_pf(const std::vector<int>& indices, const std::vector<GeneratorSeries>& c,
                           SkewPolicy policy = SkewPolicy::Verify);
GammaElement multischur_pf(const StrictPartition& la, const std::vector<GeneratorSeries>& c,
                           SkewPolicy policy = SkewPolicy::Verify);

/// Entry (k,l) of the Pfaffian above (straightened).
GammaElement multischur_entry(int lk, int ll, const GeneratorSeries& ck, const GeneratorSeries& cl);

/// Pair (c | d) feeding the type-D Pfaffian: c finite of constant term 1, d a series.
struct DPairedSeries {
  Polynomial c = Polynomial(1);
  GeneratorSeries d;
};

/// Pf_λ(c(1)|d(1), ..., c(r)|d(r)) without any power of 1/2.
/// Entry (k,l): (d_k - c_k)(d_l + c_l) + 2 sum_{j=1}^{λl} (-1)^j d(k)_{λk+j} d(l)_{λl-j},
/// border d_k + c_k, where d_k = d(k)_{λk} and c_k = c(k)_{λk}.
/// Throws DivisibilityFailed / StarRelationFailed / DomainError when the pairs are
/// not admissible.
GammaElement multischur_pf_D(const std::vector<int>& indices, const std::vector<DPairedSeries>& pairs,
                             bool check = true);
GammaElement multischur_pf_D(const TypeDPartition& la, const std::vector<DPairedSeries>& pairs,
                             bool check = true);

/// Checks the admissibility conditions for the given indices; throws on failure.
void check_paired_series(const std::vector<int>& indices, const std::vector<DPairedSeries>& pairs);

/// det(a(i)_{λi + j - i}) over plain series a(i).
Polynomial multischur_det(const std::vector<int>& la, const std::vector<GeneratorSeries>& a);

/// prod_{j=1}^{k} (1 + t_j).
Polynomial elementary_series(int k, Family f = Family::t);

/// ℚ_λ(t) = Pf_λ(q(λ1), ...), q(k) = Q prod_{j<k} (1 + t_j).
GammaElement q_lambda_t(const StrictPartition& la);
/// ℙ_λ(t) = 2^-len(λ) ℚ_λ(t).
GammaElement p_lambda_t(const StrictPartition& la);
/// ℝ_λ(t) = 2^-len(λ) Pf_λ(e(λ1)|Q e(λ1), ...), e(k) = prod_{j<=k} (1 + t_j).
GammaElement r_lambda_t(const TypeDPartition& la);

}  // namespace vex
