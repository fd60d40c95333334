#pragma once

#include "bsp/seqvec.hpp"

#include <optional>

namespace bsp {

/// Norm value together with an attaining admissible set.
struct SchreierNormValue {
    double value = 0.0;
    std::optional<SchreierSet> witness;  // absent only for the zero vector
};

/// Norm value together with an attaining chain.
struct BaernsteinNormValue {
    double value = 0.0;
    std::optional<SchreierChain> witness;  // absent only for the zero vector
};

/// (sum_n |x(n)|^p)^{1/p}. Requires p >= 1.
double lp_norm(const FinVec& x, double p);

/// max_n |x(n)|; 0 for the zero vector.
double sup_norm(const FinVec& x);

/// Exact supremum of mu_p(x, F) over all admissible sets F.
///
/// Only sets contained in the support matter, and for each choice of
/// smallest element m it suffices to add the min(m-1, remaining) largest
/// |x(n)|^p with n > m. The returned witness attains the value; ties are
/// broken toward the earliest minimum and then smallest indices.
SchreierNormValue schreier_norm(const FinVec& x, double p);

/// Brute-force reference: maximizes mu_p over every admissible subset of
/// the support. Requires support size <= 20.
double schreier_norm_oracle(const FinVec& x, double p);

/// Exact supremum of beta_p(x, C) over all chains C. Requires p > 1.
///
/// Dynamic program over sorted support positions: a chain decomposes into
/// blocks, the block opened at position c with the next block opened at
/// position c' > c contributes |x at c| plus the min(cap, available)
/// largest coefficients strictly inside (c, c'), where cap = index(c)-1.
/// The witness rebuilt from the recorded cuts evaluates back to the
/// returned value up to roundoff.
BaernsteinNormValue baernstein_norm(const FinVec& x, double p);

/// Brute-force reference: enumerates every chain supported on the
/// support. Requires support size <= 12. Requires p > 1.
double baernstein_norm_oracle(const FinVec& x, double p);

/// |x| sorted decreasingly and re-indexed onto {1..support size}.
FinVec decreasing_rearrangement(const FinVec& x);

}  // namespace bsp
