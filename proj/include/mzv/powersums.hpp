#pragma once

#include "mzv/arrays.hpp"
#include "mzv/ctx.hpp"

namespace mzv {

// Per-degree slices S_d(A) of zeta-like sums: exact polynomials in the
// t-variables of type(A) with coefficients in K = F_q(theta).  The empty
// array has S_0 = 1 and S_d = 0 for d > 0.
//
// power_sum_brute enumerates monic polynomials degree by degree (the
// defining sum); power_sum_fast computes the same value through the
// generating-function slices and never enumerates A^+(d); they are
// cross-checked exactly in the test suites.

TPoly power_sum_brute(const Ctx& ctx, const AdmissibleArray& A, unsigned d);
TPoly power_sum_brute_lt(const Ctx& ctx, const AdmissibleArray& A, unsigned d);  // S_{<d}

// Depth-1 closed form: requires a plain Sigma with |Sigma| < q.
TPoly power_sum_depth1_fast(const Ctx& ctx, const WeightedSubset& sigma, unsigned s, unsigned d);

// The superseded variant of the depth-1 closed form, kept verbatim for
// comparison runs.  KNOWN INCORRECT for |Sigma| >= 2: it disagrees with
// the defining sum (see the gp-compare suite).  Never called by any
// production path.
TPoly power_sum_depth1_gp(const Ctx& ctx, const WeightedSubset& sigma, unsigned s, unsigned d);

// Recursion over depth with depth-1 slices from power_sum_depth1_fast;
// every slot must be plain with |Sigma_i| < q.
TPoly power_sum_fast(const Ctx& ctx, const AdmissibleArray& A, unsigned d);
TPoly power_sum_fast_lt(const Ctx& ctx, const AdmissibleArray& A, unsigned d);

// Degree-d slice of the dagger sum: flags d = d_1 > ... > d_r >= 0 with
// factors S_{d_i}(s_i) b_{d_i}(Sigma_i).  Requires |type(A)| < q.
TPoly dagger_power_sum(const Ctx& ctx, const AdmissibleArray& A, unsigned d);
TPoly dagger_power_sum_lt(const Ctx& ctx, const AdmissibleArray& A, unsigned d);

// Certified lower bound for v_inf of every coefficient of S_d(A):
//   deg ell_d - |Sigma_1| deg b_d = (q^d - 1)(q - |Sigma_1|)/(q - 1).
// The head slice is a combination of terms S_d(m) Q-products b-products
// whose valuations clear deg ell_d minus the t-coefficient degrees, and
// the tail prefix sums have nonnegative valuation.  Requires a nonempty
// array with |Sigma_1| < q.
long valuation_bound(unsigned q, const AdmissibleArray& A, unsigned d);

}  // namespace mzv
