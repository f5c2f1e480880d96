#pragma once

#include "mzv/arrays.hpp"
#include "mzv/ctx.hpp"

namespace mzv {

// Quasi-shuffle expansions.  Every returned combo C satisfies
// sum_i alpha_i S_*(C_i) = the stated product for EVERY degree d, with
// coefficients alpha_i in F_q independent of d; the empty array acts as
// the unit of the product.

// S_d(Sigma; s) S_d(Gamma; t) expanded into the diagonal term plus the
// two gated depth-2 sums.
ArrayCombo stuffle_depth1(const Ctx& ctx, const WeightedSubset& sigma, unsigned s,
                          const WeightedSubset& gamma, unsigned t);

enum class ProdMode { DD, D_LT, LT_LT };

// General product: DD expands S_d(A) S_d(B), D_LT expands S_d(A) S_{<d}(B)
// (yielding S_d-coefficients), LT_LT expands S_{<d}(A) S_{<d}(B)
// (yielding S_{<d}-coefficients).
ArrayCombo stuffle_product(const Ctx& ctx, const AdmissibleArray& A, const AdmissibleArray& B,
                           ProdMode mode);

// zeta(Sigma;s) zeta(Gamma;t) = the two ordered depth-2 terms + diagonal
// + both gated sums.
ArrayCombo zeta_product_expand(const Ctx& ctx, const WeightedSubset& sigma, unsigned s,
                               const WeightedSubset& gamma, unsigned t);

// Dagger analogue; the diagonal rule attaches the merged type to the
// leading slot of every classical diagonal term.  Requires
// |type(A) u type(B)| < q.
ArrayCombo dagger_stuffle_depth1(const Ctx& ctx, const WeightedSubset& sigma, unsigned s,
                                 const WeightedSubset& gamma, unsigned t);
ArrayCombo dagger_stuffle(const Ctx& ctx, const AdmissibleArray& A, const AdmissibleArray& B,
                          ProdMode mode);

}  // namespace mzv
