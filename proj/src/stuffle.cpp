#include "mzv/stuffle.hpp"

namespace mzv {

namespace {

// One gated sum: over J <= gate_set, I = (sigma u gamma) - J, i + j = s + t,
// coefficient Delta^{gate_set, j}_{J, gate_s}.
void add_gated_terms(const Ctx& ctx, ArrayCombo& out, const WeightedSubset& whole,
                     const WeightedSubset& gate_set, unsigned gate_s, unsigned total) {
    const Fq* F = ctx.F();
    for (const WeightedSubset& J : gate_set.subsets()) {
        for (unsigned j = 1; j < total; ++j) {
            unsigned i = total - j;
            FqElem c = delta_gate_coeff(F, gate_set, J, j, gate_s);
            if (c == 0) continue;
            AdmissibleArray arr({{whole.minus(J), i}, {J, j}});
            out.add(arr, c);
        }
    }
}

using Depth1Rule = ArrayCombo (*)(const Ctx&, const WeightedSubset&, unsigned,
                                  const WeightedSubset&, unsigned);

ArrayCombo product_impl(const Ctx& ctx, const AdmissibleArray& A, const AdmissibleArray& B,
                        ProdMode mode, Depth1Rule depth1);

// S_d(E) S_{<d}(C) for arbitrary E: peel the head of E and push the rest
// into the LT_LT product.
ArrayCombo dlt_impl(const Ctx& ctx, const AdmissibleArray& E, const AdmissibleArray& C,
                    Depth1Rule depth1) {
    if (E.is_empty()) return ArrayCombo::single(ctx.F(), C);
    const auto& [sig, s] = E.slots().front();
    ArrayCombo inner = product_impl(ctx, E.tail(), C, ProdMode::LT_LT, depth1);
    return inner.prepended(sig, s);
}

ArrayCombo product_impl(const Ctx& ctx, const AdmissibleArray& A, const AdmissibleArray& B,
                        ProdMode mode, Depth1Rule depth1) {
    const Fq* F = ctx.F();
    if (A.is_empty()) return ArrayCombo::single(F, B);
    if (B.is_empty()) return ArrayCombo::single(F, A);
    switch (mode) {
        case ProdMode::D_LT:
            return dlt_impl(ctx, A, B, depth1);
        case ProdMode::LT_LT: {
            // split the double sum by the position of the larger top degree
            ArrayCombo out = product_impl(ctx, A, B, ProdMode::DD, depth1);
            out.add_combo(product_impl(ctx, A, B, ProdMode::D_LT, depth1), F->one());
            out.add_combo(product_impl(ctx, B, A, ProdMode::D_LT, depth1), F->one());
            return out;
        }
        case ProdMode::DD: {
            const auto& [sa, wa] = A.slots().front();
            const auto& [sb, wb] = B.slots().front();
            ArrayCombo heads = depth1(ctx, sa, wa, sb, wb);
            ArrayCombo tails = product_impl(ctx, A.tail(), B.tail(), ProdMode::LT_LT, depth1);
            ArrayCombo out(F);
            for (const auto& [E, ce] : heads.terms())
                for (const auto& [C, cc] : tails.terms())
                    out.add_combo(dlt_impl(ctx, E, C, depth1), F->mul(ce, cc));
            return out;
        }
    }
    throw InternalError("stuffle_product: unknown mode");
}

}  // namespace

ArrayCombo stuffle_depth1(const Ctx& ctx, const WeightedSubset& sigma, unsigned s,
                          const WeightedSubset& gamma, unsigned t) {
    if (s < 1 || t < 1) throw DomainError("stuffle_depth1: exponents must be >= 1");
    const Fq* F = ctx.F();
    WeightedSubset whole = sigma | gamma;
    ArrayCombo out = ArrayCombo::single(F, AdmissibleArray::depth1(whole, s + t));
    add_gated_terms(ctx, out, whole, gamma, t, s + t);
    add_gated_terms(ctx, out, whole, sigma, s, s + t);
    return out;
}

ArrayCombo stuffle_product(const Ctx& ctx, const AdmissibleArray& A, const AdmissibleArray& B,
                           ProdMode mode) {
    return product_impl(ctx, A, B, mode, &stuffle_depth1);
}

ArrayCombo zeta_product_expand(const Ctx& ctx, const WeightedSubset& sigma, unsigned s,
                               const WeightedSubset& gamma, unsigned t) {
    if (s < 1 || t < 1) throw DomainError("zeta_product_expand: exponents must be >= 1");
    const Fq* F = ctx.F();
    ArrayCombo out(F);
    out.add(AdmissibleArray({{sigma, s}, {gamma, t}}), F->one());
    out.add(AdmissibleArray({{gamma, t}, {sigma, s}}), F->one());
    WeightedSubset whole = sigma | gamma;
    out.add(AdmissibleArray::depth1(whole, s + t), F->one());
    add_gated_terms(ctx, out, whole, gamma, t, s + t);
    add_gated_terms(ctx, out, whole, sigma, s, s + t);
    return out;
}

ArrayCombo dagger_stuffle_depth1(const Ctx& ctx, const WeightedSubset& sigma, unsigned s,
                                 const WeightedSubset& gamma, unsigned t) {
    if (s < 1 || t < 1) throw DomainError("dagger_stuffle_depth1: exponents must be >= 1");
    const Fq* F = ctx.F();
    WeightedSubset merged = sigma | gamma;
    if (merged.card() >= ctx.q()) throw DomainError("dagger_stuffle_depth1: requires |type| < q");
    // b_d(Sigma) b_d(Gamma) = b_d(Sigma u Gamma) rides on the common top
    // degree, so the merged type goes to the leading slot of every term of
    // the bare (type-free) diagonal rule.
    ArrayCombo out = ArrayCombo::single(F, AdmissibleArray::depth1(merged, s + t));
    WeightedSubset none = WeightedSubset::empty();
    for (unsigned j = 1; j < s + t; ++j) {
        unsigned i = s + t - j;
        FqElem c = ctx.F()->add(delta_gate_coeff(F, none, none, j, t),
                                delta_gate_coeff(F, none, none, j, s));
        if (c == 0) continue;
        out.add(AdmissibleArray({{merged, i}, {none, j}}), c);
    }
    return out;
}

ArrayCombo dagger_stuffle(const Ctx& ctx, const AdmissibleArray& A, const AdmissibleArray& B,
                          ProdMode mode) {
    if ((A.type() | B.type()).card() >= ctx.q())
        throw DomainError("dagger_stuffle: requires |type(A) u type(B)| < q");
    return product_impl(ctx, A, B, mode, &dagger_stuffle_depth1);
}

}  // namespace mzv
