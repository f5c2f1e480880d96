#pragma once

#include <optional>

#include "mzv/laurent.hpp"
#include "mzv/powersums.hpp"
#include "mzv/stuffle.hpp"

namespace mzv {

// Truncated element of the Tate algebra restricted to K-coefficients:
// finitely many monomials in t/X-variables, each carrying a Laurent value.
// prec is the requested N; floorv the certified common floor.  Every
// infinite series in this library lands here, always by summing exact
// per-degree data first and embedding once.
struct TateElem {
    const Fq* F = nullptr;
    long prec = 0;
    long floorv = 0;
    std::map<Monomial, Laurent> coef;

    static TateElem one(const Fq* F, long N);
    static TateElem zero(const Fq* F, long N);

    bool is_zero_to_prec() const;
    long residual_valuation() const;
    TateElem scaled(FqElem c) const;
    friend TateElem operator+(const TateElem& a, const TateElem& b);
    friend TateElem operator-(const TateElem& a, const TateElem& b);
    friend TateElem operator*(const TateElem& a, const TateElem& b);

    std::string to_string() const;
};

// Embed an exact polynomial value, coefficientwise, at floor -N-1.
TateElem embed_tpoly(const TPoly& p, long N);

enum class SumMethod { Brute, Fast };

// zeta_A(A) truncated at N: sums the per-degree slices up to the least d
// whose certified valuation bound exceeds N, then embeds.
TateElem zeta_value(const Ctx& ctx, const AdmissibleArray& A, long N,
                    SumMethod method = SumMethod::Fast);

// sum_i alpha_i zeta_A(C_i)
TateElem zeta_combo_value(const Ctx& ctx, const ArrayCombo& combo, long N,
                          SumMethod method = SumMethod::Fast);

// Multiple polylogarithm: the flag d_1 > ... > d_r contributes the
// X-monomial with exponent q^{d_i} added per index of Sigma_i (with
// multiplicity) and the coefficient prod_i S_{d_i}(s_i).
TateElem lambda_value(const Ctx& ctx, const AdmissibleArray& A, long N,
                      std::optional<unsigned> dmax_override = std::nullopt);

// Dagger zeta value; requires |type(A)| < q.
TateElem dagger_zeta(const Ctx& ctx, const AdmissibleArray& A, long N);

// eta_k in the variable t_idx: b_k(t) zeta_A(t; q^k) / D_k.
struct EtaValue {
    unsigned k = 0;
    std::uint32_t idx = 1;
    std::vector<TPoly> slices;  // exact per-degree representation
    TateElem series;
};

EtaValue eta_series(const Ctx& ctx, unsigned k, long N, std::uint32_t idx = 1);

// Exact value of eta_k at theta^{q^i}, computed through the exact
// non-positive zeta path; equals 1 when i == k and 0 otherwise.
UFrac eta_eval(const Ctx& ctx, unsigned k, unsigned i);

// eta_k evaluated at theta^{q^i} as a truncated series: per-degree exact
// substitution, then one embedding.
Laurent eta_value_at(const Ctx& ctx, unsigned k, unsigned i, long N, std::uint32_t idx = 1);

struct ResidualReport {
    bool ok = false;
    long residual = 0;  // residual valuation of the difference
};

// (-1)^k b_k(t) zeta_A(t; q^k) / D_k versus the depth-(k+1) array
// ({1}|1)({}|q-1)...({}|(q-1)q^{k-1}), compared to precision N.
ResidualReport special_zeta_check(const Ctx& ctx, unsigned k, long N);

// Evaluation of zeta_A(A) at t_n := theta^{q^{i_n}}: per-degree exact
// substitution before any truncation.  The assignment maps every index in
// the support of type(A) to its exponent i_n.
Laurent tate_eval(const Ctx& ctx, const AdmissibleArray& A,
                  const std::map<std::uint32_t, unsigned>& assignment, long N);

}  // namespace mzv
