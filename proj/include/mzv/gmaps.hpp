#pragma once

#include <optional>
#include <vector>

#include "mzv/series.hpp"

namespace mzv {

// Coefficients for the trivial-MZV layer live in K[Z], Z a formal
// stand-in for zeta_A(1); numeric realizations substitute
// Z := goss_zeta_pos(1, N).  Represented as a TPoly in the Z variable.
using SymCoeff = TPoly;

SymCoeff sym_zero(const Fq* F);
SymCoeff sym_const(const UFrac& c);
SymCoeff sym_zpow(const Fq* F, unsigned long long e);  // Z^e
bool sym_is_z_free(const SymCoeff& c);
// Z^e divides c as a polynomial (the zero polynomial is divisible)
bool zpow_divides(unsigned long long e, const SymCoeff& c);
Laurent sym_eval(const Ctx& ctx, const SymCoeff& c, const Laurent& zval, long N);

using KTuple = std::vector<unsigned>;

// Element of the trivial submodule in the eta-generator basis:
// f = sum_k c_k prod_{j in Sigma} eta_{k_j}(t_j), with finitely many
// nonzero c_k in K[Z].  Evaluation at theta^{q^j} returns c_j exactly.
struct TrivialMZV {
    std::vector<std::uint32_t> sigma;  // plain type, ascending indices
    std::map<KTuple, SymCoeff> coef;

    static TrivialMZV zero(std::vector<std::uint32_t> sigma);
    // the generator eta_k
    static TrivialMZV eta(const Ctx& ctx, std::vector<std::uint32_t> sigma, KTuple k);

    bool is_zero() const { return coef.empty(); }
    void add_term(const KTuple& k, const SymCoeff& c);
    TrivialMZV scaled(const SymCoeff& c) const;
    friend TrivialMZV operator+(const TrivialMZV& a, const TrivialMZV& b);

    std::string to_string() const;
};

// f(theta^{q^j}) = the eta-basis coefficient c_j.
SymCoeff trivial_eval(const Ctx& ctx, const TrivialMZV& f, const KTuple& j);

// Image of f under the polylogarithm maps, truncated at X-exponents
// q^{i_max}.  Coefficients are exact elements of K[Z].
struct XSeries {
    std::vector<std::uint32_t> sigma;
    unsigned imax = 0;
    std::map<Monomial, SymCoeff> coef;
};

// F_Sigma: coefficient of X^{q^i} is sum_{j <= i} f(theta^{q^j}) /
// (D_j ell_{i-j}^{q^j}).
XSeries f_map(const Ctx& ctx, const TrivialMZV& f, unsigned imax);

// E_Sigma: sum over the support of f(theta^{q^i})/D_i times the Frobenius
// twists of the depth-1 polylogarithms; equal to f_map coefficientwise.
XSeries e_map(const Ctx& ctx, const TrivialMZV& f, unsigned imax);

// Evaluation at X_i = 1: the sum of all coefficients.
SymCoeff ev_map_symbolic(const XSeries& x);
struct EvNumeric {
    Laurent value;
    long certified_floor;  // accounts for both N and the i_max truncation
};
EvNumeric ev_map_numeric(const Ctx& ctx, const XSeries& x, const TrivialMZV& f, long N);

// G_Sigma(f) = sum_j Z^{sum_r q^{j_r}} f(theta^{q^j}) / D_j.
SymCoeff g_map_symbolic(const Ctx& ctx, const TrivialMZV& f);
Laurent g_map_numeric(const Ctx& ctx, const TrivialMZV& f, long N);

unsigned long long gsig_weight(const Ctx& ctx, const KTuple& j);  // sum_r q^{j_r}

// Phi(prod T_i^{q^{j_i}-1}) = -Z^{sum (q^{j_i}-1)} eta_0 + D_j eta_j,
// for a nonzero tuple j; extended by K[Z]-linearity.
TrivialMZV phi(const Ctx& ctx, std::vector<std::uint32_t> sigma, const KTuple& j);
TrivialMZV phi_linear(const Ctx& ctx, std::vector<std::uint32_t> sigma,
                      const std::map<KTuple, SymCoeff>& combo);

// Basis element of ker(G_Sigma) for a nonzero tuple; identical to phi(j).
// The eta_0-exponent bookkeeping sum (q^{j_i}-1) = sum q^{j_i} - |Sigma|
// is exposed for cross-checking the two stated normalizations.
TrivialMZV kernel_basis(const Ctx& ctx, std::vector<std::uint32_t> sigma, const KTuple& j);
bool kernel_exponent_identity(const Ctx& ctx, std::size_t card, const KTuple& j);

// Image structure report: G(eta_0) = Z^{|Sigma|} exactly, and Z^{|Sigma|}
// divides the symbolic G-image of every sample.
struct ImageCheckReport {
    std::size_t samples = 0;
    bool generator_exact = false;
    bool all_divisible = false;
    bool ok() const { return generator_exact && all_divisible; }
};
ImageCheckReport image_check(const Ctx& ctx, const std::vector<std::uint32_t>& sigma,
                             const std::vector<TrivialMZV>& samples);

}  // namespace mzv
