#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "mzv/arrays.hpp"
#include "mzv/laurent.hpp"
#include "mzv/poly.hpp"

namespace mzv {

// Sparse polynomial in an auxiliary indeterminate x over K (exponents are
// typically q-powers).
using SparseXPoly = std::map<std::uint64_t, UFrac>;
// Same with coefficients that carry t-variables.
using SparseXTPoly = std::map<std::uint64_t, TPoly>;

enum class EdForm { Product, Sum };

// The special quantities attached to F_q[theta]: ell_d, D_d, b_d, the
// F_q-linear polynomials E_d, the partial interpolation polynomials P_d
// and their coefficients Q_{d,k}, power sums S_d(n) of positive and
// non-positive integers.  Everything is exact; all members are lazily
// cached and semantically pure.
class Carlitz {
public:
    explicit Carlitz(std::shared_ptr<const Fq> fq);

    const Fq* field() const { return fq_.get(); }
    unsigned q() const { return fq_->q(); }

    unsigned long long qpow(unsigned e) const;
    // deg ell_d = q + q^2 + ... + q^d
    long ell_degree(unsigned d) const;
    // deg of the t^0 coefficient of b_d: 1 + q + ... + q^{d-1}
    long b_degree(unsigned d) const;

    UPoly ell(unsigned d) const;           // prod_{i=1..d} (theta - theta^{q^i})
    UPoly dfac(unsigned d) const;          // D_d = prod_{i<d} (theta^{q^d} - theta^{q^i})
    std::vector<UPoly> bcoeffs(unsigned d) const;  // b_d(t) by t-degree
    TPoly bpoly(unsigned d, Var v) const;
    // prod_n b_d(t_n)^{sigma_n}
    TPoly bpoly_ws(unsigned d, const WeightedSubset& sigma) const;
    // b_d evaluated at theta^{q^i}
    UPoly b_at_theta_qpow(unsigned d, unsigned i) const;

    // S_d(n) for n >= 1, extracted from 1/(ell_d (1 - E_d(x))) = sum S_d(n+1) x^n
    UFrac sd(unsigned d, unsigned n) const;
    // sum over monic a of degree d of a^m (the power sum at -m), exact
    UPoly sd_negative(unsigned d, unsigned long long m) const;

    SparseXPoly e_poly(unsigned d, EdForm form) const;
    SparseXTPoly p_poly(unsigned d, Var v) const;  // sum_{j<d} b_j(v) E_j(x), d >= 1
    TPoly q_coeff(unsigned d, unsigned k, Var v) const;  // x^{q^k}-coefficient of P_d

private:
    std::shared_ptr<const Fq> fq_;
    mutable std::recursive_mutex mu_;
    mutable std::vector<UPoly> ell_, dfac_;
    mutable std::vector<std::vector<UPoly>> b_;
    mutable std::vector<std::vector<UFrac>> recip_;   // [d][k] = [x^k] 1/(1 - E_d(x))
    mutable std::vector<std::vector<UPoly>> intrec_;  // recip numerators over ell_d^k
    mutable std::map<std::pair<unsigned, unsigned>, UFrac> sdcache_;
    mutable std::map<std::pair<unsigned, unsigned long long>, UPoly> sdneg_;

    void grow(unsigned d) const;
    const std::vector<UFrac>& recip(unsigned d, unsigned upto) const;
};

unsigned digit_sum_base(unsigned long long m, unsigned q);

// zeta_A(-m) = sum_d sd_negative(d, m), exact; the summation stops at
// d = floor(digitsum_q(m)/(q-1)) + 1 and the next two degrees are checked
// to vanish.
UPoly goss_zeta_nonpos(const Carlitz& C, unsigned long long m);

// zeta_A(n) for n >= 1, truncated at precision N with the certified tail
// bound v_inf(S_d(n)) >= deg ell_d.
Laurent goss_zeta_pos(const Carlitz& C, unsigned n, long N);

// Exact check of the interpolation identity
//   sum_{a in A_<(d)} chi_J(a) ell_d E_d(x-a)/(x-a) = prod_{j in J} P_d(t_j, x)
// for a plain set J with |J| < q.
bool perkins_check(const Carlitz& C, unsigned d, const std::vector<std::uint32_t>& J);

}  // namespace mzv
