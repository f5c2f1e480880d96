#include "mzv/carlitz.hpp"

#include <algorithm>

namespace mzv {

Carlitz::Carlitz(std::shared_ptr<const Fq> fq) : fq_(std::move(fq)) {
    ell_.push_back(UPoly::one(fq_.get()));
    dfac_.push_back(UPoly::one(fq_.get()));
    b_.push_back({UPoly::one(fq_.get())});
}

unsigned long long Carlitz::qpow(unsigned e) const {
    unsigned long long r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (r > (1ull << 50)) throw DomainError("Carlitz: q-power overflow");
        r *= q();
    }
    return r;
}

long Carlitz::ell_degree(unsigned d) const {
    unsigned long long s = 0;
    for (unsigned i = 1; i <= d; ++i) s += qpow(i);
    return static_cast<long>(s);
}

long Carlitz::b_degree(unsigned d) const {
    unsigned long long s = 0;
    for (unsigned i = 0; i < d; ++i) s += qpow(i);
    return static_cast<long>(s);
}

void Carlitz::grow(unsigned d) const {
    const Fq* F = fq_.get();
    while (ell_.size() <= d) {
        unsigned k = static_cast<unsigned>(ell_.size());
        // ell_k = ell_{k-1} (theta - theta^{q^k})
        UPoly lin = UPoly::theta_pow(F, 1) - UPoly::theta_pow(F, qpow(k));
        ell_.push_back(ell_.back() * lin);
        // D_k = prod_{i<k} (theta^{q^k} - theta^{q^i})
        UPoly dk = UPoly::one(F);
        for (unsigned i = 0; i < k; ++i)
            dk = dk * (UPoly::theta_pow(F, qpow(k)) - UPoly::theta_pow(F, qpow(i)));
        dfac_.push_back(dk);
        // b_k(t) = b_{k-1}(t) (t - theta^{q^{k-1}})
        const std::vector<UPoly>& prev = b_.back();
        std::vector<UPoly> cur(prev.size() + 1, UPoly::zero(F));
        UPoly root = UPoly::theta_pow(F, qpow(k - 1));
        for (std::size_t j = 0; j < prev.size(); ++j) {
            cur[j + 1] = cur[j + 1] + prev[j];
            cur[j] = cur[j] - prev[j] * root;
        }
        b_.push_back(std::move(cur));
    }
}

UPoly Carlitz::ell(unsigned d) const {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    grow(d);
    return ell_[d];
}

UPoly Carlitz::dfac(unsigned d) const {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    grow(d);
    return dfac_[d];
}

std::vector<UPoly> Carlitz::bcoeffs(unsigned d) const {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    grow(d);
    return b_[d];
}

TPoly Carlitz::bpoly(unsigned d, Var v) const {
    std::vector<UPoly> c = bcoeffs(d);
    TPoly r(fq_.get());
    for (std::size_t j = 0; j < c.size(); ++j)
        if (!c[j].is_zero()) r.add_term(mono_var(v, j), UFrac(c[j]));
    return r;
}

TPoly Carlitz::bpoly_ws(unsigned d, const WeightedSubset& sigma) const {
    TPoly r = TPoly::one(fq_.get());
    for (const auto& [n, mult] : sigma.entries())
        r = r * pow(bpoly(d, var_t(n)), mult);
    return r;
}

UPoly Carlitz::b_at_theta_qpow(unsigned d, unsigned i) const {
    std::vector<UPoly> c = bcoeffs(d);
    UPoly acc = UPoly::zero(fq_.get());
    for (std::size_t j = 0; j < c.size(); ++j)
        acc = acc + c[j] * UPoly::theta_pow(fq_.get(), qpow(i) * j);
    return acc;
}

const std::vector<UFrac>& Carlitz::recip(unsigned d, unsigned upto) const {
    const Fq* F = fq_.get();
    if (recip_.size() <= d) recip_.resize(d + 1);
    std::vector<UFrac>& r = recip_[d];
    if (r.empty()) r.push_back(UFrac::one(F));
    if (r.size() > upto) return r;
    // [x^k] of 1/(1 - E_d) satisfies r_k = sum_j e_{q^j} r_{k - q^j}.
    // Since S_d(n) ell_d^n is integral, u_k := r_k ell_d^k is a polynomial
    // and obeys u_k = sum_j X_j u_{k - q^j} with
    // X_j = ell_d^{q^j} / (D_j ell_{d-j}^{q^j}).  The X_j come out as
    // polynomials; should one ever fail to divide, the plain fraction
    // recursion takes over.
    std::vector<std::pair<unsigned long long, UFrac>> ecoeffs;
    for (unsigned k = 0; k <= d; ++k) {
        UPoly den = dfac(k) * pow(ell(d - k), qpow(k));
        ecoeffs.emplace_back(qpow(k), UFrac(UPoly::one(F), den));
    }
    bool integral = true;
    std::vector<std::pair<unsigned long long, UPoly>> xs;
    for (unsigned j = 0; j <= d; ++j) {
        UFrac x = UFrac(pow(ell(d), qpow(j))) * ecoeffs[j].second;
        if (!x.is_poly()) {
            integral = false;
            break;
        }
        xs.emplace_back(qpow(j), x.num());
    }
    if (integral) {
        if (intrec_.size() <= d) intrec_.resize(d + 1);
        std::vector<UPoly>& u = intrec_[d];
        if (u.empty()) u.push_back(UPoly::one(F));
        for (std::size_t k = u.size(); k <= upto; ++k) {
            UPoly acc = UPoly::zero(F);
            for (const auto& [e, x] : xs) {
                if (e > k) break;
                acc = acc + x * u[k - e];
            }
            u.push_back(std::move(acc));
        }
        return r;  // consumers read intrec_[d]; r stays at the computed prefix
    }
    for (std::size_t k = r.size(); k <= upto; ++k) {
        UFrac acc = UFrac::zero(F);
        for (const auto& [e, c] : ecoeffs) {
            if (e > k) break;
            acc = acc + c * r[k - e];
        }
        r.push_back(acc);
    }
    return r;
}

UFrac Carlitz::sd(unsigned d, unsigned n) const {
    if (n < 1) throw DomainError("Carlitz::sd: exponent must be >= 1");
    std::lock_guard<std::recursive_mutex> lk(mu_);
    grow(d);
    auto key = std::make_pair(d, n);
    auto hit = sdcache_.find(key);
    if (hit != sdcache_.end()) return hit->second;
    const std::vector<UFrac>& r = recip(d, n - 1);
    UFrac value;
    if (intrec_.size() > d && intrec_[d].size() >= n) {
        // integral representation: one reduction for the requested value
        value = UFrac(intrec_[d][n - 1], pow(ell(d), n));
    } else {
        value = r[n - 1] * UFrac(UPoly::one(fq_.get()), ell(d));
    }
    sdcache_.emplace(key, value);
    return value;
}

UPoly Carlitz::sd_negative(unsigned d, unsigned long long m) const {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    auto key = std::make_pair(d, m);
    auto it = sdneg_.find(key);
    if (it != sdneg_.end()) return it->second;
    UPoly acc = UPoly::zero(fq_.get());
    for (const UPoly& a : monic_enum(fq_.get(), d)) acc = acc + pow(a, m);
    sdneg_.emplace(key, acc);
    return acc;
}

SparseXPoly Carlitz::e_poly(unsigned d, EdForm form) const {
    const Fq* F = fq_.get();
    SparseXPoly out;
    if (d == 0) {
        out.emplace(1, UFrac::one(F));
        return out;
    }
    if (form == EdForm::Sum) {
        for (unsigned k = 0; k <= d; ++k) {
            UPoly den = dfac(k) * pow(ell(d - k), qpow(k));
            out.emplace(qpow(k), UFrac(UPoly::one(F), den));
        }
        return out;
    }
    // D_d^{-1} prod_{a in A_<(d)} (x + a), expanded densely
    std::vector<UPoly> dense{UPoly::one(F)};
    for (const UPoly& a : lower_enum(F, d)) {
        std::vector<UPoly> next(dense.size() + 1, UPoly::zero(F));
        for (std::size_t k = 0; k < dense.size(); ++k) {
            next[k + 1] = next[k + 1] + dense[k];
            next[k] = next[k] + dense[k] * a;
        }
        dense = std::move(next);
    }
    UPoly dd = dfac(d);
    for (std::size_t k = 0; k < dense.size(); ++k)
        if (!dense[k].is_zero()) out.emplace(k, UFrac(dense[k], dd));
    return out;
}

SparseXTPoly Carlitz::p_poly(unsigned d, Var v) const {
    if (d < 1) throw DomainError("Carlitz::p_poly: d must be >= 1");
    SparseXTPoly out;
    for (unsigned j = 0; j < d; ++j) {
        TPoly bj = bpoly(j, v);
        for (const auto& [e, c] : e_poly(j, EdForm::Sum)) {
            TPoly term = bj.scaled(c);
            auto it = out.find(e);
            if (it == out.end()) out.emplace(e, term);
            else it->second = it->second + term;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

TPoly Carlitz::q_coeff(unsigned d, unsigned k, Var v) const {
    if (k >= d) throw DomainError("Carlitz::q_coeff: requires 0 <= k <= d-1");
    const Fq* F = fq_.get();
    TPoly acc(F);
    for (unsigned j = k; j < d; ++j) {
        UPoly den = dfac(k) * pow(ell(j - k), qpow(k));
        acc = acc + bpoly(j, v).scaled(UFrac(UPoly::one(F), den));
    }
    return acc;
}

unsigned digit_sum_base(unsigned long long m, unsigned q) {
    unsigned s = 0;
    while (m > 0) {
        s += static_cast<unsigned>(m % q);
        m /= q;
    }
    return s;
}

UPoly goss_zeta_nonpos(const Carlitz& C, unsigned long long m) {
    unsigned q = C.q();
    unsigned stop = (q > 2) ? digit_sum_base(m, q) / (q - 1) : digit_sum_base(m, q);
    stop += 1;
    UPoly acc = UPoly::zero(C.field());
    for (unsigned d = 0; d <= stop; ++d) acc = acc + C.sd_negative(d, m);
    for (unsigned d = stop + 1; d <= stop + 2; ++d)
        if (!C.sd_negative(d, m).is_zero())
            throw InternalError("goss_zeta_nonpos: power sum persists past the stop degree");
    return acc;
}

Laurent goss_zeta_pos(const Carlitz& C, unsigned n, long N) {
    if (n < 1) throw DomainError("goss_zeta_pos: exponent must be >= 1");
    unsigned dmax = 0;
    while (C.ell_degree(dmax) <= N) ++dmax;
    UFrac acc = UFrac::zero(C.field());
    for (unsigned d = 0; d <= dmax; ++d) acc = acc + C.sd(d, n);
    return Laurent::from_ufrac(acc, N);
}

bool perkins_check(const Carlitz& C, unsigned d, const std::vector<std::uint32_t>& J) {
    const Fq* F = C.field();
    if (J.size() >= F->q()) throw DomainError("perkins_check: requires |J| < q");
    if (d < 1) throw DomainError("perkins_check: d must be >= 1");
    WeightedSubset Jws = WeightedSubset::plain(J);
    if (!Jws.is_plain() || Jws.card() != J.size())
        throw DomainError("perkins_check: J must be a plain set");

    // dense E_d
    std::size_t n = static_cast<std::size_t>(C.qpow(d));
    std::vector<UFrac> E(n + 1, UFrac::zero(F));
    for (const auto& [e, c] : C.e_poly(d, EdForm::Sum)) E[static_cast<std::size_t>(e)] = c;

    UFrac elld = UFrac(C.ell(d));
    SparseXTPoly lhs;
    for (const UPoly& a : lower_enum(F, d)) {
        // E_d(x - a) = sum_k c_k (x^{q^k} - a^{q^k}) since q^k-th powers are
        // additive in characteristic p; then divide synthetically by (x - a).
        UFrac av(a);
        std::vector<UFrac> EA = E;
        for (const auto& [e, c] : C.e_poly(d, EdForm::Sum))
            EA[0] = EA[0] - c * UFrac(pow(a, e));
        std::vector<UFrac> quo(n, UFrac::zero(F));
        for (std::size_t k = n; k-- > 0;)
            quo[k] = EA[k + 1] + (k + 1 < n ? av * quo[k + 1] : UFrac::zero(F));
        UFrac rem = EA[0] + av * quo[0];
        if (!rem.is_zero()) throw InternalError("perkins_check: x - a does not divide E_d(x - a)");
        TPoly chi = char_eval(Jws, a);
        for (std::size_t k = 0; k < n; ++k) {
            if (quo[k].is_zero()) continue;
            TPoly term = chi.scaled(elld * quo[k]);
            auto it = lhs.find(k);
            if (it == lhs.end()) lhs.emplace(k, term);
            else it->second = it->second + term;
        }
    }
    for (auto it = lhs.begin(); it != lhs.end();)
        it = it->second.is_zero() ? lhs.erase(it) : std::next(it);

    SparseXTPoly rhs;
    rhs.emplace(0, TPoly::one(F));
    for (auto j : J) {
        SparseXTPoly pd = C.p_poly(d, var_t(j));
        SparseXTPoly next;
        for (const auto& [e1, c1] : rhs)
            for (const auto& [e2, c2] : pd) {
                TPoly prod = c1 * c2;
                auto it = next.find(e1 + e2);
                if (it == next.end()) next.emplace(e1 + e2, prod);
                else it->second = it->second + prod;
            }
        rhs = std::move(next);
        for (auto it = rhs.begin(); it != rhs.end();)
            it = it->second.is_zero() ? rhs.erase(it) : std::next(it);
    }
    return lhs == rhs;
}

}  // namespace mzv
