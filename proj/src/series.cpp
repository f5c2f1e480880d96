#include "mzv/series.hpp"

#include <algorithm>

namespace mzv {

namespace {

constexpr unsigned kDegreeCap = 256;

bool fast_legal(const Ctx& ctx, const AdmissibleArray& A) {
    for (const auto& [sig, s] : A.slots())
        if (!sig.is_plain() || sig.card() >= ctx.q()) return false;
    return true;
}

TPoly slice_of(const Ctx& ctx, const AdmissibleArray& A, unsigned d, SumMethod method) {
    if (method == SumMethod::Fast) return power_sum_fast(ctx, A, d);
    return power_sum_brute(ctx, A, d);
}

unsigned dmax_for(const Ctx& ctx, const AdmissibleArray& A, long N) {
    for (unsigned d = 0; d < kDegreeCap; ++d)
        if (valuation_bound(ctx.q(), A, d) > N) return d;
    throw DivergenceError("zeta_value: no certified truncation degree below the cap");
}

}  // namespace

TateElem TateElem::one(const Fq* F, long N) {
    TateElem r{F, N, -N - 1, {}};
    r.coef.emplace(mono_one(), Laurent::one(F, -N - 1));
    return r;
}

TateElem TateElem::zero(const Fq* F, long N) { return TateElem{F, N, -N - 1, {}}; }

bool TateElem::is_zero_to_prec() const {
    return std::all_of(coef.begin(), coef.end(),
                       [](const auto& e) { return e.second.is_zero_to_prec(); });
}

long TateElem::residual_valuation() const {
    long r = -floorv;
    for (const auto& [m, v] : coef) r = std::min(r, v.residual_valuation());
    return r;
}

TateElem TateElem::scaled(FqElem c) const {
    TateElem r{F, prec, floorv, {}};
    if (c == 0) return r;
    for (const auto& [m, v] : coef) r.coef.emplace(m, v.scaled(c));
    return r;
}

TateElem operator+(const TateElem& a, const TateElem& b) {
    TateElem r{a.F ? a.F : b.F, std::min(a.prec, b.prec), std::max(a.floorv, b.floorv), a.coef};
    for (const auto& [m, v] : b.coef) {
        auto it = r.coef.find(m);
        if (it == r.coef.end()) r.coef.emplace(m, v);
        else it->second = it->second + v;
    }
    return r;
}

TateElem operator-(const TateElem& a, const TateElem& b) { return a + b.scaled(b.F->neg(b.F->one())); }

TateElem operator*(const TateElem& a, const TateElem& b) {
    TateElem r{a.F ? a.F : b.F, std::min(a.prec, b.prec), a.floorv, {}};
    // monomials absent from one factor are O(theta^floorv) there, so the
    // product floor must cover unknown-tail times leading-term products
    auto max_top = [](const TateElem& x) {
        long t = x.floorv;
        for (const auto& [m, v] : x.coef) t = std::max(t, v.top_exponent());
        return t;
    };
    long floorv = std::max(a.floorv + max_top(b), b.floorv + max_top(a));
    for (const auto& [ma, va] : a.coef)
        for (const auto& [mb, vb] : b.coef) {
            Laurent prod = va * vb;
            floorv = std::max(floorv, prod.floor());
            Monomial m = mono_mul(ma, mb);
            auto it = r.coef.find(m);
            if (it == r.coef.end()) r.coef.emplace(m, prod);
            else it->second = it->second + prod;
        }
    r.floorv = floorv;
    return r;
}

std::string TateElem::to_string() const {
    if (coef.empty()) return "0 + O(θ^" + std::to_string(floorv) + ")";
    std::vector<const std::pair<const Monomial, Laurent>*> ordered;
    for (const auto& t : coef) ordered.push_back(&t);
    std::sort(ordered.begin(), ordered.end(),
              [](auto* x, auto* y) { return mono_order_less(y->first, x->first); });
    std::string s;
    for (auto* t : ordered) {
        if (!s.empty()) s += "\n";
        s += mono_to_string(t->first) + ": " + t->second.to_string();
    }
    return s;
}

TateElem embed_tpoly(const TPoly& p, long N) {
    TateElem r = TateElem::zero(p.field(), N);
    for (const auto& [m, c] : p.terms()) r.coef.emplace(m, Laurent::from_ufrac(c, N));
    return r;
}

TateElem zeta_value(const Ctx& ctx, const AdmissibleArray& A, long N, SumMethod method) {
    if (A.is_empty()) return TateElem::one(ctx.F(), N);
    if (method == SumMethod::Fast && !fast_legal(ctx, A))
        throw DomainError("zeta_value: FAST requires plain slots with |Sigma_i| < q");
    unsigned dmax = dmax_for(ctx, A, N);
    TPoly total(ctx.F());
    for (unsigned d = 0; d <= dmax; ++d) total = total + slice_of(ctx, A, d, method);
    TateElem r = embed_tpoly(total, N);
    r.prec = N;
    return r;
}

TateElem zeta_combo_value(const Ctx& ctx, const ArrayCombo& combo, long N, SumMethod method) {
    TateElem acc = TateElem::zero(ctx.F(), N);
    for (const auto& [a, c] : combo.terms()) {
        SumMethod m = method;
        if (m == SumMethod::Fast && !fast_legal(ctx, a)) m = SumMethod::Brute;
        acc = acc + zeta_value(ctx, a, N, m).scaled(c);
    }
    return acc;
}

namespace {

void lambda_flags(const Ctx& ctx, const AdmissibleArray& A, std::size_t slot, unsigned top,
                  bool strict, const UFrac& coeff, Monomial mono,
                  std::map<Monomial, UFrac>& acc) {
    if (slot == A.depth()) {
        auto it = acc.find(mono);
        if (it == acc.end()) acc.emplace(std::move(mono), coeff);
        else it->second = it->second + coeff;
        return;
    }
    const auto& [sig, s] = A.slots()[slot];
    // next degree runs below `top` (strictly when strict), down to 0
    unsigned start = strict ? (top == 0 ? 0 : top - 1) : top;
    if (strict && top == 0) return;  // no room left for deeper slots
    for (unsigned d = start;; --d) {
        UFrac c2 = coeff * ctx.car().sd(d, s);
        Monomial m2 = mono;
        for (const auto& [n, mult] : sig.entries())
            m2 = mono_mul(m2, mono_var(var_x(n), ctx.car().qpow(d) * mult));
        lambda_flags(ctx, A, slot + 1, d, true, c2, std::move(m2), acc);
        if (d == 0) break;
    }
}

}  // namespace

TateElem lambda_value(const Ctx& ctx, const AdmissibleArray& A, long N,
                      std::optional<unsigned> dmax_override) {
    if (A.is_empty()) return TateElem::one(ctx.F(), N);
    unsigned s1 = A.slots().front().second;
    unsigned natural = 0;
    while (natural < kDegreeCap &&
           static_cast<long>(s1) * ctx.car().ell_degree(natural) <= N)
        ++natural;
    unsigned dmax = dmax_override.value_or(natural);
    long tail_bound = static_cast<long>(s1) * ctx.car().ell_degree(dmax + 1);
    long n_eff = std::min(N, tail_bound - 1);

    std::map<Monomial, UFrac> acc;
    lambda_flags(ctx, A, 0, dmax, false, UFrac::one(ctx.F()), mono_one(), acc);
    TateElem r = TateElem::zero(ctx.F(), N);
    r.floorv = -n_eff - 1;
    for (const auto& [m, c] : acc)
        if (!c.is_zero()) r.coef.emplace(m, Laurent::from_ufrac(c, n_eff));
    return r;
}

TateElem dagger_zeta(const Ctx& ctx, const AdmissibleArray& A, long N) {
    if (A.is_empty()) return TateElem::one(ctx.F(), N);
    if (A.type().card() >= ctx.q()) throw DomainError("dagger_zeta: requires |type(A)| < q");
    unsigned dmax = dmax_for(ctx, A, N);
    TPoly total(ctx.F());
    for (unsigned d = 0; d <= dmax; ++d) total = total + dagger_power_sum(ctx, A, d);
    return embed_tpoly(total, N);
}

namespace {

TPoly eta_slice(const Ctx& ctx, unsigned k, std::uint32_t idx, unsigned d) {
    const Carlitz& C = ctx.car();
    AdmissibleArray A = AdmissibleArray::depth1(WeightedSubset::plain({idx}),
                                                static_cast<std::uint32_t>(C.qpow(k)));
    TPoly ps = power_sum_fast(ctx, A, d);
    return (C.bpoly(k, var_t(idx)) * ps).scaled(UFrac(UPoly::one(ctx.F()), C.dfac(k)));
}

AdmissibleArray eta_array(const Ctx& ctx, unsigned k, std::uint32_t idx) {
    std::vector<std::pair<WeightedSubset, std::uint32_t>> slots;
    slots.emplace_back(WeightedSubset::plain({idx}), 1);
    unsigned q = ctx.q();
    for (unsigned e = 0; e < k; ++e)
        slots.emplace_back(WeightedSubset::empty(),
                           static_cast<std::uint32_t>((q - 1) * ctx.car().qpow(e)));
    return AdmissibleArray(std::move(slots));
}

}  // namespace

EtaValue eta_series(const Ctx& ctx, unsigned k, long N, std::uint32_t idx) {
    const Carlitz& C = ctx.car();
    AdmissibleArray A = AdmissibleArray::depth1(WeightedSubset::plain({idx}),
                                                static_cast<std::uint32_t>(C.qpow(k)));
    unsigned dmax = dmax_for(ctx, A, N);
    EtaValue out;
    out.k = k;
    out.idx = idx;
    TPoly total(ctx.F());
    for (unsigned d = 0; d <= dmax; ++d) {
        out.slices.push_back(eta_slice(ctx, k, idx, d));
        total = total + out.slices.back();
    }
    out.series = embed_tpoly(total, N);
    return out;
}

UFrac eta_eval(const Ctx& ctx, unsigned k, unsigned i) {
    const Carlitz& C = ctx.car();
    const Fq* F = ctx.F();
    UPoly bval = C.b_at_theta_qpow(k, i);
    if (bval.is_zero()) return UFrac::zero(F);  // i < k
    if (i == k) {
        // zeta_A(t; q^k) at t = theta^{q^k} is zeta_A(0)
        UPoly z0 = goss_zeta_nonpos(C, 0);
        return UFrac(bval * z0, C.dfac(k));
    }
    if (i < k) throw InternalError("eta_eval: b_k(theta^{q^i}) nonzero below k");
    unsigned long long m = C.qpow(i) - C.qpow(k);
    UPoly zneg = goss_zeta_nonpos(C, m);
    return UFrac(bval * zneg, C.dfac(k));
}

Laurent eta_value_at(const Ctx& ctx, unsigned k, unsigned i, long N, std::uint32_t idx) {
    const Carlitz& C = ctx.car();
    AdmissibleArray A = AdmissibleArray::depth1(WeightedSubset::plain({idx}),
                                                static_cast<std::uint32_t>(C.qpow(k)));
    // substituted-slice bound: the slice has t-degree <= d + k and its
    // coefficients have v >= valuation_bound (the b_k/D_k factor only helps)
    unsigned dmax = 0;
    bool found = false;
    for (unsigned d = 0; d < kDegreeCap; ++d) {
        long b = valuation_bound(ctx.q(), A, d) -
                 static_cast<long>(C.qpow(i)) * static_cast<long>(d + k);
        if (b > N) {
            dmax = d;
            found = true;
            break;
        }
    }
    if (!found) throw DivergenceError("eta_value_at: no certified truncation degree");
    std::map<Var, unsigned long long> assign{{var_t(idx), C.qpow(i)}};
    UFrac total = UFrac::zero(ctx.F());
    for (unsigned d = 0; d <= dmax; ++d)
        total = total + eta_slice(ctx, k, idx, d).eval_theta_pows(assign);
    return Laurent::from_ufrac(total, N);
}

ResidualReport special_zeta_check(const Ctx& ctx, unsigned k, long N) {
    EtaValue eta = eta_series(ctx, k, N);
    TateElem lhs = eta.series.scaled(ctx.F()->sign(k));
    TateElem rhs = zeta_value(ctx, eta_array(ctx, k, 1), N, SumMethod::Fast);
    TateElem diff = lhs - rhs;
    return ResidualReport{diff.is_zero_to_prec(), diff.residual_valuation()};
}

Laurent tate_eval(const Ctx& ctx, const AdmissibleArray& A,
                  const std::map<std::uint32_t, unsigned>& assignment, long N) {
    if (A.is_empty()) return Laurent::one(ctx.F(), -N - 1);
    const Carlitz& C = ctx.car();
    WeightedSubset type = A.type();
    std::map<Var, unsigned long long> assign;
    long per_degree_drop = 0;
    for (const auto& [n, mult] : type.entries()) {
        auto it = assignment.find(n);
        if (it == assignment.end())
            throw DomainError("tate_eval: missing exponent for t" + std::to_string(n));
        assign[var_t(n)] = C.qpow(it->second);
        per_degree_drop += static_cast<long>(C.qpow(it->second)) * static_cast<long>(mult);
    }
    unsigned dmax = 0;
    bool found = false;
    for (unsigned d = 0; d < kDegreeCap; ++d) {
        long b = valuation_bound(ctx.q(), A, d) - per_degree_drop * static_cast<long>(d);
        if (b > N) {
            dmax = d;
            found = true;
            break;
        }
    }
    if (!found)
        throw DivergenceError("tate_eval: certified bound failure; no degree below " +
                              std::to_string(kDegreeCap) + " clears the requested precision");
    bool fast = fast_legal(ctx, A);
    UFrac total = UFrac::zero(ctx.F());
    for (unsigned d = 0; d <= dmax; ++d) {
        TPoly s = fast ? power_sum_fast(ctx, A, d) : power_sum_brute(ctx, A, d);
        total = total + s.eval_theta_pows(assign);
    }
    return Laurent::from_ufrac(total, N);
}

}  // namespace mzv
