#include "mzv/powersums.hpp"

#include <algorithm>

namespace mzv {

namespace {

// Depth-1 slice by enumeration of A^+(d), summed pairwise to keep the
// intermediate reduced denominators small.
TPoly brute_slot(const Ctx& ctx, const WeightedSubset& sigma, unsigned s, unsigned d) {
    std::string key = "slot|" + sigma.to_string() + "|" + std::to_string(s) + "|" + std::to_string(d);
    if (const TPoly* hit = ctx.memo_find(key)) return *hit;
    const Fq* F = ctx.F();
    std::vector<TPoly> terms;
    for (const UPoly& a : monic_enum(F, d)) {
        UFrac inv_as(UPoly::one(F), pow(a, s));
        terms.push_back(char_eval(sigma, a).scaled(inv_as));
    }
    while (terms.size() > 1) {
        std::vector<TPoly> next;
        for (std::size_t i = 0; i + 1 < terms.size(); i += 2) next.push_back(terms[i] + terms[i + 1]);
        if (terms.size() % 2 == 1) next.push_back(terms.back());
        terms = std::move(next);
    }
    TPoly out = terms.empty() ? TPoly::zero(F) : terms[0];
    ctx.memo_put(key, out);
    return out;
}

using Depth1Fn = TPoly (*)(const Ctx&, const WeightedSubset&, unsigned, unsigned);

TPoly rec_sum(const Ctx& ctx, const AdmissibleArray& A, unsigned d, const char* tag, Depth1Fn slice);

TPoly rec_sum_lt(const Ctx& ctx, const AdmissibleArray& A, unsigned d, const char* tag,
                 Depth1Fn slice) {
    if (A.is_empty()) return d == 0 ? TPoly::zero(ctx.F()) : TPoly::one(ctx.F());
    std::string key = std::string(tag) + "lt|" + A.to_string() + "|" + std::to_string(d);
    if (const TPoly* hit = ctx.memo_find(key)) return *hit;
    TPoly acc(ctx.F());
    for (unsigned e = 0; e < d; ++e) acc = acc + rec_sum(ctx, A, e, tag, slice);
    ctx.memo_put(key, acc);
    return acc;
}

TPoly rec_sum(const Ctx& ctx, const AdmissibleArray& A, unsigned d, const char* tag,
              Depth1Fn slice) {
    const Fq* F = ctx.F();
    if (A.is_empty()) return d == 0 ? TPoly::one(F) : TPoly::zero(F);
    std::string key = std::string(tag) + "|" + A.to_string() + "|" + std::to_string(d);
    if (const TPoly* hit = ctx.memo_find(key)) return *hit;
    const auto& [sig, s] = A.slots().front();
    TPoly head = slice(ctx, sig, s, d);
    TPoly out = (A.depth() == 1) ? head : head * rec_sum_lt(ctx, A.tail(), d, tag, slice);
    ctx.memo_put(key, out);
    return out;
}

TPoly fast_depth1_dispatch(const Ctx& ctx, const WeightedSubset& sigma, unsigned s, unsigned d) {
    return power_sum_depth1_fast(ctx, sigma, s, d);
}

void require_fast_ok(const Ctx& ctx, const AdmissibleArray& A) {
    for (const auto& [sig, s] : A.slots()) {
        if (!sig.is_plain())
            throw DomainError("power_sum_fast: weighted types route to the brute path");
        if (sig.card() >= ctx.q())
            throw DomainError("power_sum_fast: requires |Sigma_i| < q");
    }
}

// Dagger depth-1 slice S_d(s) b_d(Sigma).
TPoly dagger_slot(const Ctx& ctx, const WeightedSubset& sigma, unsigned s, unsigned d) {
    return ctx.car().bpoly_ws(d, sigma).scaled(ctx.car().sd(d, s));
}

}  // namespace

TPoly power_sum_brute(const Ctx& ctx, const AdmissibleArray& A, unsigned d) {
    return rec_sum(ctx, A, d, "brute", &brute_slot);
}

TPoly power_sum_brute_lt(const Ctx& ctx, const AdmissibleArray& A, unsigned d) {
    return rec_sum_lt(ctx, A, d, "brute", &brute_slot);
}

TPoly power_sum_depth1_fast(const Ctx& ctx, const WeightedSubset& sigma, unsigned s, unsigned d) {
    if (!sigma.is_plain()) throw DomainError("power_sum_depth1_fast: Sigma must be a plain set");
    if (sigma.card() >= ctx.q()) throw DomainError("power_sum_depth1_fast: requires |Sigma| < q");
    if (s < 1) throw DomainError("power_sum_depth1_fast: s must be >= 1");
    const Carlitz& C = ctx.car();

    TPoly out = C.bpoly_ws(d, sigma).scaled(C.sd(d, s));
    if (d == 0) return out;  // the inner k-sums are empty

    // J proper subset of Sigma, I = Sigma \ J nonempty; k_i in [0, d-1]
    for (const WeightedSubset& J : sigma.subsets()) {
        if (J == sigma) continue;
        WeightedSubset I = sigma.minus(J);
        std::vector<std::uint32_t> ivars = I.support();
        TPoly bdj = C.bpoly_ws(d, J);
        // odometer over k-tuples in [0, d-1]^I
        std::vector<unsigned> k(ivars.size(), 0);
        while (true) {
            unsigned long long drop = 0;
            for (unsigned kv : k) drop += C.qpow(kv);
            if (drop < s) {
                TPoly term = bdj.scaled(C.sd(d, static_cast<unsigned>(s - drop)));
                for (std::size_t i = 0; i < ivars.size(); ++i)
                    term = term * C.q_coeff(d, k[i], var_t(ivars[i]));
                out = out + term;
            }
            std::size_t pos = k.size();
            bool done = true;
            while (pos-- > 0) {
                if (k[pos] + 1 < d) {
                    ++k[pos];
                    std::fill(k.begin() + static_cast<std::ptrdiff_t>(pos) + 1, k.end(), 0);
                    done = false;
                    break;
                }
            }
            if (done) break;
        }
    }
    return out;
}

TPoly power_sum_depth1_gp(const Ctx& ctx, const WeightedSubset& sigma, unsigned s, unsigned d) {
    const Fq* F = ctx.F();
    if (!sigma.is_plain()) throw DomainError("power_sum_depth1_gp: Sigma must be a plain set");
    if (sigma.card() >= ctx.q()) throw DomainError("power_sum_depth1_gp: requires |Sigma| < q");
    if (s < 1) throw DomainError("power_sum_depth1_gp: s must be >= 1");
    const Carlitz& C = ctx.car();

    TPoly out = C.bpoly_ws(d, sigma).scaled(C.sd(d, s));
    if (d == 0) return out;

    // Superseded variant: like the corrected formula, but with the b_d(J)
    // factor replaced by the sign (-1)^{|J|} and the k_i unbounded (only
    // cut off by positivity; the coefficients with k >= d are empty sums).
    for (const WeightedSubset& J : sigma.subsets()) {
        if (J == sigma) continue;
        WeightedSubset I = sigma.minus(J);
        std::vector<std::uint32_t> ivars = I.support();
        // q^{k_i} <= s - 1 caps the odometer
        unsigned kmax = 0;
        while (C.qpow(kmax + 1) < s) ++kmax;
        std::vector<unsigned> k(ivars.size(), 0);
        while (true) {
            unsigned long long drop = 0;
            for (unsigned kv : k) drop += C.qpow(kv);
            bool coeff_nonzero = std::all_of(k.begin(), k.end(), [&](unsigned kv) { return kv < d; });
            if (drop < s && coeff_nonzero) {
                TPoly term = TPoly::constant(C.sd(d, static_cast<unsigned>(s - drop)));
                for (std::size_t i = 0; i < ivars.size(); ++i)
                    term = term * C.q_coeff(d, k[i], var_t(ivars[i]));
                out = out + term.scaled(F->sign(J.card()));
            }
            std::size_t pos = k.size();
            bool done = true;
            while (pos-- > 0) {
                if (k[pos] < kmax) {
                    ++k[pos];
                    std::fill(k.begin() + static_cast<std::ptrdiff_t>(pos) + 1, k.end(), 0);
                    done = false;
                    break;
                }
            }
            if (done) break;
        }
    }
    return out;
}

TPoly power_sum_fast(const Ctx& ctx, const AdmissibleArray& A, unsigned d) {
    require_fast_ok(ctx, A);
    return rec_sum(ctx, A, d, "fast", &fast_depth1_dispatch);
}

TPoly power_sum_fast_lt(const Ctx& ctx, const AdmissibleArray& A, unsigned d) {
    require_fast_ok(ctx, A);
    return rec_sum_lt(ctx, A, d, "fast", &fast_depth1_dispatch);
}

TPoly dagger_power_sum(const Ctx& ctx, const AdmissibleArray& A, unsigned d) {
    if (A.type().card() >= ctx.q()) throw DomainError("dagger_power_sum: requires |type(A)| < q");
    return rec_sum(ctx, A, d, "dag", &dagger_slot);
}

TPoly dagger_power_sum_lt(const Ctx& ctx, const AdmissibleArray& A, unsigned d) {
    if (A.type().card() >= ctx.q()) throw DomainError("dagger_power_sum: requires |type(A)| < q");
    return rec_sum_lt(ctx, A, d, "dag", &dagger_slot);
}

long valuation_bound(unsigned q, const AdmissibleArray& A, unsigned d) {
    if (A.is_empty()) throw DomainError("valuation_bound: array must be nonempty");
    const auto& [sig, s1] = A.slots().front();
    (void)s1;
    long mult = static_cast<long>(q) - static_cast<long>(sig.card());
    if (mult <= 0) throw DomainError("valuation_bound: requires |Sigma_1| < q");
    // (q^d - 1)/(q - 1), built incrementally to avoid overflow
    long geo = 0;
    for (unsigned i = 0; i < d; ++i) {
        geo = geo * static_cast<long>(q) + 1;
        if (geo > (1l << 50)) throw DomainError("valuation_bound: bound overflow");
    }
    return geo * mult;
}

}  // namespace mzv
