#include "mzv/gmaps.hpp"

#include <algorithm>
#include <limits>

namespace mzv {

SymCoeff sym_zero(const Fq* F) { return TPoly::zero(F); }
SymCoeff sym_const(const UFrac& c) { return TPoly::constant(c); }

SymCoeff sym_zpow(const Fq* F, unsigned long long e) {
    return TPoly::monomial(UFrac::one(F), mono_var(var_z(), e));
}

bool sym_is_z_free(const SymCoeff& c) { return c.degree_in(var_z()) == 0; }

bool zpow_divides(unsigned long long e, const SymCoeff& c) {
    if (c.is_zero()) return true;
    return c.min_degree_in(var_z()) >= e;
}

Laurent sym_eval(const Ctx& ctx, const SymCoeff& c, const Laurent& zval, long N) {
    Laurent acc = Laurent::zero(ctx.F(), -N - 1);
    for (const auto& [m, coeff] : c.terms()) {
        std::uint64_t e = mono_degree_in(m, var_z());
        if (m.size() > (e > 0 ? 1u : 0u))
            throw DomainError("sym_eval: coefficient contains non-Z variables");
        Laurent term = Laurent::from_ufrac(coeff, N);
        if (e > 0) term = term * pow(zval, e);
        acc = acc + term;
    }
    return acc;
}

TrivialMZV TrivialMZV::zero(std::vector<std::uint32_t> sigma) {
    TrivialMZV f;
    f.sigma = std::move(sigma);
    return f;
}

TrivialMZV TrivialMZV::eta(const Ctx& ctx, std::vector<std::uint32_t> sigma, KTuple k) {
    if (k.size() != sigma.size()) throw DomainError("TrivialMZV: tuple length must match |Sigma|");
    TrivialMZV f = zero(std::move(sigma));
    f.coef.emplace(std::move(k), TPoly::one(ctx.F()));
    return f;
}

void TrivialMZV::add_term(const KTuple& k, const SymCoeff& c) {
    if (k.size() != sigma.size()) throw DomainError("TrivialMZV: tuple length must match |Sigma|");
    if (c.is_zero()) return;
    auto it = coef.find(k);
    if (it == coef.end()) {
        coef.emplace(k, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) coef.erase(it);
}

TrivialMZV TrivialMZV::scaled(const SymCoeff& c) const {
    TrivialMZV f = zero(sigma);
    for (const auto& [k, v] : coef) f.add_term(k, v * c);
    return f;
}

TrivialMZV operator+(const TrivialMZV& a, const TrivialMZV& b) {
    if (a.sigma != b.sigma) throw DomainError("TrivialMZV: mismatched types");
    TrivialMZV f = a;
    for (const auto& [k, v] : b.coef) f.add_term(k, v);
    return f;
}

std::string TrivialMZV::to_string() const {
    if (coef.empty()) return "0";
    std::string s;
    for (const auto& [k, v] : coef) {
        if (!s.empty()) s += " + ";
        s += "(" + v.to_string() + ") * eta[";
        for (std::size_t i = 0; i < k.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(k[i]);
        }
        s += "]";
    }
    return s;
}

SymCoeff trivial_eval(const Ctx& ctx, const TrivialMZV& f, const KTuple& j) {
    auto it = f.coef.find(j);
    return it == f.coef.end() ? sym_zero(ctx.F()) : it->second;
}

namespace {

UPoly dfac_tuple(const Ctx& ctx, const KTuple& j) {
    UPoly d = UPoly::one(ctx.F());
    for (unsigned jr : j) d = d * ctx.car().dfac(jr);
    return d;
}

}  // namespace

unsigned long long gsig_weight(const Ctx& ctx, const KTuple& j) {
    unsigned long long w = 0;
    for (unsigned jr : j) w += ctx.car().qpow(jr);
    return w;
}

XSeries f_map(const Ctx& ctx, const TrivialMZV& f, unsigned imax) {
    const Fq* F = ctx.F();
    const Carlitz& C = ctx.car();
    XSeries out;
    out.sigma = f.sigma;
    out.imax = imax;
    std::size_t r = f.sigma.size();
    KTuple i(r, 0);
    while (true) {
        SymCoeff acc = sym_zero(F);
        for (const auto& [j, cj] : f.coef) {
            bool le = true;
            for (std::size_t v = 0; v < r; ++v)
                if (j[v] > i[v]) { le = false; break; }
            if (!le) continue;
            UPoly den = dfac_tuple(ctx, j);
            for (std::size_t v = 0; v < r; ++v)
                den = den * pow(C.ell(i[v] - j[v]), C.qpow(j[v]));
            acc = acc + cj.scaled(UFrac(UPoly::one(F), den));
        }
        if (!acc.is_zero()) {
            Monomial m;
            for (std::size_t v = 0; v < r; ++v)
                m = mono_mul(m, mono_var(var_x(f.sigma[v]), C.qpow(i[v])));
            out.coef.emplace(std::move(m), acc);
        }
        std::size_t pos = r;
        bool done = true;
        while (pos-- > 0) {
            if (i[pos] < imax) {
                ++i[pos];
                std::fill(i.begin() + static_cast<std::ptrdiff_t>(pos) + 1, i.end(), 0u);
                done = false;
                break;
            }
        }
        if (r == 0 || done) break;
    }
    // |Sigma| = 0 has the single empty tuple handled by the first pass
    return out;
}

XSeries e_map(const Ctx& ctx, const TrivialMZV& f, unsigned imax) {
    const Fq* F = ctx.F();
    const Carlitz& C = ctx.car();
    XSeries out;
    out.sigma = f.sigma;
    out.imax = imax;
    std::size_t r = f.sigma.size();
    for (const auto& [i, ci] : f.coef) {
        SymCoeff factor = ci.scaled(UFrac(UPoly::one(F), dfac_tuple(ctx, i)));
        // product over the coordinates of the truncated Frobenius twists
        // lambda({j};1)^{q^{i_j}} = sum_d X_j^{q^{d+i_j}} / ell_d^{q^{i_j}}
        std::vector<std::pair<Monomial, UFrac>> expanded{{mono_one(), UFrac::one(F)}};
        bool in_range = true;
        for (std::size_t v = 0; v < r; ++v) {
            if (i[v] > imax) { in_range = false; break; }
            std::vector<std::pair<Monomial, UFrac>> next;
            for (unsigned m = i[v]; m <= imax; ++m) {
                UFrac c = pow(UFrac(UPoly::one(F), C.ell(m - i[v])),
                              static_cast<long long>(C.qpow(i[v])));
                for (const auto& [mono, cc] : expanded)
                    next.emplace_back(mono_mul(mono, mono_var(var_x(f.sigma[v]), C.qpow(m))),
                                      cc * c);
            }
            expanded = std::move(next);
        }
        if (!in_range) continue;
        for (const auto& [mono, cc] : expanded) {
            SymCoeff term = factor.scaled(cc);
            auto it = out.coef.find(mono);
            if (it == out.coef.end()) out.coef.emplace(mono, term);
            else it->second = it->second + term;
        }
    }
    for (auto it = out.coef.begin(); it != out.coef.end();)
        it = it->second.is_zero() ? out.coef.erase(it) : std::next(it);
    return out;
}

SymCoeff ev_map_symbolic(const XSeries& x) {
    SymCoeff acc;
    bool first = true;
    for (const auto& [m, c] : x.coef) {
        acc = first ? c : acc + c;
        first = false;
    }
    return acc;
}

EvNumeric ev_map_numeric(const Ctx& ctx, const XSeries& x, const TrivialMZV& f, long N) {
    const Carlitz& C = ctx.car();
    // terms beyond the i_max window have coefficients
    // c_j / (D_j ell_{i-j}^{q^j}) with some i_r > i_max, hence
    // v >= vmin(c_j) + deg D_j + q^{j_r} deg ell_{imax+1-j_r}
    long tail = N + 1;
    if (!f.coef.empty() && !f.sigma.empty()) {
        tail = std::numeric_limits<long>::max();
        for (const auto& [j, cj] : f.coef) {
            long vmin = 0;
            for (const auto& [m, c] : cj.terms())
                vmin = std::min(vmin, c.v_inf().value_or(0));
            long degd = 0;
            for (unsigned jr : j) degd += C.dfac(jr).degree().value_or(0);
            for (std::size_t r = 0; r < j.size(); ++r) {
                long elldeg = (x.imax + 1 > j[r]) ? C.ell_degree(x.imax + 1 - j[r]) : 0;
                long b = vmin + degd + static_cast<long>(C.qpow(j[r])) * elldeg;
                tail = std::min(tail, b);
            }
        }
    }
    long certified = std::min(N, tail - 1);
    SymCoeff total = ev_map_symbolic(x);
    Laurent z = goss_zeta_pos(C, 1, N);
    EvNumeric out{sym_eval(ctx, total, z, N), -certified - 1};
    return out;
}

SymCoeff g_map_symbolic(const Ctx& ctx, const TrivialMZV& f) {
    const Fq* F = ctx.F();
    SymCoeff acc = sym_zero(F);
    for (const auto& [j, cj] : f.coef) {
        SymCoeff term = cj * sym_zpow(F, gsig_weight(ctx, j));
        acc = acc + term.scaled(UFrac(UPoly::one(F), dfac_tuple(ctx, j)));
    }
    return acc;
}

Laurent g_map_numeric(const Ctx& ctx, const TrivialMZV& f, long N) {
    Laurent z = goss_zeta_pos(ctx.car(), 1, N);
    return sym_eval(ctx, g_map_symbolic(ctx, f), z, N);
}

TrivialMZV phi(const Ctx& ctx, std::vector<std::uint32_t> sigma, const KTuple& j) {
    if (j.size() != sigma.size()) throw DomainError("phi: tuple length must match |Sigma|");
    if (std::all_of(j.begin(), j.end(), [](unsigned v) { return v == 0; }))
        throw DomainError("phi: the zero tuple is not a generator");
    const Fq* F = ctx.F();
    unsigned long long e = 0;
    for (unsigned jr : j) e += ctx.car().qpow(jr) - 1;
    TrivialMZV out = TrivialMZV::zero(std::move(sigma));
    KTuple zero_tuple(j.size(), 0);
    out.add_term(zero_tuple, -sym_zpow(F, e));
    out.add_term(j, sym_const(UFrac(dfac_tuple(ctx, j))));
    return out;
}

TrivialMZV phi_linear(const Ctx& ctx, std::vector<std::uint32_t> sigma,
                      const std::map<KTuple, SymCoeff>& combo) {
    TrivialMZV acc = TrivialMZV::zero(sigma);
    for (const auto& [j, a] : combo) acc = acc + phi(ctx, sigma, j).scaled(a);
    return acc;
}

TrivialMZV kernel_basis(const Ctx& ctx, std::vector<std::uint32_t> sigma, const KTuple& j) {
    return phi(ctx, std::move(sigma), j);
}

bool kernel_exponent_identity(const Ctx& ctx, std::size_t card, const KTuple& j) {
    unsigned long long lhs = 0;
    for (unsigned jr : j) lhs += ctx.car().qpow(jr) - 1;
    return lhs == gsig_weight(ctx, j) - card;
}

ImageCheckReport image_check(const Ctx& ctx, const std::vector<std::uint32_t>& sigma,
                             const std::vector<TrivialMZV>& samples) {
    ImageCheckReport r;
    r.samples = samples.size();
    KTuple zero(sigma.size(), 0);
    r.generator_exact =
        g_map_symbolic(ctx, TrivialMZV::eta(ctx, sigma, zero)) == sym_zpow(ctx.F(), sigma.size());
    r.all_divisible = true;
    for (const TrivialMZV& f : samples)
        if (!zpow_divides(sigma.size(), g_map_symbolic(ctx, f))) r.all_divisible = false;
    return r;
}

}  // namespace mzv
