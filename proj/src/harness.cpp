#include "mzv/harness.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace mzv {

namespace detail {

TPoly term_of(const Ctx& ctx, const AdmissibleArray& A, const std::vector<UPoly>& tuple) {
    TPoly term = TPoly::one(ctx.F());
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        const auto& [sig, s] = A.slots()[i];
        UFrac inv_as(UPoly::one(ctx.F()), pow(tuple[i], s));
        term = term * char_eval(sig, tuple[i]).scaled(inv_as);
    }
    return term;
}

void tuple_rec(const Ctx& ctx, const AdmissibleArray& A, std::size_t slot, unsigned prev_deg,
               std::vector<UPoly>& tuple, std::vector<TPoly>& out) {
    if (slot == A.depth()) {
        out.push_back(term_of(ctx, A, tuple));
        return;
    }
    if (prev_deg == 0) return;  // no room for a strictly smaller degree
    for (unsigned e = 0; e < prev_deg; ++e)
        for (const UPoly& a : monic_enum(ctx.F(), e)) {
            tuple.push_back(a);
            tuple_rec(ctx, A, slot + 1, e, tuple, out);
            tuple.pop_back();
        }
}

TPoly merge_terms(const Fq* F, std::vector<TPoly> terms) {
    while (terms.size() > 1) {
        std::vector<TPoly> next;
        for (std::size_t i = 0; i + 1 < terms.size(); i += 2) next.push_back(terms[i] + terms[i + 1]);
        if (terms.size() % 2 == 1) next.push_back(terms.back());
        terms = std::move(next);
    }
    return terms.empty() ? TPoly::zero(F) : terms[0];
}

}  // namespace detail

TPoly power_sum_tuple_oracle(const Ctx& ctx, const AdmissibleArray& A, unsigned d) {
    const Fq* F = ctx.F();
    if (A.is_empty()) return d == 0 ? TPoly::one(F) : TPoly::zero(F);
    std::vector<TPoly> terms;
    std::vector<UPoly> tuple;
    for (const UPoly& a : monic_enum(F, d)) {
        tuple.push_back(a);
        detail::tuple_rec(ctx, A, 1, d, tuple, terms);
        tuple.pop_back();
    }
    return detail::merge_terms(F, std::move(terms));
}

namespace {

// enumerated S_e(s) = sum over monic a of degree e of a^{-s}
UFrac enumerated_sd(const Ctx& ctx, unsigned e, unsigned s) {
    UFrac acc = UFrac::zero(ctx.F());
    for (const UPoly& a : monic_enum(ctx.F(), e))
        acc = acc + UFrac(UPoly::one(ctx.F()), pow(a, s));
    return acc;
}

void flag_rec(const Ctx& ctx, const AdmissibleArray& A, std::size_t slot, unsigned prev,
              std::vector<unsigned>& flags, std::vector<std::vector<unsigned>>& out) {
    if (slot == A.depth()) {
        out.push_back(flags);
        return;
    }
    if (prev == 0) return;
    for (unsigned e = 0; e < prev; ++e) {
        flags.push_back(e);
        flag_rec(ctx, A, slot + 1, e, flags, out);
        flags.pop_back();
    }
}

}  // namespace

TPoly dagger_flag_oracle(const Ctx& ctx, const AdmissibleArray& A, unsigned d) {
    const Fq* F = ctx.F();
    if (A.is_empty()) return d == 0 ? TPoly::one(F) : TPoly::zero(F);
    std::vector<std::vector<unsigned>> flagset;
    std::vector<unsigned> flags{d};
    flag_rec(ctx, A, 1, d, flags, flagset);
    TPoly acc(F);
    for (const auto& fl : flagset) {
        TPoly term = TPoly::one(F);
        for (std::size_t i = 0; i < fl.size(); ++i) {
            const auto& [sig, s] = A.slots()[i];
            term = term * ctx.car().bpoly_ws(fl[i], sig).scaled(enumerated_sd(ctx, fl[i], s));
        }
        acc = acc + term;
    }
    return acc;
}

namespace {

// prod_{e<=d} ell_e^w: a structured common multiple of every reduced
// denominator that appears in degree-d slices of weight-w sums
UPoly master_den(const Ctx& ctx, unsigned d, unsigned w) {
    UPoly m = UPoly::one(ctx.F());
    for (unsigned e = 1; e <= d; ++e) m = m * pow(ctx.car().ell(e), w);
    return m;
}

struct CofCache {
    std::map<UPoly, std::optional<UPoly>> cof;  // den -> master/den (nullopt: no division)
    const UPoly* master = nullptr;

    void reset(const UPoly& m) {
        if (master && master->field() == m.field() && master_q == m.field()->q() && *master == m)
            return;
        cof.clear();
        master_store = m;
        master = &master_store;
        master_q = m.field()->q();
    }
    const std::optional<UPoly>& get(const UPoly& den) {
        auto it = cof.find(den);
        if (it != cof.end()) return it->second;
        auto [quo, rem] = divrem(*master, den);
        if (rem.is_zero()) return cof.emplace(den, std::move(quo)).first->second;
        return cof.emplace(den, std::nullopt).first->second;
    }

private:
    UPoly master_store;
    unsigned master_q = 0;
};

// sum_i scale_i * value_i == 0, computed over the master denominator when
// every coefficient denominator divides it, with a plain exact fallback.
bool sum_is_zero_over(const Ctx& ctx, const std::vector<std::pair<const TPoly*, FqElem>>& terms,
                      CofCache& cache) {
    const Fq* F = ctx.F();
    std::map<Monomial, UPoly> num;
    bool fast_ok = true;
    for (const auto& [p, a] : terms) {
        if (a == 0) continue;
        for (const auto& [m, c] : p->terms()) {
            const std::optional<UPoly>& cof = cache.get(c.den());
            if (!cof) {
                fast_ok = false;
                break;
            }
            UPoly contrib = (c.num() * (*cof)).scaled(a);
            auto it = num.find(m);
            if (it == num.end()) num.emplace(m, std::move(contrib));
            else it->second = it->second + contrib;
        }
        if (!fast_ok) break;
    }
    if (fast_ok)
        return std::all_of(num.begin(), num.end(), [](const auto& e) { return e.second.is_zero(); });
    TPoly acc(F);
    for (const auto& [p, a] : terms) acc = acc + p->scaled(a);
    return acc.is_zero();
}

thread_local CofCache g_cof_cache;

}  // namespace

bool stuffle_case_exact(const Ctx& ctx, const WeightedSubset& sigma, unsigned s,
                        const WeightedSubset& gamma, unsigned t, unsigned d) {
    const Fq* F = ctx.F();
    TPoly lhs = power_sum_brute(ctx, AdmissibleArray::depth1(sigma, s), d) *
                power_sum_brute(ctx, AdmissibleArray::depth1(gamma, t), d);
    ArrayCombo combo = stuffle_depth1(ctx, sigma, s, gamma, t);
    std::vector<TPoly> keep;
    keep.reserve(combo.terms().size() + 1);
    keep.push_back(std::move(lhs));
    std::vector<std::pair<const TPoly*, FqElem>> terms;
    for (const auto& [arr, c] : combo.terms()) keep.push_back(power_sum_brute(ctx, arr, d));
    terms.emplace_back(&keep[0], F->one());
    std::size_t i = 1;
    for (const auto& [arr, c] : combo.terms()) terms.emplace_back(&keep[i++], F->neg(c));
    g_cof_cache.reset(master_den(ctx, d, s + t));
    return sum_is_zero_over(ctx, terms, g_cof_cache);
}

bool stuffle_mode_exact(const Ctx& ctx, const AdmissibleArray& A, const AdmissibleArray& B,
                        ProdMode mode, const ArrayCombo& combo, unsigned d, bool dagger) {
    const Fq* F = ctx.F();
    auto value = [&](const AdmissibleArray& arr, bool lt) {
        if (dagger) return lt ? dagger_power_sum_lt(ctx, arr, d) : dagger_power_sum(ctx, arr, d);
        return lt ? power_sum_brute_lt(ctx, arr, d) : power_sum_brute(ctx, arr, d);
    };
    TPoly lhs(F);
    bool rhs_lt = false;
    switch (mode) {
        case ProdMode::DD: lhs = value(A, false) * value(B, false); break;
        case ProdMode::D_LT: lhs = value(A, false) * value(B, true); break;
        case ProdMode::LT_LT:
            lhs = value(A, true) * value(B, true);
            rhs_lt = true;
            break;
    }
    std::vector<TPoly> keep;
    keep.reserve(combo.terms().size() + 1);
    keep.push_back(std::move(lhs));
    for (const auto& [arr, c] : combo.terms()) keep.push_back(value(arr, rhs_lt));
    std::vector<std::pair<const TPoly*, FqElem>> terms;
    terms.emplace_back(&keep[0], F->one());
    std::size_t i = 1;
    for (const auto& [arr, c] : combo.terms()) terms.emplace_back(&keep[i++], F->neg(c));
    unsigned w = static_cast<unsigned>(A.weight() + B.weight());
    g_cof_cache.reset(master_den(ctx, d, w));
    return sum_is_zero_over(ctx, terms, g_cof_cache);
}

namespace {

nlohmann::json laurent_json(const Laurent& v) {
    nlohmann::json j;
    j["top"] = v.top();
    j["floor"] = v.floor();
    nlohmann::json coeffs = nlohmann::json::array();
    for (long e = v.top(); e > v.floor(); --e) coeffs.push_back(v.coeff(e));
    j["coeffs"] = std::move(coeffs);
    return j;
}

nlohmann::json upoly_json(const UPoly& p) {
    nlohmann::json a = nlohmann::json::array();
    for (FqElem c : p.coeffs()) a.push_back(c);
    return a;
}

nlohmann::json ufrac_json(const UFrac& c) {
    return nlohmann::json{{"num", upoly_json(c.num())}, {"den", upoly_json(c.den())}};
}

template <class Map, class CoeffFn>
nlohmann::json mono_map_json(const Map& terms, CoeffFn&& coeff) {
    // canonical (descending) monomial order
    std::vector<const typename Map::value_type*> ordered;
    for (const auto& t : terms) ordered.push_back(&t);
    std::sort(ordered.begin(), ordered.end(),
              [](auto* x, auto* y) { return mono_order_less(y->first, x->first); });
    nlohmann::json out = nlohmann::json::array();
    for (auto* t : ordered)
        out.push_back({{"monomial", mono_to_string(t->first)}, {"coeff", coeff(t->second)}});
    return out;
}

}  // namespace

std::string laurent_to_json(const Laurent& v) { return laurent_json(v).dump(2) + "\n"; }

std::string tate_to_json(const TateElem& v) {
    nlohmann::json j;
    j["prec"] = v.prec;
    j["floor"] = v.floorv;
    j["terms"] = mono_map_json(v.coef, [](const Laurent& c) { return laurent_json(c); });
    return j.dump(2) + "\n";
}

std::string tpoly_to_json(const TPoly& v) {
    nlohmann::json j;
    j["terms"] = mono_map_json(v.terms(), [](const UFrac& c) { return ufrac_json(c); });
    return j.dump(2) + "\n";
}

std::string combo_to_json(const ArrayCombo& v) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [arr, c] : v.terms())
        out.push_back({{"coeff", c}, {"array", arr.is_empty() ? "()" : arr.to_string()}});
    return out.dump(2) + "\n";
}

std::string trivial_to_json(const TrivialMZV& v) {
    nlohmann::json j;
    j["sigma"] = v.sigma;
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [k, c] : v.coef) {
        nlohmann::json t;
        t["k"] = k;
        t["coeff"] = nlohmann::json::parse(tpoly_to_json(c));
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j.dump(2) + "\n";
}

namespace {

nlohmann::json result_json(const CheckResult& r) {
    nlohmann::json j;
    j["check_id"] = r.check_id;
    j["params"] = r.params;
    j["status"] = r.status;
    j["mode"] = r.mode;
    if (r.residual_valuation) j["residual_valuation"] = *r.residual_valuation;
    else j["residual_valuation"] = "inf";
    j["runtime_ms"] = r.runtime_ms;
    return j;
}

}  // namespace

std::string report_json(const std::vector<CheckResult>& results, const Config& cfg) {
    std::vector<CheckResult> sorted = results;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const CheckResult& a, const CheckResult& b) { return a.check_id < b.check_id; });
    nlohmann::json j;
    j["header"] = {{"q", cfg.field.p},  // fixed below for extensions
                   {"N", cfg.prec},
                   {"seed", cfg.seed},
                   {"version", "mzv 0.1.0"}};
    unsigned q = 1;
    for (unsigned i = 0; i < cfg.field.m; ++i) q *= cfg.field.p;
    j["header"]["q"] = q;
    j["checks"] = nlohmann::json::array();
    for (const auto& r : sorted) j["checks"].push_back(result_json(r));
    return j.dump(2) + "\n";
}

int aggregate_exit(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (r.status == "FAIL") return 1;
    return 0;
}

}  // namespace mzv
