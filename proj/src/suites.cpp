#include <chrono>
#include <functional>
#include <limits>
#include <random>

#include "mzv/harness.hpp"

namespace mzv {

namespace {

using Params = std::map<std::string, std::string>;

class Recorder {
public:
    explicit Recorder(std::vector<CheckResult>& out) : out_(out) {}

    void exact(const std::string& id, Params params, const std::function<bool()>& body) {
        run(id, std::move(params), "EXACT", [&](CheckResult& r) {
            bool ok = body();
            r.status = ok ? "PASS" : "FAIL";
            if (ok) r.residual_valuation.reset();
            else r.residual_valuation = 0;
        });
    }

    // body returns (ok, residual valuation of the difference)
    void precision(const std::string& id, Params params,
                   const std::function<std::pair<bool, long>()>& body) {
        run(id, std::move(params), "PRECISION", [&](CheckResult& r) {
            auto [ok, res] = body();
            r.status = ok ? "PASS" : "FAIL";
            r.residual_valuation = res;
        });
    }

    void skip(const std::string& id, Params params, const std::string& reason) {
        CheckResult r;
        r.check_id = id;
        r.params = std::move(params);
        r.params["reason"] = reason;
        r.status = "SKIP";
        r.mode = "EXACT";
        r.runtime_ms = 0;
        out_.push_back(std::move(r));
    }

private:
    std::vector<CheckResult>& out_;

    void run(const std::string& id, Params params, const char* mode,
             const std::function<void(CheckResult&)>& body) {
        CheckResult r;
        r.check_id = id;
        r.params = std::move(params);
        r.mode = mode;
        auto t0 = std::chrono::steady_clock::now();
        try {
            body(r);
        } catch (const std::exception& e) {
            r.status = "FAIL";
            r.params["error"] = e.what();
            r.residual_valuation = 0;
        }
        auto t1 = std::chrono::steady_clock::now();
        r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        out_.push_back(std::move(r));
    }
};

// Deterministic across platforms: raw mt19937_64 output with modulo.
struct Rng {
    std::mt19937_64 g;
    explicit Rng(std::uint64_t seed) : g(seed) {}
    unsigned below(unsigned n) { return n == 0 ? 0 : static_cast<unsigned>(g() % n); }
    unsigned range(unsigned lo, unsigned hi) { return lo + below(hi - lo + 1); }
};

UPoly random_upoly(Rng& rng, const Fq* F, unsigned maxdeg) {
    unsigned d = rng.below(maxdeg + 1);
    std::vector<FqElem> c(d + 1, 0);
    for (auto& v : c) v = static_cast<FqElem>(rng.below(F->q()));
    return UPoly(F, std::move(c));
}

UPoly random_nonzero_upoly(Rng& rng, const Fq* F, unsigned maxdeg) {
    for (;;) {
        UPoly a = random_upoly(rng, F, maxdeg);
        if (!a.is_zero()) return a;
    }
}

WeightedSubset random_ws(Rng& rng, unsigned maxcard, unsigned maxidx) {
    WeightedSubset w;
    unsigned card = rng.below(maxcard + 1);
    for (unsigned i = 0; i < card; ++i) {
        unsigned idx = rng.range(1, maxidx);
        w.set(idx, w.mult(idx) + 1);
    }
    return w;
}

// nonempty array with the requested bounds; plain disjoint types drawn
// from {1, 2} when plain_small is set (so |type| < q stays available)
AdmissibleArray random_array(Rng& rng, unsigned max_depth, unsigned max_weight, unsigned max_card,
                             bool plain_small) {
    unsigned depth = rng.range(1, max_depth);
    std::vector<std::pair<WeightedSubset, std::uint32_t>> slots(depth);
    unsigned budget = max_weight - depth;
    for (auto& [sig, s] : slots) {
        unsigned extra = rng.below(budget + 1);
        budget -= extra;
        s = 1 + extra;
    }
    if (plain_small) {
        unsigned card = rng.below(max_card + 1);
        std::vector<unsigned> avail{1, 2};
        for (unsigned i = 0; i < card && i < avail.size(); ++i)
            slots[rng.below(depth)].first.set(avail[i], 1);
    } else {
        for (auto& [sig, s] : slots) sig = random_ws(rng, max_card, 2);
    }
    return AdmissibleArray(std::move(slots));
}

std::vector<WeightedSubset> small_weighted_types() {
    std::vector<WeightedSubset> out;
    out.push_back(WeightedSubset::empty());
    WeightedSubset w;
    w.set(1, 1);
    out.push_back(w);          // {1}
    w = WeightedSubset::empty();
    w.set(2, 1);
    out.push_back(w);          // {2}
    w = WeightedSubset::empty();
    w.set(1, 2);
    out.push_back(w);          // {1^2}
    w = WeightedSubset::empty();
    w.set(1, 1);
    w.set(2, 1);
    out.push_back(w);          // {1,2}
    w = WeightedSubset::empty();
    w.set(2, 2);
    out.push_back(w);          // {2^2}
    return out;
}

// plain-type arrays with |type| < q, depth <= 3, weight <= 6
std::vector<AdmissibleArray> matrix_arrays_impl(unsigned q) {
    std::vector<AdmissibleArray> out;
    std::vector<std::vector<std::uint32_t>> types{{}};
    if (q > 1) {
        if (q > 2) {
            types.push_back({1});
            types.push_back({2});
            types.push_back({1, 2});
        }
    }
    for (unsigned depth = 1; depth <= 3; ++depth) {
        // compositions of weight <= 6 into `depth` parts
        std::vector<std::uint32_t> parts(depth, 1);
        std::function<void(unsigned, unsigned)> compose = [&](unsigned slot, unsigned rest) {
            if (slot == depth) {
                for (const auto& T : types) {
                    // every assignment of T's indices to slots
                    unsigned assigns = 1;
                    for (std::size_t i = 0; i < T.size(); ++i) assigns *= depth;
                    for (unsigned a = 0; a < assigns; ++a) {
                        std::vector<std::pair<WeightedSubset, std::uint32_t>> slots(depth);
                        for (unsigned i = 0; i < depth; ++i) slots[i].second = parts[i];
                        unsigned code = a;
                        for (std::size_t i = 0; i < T.size(); ++i) {
                            slots[code % depth].first.set(T[i], 1);
                            code /= depth;
                        }
                        out.emplace_back(std::move(slots));
                    }
                }
                return;
            }
            for (unsigned v = 1; v <= rest - (depth - slot - 1); ++v) {
                parts[slot] = v;
                compose(slot + 1, rest - v);
            }
        };
        compose(0, 6);
    }
    return out;
}

bool tpoly_min_valuation_ok(const TPoly& p, long bound) {
    for (const auto& [m, c] : p.terms()) {
        auto v = c.v_inf();
        if (v && *v < bound) return false;
    }
    return true;
}

// ---------------------------------------------------------------------
// character suite (field, characters, coefficients, plumbing laws)
// ---------------------------------------------------------------------

void suite_character(const Ctx& ctx, const Config& cfg, Recorder& rec) {
    const Fq* F = ctx.F();
    unsigned q = ctx.q();

    rec.exact("lucas.oracle", {{"p", "2,3,5"}, {"range", "<=12"}}, [&] {
        for (unsigned p : {2u, 3u, 5u}) {
            // Pascal triangle mod p
            std::vector<std::vector<unsigned>> pascal(13, std::vector<unsigned>(13, 0));
            for (unsigned n = 0; n <= 12; ++n) {
                pascal[n][0] = 1;
                for (unsigned k = 1; k <= n; ++k)
                    pascal[n][k] = (pascal[n - 1][k - 1] + (k <= n - 1 ? pascal[n - 1][k] : 0)) % p;
            }
            for (unsigned n = 0; n <= 12; ++n)
                for (unsigned k = 0; k <= n; ++k)
                    if (lucas_binom(n, k, p) != pascal[n][k]) return false;
        }
        return true;
    });

    rec.exact("unit-sum.enumeration", {{"q", "2,3,4,5"}, {"n", "<=30"}}, [&] {
        for (unsigned qq : {2u, 3u, 4u, 5u}) {
            Ctx c2(qq);
            const Fq* F2 = c2.F();
            for (unsigned n = 0; n <= 30; ++n) {
                FqElem direct = F2->zero();
                for (FqElem a = 1; a < F2->q(); ++a) direct = F2->add(direct, F2->pow(a, n));
                if (direct != unit_sum(F2, n)) return false;
            }
        }
        return true;
    });

    rec.exact("fq.frobenius", {{"q", std::to_string(q)}, {"samples", "100"}}, [&] {
        Rng rng(cfg.seed + 1);
        for (int i = 0; i < 100; ++i) {
            FqElem x = static_cast<FqElem>(rng.below(q));
            if (F->pow(x, q) != x) return false;
        }
        return true;
    });

    rec.exact("fq.extension-example", {{"q", "4"}}, [&] {
        FieldSpec spec{2, 2, {1, 1, 1}};  // x^2 + x + 1
        Fq f4(spec);
        // x * x = x + 1 under the digit encoding (x ~ 2, x+1 ~ 3)
        return f4.mul(2, 2) == 3 && f4.inv(2) == 3 && f4.pow(3, 2) == 2;
    });

    rec.exact("fq.examples", {{"q", "3"}}, [&] {
        Ctx c3(3);
        const Fq* F3 = c3.F();
        return F3->add(2, 2) == 1 && F3->inv(2) == 2;
    });

    rec.exact("monic-enum.count", {{"d", "<=4"}}, [&] {
        for (unsigned d = 0; d <= 4; ++d) {
            auto v = monic_enum(F, d);
            unsigned long long expect = 1;
            for (unsigned i = 0; i < d; ++i) expect *= q;
            if (v.size() != expect) return false;
            for (const auto& a : v)
                if (!(a.degree() == Degree::of(d)) || a.lead() != F->one()) return false;
            auto low = lower_enum(F, d);
            if (low.size() != expect) return false;
            if (!low.empty() && !low[0].is_zero()) return false;
        }
        return true;
    });

    for (const char* part : {"add", "mul", "scalar", "union"}) {
        rec.exact(std::string("character.") + part, {{"samples", "50"}}, [&, part] {
            Rng rng(cfg.seed + 2);
            for (int it = 0; it < 50; ++it) {
                UPoly a = random_upoly(rng, F, 3), b = random_upoly(rng, F, 3);
                WeightedSubset sig = random_ws(rng, 2, 3), gam = random_ws(rng, 2, 3);
                std::string p(part);
                if (p == "add") {
                    TPoly lhs = char_eval(sig, a + b);
                    TPoly rhs(F);
                    for (const WeightedSubset& J : sig.subsets()) {
                        WeightedSubset I = sig.minus(J);
                        rhs = rhs + (char_eval(I, a) * char_eval(J, b)).scaled(binom_ws(F, sig, J));
                    }
                    if (lhs != rhs) return false;
                } else if (p == "mul") {
                    if (char_eval(sig, a * b) != char_eval(sig, a) * char_eval(sig, b)) return false;
                } else if (p == "scalar") {
                    FqElem alpha = static_cast<FqElem>(rng.below(q));
                    TPoly lhs = char_eval(sig, a.scaled(alpha));
                    TPoly rhs = char_eval(sig, a).scaled(F->pow(alpha, sig.card()));
                    if (lhs != rhs) return false;
                } else {
                    if (char_eval(sig, a) * char_eval(gam, a) != char_eval(sig | gam, a))
                        return false;
                }
            }
            return true;
        });
    }

    rec.exact("character.examples", {}, [&] {
        // chi_{1,2}(theta + 1) = (t1+1)(t2+1); chi with multiplicity 2;
        // chi of a constant is the constant power
        WeightedSubset s12 = WeightedSubset::plain({1, 2});
        UPoly a = UPoly::theta_pow(F, 1) + UPoly::one(F);
        TPoly expect = (TPoly::variable(F, var_t(1)) + TPoly::one(F)) *
                       (TPoly::variable(F, var_t(2)) + TPoly::one(F));
        if (char_eval(s12, a) != expect) return false;
        WeightedSubset sq;
        sq.set(1, 2);
        if (char_eval(sq, UPoly::theta_pow(F, 1)) != TPoly::variable(F, var_t(1), 2)) return false;
        return char_eval(s12, UPoly::one(F)) == TPoly::one(F);
    });

    rec.exact("subst.morphism", {{"samples", "50"}}, [&] {
        Rng rng(cfg.seed + 3);
        for (int it = 0; it < 50; ++it) {
            UPoly a = random_upoly(rng, F, 3), b = random_upoly(rng, F, 3);
            Var v = var_t(rng.range(1, 2));
            if (subst_theta(a * b, v) != subst_theta(a, v) * subst_theta(b, v)) return false;
            if (subst_theta(a + b, v) != subst_theta(a, v) + subst_theta(b, v)) return false;
        }
        return true;
    });

    rec.exact("ws.operations", {}, [&] {
        WeightedSubset a = WeightedSubset::plain({1, 2});
        WeightedSubset b = WeightedSubset::plain({2});
        WeightedSubset u = a | b;
        if (u.mult(1) != 1 || u.mult(2) != 2) return false;
        if (a.subsets().size() != 4) return false;
        WeightedSubset c;
        c.set(1, 2);
        c.set(3, 1);
        return c.card() == 3;
    });

    rec.exact("ratfunc.equivalence", {{"samples", "50"}}, [&] {
        Rng rng(cfg.seed + 4);
        for (int it = 0; it < 50; ++it) {
            TPoly n = subst_theta(random_upoly(rng, F, 2), var_t(1));
            TPoly d = subst_theta(random_nonzero_upoly(rng, F, 2), var_t(1)) +
                      TPoly::constant(UFrac(UPoly::theta_pow(F, 1)));
            TRat x(n, d);
            TPoly c = subst_theta(random_nonzero_upoly(rng, F, 2), var_t(1));
            TRat y(n * c, d * c);          // same value, different representation
            TPoly c2 = c * c;              // nonzero since c is
            TRat z(n * c2, d * c2);
            if (!x.eq(x)) return false;    // reflexive
            if (!x.eq(y) || !y.eq(x)) return false;
            if (!(y.eq(z) && x.eq(z))) return false;  // transitive chain
            TRat w(n + d, d);              // x + 1
            if (x.eq(w)) return false;
        }
        return true;
    });

    rec.exact("ratfunc.eval-theta-power", {}, [&] {
        const Carlitz& C = ctx.car();
        TRat b1(C.bpoly(1, var_t(1)));
        TRat d1(TPoly::constant(UFrac(C.dfac(1))));
        if (!b1.subst_theta_pow(var_t(1), q).eq(d1)) return false;
        TRat b2(C.bpoly(2, var_t(1)));
        if (!b2.subst_theta_pow(var_t(1), 1).eq(TRat::zero(F))) return false;
        bool poled = false;
        try {
            TRat inv_tt(TPoly::one(F), C.bpoly(1, var_t(1)));
            inv_tt.subst_theta_pow(var_t(1), 1);
        } catch (const PoleError&) {
            poled = true;
        }
        return poled;
    });

    rec.exact("binom-ws.examples", {}, [&] {
        WeightedSubset sig;
        sig.set(1, 5);
        WeightedSubset j2;
        j2.set(1, 2);
        Ctx c3(3);
        if (binom_ws(c3.F(), sig, j2) != 1) return false;  // C(5,2) = 10 = 1 mod 3
        return binom_ws(F, sig, sig) == F->one() && binom_ws(F, sig, WeightedSubset::empty()) == F->one();
    });

    rec.exact("algebra.degree-convention", {}, [&] {
        Degree z = UPoly::zero(F).degree();
        if (z.finite()) return false;
        if (!(z < Degree::of(-1000))) return false;
        return (z + Degree::of(5)) == Degree::neg_inf();
    });
}

// ---------------------------------------------------------------------
// partial fractions
// ---------------------------------------------------------------------

void suite_partial_fractions(const Ctx& ctx, const Config& cfg, Recorder& rec) {
    (void)cfg;
    const Fq* F = ctx.F();
    rec.exact("basic-identity", {{"s,t", "<=4"}}, [&] {
        TPoly X = TPoly::variable(F, var_t(1));
        TPoly Y = TPoly::variable(F, var_t(2));
        for (unsigned s = 1; s <= 4; ++s)
            for (unsigned t = 1; t <= 4; ++t) {
                TRat lhs(TPoly::one(F), pow(X, s) * pow(Y, t));
                TRat rhs = TRat::zero(F);
                TPoly XY = X + Y;
                for (unsigned j = 1; j < s + t; ++j) {
                    unsigned i = s + t - j;
                    FqElem c1 = F->from_int(lucas_binom(j - 1, t - 1, F->p()));
                    FqElem c2 = F->from_int(lucas_binom(j - 1, s - 1, F->p()));
                    if (c1 != 0)
                        rhs = rhs + TRat(TPoly::one(F).scaled(c1), pow(X, i) * pow(XY, j));
                    if (c2 != 0)
                        rhs = rhs + TRat(TPoly::one(F).scaled(c2), pow(Y, i) * pow(XY, j));
                }
                if (!lhs.eq(rhs)) return false;
            }
        return true;
    });
}

// ---------------------------------------------------------------------
// stuffle
// ---------------------------------------------------------------------

void suite_stuffle(const Ctx& ctx, const Config& cfg, Recorder& rec) {
    const Fq* F = ctx.F();
    unsigned q = ctx.q();
    long N = cfg.prec;

    rec.exact("delta.examples", {}, [&] {
        if (q == 3) {
            WeightedSubset sig = WeightedSubset::plain({1, 2});
            WeightedSubset none = WeightedSubset::empty();
            // delta with J = {}, s = 1, j = 3: (-1)^1 C(2,0) = -1
            if (delta_coeff(F, sig, none, 3, 1) != F->neg(F->one())) return false;
            // gate: |J| = 0 vs j = 2 mod 2 passes; j = 3 fails
            if (delta_gate_coeff(F, sig, none, 2, 1) != F->one()) return false;
            if (delta_gate_coeff(F, sig, none, 3, 1) != F->zero()) return false;
        }
        if (q == 2) {
            // q - 1 = 1: the congruence gate is vacuous
            WeightedSubset sig = WeightedSubset::plain({1});
            for (unsigned j = 1; j <= 4; ++j)
                for (unsigned s = 1; s <= 3; ++s)
                    for (const auto& J : sig.subsets()) {
                        FqElem gated = delta_gate_coeff(F, sig, J, j, s);
                        FqElem plain = delta_coeff(F, sig, J, j, s);
                        if (gated != plain) return false;  // -1 = 1 in char 2
                    }
        }
        return true;
    });

    rec.exact("sum-shuffle.pointwise", {{"samples", "20"}}, [&] {
        Rng rng(cfg.seed + 10);
        for (int it = 0; it < 20; ++it) {
            WeightedSubset sig = random_ws(rng, 2, 2), gam = random_ws(rng, 2, 2);
            unsigned s = rng.range(1, 3), t = rng.range(1, 3);
            UPoly a = random_nonzero_upoly(rng, F, 2);
            UPoly b = random_nonzero_upoly(rng, F, 2);
            if (a == b) continue;
            TPoly lhs = (char_eval(sig, a) * char_eval(gam, b))
                            .scaled(UFrac(UPoly::one(F), pow(a, s) * pow(b, t)));
            TPoly rhs(F);
            WeightedSubset whole = sig | gam;
            UPoly amb = a - b;
            for (const WeightedSubset& J : gam.subsets())
                for (unsigned j = 1; j < s + t; ++j) {
                    unsigned i = s + t - j;
                    FqElem c = delta_coeff(F, gam, J, j, t);
                    if (c == 0) continue;
                    TPoly term = char_eval(whole.minus(J), a) * char_eval(J, amb);
                    rhs = rhs + term.scaled(UFrac(UPoly::constant(F, c), pow(a, i) * pow(amb, j)));
                }
            UPoly bma = b - a;
            for (const WeightedSubset& J : sig.subsets())
                for (unsigned j = 1; j < s + t; ++j) {
                    unsigned i = s + t - j;
                    FqElem c = delta_coeff(F, sig, J, j, s);
                    if (c == 0) continue;
                    TPoly term = char_eval(whole.minus(J), b) * char_eval(J, bma);
                    rhs = rhs + term.scaled(UFrac(UPoly::constant(F, c), pow(b, i) * pow(bma, j)));
                }
            if (lhs != rhs) return false;
        }
        return true;
    });

    auto types = small_weighted_types();

    rec.exact("sum-shuffle.depth1",
              {{"d", "<=4"}, {"s+t", "<=6"}, {"types", "|Sigma|,|Gamma|<=2"}}, [&] {
                  for (std::size_t si = 0; si < types.size(); ++si)
                      for (std::size_t gi = si; gi < types.size(); ++gi)
                          for (unsigned s = 1; s <= 5; ++s)
                              for (unsigned t = 1; s + t <= 6; ++t) {
                                  if (std::make_pair(si, s) > std::make_pair(gi, t)) continue;
                                  for (unsigned d = 0; d <= 4; ++d)
                                      if (!stuffle_case_exact(ctx, types[si], s, types[gi], t, d))
                                          return false;
                              }
                  return true;
              });

    rec.exact("sum-shuffle.chen", {{"types", "empty"}, {"d", "<=4"}}, [&] {
        WeightedSubset none = WeightedSubset::empty();
        for (unsigned s = 1; s <= 5; ++s)
            for (unsigned t = 1; s + t <= 6; ++t)
                for (unsigned d = 0; d <= 4; ++d)
                    if (!stuffle_case_exact(ctx, none, s, none, t, d)) return false;
        return true;
    });

    rec.exact("sum-shuffle.pellarin", {{"s", "1"}, {"t", "1"}, {"d", "<=4"}}, [&] {
        for (const auto& sig : types)
            for (const auto& gam : types)
                for (unsigned d = 0; d <= 4; ++d)
                    if (!stuffle_case_exact(ctx, sig, 1, gam, 1, d)) return false;
        return true;
    });

    const char* mode_name[] = {"dd", "dlt", "ltlt"};
    ProdMode modes[] = {ProdMode::DD, ProdMode::D_LT, ProdMode::LT_LT};
    for (int mi = 0; mi < 3; ++mi) {
        rec.exact(std::string("shuffle-relations.") + mode_name[mi],
                  {{"pairs", "20"}, {"d", "<=" + std::to_string(cfg.dmax + 1)}}, [&, mi] {
                      Rng rng(cfg.seed + 20 + mi);
                      for (int it = 0; it < 20; ++it) {
                          AdmissibleArray A = random_array(rng, 2, 3, 2, false);
                          AdmissibleArray B = random_array(rng, 2, 2, 2, false);
                          ArrayCombo combo = stuffle_product(ctx, A, B, modes[mi]);
                          // composition bookkeeping: type and weight merge
                          WeightedSubset type = A.type() | B.type();
                          std::uint64_t w = A.weight() + B.weight();
                          for (const auto& [arr, c] : combo.terms())
                              if (!(arr.type() == type) || arr.weight() != w) return false;
                          for (unsigned d = 0; d <= cfg.dmax + 1; ++d)
                              if (!stuffle_mode_exact(ctx, A, B, modes[mi], combo,
                                                                      d, false))
                                  return false;
                      }
                      return true;
                  });
    }

    rec.exact("stuffle.unit", {}, [&] {
        Rng rng(cfg.seed + 24);
        AdmissibleArray empty;
        for (int it = 0; it < 5; ++it) {
            AdmissibleArray B = random_array(rng, 3, 4, 2, false);
            for (ProdMode m : modes) {
                ArrayCombo c = stuffle_product(ctx, empty, B, m);
                if (c.terms().size() != 1 || c.terms().begin()->first != B ||
                    c.terms().begin()->second != F->one())
                    return false;
            }
        }
        return true;
    });

    rec.precision("sum-shuffle.zeta", {{"pairs", "10"}, {"N", std::to_string(N)}}, [&] {
        Rng rng(cfg.seed + 25);
        long worst = std::numeric_limits<long>::max();
        for (int it = 0; it < 10; ++it) {
            WeightedSubset sig, gam;
            do {
                sig = random_ws(rng, 2, 2);
                gam = random_ws(rng, 2, 2);
            } while ((sig | gam).card() >= q);
            unsigned s = rng.range(1, 3), t = rng.range(1, 3);
            TateElem lhs = zeta_value(ctx, AdmissibleArray::depth1(sig, s), N, SumMethod::Brute) *
                           zeta_value(ctx, AdmissibleArray::depth1(gam, t), N, SumMethod::Brute);
            ArrayCombo combo = zeta_product_expand(ctx, sig, s, gam, t);
            TateElem rhs = zeta_combo_value(ctx, combo, N, SumMethod::Brute);
            TateElem diff = lhs - rhs;
            worst = std::min(worst, diff.residual_valuation());
            if (!diff.is_zero_to_prec()) return std::make_pair(false, diff.residual_valuation());
        }
        return std::make_pair(true, worst);
    });
}

// ---------------------------------------------------------------------
// ed / genfun / perkins (the Carlitz layer)
// ---------------------------------------------------------------------

void suite_ed(const Ctx& ctx, const Config& cfg, Recorder& rec) {
    const Fq* F = ctx.F();
    const Carlitz& C = ctx.car();
    unsigned q = ctx.q();
    (void)cfg;

    rec.exact("carlitz.degrees", {{"d", "<=4"}}, [&] {
        if (!C.ell(0).is_one() || !C.dfac(0).is_one()) return false;
        if (C.bcoeffs(0).size() != 1 || !C.bcoeffs(0)[0].is_one()) return false;
        for (unsigned d = 1; d <= 4; ++d) {
            if (!(C.ell(d).degree() == Degree::of(C.ell_degree(d)))) return false;
            long dd = static_cast<long>(d) * static_cast<long>(C.qpow(d));
            if (!(C.dfac(d).degree() == Degree::of(dd))) return false;
            if (C.bcoeffs(d).size() != d + 1) return false;  // deg_t b_d = d
            if (!(C.bcoeffs(d)[0].degree() == Degree::of(C.b_degree(d)))) return false;
        }
        return true;
    });

    rec.exact("ed.forms", {{"d", "<=4"}}, [&] {
        for (unsigned d = 0; d <= 4; ++d)
            if (C.e_poly(d, EdForm::Product) != C.e_poly(d, EdForm::Sum)) return false;
        return true;
    });

    rec.exact("ed.vanish", {{"d", "<=3"}}, [&] {
        for (unsigned d = 1; d <= 3; ++d) {
            SparseXPoly E = C.e_poly(d, EdForm::Sum);
            for (const UPoly& a : lower_enum(F, d)) {
                UFrac acc = UFrac::zero(F);
                for (const auto& [e, c] : E) acc = acc + c * UFrac(pow(a, e));
                if (!acc.is_zero()) return false;
            }
        }
        return true;
    });

    rec.exact("ed.one", {{"d", "<=4"}}, [&] {
        for (unsigned d = 0; d <= 4; ++d) {
            UFrac acc = UFrac::zero(F);
            UPoly td = UPoly::theta_pow(F, d);
            for (const auto& [e, c] : C.e_poly(d, EdForm::Sum)) acc = acc + c * UFrac(pow(td, e));
            if (!acc.is_one()) return false;
        }
        return true;
    });

    rec.exact("ed.linear", {{"d", "<=3"}}, [&] {
        Rng rng(cfg.seed + 30);
        for (unsigned d = 1; d <= 3; ++d) {
            // support only on q-power exponents and Frobenius-fixed scaling
            for (const auto& [e, c] : C.e_poly(d, EdForm::Product)) {
                unsigned long long p = 1;
                while (p < e) p *= q;
                if (p != e) return false;
            }
            SparseXPoly E = C.e_poly(d, EdForm::Sum);
            auto eval = [&](const UPoly& x) {
                UFrac acc = UFrac::zero(F);
                for (const auto& [e, c] : E) acc = acc + c * UFrac(pow(x, e));
                return acc;
            };
            for (int it = 0; it < 5; ++it) {
                UPoly a = random_upoly(rng, F, 4), b = random_upoly(rng, F, 4);
                if (!(eval(a + b) == eval(a) + eval(b))) return false;
                FqElem al = static_cast<FqElem>(rng.below(q));
                if (!(eval(a.scaled(al)) == eval(a).scaled(al))) return false;
            }
        }
        return true;
    });

    rec.exact("ed.e1-values", {}, [&] {
        // E_1(1) = 1/D_1 + 1/ell_1 = 0 and E_1(theta) = 1
        SparseXPoly E = C.e_poly(1, EdForm::Sum);
        UFrac at1 = UFrac::zero(F), attheta = UFrac::zero(F);
        for (const auto& [e, c] : E) {
            at1 = at1 + c;
            attheta = attheta + c * UFrac(pow(UPoly::theta_pow(F, 1), e));
        }
        return at1.is_zero() && attheta.is_one();
    });
}

void suite_genfun(const Ctx& ctx, const Config& cfg, Recorder& rec) {
    const Fq* F = ctx.F();
    const Carlitz& C = ctx.car();
    unsigned q = ctx.q();

    rec.exact("genfun.inverse", {{"d", "<=3"}, {"order", "x^9"}}, [&] {
        for (unsigned d = 0; d <= 3; ++d) {
            // ell_d (1 - E_d(x)) * sum_{n<=8} S_d(n+1) x^n == 1 mod x^9
            std::vector<UFrac> lhs(9, UFrac::zero(F));
            lhs[0] = UFrac(C.ell(d));
            for (const auto& [e, c] : C.e_poly(d, EdForm::Sum))
                if (e < 9) lhs[static_cast<std::size_t>(e)] = lhs[e] - c * UFrac(C.ell(d));
            std::vector<UFrac> ser(9, UFrac::zero(F));
            for (unsigned n = 0; n <= 8; ++n) ser[n] = C.sd(d, n + 1);
            std::vector<UFrac> prod(9, UFrac::zero(F));
            for (unsigned i = 0; i < 9; ++i)
                for (unsigned j = 0; i + j < 9; ++j) prod[i + j] = prod[i + j] + lhs[i] * ser[j];
            if (!prod[0].is_one()) return false;
            for (unsigned k = 1; k < 9; ++k)
                if (!prod[k].is_zero()) return false;
        }
        return true;
    });

    rec.exact("genfun.low-exponents", {{"s", "<=q"}, {"d", "<=4"}}, [&] {
        for (unsigned d = 0; d <= 4; ++d)
            for (unsigned s = 1; s <= q; ++s)
                if (!(C.sd(d, s) == pow(UFrac(UPoly::one(F), C.ell(d)), s))) return false;
        return true;
    });

    rec.exact("genfun.brute", {{"d", "<=3"}, {"n", "<=6"}}, [&] {
        for (unsigned d = 0; d <= 3; ++d)
            for (unsigned n = 1; n <= 6; ++n) {
                UFrac direct = UFrac::zero(F);
                for (const UPoly& a : monic_enum(F, d))
                    direct = direct + UFrac(UPoly::one(F), pow(a, n));
                if (!(direct == C.sd(d, n))) return false;
            }
        return true;
    });

    rec.exact("genfun.s0", {{"n", "<=8"}}, [&] {
        for (unsigned n = 1; n <= 8; ++n)
            if (!C.sd(0, n).is_one()) return false;
        return true;
    });

    rec.exact("goss.negative-powersums", {{"m", "<=20"}, {"d", "<=6"}}, [&] {
        // vanishing past the digit-sum bound, plus the small exact examples
        for (unsigned long long m = 0; m <= 20; ++m) {
            unsigned ds = digit_sum_base(m, q);
            unsigned bound = (q > 2) ? ds / (q - 1) : ds;
            for (unsigned d = bound + 1; d <= 6; ++d)
                if (!C.sd_negative(d, m).is_zero()) return false;
        }
        if (!C.sd_negative(0, 0).is_one()) return false;
        for (unsigned d = 1; d <= 3; ++d)
            if (!C.sd_negative(d, 0).is_zero()) return false;  // q^d = 0 in F_q
        if (q == 3) {
            UPoly s12 = C.sd_negative(1, 2);  // sum (theta+a)^2 = 2
            if (!(s12 == UPoly::constant(F, 2))) return false;
        }
        return true;
    });

    rec.exact("goss.zeta-nonpositive", {}, [&] {
        if (!goss_zeta_nonpos(C, 0).is_one()) return false;  // zeta_A(0) = 1
        for (unsigned m = q - 1; m <= 4 * (q - 1); m += q - 1)
            if (!goss_zeta_nonpos(C, m).is_zero()) return false;  // trivial zeros
        return true;
    });

    rec.precision("goss.zeta-one", {{"N", std::to_string(cfg.prec)}}, [&] {
        Laurent z = goss_zeta_pos(C, 1, cfg.prec);
        bool ok = z.coeff(0) == F->one() && z.residual_valuation() == 0 && z.top_exponent() == 0;
        if (q == 3 && cfg.prec >= 5) ok = ok && z.coeff(-3) == 2 && z.coeff(-5) == 2;
        return std::make_pair(ok, z.residual_valuation());
    });
}

void suite_perkins(const Ctx& ctx, const Config& cfg, Recorder& rec) {
    const Fq* F = ctx.F();
    const Carlitz& C = ctx.car();
    unsigned q = ctx.q();
    (void)cfg;

    rec.exact("perkins.identity", {{"d", "<=3"}, {"|J|", "<q"}}, [&] {
        std::vector<std::vector<std::uint32_t>> Js{{}};
        if (q > 1) Js.push_back({1});
        if (q > 2) {
            Js.push_back({2});
            Js.push_back({1, 2});
        }
        for (unsigned d = 1; d <= 3; ++d)
            for (const auto& J : Js)
                if (!perkins_check(C, d, J)) return false;
        return true;
    });

    rec.exact("pd.values", {{"d", "<=4"}}, [&] {
        for (unsigned d = 1; d <= 4; ++d) {
            // P_d(t, theta^d) = t^d - b_d(t)
            TPoly acc(F);
            UPoly td = UPoly::theta_pow(F, d);
            for (const auto& [e, c] : C.p_poly(d, var_t(1))) acc = acc + c.scaled(UFrac(pow(td, e)));
            TPoly expect = TPoly::variable(F, var_t(1), d) - C.bpoly(d, var_t(1));
            if (acc != expect) return false;
        }
        return true;
    });

    rec.exact("pd.structure", {}, [&] {
        // P_1(t,x) = x; F_q-linearity in x means only q-power exponents
        SparseXTPoly p1 = C.p_poly(1, var_t(1));
        if (p1.size() != 1 || p1.begin()->first != 1 || p1.begin()->second != TPoly::one(F))
            return false;
        for (unsigned d = 1; d <= 4; ++d)
            for (const auto& [e, c] : C.p_poly(d, var_t(1))) {
                if (e == 0) return false;  // P_d(t, 0) = 0
                unsigned long long p = 1;
                while (p < e) p *= q;
                if (p != e) return false;
            }
        return true;
    });

    rec.exact("qd0.closed-form", {{"d", "<=5"}}, [&] {
        for (unsigned d = 1; d <= 5; ++d) {
            TRat lhs(C.q_coeff(d, 0, var_t(1)));
            TPoly tm = TPoly::variable(F, var_t(1)) - TPoly::constant(UFrac(UPoly::theta_pow(F, 1)));
            TRat rhs(C.bpoly(d, var_t(1)), TPoly::constant(UFrac(C.ell(d - 1))) * tm);
            if (!lhs.eq(rhs)) return false;
        }
        return true;
    });

    rec.exact("qd.extraction", {{"d", "<=4"}}, [&] {
        for (unsigned d = 1; d <= 4; ++d) {
            SparseXTPoly pd = C.p_poly(d, var_t(1));
            for (unsigned k = 0; k < d; ++k) {
                auto it = pd.find(C.qpow(k));
                TPoly coeff = (it == pd.end()) ? TPoly::zero(F) : it->second;
                if (coeff != C.q_coeff(d, k, var_t(1))) return false;
            }
        }
        return true;
    });

    rec.exact("qd.q10", {}, [&] { return C.q_coeff(1, 0, var_t(1)) == TPoly::one(F); });
}

// ---------------------------------------------------------------------
// explicit formula / gp-compare
// ---------------------------------------------------------------------

void suite_explicit_formula(const Ctx& ctx, const Config& cfg, Recorder& rec) {
    const Fq* F = ctx.F();
    const Carlitz& C = ctx.car();
    unsigned q = ctx.q();

    rec.exact("powersum.tuple-decomposition", {{"d", "<=2"}, {"depth", "<=3"}}, [&] {
        std::vector<AdmissibleArray> sample;
        sample.push_back(array_parse("({}|2)({}|1)"));
        sample.push_back(array_parse("({1}|1)({}|2)"));
        if (q > 2) {
            sample.push_back(array_parse("({1}|1)({2}|1)"));
            sample.push_back(array_parse("({1^2}|2)({}|1)({}|1)"));
            sample.push_back(array_parse("({1,2}|2)"));
        }
        for (const auto& A : sample)
            for (unsigned d = 0; d <= 2; ++d)
                if (power_sum_tuple_oracle(ctx, A, d) != power_sum_brute(ctx, A, d)) return false;
        // one deeper case
        return power_sum_tuple_oracle(ctx, array_parse("({1}|1)({}|1)"), 3) ==
               power_sum_brute(ctx, array_parse("({1}|1)({}|1)"), 3);
    });

    rec.exact("powersum.empty-array", {}, [&] {
        AdmissibleArray empty;
        if (power_sum_brute(ctx, empty, 0) != TPoly::one(F)) return false;
        if (!power_sum_brute(ctx, empty, 2).is_zero()) return false;
        if (!power_sum_brute_lt(ctx, empty, 0).is_zero()) return false;
        return power_sum_brute_lt(ctx, empty, 3) == TPoly::one(F);
    });

    rec.exact("explicit-formula.matrix",
              {{"depth", "<=3"}, {"weight", "<=6"}, {"d", "<=" + std::to_string(cfg.dmax)}}, [&] {
                  for (const AdmissibleArray& A : desk_matrix_arrays(q))
                      for (unsigned d = 0; d <= cfg.dmax; ++d)
                          if (power_sum_fast(ctx, A, d) != power_sum_brute(ctx, A, d)) return false;
                  return true;
              });

    rec.exact("valuation-bound.certified",
              {{"matrix", "depth<=3,weight<=6"}, {"d", "<=" + std::to_string(cfg.dmax)}}, [&] {
                  for (const AdmissibleArray& A : desk_matrix_arrays(q))
                      for (unsigned d = 0; d <= cfg.dmax; ++d)
                          if (!tpoly_min_valuation_ok(power_sum_brute(ctx, A, d),
                                                      valuation_bound(q, A, d)))
                              return false;
                  return true;
              });

    rec.exact("valuation-bound.values", {}, [&] {
        if (q == 3) {
            AdmissibleArray A = array_parse("({1,2}|1)");
            if (valuation_bound(3, A, 4) != 40) return false;
            if (valuation_bound(3, A, 0) != 0) return false;
            AdmissibleArray B = array_parse("({}|1)");
            if (valuation_bound(3, B, 2) != 12 || C.ell_degree(2) != 12) return false;
        }
        return true;
    });

    if (q > 2) {
        rec.exact("powersum.pellarin-depth1", {{"d", "<=4"}}, [&] {
            for (unsigned d = 0; d <= 4; ++d) {
                TPoly lhs = power_sum_brute(ctx, array_parse("({1}|1)"), d);
                TPoly rhs = C.bpoly(d, var_t(1)).scaled(UFrac(UPoly::one(F), C.ell(d)));
                if (lhs != rhs) return false;
            }
            return true;
        });

        rec.exact("powersum.lt-closed-form", {{"d", "<=4"}}, [&] {
            for (unsigned d = 1; d <= 4; ++d) {
                TPoly lt = power_sum_brute_lt(ctx, array_parse("({1}|1)"), d);
                TPoly tm =
                    TPoly::variable(F, var_t(1)) - TPoly::constant(UFrac(UPoly::theta_pow(F, 1)));
                TRat rhs(C.bpoly(d, var_t(1)), TPoly::constant(UFrac(C.ell(d - 1))) * tm);
                if (!TRat(lt).eq(rhs)) return false;
            }
            return true;
        });
    } else {
        rec.skip("powersum.pellarin-depth1", {}, "requires |Sigma| = 1 < q");
        rec.skip("powersum.lt-closed-form", {}, "requires |Sigma| = 1 < q");
    }

    rec.exact("powersum.formula1", {{"types", "empty"}}, [&] {
        // with empty types the slices are the classical Thakur power sums
        for (const char* txt : {"({}|2)({}|1)", "({}|1)({}|3)({}|1)", "({}|4)"})
            for (unsigned d = 0; d <= cfg.dmax; ++d) {
                TPoly v = power_sum_fast(ctx, array_parse(txt), d);
                if (!v.is_constant()) return false;
                if (v != power_sum_brute(ctx, array_parse(txt), d)) return false;
            }
        return true;
    });

    if (q == 3) {
        rec.exact("explicit-formula.sigma12-terms", {{"d", "1..3"}}, [&] {
            // the three-term shape for Sigma = {1,2}, s = 2, term by term
            WeightedSubset s12 = WeightedSubset::plain({1, 2});
            for (unsigned d = 1; d <= 3; ++d) {
                UFrac inv_ell(UPoly::one(F), C.ell(d));
                UFrac inv_ell1(UPoly::one(F), C.ell(d - 1));
                TPoly b1 = C.bpoly(d, var_t(1)), b2 = C.bpoly(d, var_t(2));
                TPoly tm1 =
                    TPoly::variable(F, var_t(1)) - TPoly::constant(UFrac(UPoly::theta_pow(F, 1)));
                TPoly tm2 =
                    TPoly::variable(F, var_t(2)) - TPoly::constant(UFrac(UPoly::theta_pow(F, 1)));
                // S_d(2) b b = b b / ell^2
                TPoly term1 = (b1 * b2).scaled(C.sd(d, 2));
                if (!TRat(term1).eq(TRat(b1 * b2, TPoly::constant(UFrac(pow(C.ell(d), 2))))))
                    return false;
                // S_d(1) Q_{d,0}(t_i) b_d(t_j) = b b / (ell ell_{d-1} (t_i - theta))
                TPoly term2 = (C.q_coeff(d, 0, var_t(1)) * b2).scaled(C.sd(d, 1));
                if (!TRat(term2).eq(
                        TRat(b1 * b2,
                             TPoly::constant(UFrac(C.ell(d) * C.ell(d - 1))) * tm1)))
                    return false;
                TPoly term3 = (C.q_coeff(d, 0, var_t(2)) * b1).scaled(C.sd(d, 1));
                if (!TRat(term3).eq(
                        TRat(b1 * b2,
                             TPoly::constant(UFrac(C.ell(d) * C.ell(d - 1))) * tm2)))
                    return false;
                TPoly total = term1 + term2 + term3;
                if (total != power_sum_depth1_fast(ctx, s12, 2, d)) return false;
                if (total != power_sum_brute(ctx, AdmissibleArray::depth1(s12, 2), d)) return false;
            }
            return true;
        });
    } else {
        rec.skip("explicit-formula.sigma12-terms", {}, "requires q = 3");
    }

    rec.exact("zeta.brute-fast",
              {{"N", std::to_string(cfg.prec)}, {"matrix", "depth<=3,weight<=6"}}, [&] {
                  for (const AdmissibleArray& A : desk_matrix_arrays(q)) {
                      TateElem a = zeta_value(ctx, A, cfg.prec, SumMethod::Brute);
                      TateElem b = zeta_value(ctx, A, cfg.prec, SumMethod::Fast);
                      if (!(a - b).is_zero_to_prec()) return false;
                  }
                  return true;
              });
}

void suite_gp_compare(const Ctx& ctx, const Config& cfg, Recorder& rec) {
    const Carlitz& C = ctx.car();
    unsigned q = ctx.q();
    (void)cfg;

    if (q <= 2) {
        rec.skip("gp.divergence", {}, "requires |Sigma| = 2 < q");
        rec.skip("gp.result1-structure", {}, "requires |Sigma| = 2 < q");
        rec.skip("gp.corrected-agrees", {}, "requires |Sigma| = 2 < q");
    } else {
        WeightedSubset s12 = WeightedSubset::plain({1, 2});
        rec.exact("gp.divergence",
                  {{"sigma", "{1,2}"},
                   {"s", "2"},
                   {"d", "1..3"},
                   {"witness", "gp minus brute has a nonzero exact residual at every d"}},
                  [&] {
                      // expected-fail bookkeeping: the check passes exactly when
                      // the superseded formula disagrees with the defining sum
                      for (unsigned d = 1; d <= 3; ++d) {
                          TPoly brute = power_sum_brute(ctx, AdmissibleArray::depth1(s12, 2), d);
                          TPoly gp = power_sum_depth1_gp(ctx, s12, 2, d);
                          if ((gp - brute).is_zero()) return false;
                          if (power_sum_depth1_fast(ctx, s12, 2, d) != brute) return false;
                      }
                      return true;
                  });

        rec.exact("gp.result1-structure", {{"d", "1..3"}}, [&] {
            for (unsigned d = 1; d <= 3; ++d) {
                TPoly b1 = C.bpoly(d, var_t(1)), b2 = C.bpoly(d, var_t(2));
                TPoly expect = (b1 * b2).scaled(C.sd(d, 2)) -
                               C.q_coeff(d, 0, var_t(1)).scaled(C.sd(d, 1)) -
                               C.q_coeff(d, 0, var_t(2)).scaled(C.sd(d, 1));
                if (expect != power_sum_depth1_gp(ctx, s12, 2, d)) return false;
            }
            return true;
        });

        rec.exact("gp.corrected-agrees", {{"d", "1..3"}}, [&] {
            for (unsigned d = 1; d <= 3; ++d)
                if (power_sum_depth1_fast(ctx, s12, 2, d) !=
                    power_sum_brute(ctx, AdmissibleArray::depth1(s12, 2), d))
                    return false;
            return true;
        });
    }

    rec.exact("gp.agreement-small", {{"sigma", "{},{1}"}, {"s", "<=6"}, {"d", "<=3"}}, [&] {
        std::vector<WeightedSubset> sigmas{WeightedSubset::empty()};
        if (q > 1) sigmas.push_back(WeightedSubset::plain({1}));
        for (const auto& sig : sigmas) {
            if (sig.card() >= q) continue;
            for (unsigned s = 1; s <= 6; ++s)
                for (unsigned d = 0; d <= 3; ++d) {
                    TPoly brute = power_sum_brute(ctx, AdmissibleArray::depth1(sig, s), d);
                    if (power_sum_depth1_gp(ctx, sig, s, d) != brute) return false;
                    if (power_sum_depth1_fast(ctx, sig, s, d) != brute) return false;
                }
        }
        return true;
    });
}

// ---------------------------------------------------------------------
// dagger
// ---------------------------------------------------------------------

void suite_dagger(const Ctx& ctx, const Config& cfg, Recorder& rec) {
    const Carlitz& C = ctx.car();
    unsigned q = ctx.q();
    long N = cfg.prec;

    rec.exact("dagger.oracle-match", {{"d", "<=4"}}, [&] {
        std::vector<std::string> arrays{"({}|2)", "({}|1)({}|2)"};
        if (q > 2) {
            arrays.push_back("({1}|1)");
            arrays.push_back("({1}|1)({2}|1)");
            arrays.push_back("({1,2}|2)({}|1)");
        } else {
            arrays.push_back("({1}|2)");
        }
        for (const auto& txt : arrays) {
            AdmissibleArray A = array_parse(txt);
            if (A.type().card() >= q) continue;
            for (unsigned d = 0; d <= 4; ++d)
                if (dagger_power_sum(ctx, A, d) != dagger_flag_oracle(ctx, A, d)) return false;
        }
        return true;
    });

    rec.exact("dagger.depth1", {{"d", "<=4"}}, [&] {
        // S_d^dagger(Sigma; s) = S_d(s) b_d(Sigma)
        std::vector<WeightedSubset> sigmas{WeightedSubset::empty()};
        if (q > 1) sigmas.push_back(WeightedSubset::plain({1}));
        if (q > 2) sigmas.push_back(WeightedSubset::plain({1, 2}));
        for (const auto& sig : sigmas) {
            if (sig.card() >= q) continue;
            for (unsigned s = 1; s <= 3; ++s)
                for (unsigned d = 0; d <= 4; ++d) {
                    TPoly v = dagger_power_sum(ctx, AdmissibleArray::depth1(sig, s), d);
                    if (v != C.bpoly_ws(d, sig).scaled(C.sd(d, s))) return false;
                }
        }
        return true;
    });

    if (q > 2) {
        rec.exact("dagger.bridge", {{"sigma", "{1},{1,2}"}, {"n", "<=8"}, {"d", "<=3"}}, [&] {
            for (const auto& sigma :
                 {WeightedSubset::plain({1}), WeightedSubset::plain({1, 2})}) {
                for (unsigned n = 1; n <= 8; ++n)
                    for (unsigned d = 0; d <= 3; ++d) {
                        TPoly lhs = power_sum_brute(ctx, AdmissibleArray::depth1(sigma, n), d);
                        TPoly rhs = dagger_power_sum(ctx, AdmissibleArray::depth1(sigma, n), d);
                        if (d > 0) {
                            for (const WeightedSubset& J : sigma.subsets()) {
                                if (J == sigma) continue;
                                WeightedSubset I = sigma.minus(J);
                                std::vector<std::uint32_t> iv = I.support();
                                std::vector<unsigned> k(iv.size(), 0);
                                while (true) {
                                    unsigned long long drop = 0;
                                    for (unsigned kv : k) drop += C.qpow(kv);
                                    if (drop < n) {
                                        TPoly term = dagger_power_sum(
                                            ctx,
                                            AdmissibleArray::depth1(
                                                J, static_cast<std::uint32_t>(n - drop)),
                                            d);
                                        for (std::size_t i = 0; i < iv.size(); ++i)
                                            term = term * C.q_coeff(d, k[i], var_t(iv[i]));
                                        rhs = rhs + term;
                                    }
                                    std::size_t pos = k.size();
                                    bool done = true;
                                    while (pos-- > 0) {
                                        if (k[pos] + 1 < d) {
                                            ++k[pos];
                                            std::fill(k.begin() + static_cast<std::ptrdiff_t>(pos) + 1,
                                                      k.end(), 0u);
                                            done = false;
                                            break;
                                        }
                                    }
                                    if (done) break;
                                }
                            }
                        }
                        if (lhs != rhs) return false;
                    }
            }
            return true;
        });
    } else {
        rec.skip("dagger.bridge", {}, "requires q = 3 parameters");
    }

    rec.exact("dagger.stuffle-exact", {{"pairs", "10"}, {"d", "<=4"}}, [&] {
        Rng rng(cfg.seed + 40);
        ProdMode modes[] = {ProdMode::DD, ProdMode::D_LT, ProdMode::LT_LT};
        int done = 0;
        int guard = 0;
        while (done < 10 && guard < 200) {
            ++guard;
            AdmissibleArray A = random_array(rng, 2, 3, 1, false);
            AdmissibleArray B = random_array(rng, 2, 2, 1, false);
            if ((A.type() | B.type()).card() >= q) continue;
            ++done;
            for (ProdMode m : modes) {
                ArrayCombo combo = dagger_stuffle(ctx, A, B, m);
                for (unsigned d = 0; d <= 4; ++d)
                    if (!stuffle_mode_exact(ctx, A, B, m, combo, d, true))
                        return false;
            }
        }
        return done == 10;
    });

    rec.exact("dagger.diagonal-merge", {}, [&] {
        if (q <= 2) return true;
        // ({1}|1) x ({2}|1): merged type on the leading slot of each term
        ArrayCombo c = dagger_stuffle_depth1(ctx, WeightedSubset::plain({1}), 1,
                                             WeightedSubset::plain({2}), 1);
        WeightedSubset merged = WeightedSubset::plain({1, 2});
        for (const auto& [arr, coeff] : c.terms()) {
            if (!(arr.slots().front().first == merged)) return false;
            for (std::size_t i = 1; i < arr.depth(); ++i)
                if (!arr.slots()[i].first.is_empty()) return false;
        }
        ArrayCombo e = dagger_stuffle_depth1(ctx, WeightedSubset::empty(), 1,
                                             WeightedSubset::empty(), 1);
        return e.terms().size() == 1 &&
               e.terms().begin()->first == array_parse("({}|2)");
    });

    rec.precision("dagger.zeta-empty-type", {{"arrays", "10"}, {"N", std::to_string(N)}}, [&] {
        Rng rng(cfg.seed + 41);
        long worst = std::numeric_limits<long>::max();
        for (int it = 0; it < 10; ++it) {
            AdmissibleArray A = random_array(rng, 3, 5, 0, true);  // empty types
            TateElem diff = dagger_zeta(ctx, A, N) - zeta_value(ctx, A, N, SumMethod::Fast);
            worst = std::min(worst, diff.residual_valuation());
            if (!diff.is_zero_to_prec()) return std::make_pair(false, diff.residual_valuation());
        }
        return std::make_pair(true, worst);
    });

    if (q > 2) {
        rec.precision("dagger.depth1-pellarin", {{"N", std::to_string(N)}}, [&] {
            AdmissibleArray A = array_parse("({1}|1)");
            TateElem diff = dagger_zeta(ctx, A, N) - zeta_value(ctx, A, N, SumMethod::Fast);
            return std::make_pair(diff.is_zero_to_prec(), diff.residual_valuation());
        });
    } else {
        rec.skip("dagger.depth1-pellarin", {}, "requires |Sigma| = 1 < q");
    }
}

// ---------------------------------------------------------------------
// eta
// ---------------------------------------------------------------------

void suite_eta(const Ctx& ctx, const Config& cfg, Recorder& rec) {
    const Fq* F = ctx.F();
    const Carlitz& C = ctx.car();
    unsigned q = ctx.q();
    long N = cfg.prec;

    rec.exact("eta.kronecker", {{"k,i", "<=3"}}, [&] {
        for (unsigned k = 0; k <= 3; ++k)
            for (unsigned i = 0; i <= 3; ++i) {
                UFrac v = eta_eval(ctx, k, i);
                if (i == k && !v.is_one()) return false;
                if (i != k && !v.is_zero()) return false;
            }
        return true;
    });

    rec.exact("eta.negative-zeta-path", {}, [&] {
        // i > k goes through the exact non-positive zeta values
        if (q == 3) {
            if (!goss_zeta_nonpos(C, 8).is_zero()) return false;  // zeta_A(-8) = 0
            if (!eta_eval(ctx, 0, 2).is_zero()) return false;
        }
        return eta_eval(ctx, 1, 0).is_zero() && eta_eval(ctx, 1, 1).is_one();
    });

    rec.precision("special-zeta", {{"k", "<=2"}, {"N", std::to_string(N)}}, [&] {
        long worst = std::numeric_limits<long>::max();
        for (unsigned k = 0; k <= 2; ++k) {
            ResidualReport r = special_zeta_check(ctx, k, N);
            worst = std::min(worst, r.residual);
            if (!r.ok) return std::make_pair(false, r.residual);
        }
        return std::make_pair(true, worst);
    });

    rec.precision("eta.consistency",
                  {{"k", "<=3"}, {"i", "<=min(k,1) for k=3, else <=k"},
                   {"note", "(3,2),(3,3) need degree-6 weight-27 slices; their exact values "
                            "are covered by eta.kronecker"}},
                  [&] {
                      long worst = std::numeric_limits<long>::max();
                      for (unsigned k = 0; k <= 3; ++k)
                          for (unsigned i = 0; i <= (k == 3 ? 1u : k); ++i) {
                              Laurent series = eta_value_at(ctx, k, i, N);
                              Laurent exact = Laurent::from_ufrac(eta_eval(ctx, k, i), N);
                              Laurent diff = series - exact;
                              worst = std::min(worst, diff.residual_valuation());
                              if (!diff.is_zero_to_prec())
                                  return std::make_pair(false, diff.residual_valuation());
                          }
                      return std::make_pair(true, worst);
                  });

    rec.precision("tate.eval", {{"N", std::to_string(N)}}, [&] {
        // zeta(({1}|1)) at t_1 := theta collapses to the d = 0 slice
        AdmissibleArray A = array_parse("({1}|1)");
        Laurent v = tate_eval(ctx, A, {{1, 0}}, N);
        Laurent diff = v - Laurent::one(F, -N - 1);
        if (!diff.is_zero_to_prec()) return std::make_pair(false, diff.residual_valuation());
        // at t_1 := theta^q the same series is the trivial zero at 1 - q
        Laurent w = tate_eval(ctx, A, {{1, 1}}, N);
        if (!w.is_zero_to_prec()) return std::make_pair(false, w.residual_valuation());
        return std::make_pair(true, std::min(diff.residual_valuation(), w.residual_valuation()));
    });
}

// ---------------------------------------------------------------------
// fe-maps
// ---------------------------------------------------------------------

void suite_fe_maps(const Ctx& ctx, const Config& cfg, Recorder& rec) {
    const Fq* F = ctx.F();
    const Carlitz& C = ctx.car();
    unsigned q = ctx.q();
    long N = cfg.prec;

    std::vector<TrivialMZV> fs;
    for (unsigned k = 0; k <= 2; ++k) fs.push_back(TrivialMZV::eta(ctx, {1}, {k}));
    bool two_var = q > 2;
    if (two_var) {
        fs.push_back(TrivialMZV::eta(ctx, {1, 2}, {1, 0}));
        fs.push_back(TrivialMZV::eta(ctx, {1, 2}, {1, 1}));
    }

    rec.exact("fe.equal", {{"window", "exponents <= q^3"}}, [&] {
        for (const auto& f : fs) {
            XSeries a = f_map(ctx, f, 3);
            XSeries b = e_map(ctx, f, 3);
            if (a.coef != b.coef) return false;
        }
        return true;
    });
    if (!two_var) rec.skip("fe.equal-two-variables", {}, "requires |Sigma| = 2 < q");

    rec.exact("zeta-map.eta0-polylog", {{"imax", "3"}}, [&] {
        // F(eta_0) = sum_i X^{q^i} / ell_i, the depth-1 polylogarithm
        XSeries a = f_map(ctx, TrivialMZV::eta(ctx, {1}, {0}), 3);
        for (unsigned i = 0; i <= 3; ++i) {
            Monomial m = mono_var(var_x(1), C.qpow(i));
            auto it = a.coef.find(m);
            if (it == a.coef.end()) return false;
            UFrac direct = UFrac::zero(F);
            for (const UPoly& mon : monic_enum(F, i))  // enumerated S_i(1)
                direct = direct + UFrac(UPoly::one(F), mon);
            if (it->second != sym_const(direct)) return false;
        }
        return a.coef.size() == 4;
    });

    rec.exact("zeta-map.eta1-shape", {{"imax", "3"}}, [&] {
        // F(eta_1) = sum_{i>=1} X^{q^i} / (D_1 ell_{i-1}^q)
        XSeries a = f_map(ctx, TrivialMZV::eta(ctx, {1}, {1}), 3);
        for (unsigned i = 1; i <= 3; ++i) {
            Monomial m = mono_var(var_x(1), C.qpow(i));
            auto it = a.coef.find(m);
            if (it == a.coef.end()) return false;
            UPoly den = C.dfac(1) * pow(C.ell(i - 1), q);
            if (it->second != sym_const(UFrac(UPoly::one(F), den))) return false;
        }
        return a.coef.size() == 3;  // no i = 0 term
    });

    rec.exact("lambda.coefficient-law", {{"d1", "<=3"}}, [&] {
        auto enum_sd = [&](unsigned d, unsigned s) {
            UFrac acc = UFrac::zero(F);
            for (const UPoly& a : monic_enum(F, d)) acc = acc + UFrac(UPoly::one(F), pow(a, s));
            return acc;
        };
        auto coeff_at = [&](const TateElem& lam, const Monomial& m) {
            auto it = lam.coef.find(m);
            return (it == lam.coef.end()) ? Laurent::zero(F, lam.floorv) : it->second;
        };
        // depth 1: the coefficient of X^{q^d} is S_d(s)
        {
            TateElem lam = lambda_value(ctx, array_parse("({1}|2)"), N, 3u);
            for (unsigned d = 0; d <= 3; ++d) {
                Laurent got = coeff_at(lam, mono_var(var_x(1), C.qpow(d)));
                Laurent diff = got - Laurent::from_ufrac(enum_sd(d, 2), -lam.floorv - 1);
                if (!diff.is_zero_to_prec()) return false;
            }
        }
        // depth 2 with X-disjoint slots: per-flag coefficients are products
        if (q > 2) {
            AdmissibleArray A = array_parse("({1}|1)({2}|1)");
            TateElem lam = lambda_value(ctx, A, N, 3u);
            for (unsigned d1 = 1; d1 <= 3; ++d1)
                for (unsigned d2 = 0; d2 < d1; ++d2) {
                    Monomial m = mono_mul(mono_var(var_x(1), C.qpow(d1)),
                                          mono_var(var_x(2), C.qpow(d2)));
                    Laurent got = coeff_at(lam, m);
                    Laurent diff =
                        got - Laurent::from_ufrac(enum_sd(d1, 1) * enum_sd(d2, 1), -lam.floorv - 1);
                    if (!diff.is_zero_to_prec()) return false;
                }
        }
        // empty-type slot: flags sharing a monomial add up
        {
            AdmissibleArray A = array_parse("({1}|1)({}|2)");
            if (A.type().card() < q) {
                TateElem lam = lambda_value(ctx, A, N, 3u);
                for (unsigned d1 = 1; d1 <= 3; ++d1) {
                    UFrac expect = UFrac::zero(F);
                    for (unsigned d2 = 0; d2 < d1; ++d2)
                        expect = expect + enum_sd(d1, 1) * enum_sd(d2, 2);
                    Laurent got = coeff_at(lam, mono_var(var_x(1), C.qpow(d1)));
                    Laurent diff = got - Laurent::from_ufrac(expect, -lam.floorv - 1);
                    if (!diff.is_zero_to_prec()) return false;
                }
            }
        }
        return true;
    });

    rec.exact("lambda.unit", {}, [&] {
        TateElem one = lambda_value(ctx, AdmissibleArray(), N);
        return one.coef.size() == 1 && one.coef.begin()->first.empty() &&
               one.coef.begin()->second.coeff(0) == F->one();
    });

    rec.precision("ev.zeta-one", {{"imax", "4"}}, [&] {
        TrivialMZV eta0 = TrivialMZV::eta(ctx, {1}, {0});
        XSeries x = f_map(ctx, eta0, 4);
        EvNumeric ev = ev_map_numeric(ctx, x, eta0, N);
        Laurent z = goss_zeta_pos(C, 1, N);
        Laurent diff = ev.value - z;
        long cert = -ev.certified_floor;
        bool ok = diff.residual_valuation() >= std::min(N + 1, cert);
        return std::make_pair(ok, diff.residual_valuation());
    });
}

// ---------------------------------------------------------------------
// kernel / image
// ---------------------------------------------------------------------

std::vector<KTuple> nonzero_tuples(std::size_t len, unsigned maxv) {
    std::vector<KTuple> out;
    KTuple t(len, 0);
    while (true) {
        if (!std::all_of(t.begin(), t.end(), [](unsigned v) { return v == 0; })) out.push_back(t);
        std::size_t pos = len;
        bool done = true;
        while (pos-- > 0) {
            if (t[pos] < maxv) {
                ++t[pos];
                std::fill(t.begin() + static_cast<std::ptrdiff_t>(pos) + 1, t.end(), 0u);
                done = false;
                break;
            }
        }
        if (done) break;
    }
    return out;
}

void suite_kernel(const Ctx& ctx, const Config& cfg, Recorder& rec) {
    const Fq* F = ctx.F();
    const Carlitz& C = ctx.car();
    unsigned q = ctx.q();
    long N = cfg.prec;

    std::vector<std::vector<std::uint32_t>> sigmas;
    if (q > 1) sigmas.push_back({1});
    if (q > 2) sigmas.push_back({1, 2});
    if (sigmas.empty()) {
        rec.skip("kernel.symbolic", {}, "requires |Sigma| >= 1 < q");
        return;
    }

    rec.exact("gsig.eta-values", {{"entries", "<=2"}}, [&] {
        for (const auto& sigma : sigmas)
            for (const KTuple& k : nonzero_tuples(sigma.size(), 2)) {
                SymCoeff g = g_map_symbolic(ctx, TrivialMZV::eta(ctx, sigma, k));
                UPoly dk = UPoly::one(F);
                for (unsigned kr : k) dk = dk * C.dfac(kr);
                SymCoeff expect =
                    sym_zpow(F, gsig_weight(ctx, k)).scaled(UFrac(UPoly::one(F), dk));
                if (g != expect) return false;
            }
        return true;
    });

    rec.exact("kernel.symbolic", {{"entries", "<=2"}}, [&] {
        for (const auto& sigma : sigmas)
            for (const KTuple& j : nonzero_tuples(sigma.size(), 2))
                if (!g_map_symbolic(ctx, kernel_basis(ctx, sigma, j)).is_zero()) return false;
        return true;
    });

    rec.precision("kernel.numeric", {{"entries", "<=2"}, {"N", std::to_string(N)}}, [&] {
        long worst = std::numeric_limits<long>::max();
        for (const auto& sigma : sigmas)
            for (const KTuple& j : nonzero_tuples(sigma.size(), 2)) {
                Laurent v = g_map_numeric(ctx, kernel_basis(ctx, sigma, j), N);
                worst = std::min(worst, v.residual_valuation());
                if (!v.is_zero_to_prec()) return std::make_pair(false, v.residual_valuation());
            }
        return std::make_pair(true, worst);
    });

    rec.precision("kernel.f-route", {{"imax", "4"}}, [&] {
        long worst = std::numeric_limits<long>::max();
        for (const auto& sigma : sigmas)
            for (const KTuple& j : nonzero_tuples(sigma.size(), 2)) {
                TrivialMZV f = kernel_basis(ctx, sigma, j);
                EvNumeric ev = ev_map_numeric(ctx, f_map(ctx, f, 4), f, N);
                long cert = std::min(N, -ev.certified_floor - 1);
                long res = ev.value.residual_valuation();
                worst = std::min(worst, res);
                if (res < cert + 1 && !ev.value.is_zero_to_prec())
                    return std::make_pair(false, res);
            }
        return std::make_pair(true, worst);
    });

    rec.exact("phi.image-in-kernel", {{"samples", "20"}}, [&] {
        Rng rng(cfg.seed + 50);
        for (int it = 0; it < 20; ++it) {
            const auto& sigma = sigmas[rng.below(static_cast<unsigned>(sigmas.size()))];
            auto tuples = nonzero_tuples(sigma.size(), 2);
            std::map<KTuple, SymCoeff> combo;
            unsigned picks = rng.range(1, 3);
            for (unsigned i = 0; i < picks; ++i) {
                KTuple j = tuples[rng.below(static_cast<unsigned>(tuples.size()))];
                UFrac c(random_nonzero_upoly(rng, F, 2), random_nonzero_upoly(rng, F, 1));
                SymCoeff sc = sym_const(c);
                if (rng.below(2)) sc = sc * sym_zpow(F, rng.range(1, 2));
                auto itf = combo.find(j);
                if (itf == combo.end()) combo.emplace(j, sc);
                else itf->second = itf->second + sc;
            }
            TrivialMZV f = phi_linear(ctx, sigma, combo);
            if (!g_map_symbolic(ctx, f).is_zero()) return false;
            if (!g_map_numeric(ctx, f, N).is_zero_to_prec()) return false;
            // injectivity data: Phi(a)(theta^{q^j}) = D_j a_j
            for (const auto& [j, a] : combo) {
                UPoly dj = UPoly::one(F);
                for (unsigned jr : j) dj = dj * C.dfac(jr);
                if (trivial_eval(ctx, f, j) != a.scaled(UFrac(dj))) return false;
            }
        }
        return true;
    });

    rec.exact("phi.zero-tuple-error", {}, [&] {
        try {
            phi(ctx, sigmas[0], KTuple(sigmas[0].size(), 0));
        } catch (const DomainError&) {
            return true;
        }
        return false;
    });

    rec.exact("kernel.evaluation-matrix", {{"entries", "<=2"}}, [&] {
        // [trivial_eval(basis(j), j')] is D_j on the diagonal and 0 off it
        // (excluding the eta_0 column), hence has full rank
        for (const auto& sigma : sigmas) {
            auto tuples = nonzero_tuples(sigma.size(), 2);
            for (const KTuple& j : tuples) {
                TrivialMZV f = kernel_basis(ctx, sigma, j);
                for (const KTuple& jp : tuples) {
                    SymCoeff v = trivial_eval(ctx, f, jp);
                    if (j == jp) {
                        UPoly dj = UPoly::one(F);
                        for (unsigned jr : j) dj = dj * C.dfac(jr);
                        if (v != sym_const(UFrac(dj))) return false;
                    } else if (!v.is_zero()) {
                        return false;
                    }
                }
                // nonzero at the zero tuple: the -Z^e eta_0 part
                if (trivial_eval(ctx, f, KTuple(sigma.size(), 0)).is_zero()) return false;
            }
        }
        return true;
    });

    if (q > 2) {
        rec.exact("kernel.permuted-example", {{"sigma", "{1,2}"}}, [&] {
            KTuple j{1, 0}, jp{0, 1};
            UPoly dj = C.dfac(1) * C.dfac(0);
            std::map<KTuple, SymCoeff> combo;
            combo.emplace(j, sym_const(UFrac(UPoly::one(F), dj)));
            combo.emplace(jp, -sym_const(UFrac(UPoly::one(F), dj)));
            TrivialMZV f = phi_linear(ctx, {1, 2}, combo);
            // eta_0 parts cancel: f = eta_j - eta_jp
            TrivialMZV expect = TrivialMZV::eta(ctx, {1, 2}, j) +
                                TrivialMZV::eta(ctx, {1, 2}, jp).scaled(-TPoly::one(F));
            if (!(f.coef == expect.coef)) return false;
            return g_map_symbolic(ctx, f).is_zero();
        });
    } else {
        rec.skip("kernel.permuted-example", {}, "requires |Sigma| = 2 < q");
    }

    rec.exact("countex.single-variable", {}, [&] {
        // Phi(T_1) = -Z^{q-1} eta_0 + D_1 eta_1
        TrivialMZV f = phi(ctx, {1}, {1});
        SymCoeff c0 = trivial_eval(ctx, f, {0});
        SymCoeff c1 = trivial_eval(ctx, f, {1});
        if (c0 != -sym_zpow(F, q - 1)) return false;
        return c1 == sym_const(UFrac(C.dfac(1)));
    });

    rec.exact("kernel.exponent-identity", {{"entries", "<=2"}}, [&] {
        for (const auto& sigma : sigmas)
            for (const KTuple& j : nonzero_tuples(sigma.size(), 2))
                if (!kernel_exponent_identity(ctx, sigma.size(), j)) return false;
        return true;
    });

    rec.precision("generators.kronecker", {{"entries", "<=1"}}, [&] {
        // eta_k evaluated at theta^{q^j} is 1 exactly at j = k, coordinate
        // by coordinate; verified at the series level through the
        // per-degree evaluations
        long worst = std::numeric_limits<long>::max();
        for (const auto& sigma : sigmas) {
            std::vector<KTuple> tuples;
            KTuple t(sigma.size(), 0);
            for (;;) {
                tuples.push_back(t);
                std::size_t pos = t.size();
                bool done = true;
                while (pos-- > 0) {
                    if (t[pos] < 1) {
                        ++t[pos];
                        std::fill(t.begin() + static_cast<std::ptrdiff_t>(pos) + 1, t.end(), 0u);
                        done = false;
                        break;
                    }
                }
                if (done) break;
            }
            for (const KTuple& k : tuples)
                for (const KTuple& j : tuples) {
                    Laurent prod = Laurent::one(F, -N - 1);
                    for (std::size_t r = 0; r < k.size(); ++r)
                        prod = prod * eta_value_at(ctx, k[r], j[r], N);
                    Laurent expect = (k == j) ? Laurent::one(F, -N - 1)
                                              : Laurent::zero(F, -N - 1);
                    Laurent diff = prod - expect;
                    worst = std::min(worst, diff.residual_valuation());
                    if (!diff.is_zero_to_prec())
                        return std::make_pair(false, diff.residual_valuation());
                }
        }
        return std::make_pair(true, worst);
    });

    rec.exact("noninjective.witness", {}, [&] {
        // a nonzero trivial value with G-image zero: G is not injective
        KTuple j(sigmas[0].size(), 0);
        j[0] = 1;
        TrivialMZV f = kernel_basis(ctx, sigmas[0], j);
        if (f.is_zero()) return false;
        if (trivial_eval(ctx, f, j).is_zero()) return false;
        return g_map_symbolic(ctx, f).is_zero();
    });
}

void suite_image(const Ctx& ctx, const Config& cfg, Recorder& rec) {
    const Fq* F = ctx.F();
    unsigned q = ctx.q();
    std::vector<std::vector<std::uint32_t>> sigmas;
    if (q > 1) sigmas.push_back({1});
    if (q > 2) sigmas.push_back({1, 2});
    if (sigmas.empty()) {
        rec.skip("image.generator", {}, "requires |Sigma| >= 1 < q");
        return;
    }

    rec.exact("image.generator", {}, [&] {
        for (const auto& sigma : sigmas) {
            SymCoeff g = g_map_symbolic(ctx, TrivialMZV::eta(ctx, sigma, KTuple(sigma.size(), 0)));
            if (g != sym_zpow(F, sigma.size())) return false;
        }
        return true;
    });

    rec.exact("image.divisibility", {{"samples", "20"}}, [&] {
        Rng rng(cfg.seed + 60);
        for (const auto& sigma : sigmas) {
            std::vector<TrivialMZV> samples;
            for (int it = 0; it < 20; ++it) {
                TrivialMZV f = TrivialMZV::zero(sigma);
                unsigned picks = rng.range(1, 3);
                for (unsigned i = 0; i < picks; ++i) {
                    KTuple k(sigma.size());
                    for (auto& v : k) v = rng.below(3);
                    UFrac c(random_nonzero_upoly(rng, F, 2), random_nonzero_upoly(rng, F, 1));
                    f.add_term(k, sym_const(c));
                }
                samples.push_back(std::move(f));
            }
            ImageCheckReport rep = image_check(ctx, sigma, samples);
            if (!rep.ok()) return false;
        }
        return true;
    });

    rec.exact("image.eta-exponents", {{"entries", "<=3"}}, [&] {
        // G(eta_k) = Z^{sum q^{k_r}} / D_k with sum q^{k_r} >= |Sigma|
        for (const auto& sigma : sigmas) {
            KTuple k(sigma.size(), 0);
            while (true) {
                if (gsig_weight(ctx, k) < sigma.size()) return false;
                SymCoeff g = g_map_symbolic(ctx, TrivialMZV::eta(ctx, sigma, k));
                if (!zpow_divides(sigma.size(), g)) return false;
                std::size_t pos = k.size();
                bool done = true;
                while (pos-- > 0) {
                    if (k[pos] < 3) {
                        ++k[pos];
                        std::fill(k.begin() + static_cast<std::ptrdiff_t>(pos) + 1, k.end(), 0u);
                        done = false;
                        break;
                    }
                }
                if (done) break;
            }
        }
        return true;
    });
}

}  // namespace

// ---------------------------------------------------------------------
// dispatch
// ---------------------------------------------------------------------

std::vector<AdmissibleArray> desk_matrix_arrays(unsigned q) { return matrix_arrays_impl(q); }

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "character", "partial-fractions", "stuffle",  "ed",     "genfun",
        "perkins",   "explicit-formula",  "gp-compare", "dagger", "eta",
        "fe-maps",   "kernel",            "image"};
    return names;
}

bool is_suite(const std::string& name) {
    if (name == "all") return true;
    for (const auto& n : suite_names())
        if (n == name) return true;
    return false;
}

std::vector<CheckResult> run_suite(const std::string& name, const Config& cfg) {
    if (!is_suite(name)) throw DomainError("unknown suite: " + name);
    std::vector<CheckResult> out;
    Recorder rec(out);
    Ctx ctx(cfg.field);
    auto dispatch = [&](const std::string& n) {
        if (n == "character") suite_character(ctx, cfg, rec);
        else if (n == "partial-fractions") suite_partial_fractions(ctx, cfg, rec);
        else if (n == "stuffle") suite_stuffle(ctx, cfg, rec);
        else if (n == "ed") suite_ed(ctx, cfg, rec);
        else if (n == "genfun") suite_genfun(ctx, cfg, rec);
        else if (n == "perkins") suite_perkins(ctx, cfg, rec);
        else if (n == "explicit-formula") suite_explicit_formula(ctx, cfg, rec);
        else if (n == "gp-compare") suite_gp_compare(ctx, cfg, rec);
        else if (n == "dagger") suite_dagger(ctx, cfg, rec);
        else if (n == "eta") suite_eta(ctx, cfg, rec);
        else if (n == "fe-maps") suite_fe_maps(ctx, cfg, rec);
        else if (n == "kernel") suite_kernel(ctx, cfg, rec);
        else if (n == "image") suite_image(ctx, cfg, rec);
    };
    if (name == "all") {
        for (const auto& n : suite_names()) dispatch(n);
    } else {
        dispatch(name);
    }
    return out;
}

const std::vector<std::pair<std::string, std::string>>& statement_manifest() {
    static const std::vector<std::pair<std::string, std::string>> manifest{
        {"carlitz.degrees", "ed"},            // the special quantities ell, D, b
        {"ws.operations", "character"},       // weighted subsets, union, cardinality
        {"character.add", "character"},       // character additivity with binomials
        {"character.mul", "character"},
        {"character.scalar", "character"},
        {"character.union", "character"},
        {"binom-ws", "character"},            // subset binomials via base-p digits
        {"lucas.oracle", "character"},
        {"unit-sum.enumeration", "character"},
        {"powersum.tuple-decomposition", "explicit-formula"},  // defining sums, head/tail split
        {"powersum.formula1", "explicit-formula"},             // empty types = classical sums
        {"basic-identity", "partial-fractions"},
        {"delta.examples", "stuffle"},        // the delta/Delta coefficients
        {"sum-shuffle.pointwise", "stuffle"}, // the two-term rational expansion
        {"sum-shuffle.depth1", "stuffle"},    // per-degree product rule
        {"sum-shuffle.chen", "stuffle"},
        {"sum-shuffle.pellarin", "stuffle"},
        {"sum-shuffle.zeta", "stuffle"},      // zeta-level product rule
        {"shuffle-relations.dd", "stuffle"},  // degree-independent expansions
        {"shuffle-relations.dlt", "stuffle"},
        {"shuffle-relations.ltlt", "stuffle"},
        {"ed.forms", "ed"},                   // product and sum expansions agree
        {"ed.vanish", "ed"},                  // roots at all low-degree polynomials
        {"ed.one", "ed"},
        {"ed.linear", "ed"},
        {"genfun.inverse", "genfun"},         // the power-sum generating function
        {"genfun.brute", "genfun"},
        {"goss.negative-powersums", "genfun"},
        {"goss.zeta-nonpositive", "genfun"},  // zeta_A(0) = 1 and the trivial zeros
        {"goss.zeta-one", "genfun"},
        {"perkins.identity", "perkins"},
        {"pd.values", "perkins"},             // P_d at theta^d
        {"qd0.closed-form", "perkins"},
        {"explicit-formula.matrix", "explicit-formula"},
        {"explicit-formula.sigma12-terms", "explicit-formula"},
        {"valuation-bound.certified", "explicit-formula"},
        {"gp.divergence", "gp-compare"},
        {"gp.result1-structure", "gp-compare"},
        {"gp.agreement-small", "gp-compare"},
        {"dagger.bridge", "dagger"},          // rewriting S_d through dagger slices
        {"dagger.depth1", "dagger"},
        {"dagger.stuffle-exact", "dagger"},
        {"dagger.zeta-empty-type", "dagger"},
        {"eta.kronecker", "eta"},
        {"eta.negative-zeta-path", "eta"},
        {"special-zeta", "eta"},
        {"eta.consistency", "eta"},
        {"tate.eval", "eta"},
        {"fe.equal", "fe-maps"},              // the two polylogarithm maps agree
        {"zeta-map.eta0-polylog", "fe-maps"},
        {"zeta-map.eta1-shape", "fe-maps"},
        {"lambda.coefficient-law", "fe-maps"},
        {"ev.zeta-one", "fe-maps"},
        {"gsig.eta-values", "kernel"},
        {"kernel.symbolic", "kernel"},
        {"kernel.numeric", "kernel"},
        {"kernel.f-route", "kernel"},
        {"phi.image-in-kernel", "kernel"},
        {"kernel.evaluation-matrix", "kernel"},
        {"kernel.permuted-example", "kernel"},
        {"countex.single-variable", "kernel"},
        {"kernel.exponent-identity", "kernel"},
        {"generators.kronecker", "kernel"},
        {"noninjective.witness", "kernel"},
        {"image.generator", "image"},
        {"image.divisibility", "image"},
        {"image.eta-exponents", "image"},
    };
    return manifest;
}

}  // namespace mzv
