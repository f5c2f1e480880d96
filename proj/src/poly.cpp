#include "mzv/poly.hpp"

#include <algorithm>

namespace mzv {

std::string Var::name() const {
    switch (fam) {
        case VarFam::t: return "t" + std::to_string(idx);
        case VarFam::X: return "X" + std::to_string(idx);
        case VarFam::T: return "T" + std::to_string(idx);
        case VarFam::Z: return "Z";
    }
    return "?";
}

Monomial mono_one() { return {}; }

Monomial mono_var(Var v, std::uint64_t e) {
    if (e == 0) return {};
    return {{v, e}};
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            r.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            r.push_back(b[j++]);
        } else {
            r.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    return r;
}

std::uint64_t mono_total_degree(const Monomial& a) {
    std::uint64_t s = 0;
    for (const auto& [v, e] : a) s += e;
    return s;
}

std::uint64_t mono_degree_in(const Monomial& a, Var v) {
    for (const auto& [w, e] : a)
        if (w == v) return e;
    return 0;
}

bool mono_order_less(const Monomial& a, const Monomial& b) {
    std::uint64_t da = mono_total_degree(a), db = mono_total_degree(b);
    if (da != db) return da < db;
    // scan variables in priority order; higher exponent on the first
    // differing variable wins
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first == b[j].first) {
            if (a[i].second != b[j].second) return a[i].second < b[j].second;
            ++i;
            ++j;
        } else if (a[i].first < b[j].first) {
            return false;  // a has a positive exponent on an earlier variable
        } else {
            return true;
        }
    }
    if (i < a.size()) return false;
    if (j < b.size()) return true;
    return false;
}

std::string mono_to_string(const Monomial& a) {
    if (a.empty()) return "1";
    std::string s;
    for (const auto& [v, e] : a) {
        if (!s.empty()) s += "*";
        s += v.name();
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

TPoly TPoly::constant(const UFrac& c) {
    TPoly r(c.field());
    if (!c.is_zero()) r.terms_.emplace(mono_one(), c);
    return r;
}

TPoly TPoly::variable(const Fq* F, Var v, std::uint64_t e) {
    TPoly r(F);
    r.terms_.emplace(mono_var(v, e), UFrac::one(F));
    return r;
}

TPoly TPoly::monomial(const UFrac& c, Monomial m) {
    TPoly r(c.field());
    if (!c.is_zero()) r.terms_.emplace(std::move(m), c);
    return r;
}

TPoly TPoly::from_upoly_in_var(const UPoly& u, Var v) {
    TPoly r(u.field());
    for (std::size_t e = 0; e < u.coeffs().size(); ++e)
        if (u.coeffs()[e] != 0)
            r.terms_.emplace(mono_var(v, e), UFrac::constant(u.field(), u.coeffs()[e]));
    return r;
}

UFrac TPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? UFrac::zero(F_) : it->second;
}

bool TPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

UFrac TPoly::constant_value() const { return coeff(mono_one()); }

std::uint64_t TPoly::degree_in(Var v) const {
    std::uint64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, mono_degree_in(m, v));
    return d;
}

std::uint64_t TPoly::min_degree_in(Var v) const {
    if (terms_.empty()) return 0;
    std::uint64_t d = UINT64_MAX;
    for (const auto& [m, c] : terms_) d = std::min(d, mono_degree_in(m, v));
    return d;
}

std::vector<Var> TPoly::vars() const {
    std::vector<Var> r;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m)
            if (std::find(r.begin(), r.end(), v) == r.end()) r.push_back(v);
    std::sort(r.begin(), r.end());
    return r;
}

void TPoly::add_term(const Monomial& m, const UFrac& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
}

TPoly TPoly::operator-() const {
    TPoly r(F_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

TPoly operator+(const TPoly& a, const TPoly& b) {
    TPoly r = a;
    if (!r.F_) r.F_ = b.F_;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

TPoly operator-(const TPoly& a, const TPoly& b) { return a + (-b); }

TPoly operator*(const TPoly& a, const TPoly& b) {
    TPoly r(a.F_ ? a.F_ : b.F_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
}

TPoly TPoly::scaled(const UFrac& c) const {
    if (c.is_zero()) return TPoly(F_);
    TPoly r(F_);
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

TPoly TPoly::scaled(FqElem c) const {
    if (c == 0) return TPoly(F_);
    TPoly r(F_);
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v.scaled(c));
    return r;
}

TPoly pow(const TPoly& a, unsigned long long e) {
    TPoly r = TPoly::one(a.field());
    TPoly base = a;
    while (e > 0) {
        if (e & 1) r = r * base;
        if (e >>= 1) base = base * base;
    }
    return r;
}

TPoly TPoly::subst_theta_pow(Var v, unsigned long long e) const {
    TPoly r(F_);
    for (const auto& [m, c] : terms_) {
        Monomial rest;
        std::uint64_t ev = 0;
        for (const auto& [w, k] : m) {
            if (w == v) ev = k;
            else rest.emplace_back(w, k);
        }
        UFrac cc = c;
        if (ev > 0) cc = cc * UFrac(UPoly::theta_pow(F_, e * ev));
        r.add_term(rest, cc);
    }
    return r;
}

UFrac TPoly::eval_theta_pows(const std::map<Var, unsigned long long>& assignment) const {
    UFrac acc = UFrac::zero(F_);
    for (const auto& [m, c] : terms_) {
        unsigned long long shift = 0;
        for (const auto& [v, k] : m) {
            auto it = assignment.find(v);
            if (it == assignment.end())
                throw DomainError("TPoly: unassigned variable " + v.name() + " in evaluation");
            shift += it->second * k;
        }
        acc = acc + c * UFrac(UPoly::theta_pow(F_, shift));
    }
    return acc;
}

std::pair<Monomial, UFrac> TPoly::leading() const {
    if (terms_.empty()) throw DomainError("TPoly: leading term of zero");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (mono_order_less(best->first, it->first)) best = it;
    return {best->first, best->second};
}

std::string TPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const Monomial, UFrac>*> ordered;
    for (const auto& t : terms_) ordered.push_back(&t);
    std::sort(ordered.begin(), ordered.end(), [](auto* x, auto* y) {
        return mono_order_less(y->first, x->first);  // descending
    });
    std::string s;
    for (auto* t : ordered) {
        if (!s.empty()) s += " + ";
        bool unit_coeff = t->second.is_one();
        if (t->first.empty()) {
            s += t->second.to_string();
        } else {
            if (!unit_coeff) s += "(" + t->second.to_string() + ")*";
            s += mono_to_string(t->first);
        }
    }
    return s;
}

TRat::TRat(TPoly num, TPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("TRat: zero denominator");
    normalize();
}

void TRat::normalize() {
    auto [m, c] = den_.leading();
    if (!c.is_one()) {
        UFrac cinv = c.inv();
        num_ = num_.scaled(cinv);
        den_ = den_.scaled(cinv);
    }
}

TRat TRat::inv() const {
    if (num_.is_zero()) throw DomainError("TRat: inversion of zero");
    return TRat(den_, num_);
}

TRat TRat::operator-() const {
    TRat r = *this;
    r.num_ = -r.num_;
    return r;
}

TRat operator+(const TRat& a, const TRat& b) {
    return TRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

TRat operator-(const TRat& a, const TRat& b) {
    return TRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

TRat operator*(const TRat& a, const TRat& b) { return TRat(a.num_ * b.num_, a.den_ * b.den_); }

TRat operator/(const TRat& a, const TRat& b) { return a * b.inv(); }

bool TRat::eq(const TRat& other) const {
    return num_ * other.den_ == other.num_ * den_;
}

TRat TRat::subst_theta_pow(Var v, unsigned long long e) const {
    TPoly n = num_.subst_theta_pow(v, e);
    TPoly d = den_.subst_theta_pow(v, e);
    if (d.is_zero())
        throw PoleError("TRat: denominator vanishes at " + v.name() + " := θ^" + std::to_string(e));
    return TRat(std::move(n), std::move(d));
}

std::string TRat::to_string() const {
    if (den_ == TPoly::one(field())) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

}  // namespace mzv
