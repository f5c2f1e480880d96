#include "mzv/upoly.hpp"

#include <algorithm>

namespace mzv {

UPoly UPoly::constant(const Fq* F, FqElem c) {
    UPoly r(F);
    if (c != 0) r.c_.push_back(c);
    return r;
}

UPoly UPoly::theta_pow(const Fq* F, unsigned long long e) {
    UPoly r(F);
    r.c_.assign(e + 1, 0);
    r.c_[e] = F->one();
    return r;
}

UPoly UPoly::scaled(FqElem c) const {
    if (c == 0) return UPoly(F_);
    UPoly r(F_);
    r.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = F_->mul(c_[i], c);
    r.trim();
    return r;
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(F_->inv(lead()));
}

UPoly UPoly::shifted(unsigned long long e) const {
    if (is_zero()) return *this;
    UPoly r(F_);
    r.c_.assign(c_.size() + e, 0);
    std::copy(c_.begin(), c_.end(), r.c_.begin() + static_cast<std::ptrdiff_t>(e));
    return r;
}

UPoly UPoly::subst_theta_pow(unsigned long long e) const {
    if (is_zero()) return *this;
    UPoly r(F_);
    r.c_.assign((c_.size() - 1) * e + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) r.c_[i * e] = F_->add(r.c_[i * e], c_[i]);  // e = 0 collapses terms
    r.trim();
    return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    const Fq* F = a.F_ ? a.F_ : b.F_;
    UPoly r(F);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = F->add(a.coeff(i), b.coeff(i));
    r.trim();
    return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) {
    const Fq* F = a.F_ ? a.F_ : b.F_;
    UPoly r(F);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = F->sub(a.coeff(i), b.coeff(i));
    r.trim();
    return r;
}

UPoly UPoly::operator-() const {
    UPoly r(F_);
    r.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = F_->neg(c_[i]);
    return r;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    const Fq* F = a.F_ ? a.F_ : b.F_;
    if (a.is_zero() || b.is_zero()) return UPoly(F);
    UPoly r(F);
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            r.c_[i + j] = F->add(r.c_[i + j], F->mul(a.c_[i], b.c_[j]));
        }
    }
    r.trim();
    return r;
}

bool operator<(const UPoly& a, const UPoly& b) { return a.c_ < b.c_; }

std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw DomainError("divrem: division by zero polynomial");
    const Fq* F = b.field() ? b.field() : a.field();
    const std::size_t db = b.coeffs().size();
    if (a.is_zero() || a.coeffs().size() < db) return {UPoly::zero(F), a};
    std::vector<FqElem> rem = a.coeffs();
    std::vector<FqElem> quo(rem.size() - db + 1, 0);
    FqElem linv = F->inv(b.lead());
    for (std::size_t shift = quo.size(); shift-- > 0;) {
        FqElem top = rem[shift + db - 1];
        if (top == 0) continue;
        FqElem qc = F->mul(top, linv);
        quo[shift] = qc;
        for (std::size_t j = 0; j < db; ++j)
            rem[j + shift] = F->sub(rem[j + shift], F->mul(qc, b.coeffs()[j]));
    }
    return {UPoly(F, std::move(quo)), UPoly(F, std::move(rem))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a, y = b;
    while (!y.is_zero()) {
        UPoly r = divrem(x, y).second;
        x = y;
        y = r;
    }
    return x.monic();
}

UPoly pow(const UPoly& a, unsigned long long e) {
    UPoly r = UPoly::one(a.field());
    UPoly base = a;
    while (e > 0) {
        if (e & 1) r = r * base;
        if (e >>= 1) base = base * base;
    }
    return r;
}

std::vector<UPoly> monic_enum(const Fq* F, unsigned d) {
    unsigned long long count = 1;
    for (unsigned i = 0; i < d; ++i) count *= F->q();
    std::vector<UPoly> out;
    out.reserve(count);
    for (unsigned long long n = 0; n < count; ++n) {
        // c_{d-1} is the most significant digit of n in base q
        std::vector<FqElem> c(d + 1, 0);
        unsigned long long r = n;
        for (unsigned i = d; i-- > 0;) {
            unsigned long long place = 1;
            for (unsigned k = 0; k < i; ++k) place *= F->q();
            c[i] = static_cast<FqElem>(r / place);
            r %= place;
        }
        c[d] = F->one();
        out.emplace_back(F, std::move(c));
    }
    return out;
}

std::vector<UPoly> lower_enum(const Fq* F, unsigned d) {
    unsigned long long count = 1;
    for (unsigned i = 0; i < d; ++i) count *= F->q();
    std::vector<UPoly> out;
    out.reserve(count);
    for (unsigned long long n = 0; n < count; ++n) {
        std::vector<FqElem> c(d, 0);
        unsigned long long r = n;
        for (unsigned i = d; i-- > 0;) {
            unsigned long long place = 1;
            for (unsigned k = 0; k < i; ++k) place *= F->q();
            c[i] = static_cast<FqElem>(r / place);
            r %= place;
        }
        out.emplace_back(F, std::move(c));
    }
    return out;
}

std::string UPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!s.empty()) s += " + ";
        if (i == 0) {
            s += F_->to_string(c_[i]);
        } else {
            if (c_[i] != F_->one()) s += F_->to_string(c_[i]) + "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

UFrac::UFrac(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("UFrac: zero denominator");
    reduce();
}

void UFrac::reduce() {
    const Fq* F = den_.field();
    if (num_.is_zero()) {
        den_ = UPoly::one(F);
        return;
    }
    UPoly g = gcd(num_, den_);
    if (!g.is_one()) {
        num_ = divrem(num_, g).first;
        den_ = divrem(den_, g).first;
    }
    if (den_.lead() != F->one()) {
        FqElem linv = F->inv(den_.lead());
        num_ = num_.scaled(linv);
        den_ = den_.scaled(linv);
    }
}

std::optional<long> UFrac::v_inf() const {
    if (num_.is_zero()) return std::nullopt;
    return den_.degree().value() - num_.degree().value();
}

UFrac UFrac::inv() const {
    if (num_.is_zero()) throw DomainError("UFrac: inversion of zero");
    return UFrac(den_, num_);
}

UFrac UFrac::operator-() const {
    UFrac r = *this;
    r.num_ = -r.num_;
    return r;
}

UFrac operator+(const UFrac& a, const UFrac& b) {
    return UFrac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

UFrac operator-(const UFrac& a, const UFrac& b) {
    return UFrac(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

UFrac operator*(const UFrac& a, const UFrac& b) {
    if (a.is_zero() || b.is_zero()) return UFrac::zero(a.field() ? a.field() : b.field());
    return UFrac(a.num_ * b.num_, a.den_ * b.den_);
}

UFrac operator/(const UFrac& a, const UFrac& b) { return a * b.inv(); }

bool operator<(const UFrac& a, const UFrac& b) {
    if (a.num_ < b.num_) return true;
    if (b.num_ < a.num_) return false;
    return a.den_ < b.den_;
}

UFrac UFrac::scaled(FqElem c) const {
    UFrac r = *this;
    r.num_ = r.num_.scaled(c);
    if (r.num_.is_zero()) r.den_ = UPoly::one(field());
    return r;
}

UFrac UFrac::subst_theta_pow(unsigned long long e) const {
    return UFrac(num_.subst_theta_pow(e), den_.subst_theta_pow(e));
}

std::string UFrac::to_string(const std::string& var) const {
    if (den_.is_one()) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

UFrac pow(const UFrac& a, long long e) {
    if (e < 0) return pow(a.inv(), -e);
    UFrac r = UFrac::one(a.field());
    UFrac base = a;
    unsigned long long n = static_cast<unsigned long long>(e);
    while (n > 0) {
        if (n & 1) r = r * base;
        if (n >>= 1) base = base * base;
    }
    return r;
}

}  // namespace mzv
