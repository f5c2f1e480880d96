#include "mzv/laurent.hpp"

#include <algorithm>

namespace mzv {

void Laurent::normalize() {
    // trim known-zero leading terms, keeping at least one tracked slot
    while (c_.size() > 1 && c_.front() == 0) {
        c_.erase(c_.begin());
        --top_;
    }
    if (c_.empty()) {
        c_.push_back(0);
        top_ = floor_ + 1;
    }
    if (top_ <= floor_) throw InternalError("Laurent: empty tracked window");
}

Laurent Laurent::zero(const Fq* F, long floorv) {
    Laurent r;
    r.F_ = F;
    r.floor_ = floorv;
    r.top_ = floorv + 1;
    r.c_.assign(1, 0);
    return r;
}

Laurent Laurent::constant(const Fq* F, FqElem c, long floorv) {
    Laurent r = zero(F, floorv);
    if (c != 0 && 0 > floorv) {
        r.top_ = 0;
        r.c_.assign(static_cast<std::size_t>(0 - floorv), 0);
        r.c_[0] = c;
    }
    return r;
}

Laurent Laurent::one(const Fq* F, long floorv) { return constant(F, F->one(), floorv); }

Laurent Laurent::from_ufrac(const UFrac& x, long N) {
    const Fq* F = x.field();
    long floorv = -N - 1;
    if (x.is_zero()) return zero(F, floorv);
    long dn = x.num().degree().value();
    long dd = x.den().degree().value();
    long top = dn - dd;
    if (top <= floorv) return zero(F, floorv);
    std::size_t len = static_cast<std::size_t>(top - floorv);
    // power series division in u = 1/theta on reversed coefficients
    auto rev = [&](const UPoly& p, long deg) {
        std::vector<FqElem> r(len, 0);
        for (std::size_t i = 0; i < len; ++i) {
            long e = deg - static_cast<long>(i);
            if (e >= 0) r[i] = p.coeff(static_cast<std::size_t>(e));
        }
        return r;
    };
    std::vector<FqElem> a = rev(x.num(), dn), b = rev(x.den(), dd);
    FqElem binv = F->inv(b[0]);
    std::vector<FqElem> out(len, 0);
    for (std::size_t k = 0; k < len; ++k) {
        FqElem acc = a[k];
        for (std::size_t i = 1; i <= k; ++i)
            acc = F->sub(acc, F->mul(b[i], out[k - i]));
        out[k] = F->mul(acc, binv);
    }
    Laurent r;
    r.F_ = F;
    r.top_ = top;
    r.floor_ = floorv;
    r.c_ = std::move(out);
    r.normalize();
    return r;
}

bool Laurent::is_zero_to_prec() const {
    return std::all_of(c_.begin(), c_.end(), [](FqElem v) { return v == 0; });
}

long Laurent::residual_valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return -(top_ - static_cast<long>(i));
    return -floor_;
}

long Laurent::top_exponent() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return top_ - static_cast<long>(i);
    return floor_;
}

Laurent Laurent::operator-() const {
    Laurent r = *this;
    for (auto& v : r.c_) v = F_->neg(v);
    return r;
}

Laurent Laurent::scaled(FqElem c) const {
    Laurent r = *this;
    for (auto& v : r.c_) v = F_->mul(v, c);
    r.normalize();
    return r;
}

Laurent operator+(const Laurent& a, const Laurent& b) {
    const Fq* F = a.F_ ? a.F_ : b.F_;
    long floorv = std::max(a.floor_, b.floor_);
    long top = std::max({a.top_, b.top_, floorv + 1});
    Laurent r;
    r.F_ = F;
    r.top_ = top;
    r.floor_ = floorv;
    r.c_.assign(static_cast<std::size_t>(top - floorv), 0);
    for (long e = top; e > floorv; --e) {
        FqElem va = (e > a.top_) ? 0 : a.coeff(e);
        FqElem vb = (e > b.top_) ? 0 : b.coeff(e);
        r.c_[static_cast<std::size_t>(top - e)] = F->add(va, vb);
    }
    r.normalize();
    return r;
}

Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

Laurent operator*(const Laurent& a, const Laurent& b) {
    const Fq* F = a.F_ ? a.F_ : b.F_;
    // unknown tails enter at floor_a + topexp_b and floor_b + topexp_a
    long floorv = std::max(a.floor_ + b.top_exponent(), b.floor_ + a.top_exponent());
    long top = a.top_ + b.top_;
    if (top <= floorv) return Laurent::zero(F, floorv);
    Laurent r;
    r.F_ = F;
    r.top_ = top;
    r.floor_ = floorv;
    r.c_.assign(static_cast<std::size_t>(top - floorv), 0);
    for (long ea = a.top_; ea > a.floor_; --ea) {
        FqElem va = a.coeff(ea);
        if (va == 0) continue;
        for (long eb = b.top_; eb > b.floor_; --eb) {
            FqElem vb = b.coeff(eb);
            if (vb == 0) continue;
            long e = ea + eb;
            if (e <= floorv) continue;
            auto& slot = r.c_[static_cast<std::size_t>(top - e)];
            slot = F->add(slot, F->mul(va, vb));
        }
    }
    r.normalize();
    return r;
}

Laurent Laurent::inv() const {
    long T = top_exponent();
    if (T == floor_) throw PrecisionError("Laurent: inversion of a value with no tracked nonzero term");
    // x = c theta^T (1 + ...); relative precision M = T - floor carries over
    std::size_t M = static_cast<std::size_t>(T - floor_);
    std::vector<FqElem> a(M, 0);
    for (std::size_t i = 0; i < M; ++i) a[i] = coeff(T - static_cast<long>(i));
    FqElem linv = F_->inv(a[0]);
    std::vector<FqElem> out(M, 0);
    for (std::size_t k = 0; k < M; ++k) {
        FqElem acc = (k == 0) ? F_->one() : 0;
        for (std::size_t i = 1; i <= k; ++i)
            acc = F_->sub(acc, F_->mul(a[i], out[k - i]));
        out[k] = F_->mul(acc, linv);
    }
    Laurent r;
    r.F_ = F_;
    r.top_ = -T;
    r.floor_ = -T - static_cast<long>(M);  // = floor - 2T
    r.c_ = std::move(out);
    r.normalize();
    return r;
}

Laurent pow(const Laurent& a, unsigned long long e) {
    if (e == 0) return Laurent::one(a.field(), a.floor());
    Laurent r = a;
    Laurent base = a;
    --e;
    while (e > 0) {
        if (e & 1) r = r * base;
        if (e >>= 1) base = base * base;
    }
    return r;
}

std::string Laurent::to_string() const {
    std::string s;
    for (long e = top_; e > floor_; --e) {
        FqElem v = coeff(e);
        if (v == 0) continue;
        if (!s.empty()) s += " + ";
        if (e == 0) {
            s += F_->to_string(v);
        } else {
            if (v != F_->one()) s += F_->to_string(v) + "*";
            s += "θ^" + std::to_string(e);
        }
    }
    if (s.empty()) s = "0";
    s += " + O(θ^" + std::to_string(floor_) + ")";
    return s;
}

}  // namespace mzv
