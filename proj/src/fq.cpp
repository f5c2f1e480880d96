#include "mzv/fq.hpp"

#include <algorithm>

namespace mzv {

namespace {

using PPoly = std::vector<unsigned>;  // F_p coefficients, ascending, may have top zeros

void ptrim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmul(const PPoly& a, const PPoly& b, unsigned p) {
    if (a.empty() || b.empty()) return {};
    PPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    ptrim(c);
    return c;
}

// a mod b, b monic
PPoly pmod(PPoly a, const PPoly& b, unsigned p) {
    ptrim(a);
    while (a.size() >= b.size()) {
        unsigned lead = a.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            unsigned sub = (lead * b[i]) % p;
            a[i + shift] = (a[i + shift] + p - sub) % p;
        }
        ptrim(a);
    }
    return a;
}

bool pdivides(const PPoly& d, const PPoly& a, unsigned p) {
    return pmod(a, d, p).empty();
}

PPoly decode(unsigned r, unsigned p, unsigned len) {
    PPoly c(len, 0);
    for (unsigned i = 0; i < len; ++i) {
        c[i] = r % p;
        r /= p;
    }
    return c;
}

bool irreducible(const PPoly& f, unsigned p) {
    unsigned m = static_cast<unsigned>(f.size()) - 1;
    if (m == 0) return false;
    if (m == 1) return true;
    // trial division by every monic polynomial of degree 1 .. m/2
    for (unsigned deg = 1; 2 * deg <= m; ++deg) {
        unsigned count = 1;
        for (unsigned i = 0; i < deg; ++i) count *= p;
        for (unsigned r = 0; r < count; ++r) {
            PPoly d = decode(r, p, deg);
            d.resize(deg + 1, 0);
            d[deg] = 1;
            if (pdivides(d, f, p)) return false;
        }
    }
    return true;
}

}  // namespace

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<unsigned> default_modulus(unsigned p, unsigned m) {
    unsigned count = 1;
    for (unsigned i = 0; i < m; ++i) count *= p;
    for (unsigned r = 0; r < count; ++r) {
        PPoly f = decode(r, p, m);
        f.resize(m + 1, 0);
        f[m] = 1;
        if (irreducible(f, p)) return f;
    }
    throw InternalError("default_modulus: no irreducible polynomial found");
}

Fq::Fq(const FieldSpec& spec) : p_(spec.p), m_(spec.m) {
    if (!is_prime(p_)) throw DomainError("Fq: characteristic must be prime");
    if (m_ < 1) throw DomainError("Fq: extension degree must be >= 1");
    unsigned long long q = 1;
    for (unsigned i = 0; i < m_; ++i) {
        q *= p_;
        if (q > kMaxQ) throw DomainError("Fq: field too large for table arithmetic");
    }
    q_ = static_cast<unsigned>(q);
    if (m_ == 1) {
        modulus_.clear();
    } else if (spec.modulus.empty()) {
        modulus_ = default_modulus(p_, m_);
    } else {
        modulus_ = spec.modulus;
        for (auto& c : modulus_) c %= p_;
        if (modulus_.size() != m_ + 1 || modulus_.back() == 0)
            throw DomainError("Fq: modulus must have degree m");
        if (modulus_.back() != 1) {
            // normalize to a monic modulus; the quotient ring is unchanged
            unsigned lead = modulus_.back(), linv = 0;
            for (unsigned t = 1; t < p_; ++t)
                if ((lead * t) % p_ == 1) linv = t;
            for (auto& c : modulus_) c = (c * linv) % p_;
        }
        if (!irreducible(modulus_, p_)) throw DomainError("Fq: modulus is reducible");
    }
    build_tables();
}

void Fq::build_tables() {
    add_.assign(static_cast<std::size_t>(q_) * q_, 0);
    mul_.assign(static_cast<std::size_t>(q_) * q_, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);

    auto dec = [&](unsigned r) { return decode(r, p_, m_); };
    auto enc = [&](const PPoly& c) {
        unsigned r = 0;
        for (std::size_t i = c.size(); i-- > 0;) r = r * p_ + c[i];
        return static_cast<FqElem>(r);
    };

    for (unsigned a = 0; a < q_; ++a) {
        PPoly ca = dec(a);
        PPoly na(m_, 0);
        for (unsigned i = 0; i < m_; ++i) na[i] = (p_ - ca[i]) % p_;
        neg_[a] = enc(na);
        for (unsigned b = 0; b < q_; ++b) {
            PPoly cb = dec(b);
            PPoly s(m_, 0);
            for (unsigned i = 0; i < m_; ++i) s[i] = (ca[i] + cb[i]) % p_;
            add_[a * q_ + b] = enc(s);

            PPoly prod = pmul(ca, cb, p_);
            ptrim(prod);
            if (m_ > 1 && !prod.empty()) prod = pmod(prod, modulus_, p_);
            else if (m_ == 1 && !prod.empty()) prod = {prod[0] % p_};
            prod.resize(m_, 0);
            mul_[a * q_ + b] = enc(prod);
        }
    }
    for (unsigned a = 1; a < q_; ++a)
        for (unsigned b = 1; b < q_; ++b)
            if (mul_[a * q_ + b] == 1) inv_[a] = static_cast<FqElem>(b);
}

FqElem Fq::pow(FqElem a, unsigned long long e) const {
    FqElem r = one();
    FqElem base = a;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

FqElem Fq::from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<FqElem>(r);
}

std::shared_ptr<const Fq> Fq::make(unsigned q) {
    for (unsigned p = 2; p <= q; ++p) {
        if (!is_prime(p) || q % p != 0) continue;
        unsigned m = 0, v = q;
        while (v % p == 0) {
            v /= p;
            ++m;
        }
        if (v != 1) continue;
        FieldSpec spec;
        spec.p = p;
        spec.m = m;
        return std::make_shared<const Fq>(spec);
    }
    throw DomainError("Fq: q must be a prime power");
}

std::shared_ptr<const Fq> Fq::make(const FieldSpec& spec) {
    return std::make_shared<const Fq>(spec);
}

}  // namespace mzv
