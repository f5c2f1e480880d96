#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mzv/fq.hpp"

namespace mzv {

// Degree of a polynomial; the degree of the zero polynomial is the
// distinguished value -infinity, below every finite degree.
class Degree {
public:
    static Degree neg_inf() { return Degree(); }
    static Degree of(long v) { return Degree(v); }

    bool finite() const { return v_.has_value(); }
    long value() const {
        if (!v_) throw DomainError("Degree: value of deg 0");
        return *v_;
    }
    long value_or(long fallback) const { return v_.value_or(fallback); }

    friend bool operator==(const Degree& a, const Degree& b) { return a.v_ == b.v_; }
    friend bool operator<(const Degree& a, const Degree& b) {
        if (!a.v_) return b.v_.has_value();
        if (!b.v_) return false;
        return *a.v_ < *b.v_;
    }
    friend bool operator<=(const Degree& a, const Degree& b) { return a < b || a == b; }
    friend bool operator>(const Degree& a, const Degree& b) { return b < a; }
    friend bool operator>=(const Degree& a, const Degree& b) { return b <= a; }

    friend Degree operator+(const Degree& a, const Degree& b) {
        if (!a.v_ || !b.v_) return neg_inf();
        return of(*a.v_ + *b.v_);
    }

private:
    Degree() = default;
    explicit Degree(long v) : v_(v) {}
    std::optional<long> v_;
};

// Dense univariate polynomial over F_q in the indeterminate theta.
// Coefficients ascending by exponent, no stored top zeros; an empty
// coefficient vector is the zero polynomial.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(const Fq* F) : F_(F) {}
    UPoly(const Fq* F, std::vector<FqElem> coeffs) : F_(F), c_(std::move(coeffs)) { trim(); }

    static UPoly zero(const Fq* F) { return UPoly(F); }
    static UPoly one(const Fq* F) { return constant(F, F->one()); }
    static UPoly constant(const Fq* F, FqElem c);
    static UPoly theta_pow(const Fq* F, unsigned long long e);

    const Fq* field() const { return F_; }
    const std::vector<FqElem>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == F_->one(); }
    Degree degree() const { return c_.empty() ? Degree::neg_inf() : Degree::of(static_cast<long>(c_.size()) - 1); }
    FqElem coeff(std::size_t e) const { return e < c_.size() ? c_[e] : 0; }
    FqElem lead() const { return c_.empty() ? 0 : c_.back(); }

    UPoly scaled(FqElem c) const;
    UPoly monic() const;  // unit-normalized; zero stays zero
    UPoly shifted(unsigned long long e) const;  // * theta^e
    UPoly subst_theta_pow(unsigned long long e) const;  // theta := theta^e

    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    UPoly operator-() const;
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }
    friend bool operator<(const UPoly& a, const UPoly& b);  // for use as a map key

    std::string to_string(const std::string& var = "θ") const;

private:
    const Fq* F_ = nullptr;
    std::vector<FqElem> c_;
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b);
UPoly gcd(const UPoly& a, const UPoly& b);  // monic, gcd(0,0) = 0
UPoly pow(const UPoly& a, unsigned long long e);

// All monic polynomials of degree d, ordered lexicographically by the
// coefficient tuple (c_{d-1}, ..., c_0).
std::vector<UPoly> monic_enum(const Fq* F, unsigned d);

// All q^d polynomials of degree < d (including 0), same ordering.
std::vector<UPoly> lower_enum(const Fq* F, unsigned d);

// Reduced fraction of theta-polynomials: gcd(num, den) = 1 and den monic.
// This canonical form makes structural equality coincide with equality in
// the fraction field.
class UFrac {
public:
    UFrac() = default;
    explicit UFrac(UPoly num) : num_(std::move(num)), den_(UPoly::one(num_.field())) {}
    UFrac(UPoly num, UPoly den);

    static UFrac zero(const Fq* F) { return UFrac(UPoly::zero(F)); }
    static UFrac one(const Fq* F) { return UFrac(UPoly::one(F)); }
    static UFrac constant(const Fq* F, FqElem c) { return UFrac(UPoly::constant(F, c)); }

    const Fq* field() const { return num_.field(); }
    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_poly() const { return den_.is_one(); }

    // v_inf(num/den) = deg den - deg num; nullopt for the zero fraction.
    std::optional<long> v_inf() const;

    UFrac inv() const;
    UFrac operator-() const;
    friend UFrac operator+(const UFrac& a, const UFrac& b);
    friend UFrac operator-(const UFrac& a, const UFrac& b);
    friend UFrac operator*(const UFrac& a, const UFrac& b);
    friend UFrac operator/(const UFrac& a, const UFrac& b);
    friend bool operator==(const UFrac& a, const UFrac& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const UFrac& a, const UFrac& b) { return !(a == b); }
    friend bool operator<(const UFrac& a, const UFrac& b);

    UFrac scaled(FqElem c) const;
    UFrac subst_theta_pow(unsigned long long e) const;
    std::string to_string(const std::string& var = "θ") const;

private:
    UPoly num_, den_;
    void reduce();
};

UFrac pow(const UFrac& a, long long e);

}  // namespace mzv
