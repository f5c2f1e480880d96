#pragma once

#include <string>
#include <vector>

#include "mzv/upoly.hpp"

namespace mzv {

// Truncated Laurent series in 1/theta, i.e. an element of F_q((1/theta))
// known on the theta-exponents top .. floor+1.  Everything at exponents
// <= floor is unknown; "zero to precision" is a statement about the
// tracked window only.  Precision floors propagate pessimistically
// through arithmetic.
class Laurent {
public:
    Laurent() = default;

    // all-unknown-below zero value tracked on (floor, floor+1]
    static Laurent zero(const Fq* F, long floorv);
    static Laurent one(const Fq* F, long floorv);
    static Laurent constant(const Fq* F, FqElem c, long floorv);

    // Expansion of an exact fraction, tracked down to exponent -N.
    static Laurent from_ufrac(const UFrac& x, long N);

    const Fq* field() const { return F_; }
    long top() const { return top_; }
    long floor() const { return floor_; }

    // coefficient of theta^e; exponents above top are known zeros
    FqElem coeff(long e) const {
        if (e > top_) return 0;
        if (e <= floor_) throw PrecisionError("Laurent: coefficient below precision floor");
        return c_[static_cast<std::size_t>(top_ - e)];
    }
    bool tracks(long e) const { return e > floor_; }

    bool is_zero_to_prec() const;
    // v_inf of the first nonzero tracked term; if all tracked terms vanish,
    // the floor-implied guarantee -floor (the value has v_inf >= -floor).
    long residual_valuation() const;
    // exponent of the leading nonzero tracked term, floor if none
    long top_exponent() const;

    Laurent operator-() const;
    Laurent scaled(FqElem c) const;
    friend Laurent operator+(const Laurent& a, const Laurent& b);
    friend Laurent operator-(const Laurent& a, const Laurent& b);
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    Laurent inv() const;

    std::string to_string() const;

private:
    const Fq* F_ = nullptr;
    long top_ = 0;    // exponent of c_[0]
    long floor_ = -1; // exponents <= floor_ unknown
    std::vector<FqElem> c_;  // c_[i] = coefficient of theta^(top_ - i)

    void normalize();
};

Laurent pow(const Laurent& a, unsigned long long e);

}  // namespace mzv
