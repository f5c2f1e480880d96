#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "mzv/errors.hpp"

namespace mzv {

// Element of F_q, encoded as an index in [0, q).  For q = p^m the residue
// c_0 + c_1 x + ... + c_{m-1} x^{m-1} (mod the chosen modulus) is encoded
// as the integer c_0 + c_1 p + ... + c_{m-1} p^{m-1}; in particular the
// prime subfield F_p occupies the indices 0 .. p-1.
using FqElem = std::uint16_t;

// Description of the coefficient field F_q, q = p^m.  The modulus is the
// list of F_p coefficients of an irreducible degree-m polynomial over F_p,
// constant term first; it is ignored (and may be empty) when m == 1, and
// chosen automatically when m > 1 and none is supplied.
struct FieldSpec {
    unsigned p = 3;
    unsigned m = 1;
    std::vector<unsigned> modulus;
};

// Immutable arithmetic context for F_q.  All operations are table driven,
// so the field size is capped (far above anything this library needs).
class Fq {
public:
    static constexpr unsigned kMaxQ = 512;

    explicit Fq(const FieldSpec& spec);

    // F_q with q = p^m for the smallest factorization of q, auto modulus.
    static std::shared_ptr<const Fq> make(unsigned q);
    static std::shared_ptr<const Fq> make(const FieldSpec& spec);

    unsigned p() const { return p_; }
    unsigned m() const { return m_; }
    unsigned q() const { return q_; }
    const std::vector<unsigned>& modulus() const { return modulus_; }

    FqElem zero() const { return 0; }
    FqElem one() const { return 1; }

    FqElem add(FqElem a, FqElem b) const { return add_[a * q_ + b]; }
    FqElem sub(FqElem a, FqElem b) const { return add_[a * q_ + neg_[b]]; }
    FqElem mul(FqElem a, FqElem b) const { return mul_[a * q_ + b]; }
    FqElem neg(FqElem a) const { return neg_[a]; }

    FqElem inv(FqElem a) const {
        if (a == 0) throw DomainError("Fq: inversion of zero");
        return inv_[a];
    }
    FqElem div(FqElem a, FqElem b) const { return mul(a, inv(b)); }

    FqElem pow(FqElem a, unsigned long long e) const;

    // (-1)^n, which is 1 in characteristic 2.
    FqElem sign(unsigned long long n) const { return (n % 2 == 0) ? one() : neg_[one()]; }

    // Image of an integer under Z -> F_p c F_q.
    FqElem from_int(long long v) const;

    std::string to_string(FqElem a) const { return std::to_string(a); }

    bool same(const Fq& other) const { return this == &other; }

private:
    unsigned p_ = 0, m_ = 0, q_ = 0;
    std::vector<unsigned> modulus_;
    std::vector<FqElem> add_, mul_, neg_, inv_;

    void build_tables();
};

bool is_prime(unsigned n);

// Lexicographically smallest monic irreducible polynomial of degree m over
// F_p, as ascending coefficients (size m + 1).
std::vector<unsigned> default_modulus(unsigned p, unsigned m);

}  // namespace mzv
