#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mzv/upoly.hpp"

namespace mzv {

// Non-theta indeterminates: the families t_i, X_i, T_i and the formal
// symbol Z (a stand-in for zeta_A(1)).  theta itself lives inside the
// UFrac coefficients.  Family order t < X < T < Z, indices ascending,
// matches the canonical variable order (theta first, then these).
enum class VarFam : std::uint8_t { t = 0, X = 1, T = 2, Z = 3 };

struct Var {
    VarFam fam = VarFam::t;
    std::uint32_t idx = 1;

    friend bool operator==(const Var& a, const Var& b) { return a.fam == b.fam && a.idx == b.idx; }
    friend bool operator<(const Var& a, const Var& b) {
        if (a.fam != b.fam) return a.fam < b.fam;
        return a.idx < b.idx;
    }
    std::string name() const;
};

inline Var var_t(std::uint32_t i) { return Var{VarFam::t, i}; }
inline Var var_x(std::uint32_t i) { return Var{VarFam::X, i}; }
inline Var var_cap_t(std::uint32_t i) { return Var{VarFam::T, i}; }
inline Var var_z() { return Var{VarFam::Z, 1}; }

// Sorted (variable, exponent) pairs, exponents > 0; {} is the unit monomial.
using Monomial = std::vector<std::pair<Var, std::uint64_t>>;

Monomial mono_one();
Monomial mono_var(Var v, std::uint64_t e = 1);
Monomial mono_mul(const Monomial& a, const Monomial& b);
std::uint64_t mono_total_degree(const Monomial& a);
std::uint64_t mono_degree_in(const Monomial& a, Var v);
std::string mono_to_string(const Monomial& a);

// Graded lexicographic order with priority theta > t_1 > t_2 > ... > X_1 > ...
// (theta never appears in a Monomial, so the comparison starts at t_1).
bool mono_order_less(const Monomial& a, const Monomial& b);

// Sparse multivariate polynomial in the t/X/T/Z indeterminates with
// coefficients in K = F_q(theta).  Coefficients are canonical (reduced,
// monic denominator), so structural equality is equality.
class TPoly {
public:
    TPoly() = default;
    explicit TPoly(const Fq* F) : F_(F) {}

    static TPoly zero(const Fq* F) { return TPoly(F); }
    static TPoly one(const Fq* F) { return constant(UFrac::one(F)); }
    static TPoly constant(const UFrac& c);
    static TPoly variable(const Fq* F, Var v, std::uint64_t e = 1);
    static TPoly monomial(const UFrac& c, Monomial m);
    // theta-polynomial u reinterpreted in the variable v (theta := v)
    static TPoly from_upoly_in_var(const UPoly& u, Var v);

    const Fq* field() const { return F_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, UFrac>& terms() const { return terms_; }
    UFrac coeff(const Monomial& m) const;
    bool is_constant() const;
    UFrac constant_value() const;  // coefficient of the unit monomial

    std::uint64_t degree_in(Var v) const;
    std::uint64_t min_degree_in(Var v) const;
    std::vector<Var> vars() const;

    void add_term(const Monomial& m, const UFrac& c);

    TPoly operator-() const;
    friend TPoly operator+(const TPoly& a, const TPoly& b);
    friend TPoly operator-(const TPoly& a, const TPoly& b);
    friend TPoly operator*(const TPoly& a, const TPoly& b);
    friend bool operator==(const TPoly& a, const TPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const TPoly& a, const TPoly& b) { return !(a == b); }

    TPoly scaled(const UFrac& c) const;
    TPoly scaled(FqElem c) const;

    // v := theta^e, exactly
    TPoly subst_theta_pow(Var v, unsigned long long e) const;
    // substitute every variable by a theta power; result is a scalar
    UFrac eval_theta_pows(const std::map<Var, unsigned long long>& assignment) const;

    // leading (monomial, coefficient) under the canonical order
    std::pair<Monomial, UFrac> leading() const;

    std::string to_string() const;

private:
    const Fq* F_ = nullptr;
    std::map<Monomial, UFrac> terms_;
};

TPoly pow(const TPoly& a, unsigned long long e);

// Fraction of multivariate polynomials.  Stored unreduced (no multivariate
// gcd); the denominator's leading coefficient under the canonical monomial
// order is normalized to 1, and equality is by cross-multiplication.
class TRat {
public:
    TRat() = default;
    explicit TRat(TPoly num) : num_(std::move(num)) { den_ = TPoly::one(num_.field()); }
    TRat(TPoly num, TPoly den);

    static TRat zero(const Fq* F) { return TRat(TPoly::zero(F)); }
    static TRat one(const Fq* F) { return TRat(TPoly::one(F)); }

    const Fq* field() const { return num_.field(); }
    const TPoly& num() const { return num_; }
    const TPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    TRat inv() const;
    TRat operator-() const;
    friend TRat operator+(const TRat& a, const TRat& b);
    friend TRat operator-(const TRat& a, const TRat& b);
    friend TRat operator*(const TRat& a, const TRat& b);
    friend TRat operator/(const TRat& a, const TRat& b);

    // cross-multiplication equality, no gcd computation
    bool eq(const TRat& other) const;

    // v := theta^e; PoleError if the denominator vanishes identically
    TRat subst_theta_pow(Var v, unsigned long long e) const;

    std::string to_string() const;

private:
    TPoly num_, den_;
    void normalize();
};

}  // namespace mzv
