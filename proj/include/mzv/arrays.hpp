#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mzv/poly.hpp"

namespace mzv {

// Finite weighted subset of the positive integers: a finitely supported
// multiplicity function n -> sigma_n.  Plain sets are the special case
// with all multiplicities <= 1.
class WeightedSubset {
public:
    WeightedSubset() = default;
    static WeightedSubset empty() { return {}; }
    static WeightedSubset plain(const std::vector<std::uint32_t>& indices);

    void set(std::uint32_t n, std::uint32_t mult);
    std::uint32_t mult(std::uint32_t n) const;
    const std::map<std::uint32_t, std::uint32_t>& entries() const { return m_; }

    std::uint32_t card() const;  // |Sigma| = sum of multiplicities
    std::vector<std::uint32_t> support() const;
    bool is_empty() const { return m_.empty(); }
    bool is_plain() const;

    bool subset_of(const WeightedSubset& other) const;  // j_n <= sigma_n for all n
    friend WeightedSubset operator|(const WeightedSubset& a, const WeightedSubset& b);  // union: add mults
    WeightedSubset minus(const WeightedSubset& j) const;  // componentwise, requires j subset

    // All subsets J <= Sigma, lexicographic in (index, multiplicity).
    std::vector<WeightedSubset> subsets() const;

    friend bool operator==(const WeightedSubset& a, const WeightedSubset& b) { return a.m_ == b.m_; }
    friend bool operator<(const WeightedSubset& a, const WeightedSubset& b) { return a.m_ < b.m_; }

    std::string to_string() const;  // {1^2,3} grammar, {} for empty

private:
    std::map<std::uint32_t, std::uint32_t> m_;  // index -> multiplicity > 0
};

// Admissible array: ordered slots (Sigma_i | s_i) with every s_i >= 1.
// The empty array is allowed and denotes the unit.
class AdmissibleArray {
public:
    AdmissibleArray() = default;
    explicit AdmissibleArray(std::vector<std::pair<WeightedSubset, std::uint32_t>> slots);

    static AdmissibleArray depth1(WeightedSubset s, std::uint32_t w);

    const std::vector<std::pair<WeightedSubset, std::uint32_t>>& slots() const { return slots_; }
    std::size_t depth() const { return slots_.size(); }
    bool is_empty() const { return slots_.empty(); }
    WeightedSubset type() const;
    std::uint64_t weight() const;

    AdmissibleArray tail() const;  // drop the first slot
    AdmissibleArray prepended(const WeightedSubset& s, std::uint32_t w) const;

    friend bool operator==(const AdmissibleArray& a, const AdmissibleArray& b) { return a.slots_ == b.slots_; }
    friend bool operator<(const AdmissibleArray& a, const AdmissibleArray& b) { return a.slots_ < b.slots_; }

    std::string to_string() const;  // "({1}|1)({}|2)"

private:
    std::vector<std::pair<WeightedSubset, std::uint32_t>> slots_;
};

// Grammar: array := group+ ; group := "(" ws "|" int ")" ;
//          ws := "{" (item ("," item)*)? "}" ; item := int ("^" int)?
// The empty string parses to the empty array.
AdmissibleArray array_parse(const std::string& text);

// Formal F_q-linear combination of admissible arrays; zero coefficients
// are never stored, additions cancel eagerly.
class ArrayCombo {
public:
    ArrayCombo() = default;
    explicit ArrayCombo(const Fq* F) : F_(F) {}

    static ArrayCombo single(const Fq* F, AdmissibleArray a, FqElem c = 1);

    const Fq* field() const { return F_; }
    const std::map<AdmissibleArray, FqElem>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const AdmissibleArray& a, FqElem c);
    void add_combo(const ArrayCombo& other, FqElem scale);
    ArrayCombo scaled(FqElem c) const;
    // prepend a slot to every member array
    ArrayCombo prepended(const WeightedSubset& s, std::uint32_t w) const;

    friend bool operator==(const ArrayCombo& a, const ArrayCombo& b) { return a.terms_ == b.terms_; }

    std::string to_string() const;

private:
    const Fq* F_ = nullptr;
    std::map<AdmissibleArray, FqElem> terms_;
};

// C(a, b) mod p by Lucas' theorem on base-p digits; a, b >= 0.
unsigned lucas_binom(unsigned long long a, unsigned long long b, unsigned p);

// Product of per-coordinate binomials C(sigma_n, j_n) reduced into F_p c F_q.
FqElem binom_ws(const Fq* F, const WeightedSubset& sigma, const WeightedSubset& j);

// delta^{Sigma,j}_{J,s} = (-1)^{|J|+s} C(Sigma,J) C(j-1, s-1)
FqElem delta_coeff(const Fq* F, const WeightedSubset& sigma, const WeightedSubset& j,
                   std::uint32_t jj, std::uint32_t s);

// Delta: same with sign (-1)^{|J|+s-1}, gated by |J| = jj (mod q-1);
// the gate is vacuous when q = 2.
FqElem delta_gate_coeff(const Fq* F, const WeightedSubset& sigma, const WeightedSubset& j,
                        std::uint32_t jj, std::uint32_t s);

// sum over alpha in F_q^x of alpha^n: -1 when (q-1) | n (including n = 0),
// else 0.
FqElem unit_sum(const Fq* F, unsigned long long n);

// chi_Sigma(a) = prod_n a(t_n)^{sigma_n}, a polynomial in the t-variables
// of the support with F_q coefficients.
TPoly char_eval(const WeightedSubset& sigma, const UPoly& a);

// theta-polynomial read in the variable v
TPoly subst_theta(const UPoly& a, Var v);

}  // namespace mzv
