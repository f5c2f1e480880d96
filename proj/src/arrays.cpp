#include "mzv/arrays.hpp"

#include <algorithm>
#include <cctype>

namespace mzv {

WeightedSubset WeightedSubset::plain(const std::vector<std::uint32_t>& indices) {
    WeightedSubset s;
    for (auto n : indices) s.set(n, s.mult(n) + 1);
    return s;
}

void WeightedSubset::set(std::uint32_t n, std::uint32_t mult) {
    if (n == 0) throw DomainError("WeightedSubset: indices are positive integers");
    if (mult == 0) m_.erase(n);
    else m_[n] = mult;
}

std::uint32_t WeightedSubset::mult(std::uint32_t n) const {
    auto it = m_.find(n);
    return it == m_.end() ? 0 : it->second;
}

std::uint32_t WeightedSubset::card() const {
    std::uint32_t c = 0;
    for (const auto& [n, s] : m_) c += s;
    return c;
}

std::vector<std::uint32_t> WeightedSubset::support() const {
    std::vector<std::uint32_t> r;
    for (const auto& [n, s] : m_) r.push_back(n);
    return r;
}

bool WeightedSubset::is_plain() const {
    return std::all_of(m_.begin(), m_.end(), [](const auto& e) { return e.second <= 1; });
}

bool WeightedSubset::subset_of(const WeightedSubset& other) const {
    for (const auto& [n, s] : m_)
        if (s > other.mult(n)) return false;
    return true;
}

WeightedSubset operator|(const WeightedSubset& a, const WeightedSubset& b) {
    WeightedSubset r = a;
    for (const auto& [n, s] : b.m_) r.set(n, r.mult(n) + s);
    return r;
}

WeightedSubset WeightedSubset::minus(const WeightedSubset& j) const {
    if (!j.subset_of(*this)) throw DomainError("WeightedSubset: minus requires a subset");
    WeightedSubset r;
    for (const auto& [n, s] : m_) {
        std::uint32_t rest = s - j.mult(n);
        if (rest > 0) r.set(n, rest);
    }
    return r;
}

std::vector<WeightedSubset> WeightedSubset::subsets() const {
    std::vector<std::uint32_t> idx = support();
    std::vector<WeightedSubset> out;
    std::vector<std::uint32_t> pick(idx.size(), 0);
    while (true) {
        WeightedSubset j;
        for (std::size_t i = 0; i < idx.size(); ++i)
            if (pick[i] > 0) j.set(idx[i], pick[i]);
        out.push_back(j);
        // odometer, last coordinate fastest
        std::size_t i = idx.size();
        while (i-- > 0) {
            if (pick[i] < mult(idx[i])) {
                ++pick[i];
                std::fill(pick.begin() + static_cast<std::ptrdiff_t>(i) + 1, pick.end(), 0);
                break;
            }
            if (i == 0) return out;
        }
        if (idx.empty()) return out;
    }
}

std::string WeightedSubset::to_string() const {
    std::string s = "{";
    bool first = true;
    for (const auto& [n, mult] : m_) {
        if (!first) s += ",";
        first = false;
        s += std::to_string(n);
        if (mult > 1) s += "^" + std::to_string(mult);
    }
    return s + "}";
}

AdmissibleArray::AdmissibleArray(std::vector<std::pair<WeightedSubset, std::uint32_t>> slots)
    : slots_(std::move(slots)) {
    for (const auto& [sig, s] : slots_)
        if (s < 1) throw DomainError("AdmissibleArray: exponents must be >= 1");
}

AdmissibleArray AdmissibleArray::depth1(WeightedSubset s, std::uint32_t w) {
    return AdmissibleArray({{std::move(s), w}});
}

WeightedSubset AdmissibleArray::type() const {
    WeightedSubset t;
    for (const auto& [sig, s] : slots_) t = t | sig;
    return t;
}

std::uint64_t AdmissibleArray::weight() const {
    std::uint64_t w = 0;
    for (const auto& [sig, s] : slots_) w += s;
    return w;
}

AdmissibleArray AdmissibleArray::tail() const {
    if (slots_.empty()) throw DomainError("AdmissibleArray: tail of the empty array");
    return AdmissibleArray({slots_.begin() + 1, slots_.end()});
}

AdmissibleArray AdmissibleArray::prepended(const WeightedSubset& s, std::uint32_t w) const {
    std::vector<std::pair<WeightedSubset, std::uint32_t>> v;
    v.reserve(slots_.size() + 1);
    v.emplace_back(s, w);
    v.insert(v.end(), slots_.begin(), slots_.end());
    return AdmissibleArray(std::move(v));
}

std::string AdmissibleArray::to_string() const {
    std::string s;
    for (const auto& [sig, w] : slots_)
        s += "(" + sig.to_string() + "|" + std::to_string(w) + ")";
    return s;
}

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    void expect(char c) {
        skip_ws();
        if (pos >= s.size() || s[pos] != c)
            throw ParseError("array: expected '" + std::string(1, c) + "' at position " +
                             std::to_string(pos) + " in \"" + s + "\"");
        ++pos;
    }
    std::uint64_t integer() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw ParseError("array: expected an integer at position " + std::to_string(pos) +
                             " in \"" + s + "\"");
        std::uint64_t v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + static_cast<std::uint64_t>(s[pos] - '0');
            ++pos;
        }
        return v;
    }
};

WeightedSubset parse_ws(Cursor& c) {
    c.expect('{');
    WeightedSubset w;
    if (c.peek() == '}') {
        c.expect('}');
        return w;
    }
    while (true) {
        std::uint64_t n = c.integer();
        if (n == 0) throw ParseError("array: subset indices must be >= 1");
        std::uint64_t mult = 1;
        if (c.peek() == '^') {
            c.expect('^');
            mult = c.integer();
            if (mult == 0) throw ParseError("array: multiplicities must be >= 1");
        }
        w.set(static_cast<std::uint32_t>(n), w.mult(static_cast<std::uint32_t>(n)) +
                                                 static_cast<std::uint32_t>(mult));
        if (c.peek() == ',') {
            c.expect(',');
            continue;
        }
        break;
    }
    c.expect('}');
    return w;
}

}  // namespace

AdmissibleArray array_parse(const std::string& text) {
    Cursor c{text};
    std::vector<std::pair<WeightedSubset, std::uint32_t>> slots;
    while (!c.done()) {
        c.expect('(');
        WeightedSubset w = parse_ws(c);
        c.expect('|');
        std::uint64_t s = c.integer();
        if (s == 0) throw ParseError("array: slot exponent must be >= 1, got 0");
        c.expect(')');
        slots.emplace_back(std::move(w), static_cast<std::uint32_t>(s));
    }
    return AdmissibleArray(std::move(slots));
}

ArrayCombo ArrayCombo::single(const Fq* F, AdmissibleArray a, FqElem c) {
    ArrayCombo r(F);
    r.add(a, c);
    return r;
}

void ArrayCombo::add(const AdmissibleArray& a, FqElem c) {
    if (c == 0) return;
    auto it = terms_.find(a);
    if (it == terms_.end()) {
        terms_.emplace(a, c);
        return;
    }
    it->second = F_->add(it->second, c);
    if (it->second == 0) terms_.erase(it);
}

void ArrayCombo::add_combo(const ArrayCombo& other, FqElem scale) {
    for (const auto& [a, c] : other.terms_) add(a, F_->mul(c, scale));
}

ArrayCombo ArrayCombo::scaled(FqElem c) const {
    ArrayCombo r(F_);
    for (const auto& [a, v] : terms_) r.add(a, F_->mul(v, c));
    return r;
}

ArrayCombo ArrayCombo::prepended(const WeightedSubset& s, std::uint32_t w) const {
    ArrayCombo r(F_);
    for (const auto& [a, v] : terms_) r.add(a.prepended(s, w), v);
    return r;
}

std::string ArrayCombo::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [a, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += std::to_string(c) + "*" + (a.is_empty() ? "()" : a.to_string());
    }
    return s;
}

unsigned lucas_binom(unsigned long long a, unsigned long long b, unsigned p) {
    // one digit pair at a time; C(x, y) with x, y < p computed directly
    unsigned result = 1;
    while (b > 0 || a > 0) {
        unsigned da = static_cast<unsigned>(a % p), db = static_cast<unsigned>(b % p);
        if (db > da) return 0;
        unsigned num = 1, den = 1;
        for (unsigned i = 0; i < db; ++i) {
            num = (num * ((da - i) % p)) % p;
            den = (den * ((i + 1) % p)) % p;
        }
        unsigned dinv = 1;
        for (unsigned t = 1; t < p; ++t)
            if ((den * t) % p == 1) dinv = t;
        result = (result * ((num * dinv) % p)) % p;
        a /= p;
        b /= p;
    }
    return result;
}

FqElem binom_ws(const Fq* F, const WeightedSubset& sigma, const WeightedSubset& j) {
    if (!j.subset_of(sigma)) throw DomainError("binom_ws: J is not a subset of Sigma");
    unsigned r = 1;
    for (const auto& [n, jm] : j.entries())
        r = (r * lucas_binom(sigma.mult(n), jm, F->p())) % F->p();
    return F->from_int(r);
}

FqElem delta_coeff(const Fq* F, const WeightedSubset& sigma, const WeightedSubset& j,
                   std::uint32_t jj, std::uint32_t s) {
    if (jj < 1 || s < 1) throw DomainError("delta: indices must be positive");
    FqElem b = binom_ws(F, sigma, j);
    FqElem binom2 = F->from_int(lucas_binom(jj - 1, s - 1, F->p()));
    return F->mul(F->sign(j.card() + s), F->mul(b, binom2));
}

FqElem delta_gate_coeff(const Fq* F, const WeightedSubset& sigma, const WeightedSubset& j,
                        std::uint32_t jj, std::uint32_t s) {
    if (jj < 1 || s < 1) throw DomainError("Delta: indices must be positive");
    unsigned qm1 = F->q() - 1;
    if (qm1 > 1 && (j.card() % qm1) != (jj % qm1)) return 0;
    FqElem b = binom_ws(F, sigma, j);
    FqElem binom2 = F->from_int(lucas_binom(jj - 1, s - 1, F->p()));
    return F->mul(F->sign(j.card() + s + 1), F->mul(b, binom2));
}

FqElem unit_sum(const Fq* F, unsigned long long n) {
    unsigned qm1 = F->q() - 1;
    if (qm1 == 0) throw InternalError("unit_sum: empty unit group");
    if (n % qm1 == 0) return F->neg(F->one());
    return F->zero();
}

TPoly subst_theta(const UPoly& a, Var v) { return TPoly::from_upoly_in_var(a, v); }

TPoly char_eval(const WeightedSubset& sigma, const UPoly& a) {
    TPoly r = TPoly::one(a.field());
    for (const auto& [n, mult] : sigma.entries())
        r = r * pow(subst_theta(a, var_t(n)), mult);
    return r;
}

}  // namespace mzv
