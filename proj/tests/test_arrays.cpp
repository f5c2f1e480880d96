#include "doctest.h"

#include "mzv/arrays.hpp"

using namespace mzv;

TEST_CASE("weighted subsets") {
    WeightedSubset a = WeightedSubset::plain({1, 2});
    WeightedSubset b = WeightedSubset::plain({2});
    WeightedSubset u = a | b;
    CHECK(u.mult(1) == 1);
    CHECK(u.mult(2) == 2);
    CHECK(u.card() == 3);
    CHECK(!u.is_plain());
    CHECK(b.subset_of(a));
    CHECK(!a.subset_of(b));
    CHECK(u.minus(b) == a);

    auto subs = a.subsets();
    REQUIRE(subs.size() == 4);
    CHECK(subs[0].is_empty());
    WeightedSubset w;
    w.set(1, 2);
    w.set(3, 1);
    CHECK(w.card() == 3);
    CHECK(w.subsets().size() == 6);  // (2+1)(1+1)
}

TEST_CASE("array grammar round trip") {
    AdmissibleArray a = array_parse("({1}|1)({}|2)");
    REQUIRE(a.depth() == 2);
    CHECK(a.slots()[0].first == WeightedSubset::plain({1}));
    CHECK(a.slots()[0].second == 1);
    CHECK(a.slots()[1].first.is_empty());
    CHECK(a.slots()[1].second == 2);
    CHECK(a.weight() == 3);
    CHECK(array_parse(a.to_string()) == a);

    AdmissibleArray b = array_parse("({1^2,3}|4)");
    CHECK(b.type().mult(1) == 2);
    CHECK(b.type().mult(3) == 1);
    CHECK(array_parse(b.to_string()) == b);

    CHECK(array_parse("").is_empty());
    CHECK_THROWS_AS(array_parse("({1}|0)"), ParseError);
    CHECK_THROWS_AS(array_parse("({1}|x)"), ParseError);
    CHECK_THROWS_AS(array_parse("({1}1)"), ParseError);
    CHECK_THROWS_AS(array_parse("({0}|1)"), ParseError);
}

TEST_CASE("combo cancellation") {
    auto F = Fq::make(3);
    ArrayCombo c(F.get());
    AdmissibleArray a = array_parse("({1}|1)");
    c.add(a, 1);
    c.add(a, 2);  // 1 + 2 = 0 in F_3
    CHECK(c.is_zero());
    c.add(a, 2);
    CHECK(c.terms().size() == 1);
    ArrayCombo d = c.prepended(WeightedSubset::plain({2}), 3);
    CHECK(d.terms().begin()->first == array_parse("({2}|3)({1}|1)"));
}

TEST_CASE("lucas binomials") {
    // Pascal oracle mod p for sigma, j <= 12
    for (unsigned p : {2u, 3u, 5u}) {
        std::vector<std::vector<unsigned>> pas(13, std::vector<unsigned>(13, 0));
        for (unsigned n = 0; n <= 12; ++n) {
            pas[n][0] = 1;
            for (unsigned k = 1; k <= n; ++k)
                pas[n][k] = (pas[n - 1][k - 1] + (k <= n - 1 ? pas[n - 1][k] : 0)) % p;
        }
        for (unsigned n = 0; n <= 12; ++n)
            for (unsigned k = 0; k <= n; ++k) CHECK(lucas_binom(n, k, p) == pas[n][k]);
    }
    CHECK(lucas_binom(5, 2, 3) == 1);  // digits 12_3 vs 02_3
}

TEST_CASE("binom_ws and the delta coefficients") {
    auto F = Fq::make(3);
    const Fq* f = F.get();
    WeightedSubset sig = WeightedSubset::plain({1, 2});
    WeightedSubset none;
    CHECK(binom_ws(f, sig, sig) == 1);
    CHECK(binom_ws(f, sig, none) == 1);
    WeightedSubset tooBig;
    tooBig.set(1, 3);
    CHECK_THROWS_AS(binom_ws(f, sig, tooBig), DomainError);

    // delta with J = {}, s = 1, j = 3: (-1)^{0+1} C(2,0) = -1
    CHECK(delta_coeff(f, sig, none, 3, 1) == f->neg(f->one()));
    // gate: 0 = 2 mod 2 passes, 0 = 3 mod 2 fails
    CHECK(delta_gate_coeff(f, sig, none, 2, 1) == f->one());
    CHECK(delta_gate_coeff(f, sig, none, 3, 1) == 0);
}

TEST_CASE("unit sums") {
    for (unsigned q : {2u, 3u, 4u, 5u}) {
        auto F = Fq::make(q);
        for (unsigned n = 0; n <= 30; ++n) {
            FqElem direct = 0;
            for (FqElem a = 1; a < q; ++a) direct = F->add(direct, F->pow(a, n));
            CHECK(unit_sum(F.get(), n) == direct);
        }
    }
    auto F3 = Fq::make(3);
    CHECK(unit_sum(F3.get(), 2) == 2);
    CHECK(unit_sum(F3.get(), 1) == 0);
    CHECK(unit_sum(F3.get(), 0) == 2);
}

TEST_CASE("characters") {
    auto F = Fq::make(3);
    const Fq* f = F.get();
    UPoly a = UPoly::theta_pow(f, 1) + UPoly::one(f);
    TPoly chi = char_eval(WeightedSubset::plain({1, 2}), a);
    TPoly expect = (TPoly::variable(f, var_t(1)) + TPoly::one(f)) *
                   (TPoly::variable(f, var_t(2)) + TPoly::one(f));
    CHECK(chi == expect);
    WeightedSubset sq;
    sq.set(1, 2);
    CHECK(char_eval(sq, UPoly::theta_pow(f, 1)) == TPoly::variable(f, var_t(1), 2));
    CHECK(char_eval(WeightedSubset::plain({1, 2}), UPoly::one(f)) == TPoly::one(f));
    // subst_theta on the zero polynomial
    CHECK(subst_theta(UPoly::zero(f), var_t(2)).is_zero());
    UPoly c = UPoly::theta_pow(f, 1) + UPoly::constant(f, 2);
    CHECK(subst_theta(c, var_t(2)) ==
          TPoly::variable(f, var_t(2)) + TPoly::constant(UFrac::constant(f, 2)));
}
