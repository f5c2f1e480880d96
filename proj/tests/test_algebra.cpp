#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mzv/poly.hpp"
#include "mzv/upoly.hpp"

using namespace mzv;

TEST_CASE("prime fields") {
    auto F3 = Fq::make(3);
    CHECK(F3->add(2, 2) == 1);
    CHECK(F3->inv(2) == 2);
    CHECK(F3->neg(1) == 2);
    CHECK_THROWS_AS(F3->inv(0), DomainError);
    auto F2 = Fq::make(2);
    CHECK(F2->add(1, 1) == 0);
    CHECK(F2->sign(7) == 1);  // -1 = 1 in characteristic 2
}

TEST_CASE("extension field F4") {
    FieldSpec spec{2, 2, {1, 1, 1}};
    Fq f4(spec);
    CHECK(f4.q() == 4);
    // x * x = x + 1 mod x^2 + x + 1
    CHECK(f4.mul(2, 2) == 3);
    for (FqElem a = 0; a < 4; ++a) CHECK(f4.pow(a, 4) == a);
    // reducible modulus is rejected
    FieldSpec bad{2, 2, {1, 0, 1}};  // x^2 + 1 = (x+1)^2
    CHECK_THROWS_AS(Fq{bad}, DomainError);
    // auto modulus picks an irreducible one
    auto F9 = Fq::make(9);
    CHECK(F9->p() == 3);
    for (FqElem a = 0; a < 9; ++a) CHECK(F9->pow(a, 9) == a);
}

TEST_CASE("degree convention") {
    auto F = Fq::make(3);
    UPoly z = UPoly::zero(F.get());
    CHECK(!z.degree().finite());
    CHECK(z.degree() < Degree::of(-100000));
    CHECK(z.degree() + Degree::of(3) == Degree::neg_inf());
    CHECK(UPoly::one(F.get()).degree() == Degree::of(0));
}

TEST_CASE("upoly arithmetic and division") {
    auto F = Fq::make(3);
    const Fq* f = F.get();
    UPoly t = UPoly::theta_pow(f, 1);
    UPoly a = t * t + t + UPoly::one(f);
    UPoly b = t + UPoly::constant(f, 2);
    auto [q1, r1] = divrem(a, b);
    CHECK(q1 * b + r1 == a);
    CHECK(r1.degree() < b.degree());
    CHECK(gcd(a * b, b) == b.monic());
    CHECK(pow(b, 3) == b * b * b);
    // Frobenius: (t + 2)^3 = t^3 + 2 over F_3
    CHECK(pow(b, 3) == UPoly::theta_pow(f, 3) + UPoly::constant(f, 2));
}

TEST_CASE("monic and lower enumeration") {
    auto F2 = Fq::make(2);
    auto v = monic_enum(F2.get(), 1);
    REQUIRE(v.size() == 2);
    CHECK(v[0] == UPoly::theta_pow(F2.get(), 1));
    CHECK(v[1] == UPoly::theta_pow(F2.get(), 1) + UPoly::one(F2.get()));
    auto F3 = Fq::make(3);
    CHECK(monic_enum(F3.get(), 0).size() == 1);
    CHECK(monic_enum(F3.get(), 0)[0].is_one());
    CHECK(monic_enum(F3.get(), 2).size() == 9);
    for (const auto& a : monic_enum(F3.get(), 2)) {
        CHECK(a.degree() == Degree::of(2));
        CHECK(a.lead() == 1);
    }
    auto low = lower_enum(F3.get(), 2);
    CHECK(low.size() == 9);
    CHECK(low[0].is_zero());
}

TEST_CASE("ufrac reduction and valuation") {
    auto F = Fq::make(3);
    const Fq* f = F.get();
    UPoly t = UPoly::theta_pow(f, 1);
    UFrac x(t * t - UPoly::one(f), t + UPoly::one(f));  // (t^2-1)/(t+1) = t-1
    CHECK(x.is_poly());
    CHECK(x.num() == t - UPoly::one(f));
    UFrac y(UPoly::one(f), t - pow(t, 3));
    CHECK(y.v_inf().value() == 3);
    CHECK((y * y.inv()).is_one());
    CHECK(UFrac::zero(f).v_inf() == std::nullopt);
    CHECK_THROWS_AS(UFrac(t, UPoly::zero(f)), DomainError);
}

TEST_CASE("tpoly and trat") {
    auto F = Fq::make(3);
    const Fq* f = F.get();
    TPoly t1 = TPoly::variable(f, var_t(1));
    TPoly t2 = TPoly::variable(f, var_t(2));
    TPoly p = (t1 + t2) * (t1 - t2);
    CHECK(p == t1 * t1 - t2 * t2);
    CHECK(p.degree_in(var_t(1)) == 2);

    // cross-multiplication equality without gcd
    TRat a(TPoly::one(f), t1 - TPoly::constant(UFrac(UPoly::theta_pow(f, 1))));
    TRat b((t1 + TPoly::constant(UFrac(UPoly::theta_pow(f, 1)))),
           t1 * t1 - TPoly::constant(UFrac(UPoly::theta_pow(f, 2))));
    CHECK(a.eq(b));  // 1/(t-θ) = (t+θ)/(t²-θ²)
    TRat z1(TPoly::zero(f), TPoly::one(f));
    TRat z2(TPoly::zero(f), t1 * t1 + TPoly::one(f));
    CHECK(z1.eq(z2));
    CHECK(!a.eq(z1));

    // substitution: t := θ^e
    TPoly b1 = t1 - TPoly::constant(UFrac(UPoly::theta_pow(f, 1)));  // t - θ
    TPoly d1 = b1.subst_theta_pow(var_t(1), 3);
    CHECK(d1 == TPoly::constant(UFrac(UPoly::theta_pow(f, 3) - UPoly::theta_pow(f, 1))));
    CHECK_THROWS_AS(TRat(TPoly::one(f), b1).subst_theta_pow(var_t(1), 1), PoleError);
}

TEST_CASE("monomial order is graded lexicographic") {
    Monomial a = mono_var(var_t(1), 2);                       // t1^2
    Monomial b = mono_mul(mono_var(var_t(1)), mono_var(var_t(2)));  // t1 t2
    Monomial c = mono_var(var_t(2), 3);                       // t2^3
    CHECK(mono_order_less(b, a));   // same degree, t1 exponent decides
    CHECK(mono_order_less(a, c));   // total degree first
    CHECK(mono_order_less(mono_one(), a));
    CHECK(!mono_order_less(a, a));
    CHECK(mono_to_string(b) == "t1*t2");
}
