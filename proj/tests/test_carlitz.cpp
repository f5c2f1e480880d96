#include "doctest.h"

#include "mzv/ctx.hpp"

using namespace mzv;

TEST_CASE("special quantities") {
    Ctx ctx(3);
    const Carlitz& C = ctx.car();
    const Fq* f = ctx.F();
    CHECK(C.ell(0).is_one());
    CHECK(C.dfac(0).is_one());
    // ell_1 = θ - θ^3, D_1 = θ^3 - θ
    CHECK(C.ell(1) == UPoly::theta_pow(f, 1) - UPoly::theta_pow(f, 3));
    CHECK(C.dfac(1) == -C.ell(1));
    CHECK(C.ell(2).degree() == Degree::of(12));
    CHECK(C.dfac(2).degree() == Degree::of(18));
    // b_1(t) = t - θ evaluated at θ^q gives D_1
    CHECK(C.b_at_theta_qpow(1, 1) == C.dfac(1));
    CHECK(C.b_at_theta_qpow(2, 0).is_zero());
    CHECK(C.b_at_theta_qpow(2, 2) == C.dfac(2));
    CHECK(C.bcoeffs(3).size() == 4);
}

TEST_CASE("e polynomials") {
    Ctx ctx(3);
    const Carlitz& C = ctx.car();
    const Fq* f = ctx.F();
    for (unsigned d = 0; d <= 3; ++d) CHECK(C.e_poly(d, EdForm::Product) == C.e_poly(d, EdForm::Sum));
    // E_1 = x^3/D_1 + x/ell_1
    SparseXPoly e1 = C.e_poly(1, EdForm::Sum);
    REQUIRE(e1.size() == 2);
    CHECK(e1.at(1) == UFrac(UPoly::one(f), C.ell(1)));
    CHECK(e1.at(3) == UFrac(UPoly::one(f), C.dfac(1)));
    // E_1(1) = 0 and E_1(θ) = 1
    UFrac at1 = e1.at(1) + e1.at(3);
    CHECK(at1.is_zero());
    UFrac att = e1.at(1) * UFrac(UPoly::theta_pow(f, 1)) + e1.at(3) * UFrac(UPoly::theta_pow(f, 3));
    CHECK(att.is_one());
}

TEST_CASE("generating-function power sums") {
    Ctx ctx(3);
    const Carlitz& C = ctx.car();
    const Fq* f = ctx.F();
    // S_d(s) = 1/ell_d^s for s <= q
    for (unsigned d = 0; d <= 4; ++d)
        for (unsigned s = 1; s <= 3; ++s)
            CHECK(C.sd(d, s) == pow(UFrac(UPoly::one(f), C.ell(d)), s));
    // brute cross-check: S_1(4) = sum over F_3 of (θ+a)^{-4}
    UFrac direct = UFrac::zero(f);
    for (const UPoly& a : monic_enum(f, 1)) direct = direct + UFrac(UPoly::one(f), pow(a, 4));
    CHECK(C.sd(1, 4) == direct);
    for (unsigned n = 1; n <= 8; ++n) CHECK(C.sd(0, n).is_one());
}

TEST_CASE("negative power sums and zeta values") {
    Ctx ctx(3);
    const Carlitz& C = ctx.car();
    const Fq* f = ctx.F();
    CHECK(C.sd_negative(0, 0).is_one());
    CHECK(C.sd_negative(1, 0).is_zero());  // q^d = 0 in F_q
    CHECK(C.sd_negative(1, 2) == UPoly::constant(f, 2));
    // vanishing beyond the digit-sum bound
    for (unsigned long long m = 0; m <= 20; ++m) {
        unsigned bound = digit_sum_base(m, 3) / 2;
        for (unsigned d = bound + 1; d <= 6; ++d) CHECK(C.sd_negative(d, m).is_zero());
    }
    CHECK(goss_zeta_nonpos(C, 0).is_one());
    for (unsigned m : {2u, 4u, 6u, 8u}) CHECK(goss_zeta_nonpos(C, m).is_zero());
    Laurent z1 = goss_zeta_pos(C, 1, 30);
    CHECK(z1.coeff(0) == 1);
    CHECK(z1.top_exponent() == 0);
    CHECK(z1.coeff(-3) == 2);
}

TEST_CASE("interpolation coefficients") {
    Ctx ctx(3);
    const Carlitz& C = ctx.car();
    const Fq* f = ctx.F();
    CHECK(C.q_coeff(1, 0, var_t(1)) == TPoly::one(f));
    CHECK_THROWS_AS(C.q_coeff(2, 2, var_t(1)), DomainError);
    // Q_{d,0} = b_d / (ell_{d-1} (t - θ)) for d <= 3 (deeper in the suites)
    for (unsigned d = 1; d <= 3; ++d) {
        TPoly tm = TPoly::variable(f, var_t(1)) - TPoly::constant(UFrac(UPoly::theta_pow(f, 1)));
        TRat rhs(C.bpoly(d, var_t(1)), TPoly::constant(UFrac(C.ell(d - 1))) * tm);
        CHECK(TRat(C.q_coeff(d, 0, var_t(1))).eq(rhs));
    }
    // P_1(t, x) = x
    SparseXTPoly p1 = C.p_poly(1, var_t(1));
    REQUIRE(p1.size() == 1);
    CHECK(p1.begin()->first == 1);
    CHECK(p1.begin()->second == TPoly::one(f));
    // P_d(t, θ^d) = t^d - b_d(t)
    for (unsigned d = 1; d <= 3; ++d) {
        TPoly acc(f);
        for (const auto& [e, c] : C.p_poly(d, var_t(1)))
            acc = acc + c.scaled(UFrac(pow(UPoly::theta_pow(f, d), e)));
        CHECK(acc == TPoly::variable(f, var_t(1), d) - C.bpoly(d, var_t(1)));
    }
}

TEST_CASE("perkins identity") {
    Ctx ctx(3);
    const Carlitz& C = ctx.car();
    CHECK(perkins_check(C, 1, {}));
    CHECK(perkins_check(C, 1, {1}));
    CHECK(perkins_check(C, 2, {1, 2}));
    CHECK_THROWS_AS(perkins_check(C, 1, {1, 2, 3}), DomainError);
    Ctx ctx2(2);
    CHECK(perkins_check(ctx2.car(), 2, {1}));
}
