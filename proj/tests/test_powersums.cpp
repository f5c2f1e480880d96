#include "doctest.h"

#include "mzv/harness.hpp"
#include "mzv/powersums.hpp"

using namespace mzv;

TEST_CASE("depth-1 brute slices") {
    Ctx ctx(3);
    const Fq* f = ctx.F();
    const Carlitz& C = ctx.car();
    // S_1(({1}|1)) = (t-θ)/(θ-θ³) = b_1(t)/ell_1
    TPoly got = power_sum_brute(ctx, array_parse("({1}|1)"), 1);
    TPoly expect = C.bpoly(1, var_t(1)).scaled(UFrac(UPoly::one(f), C.ell(1)));
    CHECK(got == expect);
    for (unsigned d = 0; d <= 3; ++d) {
        TPoly lhs = power_sum_brute(ctx, array_parse("({1}|1)"), d);
        CHECK(lhs == C.bpoly(d, var_t(1)).scaled(UFrac(UPoly::one(f), C.ell(d))));
    }
}

TEST_CASE("edge conventions") {
    Ctx ctx(3);
    const Fq* f = ctx.F();
    AdmissibleArray empty;
    CHECK(power_sum_brute(ctx, empty, 0) == TPoly::one(f));
    CHECK(power_sum_brute(ctx, empty, 3).is_zero());
    CHECK(power_sum_brute_lt(ctx, empty, 0).is_zero());
    CHECK(power_sum_brute_lt(ctx, empty, 2) == TPoly::one(f));
    // depth 2 at d = 0: no strictly decreasing flag
    CHECK(power_sum_brute(ctx, array_parse("({1}|1)({2}|1)"), 0).is_zero());
    // S_0 of any depth-1 array is 1 (only a = 1 contributes)
    CHECK(power_sum_brute(ctx, array_parse("({1,2}|4)"), 0) == TPoly::one(f));
}

TEST_CASE("prefix sums") {
    Ctx ctx(3);
    const Fq* f = ctx.F();
    const Carlitz& C = ctx.car();
    CHECK(power_sum_brute_lt(ctx, array_parse("({1}|1)"), 0).is_zero());
    // S_{<d}(({1}|1)) = b_d / (ell_{d-1} (t-θ))
    for (unsigned d = 1; d <= 4; ++d) {
        TPoly lt = power_sum_brute_lt(ctx, array_parse("({1}|1)"), d);
        TPoly tm = TPoly::variable(f, var_t(1)) - TPoly::constant(UFrac(UPoly::theta_pow(f, 1)));
        TRat rhs(C.bpoly(d, var_t(1)), TPoly::constant(UFrac(C.ell(d - 1))) * tm);
        CHECK(TRat(lt).eq(rhs));
    }
}

TEST_CASE("tuple oracle agrees with the factored brute sum") {
    Ctx ctx(3);
    for (const char* txt : {"({1}|1)({2}|1)", "({1}|1)({}|2)", "({1,2}|2)", "({1^2}|1)({}|1)"})
        for (unsigned d = 0; d <= 2; ++d)
            CHECK(power_sum_tuple_oracle(ctx, array_parse(txt), d) ==
                  power_sum_brute(ctx, array_parse(txt), d));
    CHECK(power_sum_tuple_oracle(ctx, array_parse("({1}|1)({}|1)"), 3) ==
          power_sum_brute(ctx, array_parse("({1}|1)({}|1)"), 3));
}

TEST_CASE("fast depth-1 formula") {
    Ctx ctx(3);
    WeightedSubset s1 = WeightedSubset::plain({1});
    WeightedSubset s12 = WeightedSubset::plain({1, 2});
    CHECK(power_sum_depth1_fast(ctx, s1, 4, 0) == TPoly::one(ctx.F()));
    CHECK(power_sum_depth1_fast(ctx, s1, 4, 2) ==
          power_sum_brute(ctx, AdmissibleArray::depth1(s1, 4), 2));
    for (unsigned d = 0; d <= 3; ++d)
        CHECK(power_sum_depth1_fast(ctx, s12, 2, d) ==
              power_sum_brute(ctx, AdmissibleArray::depth1(s12, 2), d));
    WeightedSubset weighted;
    weighted.set(1, 2);
    CHECK_THROWS_AS(power_sum_depth1_fast(ctx, weighted, 1, 1), DomainError);
    WeightedSubset big = WeightedSubset::plain({1, 2, 3});
    CHECK_THROWS_AS(power_sum_depth1_fast(ctx, big, 1, 1), DomainError);
}

TEST_CASE("superseded formula differs exactly where it should") {
    Ctx ctx(3);
    WeightedSubset s12 = WeightedSubset::plain({1, 2});
    for (unsigned d = 1; d <= 3; ++d) {
        TPoly brute = power_sum_brute(ctx, AdmissibleArray::depth1(s12, 2), d);
        CHECK(power_sum_depth1_gp(ctx, s12, 2, d) != brute);
        CHECK(power_sum_depth1_fast(ctx, s12, 2, d) == brute);
    }
    // agreement for |Sigma| <= 1
    for (const WeightedSubset& sig : {WeightedSubset::empty(), WeightedSubset::plain({1})})
        for (unsigned s = 1; s <= 6; ++s)
            for (unsigned d = 0; d <= 3; ++d) {
                TPoly brute = power_sum_brute(ctx, AdmissibleArray::depth1(sig, s), d);
                CHECK(power_sum_depth1_gp(ctx, sig, s, d) == brute);
                CHECK(power_sum_depth1_fast(ctx, sig, s, d) == brute);
            }
}

TEST_CASE("recursive fast path") {
    Ctx ctx(3);
    for (const char* txt : {"({1}|1)({2}|1)", "({1}|1)({}|2)({}|6)", "({1}|2)({2}|1)({}|1)"})
        for (unsigned d = 0; d <= 2; ++d)
            CHECK(power_sum_fast(ctx, array_parse(txt), d) ==
                  power_sum_brute(ctx, array_parse(txt), d));
    CHECK(power_sum_fast(ctx, array_parse("({1}|1)({2}|1)"), 1) ==
          power_sum_brute(ctx, array_parse("({1}|1)({2}|1)"), 1));
    CHECK_THROWS_AS(power_sum_fast(ctx, array_parse("({1^2}|1)"), 1), DomainError);
}

TEST_CASE("dagger slices") {
    Ctx ctx(3);
    const Fq* f = ctx.F();
    const Carlitz& C = ctx.car();
    AdmissibleArray empty;
    CHECK(dagger_power_sum(ctx, empty, 0) == TPoly::one(f));
    CHECK(dagger_power_sum(ctx, empty, 1).is_zero());
    // depth 1: S_d(s) b_d(Sigma)
    WeightedSubset s1 = WeightedSubset::plain({1});
    for (unsigned d = 0; d <= 3; ++d)
        CHECK(dagger_power_sum(ctx, AdmissibleArray::depth1(s1, 2), d) ==
              C.bpoly(d, var_t(1)).scaled(C.sd(d, 2)));
    // depth 2 against the literal flag enumeration
    for (const char* txt : {"({1}|1)({2}|1)", "({1}|2)({}|1)"})
        for (unsigned d = 0; d <= 3; ++d)
            CHECK(dagger_power_sum(ctx, array_parse(txt), d) ==
                  dagger_flag_oracle(ctx, array_parse(txt), d));
    CHECK_THROWS_AS(dagger_power_sum(ctx, array_parse("({1,2,3}|1)"), 1), DomainError);
}

TEST_CASE("valuation bound") {
    Ctx ctx(3);
    AdmissibleArray a = array_parse("({1,2}|1)");
    CHECK(valuation_bound(3, a, 4) == 40);
    CHECK(valuation_bound(3, a, 0) == 0);
    CHECK(valuation_bound(3, array_parse("({}|1)"), 2) == 12);
    // the bound does not depend on s_1 (S_d({1,2};2) has coefficients of
    // valuation deg ell_d - 2 deg b_d coming from the correction terms)
    CHECK(valuation_bound(3, array_parse("({1,2}|2)"), 1) == 1);
    CHECK_THROWS_AS(valuation_bound(3, AdmissibleArray(), 1), DomainError);
    // certified: every coefficient of the slice clears the bound
    for (const char* txt : {"({1}|1)", "({1,2}|2)", "({1}|1)({2}|1)"})
        for (unsigned d = 0; d <= 3; ++d) {
            TPoly v = power_sum_brute(ctx, array_parse(txt), d);
            long bound = valuation_bound(3, array_parse(txt), d);
            for (const auto& [m, c] : v.terms()) {
                auto vi = c.v_inf();
                if (vi) CHECK(*vi >= bound);
            }
        }
}
