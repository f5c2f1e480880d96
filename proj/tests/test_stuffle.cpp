#include "doctest.h"

#include "mzv/harness.hpp"
#include "mzv/stuffle.hpp"

using namespace mzv;

TEST_CASE("depth-1 expansions at q=3") {
    Ctx ctx(3);
    WeightedSubset none;
    // (|1) x (|1): all gated terms vanish
    ArrayCombo c11 = stuffle_depth1(ctx, none, 1, none, 1);
    REQUIRE(c11.terms().size() == 1);
    CHECK(c11.terms().begin()->first == array_parse("({}|2)"));
    CHECK(c11.terms().begin()->second == 1);
    // (|1) x (|2): the two depth-2 terms cancel
    ArrayCombo c12 = stuffle_depth1(ctx, none, 1, none, 2);
    REQUIRE(c12.terms().size() == 1);
    CHECK(c12.terms().begin()->first == array_parse("({}|3)"));
    // ({1}|1) x ({2}|1): diagonal + two ordered depth-2 terms, coeff -1
    ArrayCombo cc = stuffle_depth1(ctx, WeightedSubset::plain({1}), 1,
                                   WeightedSubset::plain({2}), 1);
    REQUIRE(cc.terms().size() == 3);
    CHECK(cc.terms().at(array_parse("({1,2}|2)")) == 1);
    CHECK(cc.terms().at(array_parse("({1}|1)({2}|1)")) == 2);
    CHECK(cc.terms().at(array_parse("({2}|1)({1}|1)")) == 2);
}

TEST_CASE("depth-1 expansion is exact per degree") {
    Ctx ctx(3);
    WeightedSubset none;
    WeightedSubset s1 = WeightedSubset::plain({1});
    WeightedSubset s2 = WeightedSubset::plain({2});
    WeightedSubset w2;
    w2.set(1, 2);
    for (unsigned d = 0; d <= 3; ++d) {
        CHECK(stuffle_case_exact(ctx, none, 1, none, 1, d));
        CHECK(stuffle_case_exact(ctx, none, 1, none, 2, d));
        CHECK(stuffle_case_exact(ctx, s1, 1, s2, 1, d));
        CHECK(stuffle_case_exact(ctx, s1, 2, s1, 1, d));
        CHECK(stuffle_case_exact(ctx, w2, 1, s2, 2, d));
    }
    Ctx ctx2(2);
    for (unsigned d = 0; d <= 3; ++d) {
        CHECK(stuffle_case_exact(ctx2, s1, 1, s2, 1, d));
        CHECK(stuffle_case_exact(ctx2, w2, 2, none, 1, d));
    }
}

TEST_CASE("zeta-level expansion") {
    Ctx ctx(3);
    WeightedSubset none;
    ArrayCombo z = zeta_product_expand(ctx, none, 1, none, 1);
    REQUIRE(z.terms().size() == 2);
    CHECK(z.terms().at(array_parse("({}|1)({}|1)")) == 2);  // both orders coincide
    CHECK(z.terms().at(array_parse("({}|2)")) == 1);
    // for ({1}|1) x ({2}|1) the ordered terms cancel against the gated
    // ones in F_3 and only the diagonal survives
    ArrayCombo z2 = zeta_product_expand(ctx, WeightedSubset::plain({1}), 1,
                                        WeightedSubset::plain({2}), 1);
    REQUIRE(z2.terms().size() == 1);
    CHECK(z2.terms().at(array_parse("({1,2}|2)")) == 1);
    // for (|1) x (|2) the gated terms cancel and the ordered ones survive
    ArrayCombo z3 = zeta_product_expand(ctx, none, 1, none, 2);
    REQUIRE(z3.terms().size() == 3);
    CHECK(z3.terms().at(array_parse("({}|1)({}|2)")) == 1);
    CHECK(z3.terms().at(array_parse("({}|2)({}|1)")) == 1);
    CHECK(z3.terms().at(array_parse("({}|3)")) == 1);
}

TEST_CASE("product modes validate against brute values") {
    Ctx ctx(3);
    AdmissibleArray A = array_parse("({1}|1)({}|1)");
    AdmissibleArray B = array_parse("({2}|2)");
    for (ProdMode m : {ProdMode::DD, ProdMode::D_LT, ProdMode::LT_LT}) {
        ArrayCombo combo = stuffle_product(ctx, A, B, m);
        WeightedSubset type = A.type() | B.type();
        for (const auto& [arr, c] : combo.terms()) {
            CHECK(arr.type() == type);
            CHECK(arr.weight() == A.weight() + B.weight());
        }
        for (unsigned d = 0; d <= 3; ++d) CHECK(stuffle_mode_exact(ctx, A, B, m, combo, d, false));
    }
    // unit laws
    AdmissibleArray empty;
    for (ProdMode m : {ProdMode::DD, ProdMode::D_LT, ProdMode::LT_LT}) {
        ArrayCombo c = stuffle_product(ctx, empty, B, m);
        REQUIRE(c.terms().size() == 1);
        CHECK(c.terms().begin()->first == B);
        ArrayCombo c2 = stuffle_product(ctx, A, empty, m);
        REQUIRE(c2.terms().size() == 1);
        CHECK(c2.terms().begin()->first == A);
    }
    // D_LT of depth-1 against anything is plain concatenation
    ArrayCombo dlt = stuffle_product(ctx, array_parse("({1}|1)"), array_parse("({2}|1)"),
                                     ProdMode::D_LT);
    REQUIRE(dlt.terms().size() == 1);
    CHECK(dlt.terms().begin()->first == array_parse("({1}|1)({2}|1)"));
}

TEST_CASE("dagger expansion") {
    Ctx ctx(3);
    WeightedSubset s1 = WeightedSubset::plain({1});
    WeightedSubset s2 = WeightedSubset::plain({2});
    // empty x empty coincides with the classical rule
    ArrayCombo e = dagger_stuffle_depth1(ctx, WeightedSubset::empty(), 1,
                                         WeightedSubset::empty(), 1);
    REQUIRE(e.terms().size() == 1);
    CHECK(e.terms().begin()->first == array_parse("({}|2)"));
    // merged type rides on the leading slot
    ArrayCombo c = dagger_stuffle_depth1(ctx, s1, 1, s2, 1);
    for (const auto& [arr, coeff] : c.terms()) {
        CHECK(arr.slots().front().first == WeightedSubset::plain({1, 2}));
        for (std::size_t i = 1; i < arr.depth(); ++i) CHECK(arr.slots()[i].first.is_empty());
    }
    CHECK(c.terms().count(array_parse("({1,2}|2)")) == 1);
    // per-degree exactness against the dagger values
    AdmissibleArray A = AdmissibleArray::depth1(s1, 1);
    AdmissibleArray B = AdmissibleArray::depth1(s2, 1);
    for (ProdMode m : {ProdMode::DD, ProdMode::D_LT, ProdMode::LT_LT}) {
        ArrayCombo combo = dagger_stuffle(ctx, A, B, m);
        for (unsigned d = 0; d <= 3; ++d) CHECK(stuffle_mode_exact(ctx, A, B, m, combo, d, true));
    }
    CHECK_THROWS_AS(dagger_stuffle(ctx, array_parse("({1,2}|1)"), array_parse("({1}|1)"),
                                   ProdMode::DD),
                    DomainError);
}
