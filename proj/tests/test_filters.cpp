#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "ioma/filters.hpp"
#include "ioma/search.hpp"

using namespace ioma;
using ioma::testing::make_l4;
using ioma::testing::make_p4;

TEST_CASE("element subsets") {
    ElementSubset s = ElementSubset::of({1, 4});
    CHECK(s.contains(1));
    CHECK(!s.contains(2));
    CHECK(s.count() == 2);
    CHECK(s.elements() == std::vector<int>{1, 4});
    CHECK(s.subset_of(ElementSubset::full(5)));
    CHECK(!ElementSubset::full(5).subset_of(s));
    CHECK(ElementSubset::of({}).empty());
}

TEST_CASE("filter and DS enumeration on the five-element model") {
    const FilterCtx c(make_e5());
    const auto filters = enumerate_subfamilies(c, SubfamilyKind::Filter);
    REQUIRE(filters.size() == 3);
    CHECK(filters[0] == ElementSubset::of({4}));
    CHECK(filters[1] == ElementSubset::of({1, 4}));
    CHECK(filters[2] == ElementSubset::full(5));

    const auto ds = enumerate_subfamilies(c, SubfamilyKind::DeductiveSystem);
    REQUIRE(ds.size() == 2);
    CHECK(ds[0] == ElementSubset::of({4}));
    CHECK(ds[1] == ElementSubset::full(5));
}

TEST_CASE("filter and DS verdicts carry reasons and witnesses") {
    const FilterCtx c(make_e5());

    const SubsetVerdict empty = is_filter(c, ElementSubset::of({}));
    CHECK(!empty.ok);
    CHECK(empty.reason == "empty");

    // {b} breaks product closure: b odot b = 0
    const SubsetVerdict f1 = is_filter(c, ElementSubset::of({2, 4}));
    CHECK(!f1.ok);
    CHECK(f1.reason == "F1");
    CHECK(f1.witness == std::vector<int>{2, 2});

    // {0} is product closed but not an up-set
    const SubsetVerdict f2 = is_filter(c, ElementSubset::of({0}));
    CHECK(!f2.ok);
    CHECK(f2.reason == "F2");
    CHECK(f2.witness == std::vector<int>{0, 1});

    const SubsetVerdict ds1 = is_ds(c, ElementSubset::of({1}));
    CHECK(!ds1.ok);
    CHECK(ds1.reason == "DS1");

    // {a,1} is a filter but not a DS: a -> c = 1 yet c is outside
    CHECK(is_filter(c, ElementSubset::of({1, 4})).ok);
    const SubsetVerdict ds2 = is_ds(c, ElementSubset::of({1, 4}));
    CHECK(!ds2.ok);
    CHECK(ds2.reason == "DS2");
    CHECK(ds2.witness == std::vector<int>{1, 3});

    CHECK_THROWS_AS(is_filter(c, ElementSubset::of({9})), AlgebraError);
}

TEST_CASE("generated filters on the five-element model") {
    const FilterCtx c(make_e5());
    CHECK(generated_filter(c, ElementSubset::of({4})) == ElementSubset::of({4}));
    CHECK(generated_filter(c, ElementSubset::of({1})) == ElementSubset::of({1, 4}));
    CHECK(generated_filter(c, ElementSubset::of({2})) == ElementSubset::full(5));
    CHECK(generated_filter(c, ElementSubset::of({3})) == ElementSubset::full(5));
    CHECK_THROWS_AS(generated_filter(c, ElementSubset::of({})), AlgebraError);

    CHECK(generated_filter(c, ElementSubset::of({4}), 1) == ElementSubset::of({1, 4}));
    CHECK(generated_filter(c, ElementSubset::of({4}), 2) == ElementSubset::full(5));
    CHECK_THROWS_AS(generated_filter(c, ElementSubset::of({2}), 1), AlgebraError);
}

TEST_CASE("filter classification on the five-element model") {
    const FilterCtx c(make_e5());

    const FilterClassification one = classify_filter(c, ElementSubset::of({4}));
    CHECK(one.is_proper);
    CHECK(one.is_ds);
    CHECK(!one.is_maximal);
    REQUIRE(one.maximal_witness.has_value());
    CHECK(*one.maximal_witness == ElementSubset::of({1, 4}));
    // a is odot-idempotent with a* = b outside {1}, so strong maximality fails
    CHECK(!one.is_strongly_maximal);
    CHECK(one.strong_witness == std::vector<int>{1});
    CHECK(!one.is_commutative);
    CHECK(one.commutative_witness == std::vector<int>{1, 2});

    const FilterClassification mid = classify_filter(c, ElementSubset::of({1, 4}));
    CHECK(mid.is_proper);
    CHECK(!mid.is_ds);
    CHECK(mid.is_maximal);
    CHECK(mid.is_strongly_maximal);
    CHECK(mid.is_commutative);

    const FilterClassification full = classify_filter(c, ElementSubset::full(5));
    CHECK(!full.is_proper);
    CHECK(full.is_ds);
    CHECK(!full.is_maximal);
    CHECK(!full.is_strongly_maximal);
    CHECK(full.is_commutative);

    CHECK_THROWS_AS(classify_filter(c, ElementSubset::of({2})), AlgebraError);
}

TEST_CASE("commutative deductive systems") {
    const FilterCtx c(make_e5());
    const SubsetVerdict v = is_commutative_ds(c, ElementSubset::of({4}));
    CHECK(!v.ok);
    CHECK(v.witness == std::vector<int>{1, 2});
    CHECK(is_commutative_ds(c, ElementSubset::full(5)).ok);
    CHECK_THROWS_AS(is_commutative_ds(c, ElementSubset::of({1, 4})), AlgebraError);

    // on the Boolean square everything commutes
    const FilterCtx p(make_p4());
    for (const ElementSubset& f :
         enumerate_subfamilies(p, SubfamilyKind::DeductiveSystem))
        CHECK(is_commutative_ds(p, f).ok);
}

TEST_CASE("filter-theory invariants over the small census") {
    std::vector<FiniteAlgebra> models{make_e5()};
    for (int n = 1; n <= 4; ++n)
        enumerate_models(n, [&](const FiniteAlgebra& a) { models.push_back(a); });
    for (const FiniteAlgebra& a : models) {
        const FilterCtx c(a);
        const auto filters = enumerate_subfamilies(c, SubfamilyKind::Filter);
        const auto systems = enumerate_subfamilies(c, SubfamilyKind::DeductiveSystem);

        // every DS is a filter
        for (const ElementSubset& f : systems) CHECK(is_filter(c, f).ok);

        // filters are closed under ->
        for (const ElementSubset& f : filters)
            for (int x : f.elements())
                for (int y : f.elements()) CHECK(f.contains(a.arrow(x, y)));

        const bool families_equal = filters == systems;
        ElementSubset trivial = ElementSubset::of({a.one()});
        const bool trivial_comm =
            is_ds(c, trivial).ok && is_commutative_ds(c, trivial).ok;
        bool all_ds_comm = true;
        for (const ElementSubset& f : systems)
            if (!is_commutative_ds(c, f).ok) all_ds_comm = false;

        for (const ElementSubset& f : filters) {
            const FilterClassification fc = classify_filter(c, f);
            if (fc.is_strongly_maximal) CHECK(fc.is_maximal);
            if (families_equal && fc.is_maximal) CHECK(fc.is_strongly_maximal);
        }

        // commutativity moves up along inclusions of deductive systems
        for (const ElementSubset& f : systems)
            for (const ElementSubset& g : systems)
                if (f.subset_of(g) && is_commutative_ds(c, f).ok)
                    CHECK(is_commutative_ds(c, g).ok);

        // {1} commutative iff every DS is commutative
        CHECK(trivial_comm == all_ds_comm);

        // on quantum-Wajsberg models every DS is commutative
        if (classify(a).is_qw) CHECK(all_ds_comm);
    }
}

TEST_CASE("Bosbach states") {
    const FilterCtx b(make_b2());
    RationalState s01{{Rational(0), Rational(1)}};
    const BosbachVerdict v = verify_bosbach(b, s01);
    CHECK(v.accepted);
    CHECK(v.kernel == ElementSubset::of({1}));
    CHECK(v.kernel_commutative_ds);

    // bs1: the bottom element must get value 0
    RationalState bad1{{Rational(1, 2), Rational(1)}};
    const BosbachVerdict v1 = verify_bosbach(b, bad1);
    CHECK(!v1.accepted);
    CHECK(v1.reason == "bs1");

    RationalState wrong_size{{Rational(1)}};
    CHECK_THROWS_AS(verify_bosbach(b, wrong_size), AlgebraError);

    // out-of-range values are reported before anything else
    RationalState wide{{Rational(0), Rational(2)}};
    const BosbachVerdict vr = verify_bosbach(b, wide);
    CHECK(!vr.accepted);
    CHECK(vr.reason == "range");
    CHECK(vr.witness == std::vector<int>{1});
}

TEST_CASE("Bosbach state on the four-element chain") {
    const FilterCtx c(make_l4());
    RationalState s{{Rational(0), Rational(1, 3), Rational(2, 3), Rational(1)}};
    const BosbachVerdict v = verify_bosbach(c, s);
    CHECK(v.accepted);
    CHECK(v.kernel == ElementSubset::of({3}));
    CHECK(v.kernel_commutative_ds);

    // breaking bs2 yields the lexicographically first bad pair
    RationalState bad{{Rational(0), Rational(1), Rational(1), Rational(1)}};
    const BosbachVerdict vb = verify_bosbach(c, bad);
    CHECK(!vb.accepted);
    CHECK(vb.reason == "bs2");
    REQUIRE(vb.witness.size() == 2);
    // independent scan: no earlier pair violates bs2, the witness pair does
    const FiniteAlgebra& a = c.a;
    auto violates = [&](int x, int y) {
        return bad.value[static_cast<size_t>(x)] +
                   bad.value[static_cast<size_t>(a.arrow(x, y))] !=
               bad.value[static_cast<size_t>(y)] +
                   bad.value[static_cast<size_t>(a.arrow(y, x))];
    };
    CHECK(violates(vb.witness[0], vb.witness[1]));
    for (int x = 0; x < a.size(); ++x)
        for (int y = 0; y < a.size(); ++y) {
            if (std::pair(x, y) >= std::pair(vb.witness[0], vb.witness[1])) continue;
            CHECK(!violates(x, y));
        }
}
