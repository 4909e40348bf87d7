#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "ioma/laws.hpp"
#include "ioma/search.hpp"

using namespace ioma;

TEST_CASE("registry shape") {
    const std::vector<Law>& reg = law_registry();
    CHECK(reg.size() == 87);
    std::set<std::string> ids;
    for (const Law& l : reg) {
        CHECK(ids.insert(l.id).second);
        CHECK(l.arity >= 1);
        CHECK(l.arity <= 3);
    }
}

TEST_CASE("Boolean model passes the full registry") {
    const SuiteReport rep = run_suite(make_b2(), "all");
    CHECK(rep.passed == 87);
    CHECK(rep.failed == 0);
    CHECK(rep.not_applicable == 0);
}

TEST_CASE("five-element model passes every applicable law") {
    const FiniteAlgebra a = make_e5();

    const SuiteReport all = run_suite(a, "all");
    CHECK(all.failed == 0);
    CHECK(all.passed == 58);
    CHECK(all.not_applicable == 29);  // the QW laws; the model is not QW
    for (const LawVerdict& v : all.verdicts)
        if (v.status == LawVerdict::Status::NotApplicable) CHECK(v.missing_class == "qw");

    CHECK(run_suite(a, "involutive-be").passed == 26);
    CHECK(run_suite(a, "iom").passed == 32);

    const SuiteReport qw = run_suite(a, "qw");
    CHECK(qw.passed == 0);
    CHECK(qw.not_applicable == 29);
}

TEST_CASE("suite verdicts are sorted by law id") {
    const SuiteReport rep = run_suite(make_b2(), "all");
    for (size_t i = 1; i < rep.verdicts.size(); ++i)
        CHECK(rep.verdicts[i - 1].law_id < rep.verdicts[i].law_id);
}

TEST_CASE("unknown suite throws") {
    CHECK_THROWS_AS(run_suite(make_b2(), "nope"), AlgebraError);
}

TEST_CASE("laws hold across the small census") {
    for (int n = 1; n <= 4; ++n)
        enumerate_models(n, [&](const FiniteAlgebra& a) {
            CHECK(run_suite(a, "all").failed == 0);
        });
}

TEST_CASE("failing verdicts carry a refuting witness") {
    // Force the applicability gate open on a model outside the class; the
    // reported witness must actually falsify the law.
    FiniteAlgebra non_iom = make_b2();
    bool found = false;
    enumerate_models(5, [&](const FiniteAlgebra& a) {
        if (!found && !classify(a).is_iom) {
            non_iom = a;
            found = true;
        }
    });
    REQUIRE(found);
    ClassificationReport forged = classify(non_iom);
    forged.is_iom = true;
    const LawCtx ctx{non_iom, non_iom.one(), non_iom.zero()};
    int failures = 0;
    for (const Law& law : law_registry()) {
        if (law.applicability != LawClass::IOM) continue;
        const LawVerdict v = check_law(non_iom, forged, law);
        if (v.status != LawVerdict::Status::Fail) continue;
        ++failures;
        REQUIRE(v.witness.size() == static_cast<size_t>(law.arity));
        std::vector<int> w = v.witness;
        w.resize(3, 0);
        CHECK(!law.eval(ctx, w[0], w[1], w[2]));
    }
    CHECK(failures > 0);
}
