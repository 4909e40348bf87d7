#include <catch2/catch_amalgamated.hpp>

#include "ioma/classify.hpp"
#include "ioma/search.hpp"

using namespace ioma;

TEST_CASE("five-element model classification") {
    const FiniteAlgebra a = make_e5();
    const ClassificationReport rep = classify(a);
    CHECK(rep.is_be);
    CHECK(rep.is_bounded);
    CHECK(rep.is_involutive_be);
    CHECK(rep.is_iom);
    CHECK(!rep.is_qw);
    CHECK(rep.is_om);
    for (const char* id : {"BE1", "BE2", "BE3", "BE4", "bounded", "involutive",
                           "IOM", "IOM'", "Prel",
                           "PU", "Pcomm", "Pass", "m-L", "m-Re", "Pom"})
        CHECK(rep.axiom_holds(id));
    CHECK(!rep.axiom_holds("QW"));
    CHECK(!rep.axiom_holds("QW1"));
    // IOM holds but QW does not, so the exchange axiom must be the culprit
    CHECK(!rep.axiom_holds("IOM2"));
    CHECK(!rep.axiom_holds("IOM2'"));

    // the first QW1 counterexample is (b, a): b->(b cap a) = a while b->a = 1
    const AxiomResult* qw1 = rep.find("QW1");
    REQUIRE(qw1 != nullptr);
    CHECK(qw1->status == AxiomResult::Status::Fails);
    CHECK(qw1->witness == std::vector<int>{2, 1});
    const DerivedTables d(a);
    CHECK(a.arrow(2, d.sqcap(2, 1)) == 1);
    CHECK(a.arrow(2, 1) == 4);
}

TEST_CASE("witnesses refute their axioms") {
    const FiniteAlgebra a = make_e5();
    const DerivedTables d(a);
    const AxiomResult qw = check_axiom(a, "QW");
    REQUIRE(qw.status == AxiomResult::Status::Fails);
    REQUIRE(qw.witness.size() == 3);
    const int x = qw.witness[0], y = qw.witness[1], z = qw.witness[2];
    CHECK(a.arrow(x, d.sqcap(d.sqcap(x, y), d.sqcap(z, x))) !=
          d.sqcap(a.arrow(x, y), a.arrow(x, z)));
}

TEST_CASE("two-element Boolean model satisfies everything") {
    const ClassificationReport rep = classify(make_b2());
    CHECK(rep.is_involutive_be);
    CHECK(rep.is_iom);
    CHECK(rep.is_qw);
    CHECK(rep.is_om);
    for (const AxiomResult& r : rep.axioms) CHECK(r.holds());
}

TEST_CASE("non-BE table is reported with a witness") {
    // constant-one table: BE3 fails at the first non-one element
    const FiniteAlgebra a = FiniteAlgebra::validate({"0", "1"}, {{1, 1}, {1, 1}}, 1, 0);
    const ClassificationReport rep = classify(a);
    CHECK(!rep.is_be);
    const AxiomResult* be3 = rep.find("BE3");
    REQUIRE(be3 != nullptr);
    CHECK(be3->status == AxiomResult::Status::Fails);
    CHECK(be3->witness == std::vector<int>{0});
    // derived-operation axioms are skipped with a reason, Prel still runs
    const AxiomResult* iom = rep.find("IOM");
    REQUIRE(iom != nullptr);
    CHECK(iom->status == AxiomResult::Status::NotEvaluated);
    CHECK(iom->reason == "not a BE algebra");
    const AxiomResult* prel = rep.find("Prel");
    REQUIRE(prel != nullptr);
    CHECK(prel->status != AxiomResult::Status::NotEvaluated);
}

TEST_CASE("missing zero blocks bounded and involutive checks") {
    const FiniteAlgebra a =
        FiniteAlgebra::validate({"x", "y"}, {{1, 1}, {0, 1}}, 1, std::nullopt);
    const ClassificationReport rep = classify(a);
    CHECK(rep.is_be);
    CHECK(!rep.is_bounded);
    const AxiomResult* b = rep.find("bounded");
    REQUIRE(b != nullptr);
    CHECK(b->status == AxiomResult::Status::NotEvaluated);
    CHECK(b->reason == "no designated zero");
}

TEST_CASE("unknown axiom id throws") {
    CHECK_THROWS_AS(check_axiom(make_b2(), "XYZ"), AlgebraError);
}

TEST_CASE("axiom equivalences across the small census") {
    // Over all bounded involutive models with n <= 4:
    //   IOM <=> IOM', IOM <=> QW2, IOM <=> Pom, IOM2 <=> IOM2',
    //   QW <=> IOM & IOM2, QW => IOM.
    for (int n = 1; n <= 4; ++n) {
        enumerate_models(n, [&](const FiniteAlgebra& a) {
            const ClassificationReport rep = classify(a);
            REQUIRE(rep.is_involutive_be);
            CHECK(rep.axiom_holds("IOM") == rep.axiom_holds("IOM'"));
            CHECK(rep.axiom_holds("IOM") == rep.axiom_holds("QW2"));
            CHECK(rep.axiom_holds("IOM") == rep.axiom_holds("Pom"));
            CHECK(rep.axiom_holds("IOM2") == rep.axiom_holds("IOM2'"));
            CHECK(rep.axiom_holds("QW") ==
                  (rep.axiom_holds("IOM") && rep.axiom_holds("IOM2")));
            if (rep.is_qw) CHECK(rep.is_iom);
            CHECK(rep.is_iom == rep.is_om);
        });
    }
}

TEST_CASE("product form round trip") {
    const FiniteAlgebra a = make_e5();
    const ProductForm p = to_product_form(a);
    const DerivedTables d(a);
    for (int x = 0; x < 5; ++x) {
        CHECK(p.neg(x) == d.star(x));
        for (int y = 0; y < 5; ++y) {
            CHECK(p.mul(x, y) == d.odot(x, y));
            CHECK(p.plus(x, y) == d.oplus(x, y));
        }
    }
}
