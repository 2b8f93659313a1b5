#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "fixtures.hpp"
#include "qplex/qmatroid.hpp"

using namespace qplex;
using fixtures::unit_span;

TEST_CASE("code-induced ranks on the sample instance") {
    auto code = fixtures::sample_code_f16();
    auto f2 = fixtures::gf2();

    CHECK(code.rank_of(unit_span(f2, 4, {0, 2, 3})) == 2);
    CHECK(code.rank_of(Subspace::zero(f2, 4)) == 0);

    size_t full = 0;
    for (const auto& u : enumerate_grassmannian(f2, 4, 3))
        if (code.rank_of(u) == 3) ++full;
    CHECK(full == 14);
}

TEST_CASE("code construction validates its inputs") {
    auto f16 = fixtures::gf16();
    auto f2 = fixtures::gf2();
    auto f4 = Field::parse("gf(2^2):x^2+x+1");
    auto f3 = Field::prime_field(3);

    Matrix dependent = Matrix::from_rows(f16, {{1, 2, 3}, {1, 2, 3}});
    CHECK_THROWS_WITH_AS(RankMetricCode::make(f2, f16, dependent),
                         doctest::Contains("full row rank"), Error);
    Matrix ok = Matrix::from_rows(f16, {{1, 0, 2}, {0, 1, 4}});
    CHECK_NOTHROW(RankMetricCode::make(f2, f16, ok));
    CHECK_THROWS_AS(RankMetricCode::make(f4, f16, ok), Error);            // base must be prime
    Matrix over_f9 = Matrix::from_rows(Field::parse("gf(3^2):x^2+1"), {{1, 2}});
    CHECK_THROWS_AS(RankMetricCode::make(f2, Field::parse("gf(3^2):x^2+1"), over_f9), Error);
    (void)f3;
}

TEST_CASE("generator files parse, with errors reported by line") {
    std::stringstream good("# sample\nfield gf(2^3):x^3+x+1\nbase gf(2)\n1 a a^2\na a^2 1\n");
    RankMetricCode code = RankMetricCode::read(good);
    CHECK(code.length() == 3);
    CHECK(code.code_dim() == 2);
    CHECK(code.generator().at(1, 0) == 2);

    std::stringstream ragged("field gf(2^3):x^3+x+1\nbase gf(2)\n1 a\na a^2 1\n");
    CHECK_THROWS_WITH_AS(RankMetricCode::read(ragged), doctest::Contains("ParseError"), Error);
    std::stringstream missing("base gf(2)\n1 a\n");
    CHECK_THROWS_AS(RankMetricCode::read(missing), Error);
    CHECK_THROWS_AS(RankMetricCode::load_file("/nonexistent/path.gen"), Error);
}

TEST_CASE("axioms hold for the sample codes and standard matroids") {
    CHECK(QMatroid::from_code(fixtures::sample_code_f16()).verify_axioms().ok);
    CHECK(QMatroid::from_code(fixtures::sample_code_f8()).verify_axioms().ok);
    auto f2 = fixtures::gf2();
    CHECK(QMatroid::free_matroid(f2, 3).verify_axioms().ok);
    CHECK(QMatroid::uniform(f2, 4, 2).verify_axioms().ok);
    CHECK(QMatroid::uniform(Field::prime_field(3), 2, 1).verify_axioms().ok);
}

TEST_CASE("a broken rank function is caught with a named axiom") {
    auto f2 = fixtures::gf2();
    Subspace bad_line = unit_span(f2, 3, {0});
    QMatroid broken(f2, 3, [bad_line](const Subspace& u) {
        if (u == bad_line) return size_t(0);
        return u.dim();
    });
    auto report = broken.verify_axioms();
    CHECK_FALSE(report.ok);
    CHECK((report.axiom == "R2" || report.axiom == "R3"));
    CHECK_FALSE(report.violation.empty());
}

TEST_CASE("independent spaces and bases of the sample code matroid") {
    QMatroid m = QMatroid::from_code(fixtures::sample_code_f16());
    CHECK(m.rank() == 3);
    auto indep = m.independent_spaces();
    CHECK(indep.size() == 65); // everything except <e1,e3,e4> and the full space
    auto bases = m.bases();
    CHECK(bases.size() == 14);
    for (const auto& b : bases) CHECK(b.dim() == 3);
}

TEST_CASE("free and uniform matroids have the expected bases") {
    auto f2 = fixtures::gf2();
    QMatroid free = QMatroid::free_matroid(f2, 2);
    auto free_bases = free.bases();
    REQUIRE(free_bases.size() == 1);
    CHECK(free_bases[0] == Subspace::full(f2, 2));
    CHECK(free.independent_spaces().size() == 5);

    QMatroid u24 = QMatroid::uniform(f2, 4, 2);
    auto u_bases = u24.bases();
    CHECK(u_bases.size() == 35);
    QComplex cx = u24.matroid_complex();
    QComplex uniform_cx = QComplex::uniform(f2, 4, 2);
    CHECK(sorted_by_cmp_q(cx.facets()) == sorted_by_cmp_q(uniform_cx.facets()));
}

TEST_CASE("matroid complexes are pure and lexicographically shellable") {
    std::vector<QComplex> complexes;
    complexes.push_back(QMatroid::from_code(fixtures::sample_code_f16()).matroid_complex());
    complexes.push_back(QMatroid::from_code(fixtures::sample_code_f8()).matroid_complex());
    auto f2 = fixtures::gf2();
    auto f3 = Field::prime_field(3);
    complexes.push_back(QMatroid::uniform(f2, 3, 2).matroid_complex());
    complexes.push_back(QMatroid::uniform(f3, 2, 1).matroid_complex());
    complexes.push_back(QMatroid::free_matroid(f2, 3).matroid_complex());
    for (const auto& c : complexes) {
        CHECK(c.pure());
        CHECK(is_lex_shellable(c).first.ok);
    }
}

TEST_CASE("the smaller code instance has the pinned shape") {
    QMatroid m = QMatroid::from_code(fixtures::sample_code_f8());
    CHECK(m.rank() == 2);
    QComplex cx = m.matroid_complex();
    CHECK(cx.facet_count() == 6);
    CHECK(cx.dim() == 2);
    CHECK(m.independent_spaces().size() == 14);
}

TEST_CASE("rank queries are memoized consistently") {
    QMatroid m = QMatroid::from_code(fixtures::sample_code_f16());
    auto f2 = fixtures::gf2();
    Subspace u = unit_span(f2, 4, {0, 2, 3});
    size_t first = m.rank(u);
    for (int i = 0; i < 5; ++i) CHECK(m.rank(u) == first);
    CHECK_THROWS_WITH_AS(m.rank(unit_span(f2, 3, {0})), doctest::Contains("AmbientMismatch"), Error);
}
