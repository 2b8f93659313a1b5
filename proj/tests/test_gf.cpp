#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qplex/gf.hpp"

using namespace qplex;

namespace {

// test-only reference multiplication: schoolbook polynomial product followed
// by long division, no tables
uint32_t slow_mul(const Field& f, uint32_t a, uint32_t b) {
    const uint32_t p = f.characteristic(), e = f.extension_degree();
    std::vector<uint32_t> da(e, 0), db(e, 0);
    for (uint32_t i = 0; i < e; ++i, a /= p, b /= p) {
        da[i] = a % p;
        db[i] = b % p;
    }
    std::vector<uint32_t> prod(2 * e, 0);
    for (uint32_t i = 0; i < e; ++i)
        for (uint32_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    if (e > 1) {
        const auto& mod = f.modulus();
        for (size_t d = prod.size(); d-- > e;) {
            uint32_t c = prod[d];
            if (!c) continue;
            prod[d] = 0;
            for (uint32_t i = 0; i < e; ++i)
                prod[d - e + i] = (prod[d - e + i] + (p - c % p) * mod[i]) % p;
        }
    } else {
        prod[0] %= p;
    }
    uint32_t rep = 0;
    for (uint32_t i = e; i-- > 0;) rep = rep * p + prod[i];
    return rep;
}

std::vector<FieldPtr> small_fields() {
    return {Field::prime_field(2),
            Field::prime_field(3),
            Field::prime_field(5),
            Field::parse("gf(2^2):x^2+x+1"),
            Field::parse("gf(2^3):x^3+x+1"),
            Field::parse("gf(3^2):x^2+1"),
            Field::parse("gf(2^4):x^4+x+1")};
}

} // namespace

TEST_CASE("field construction accepts the sample fields and rejects bad input") {
    auto f16 = Field::make(2, 4, {1, 1, 0, 0, 1}); // x^4+x+1
    CHECK(f16->size() == 16);
    CHECK(f16->to_string() == "gf(2^4):x^4+x+1");

    auto f2 = Field::prime_field(2);
    CHECK(f2->size() == 2);
    CHECK(f2->to_string() == "gf(2)");

    // x^2+1 = (x+1)^2 over gf(2)
    CHECK_THROWS_WITH_AS(Field::make(2, 2, {1, 0, 1}), doctest::Contains("ReducibleModulus"), Error);
    CHECK_THROWS_AS(Field::prime_field(4), Error);
    CHECK_THROWS_AS(Field::prime_field(1), Error);
    CHECK_THROWS_AS(Field::make(2, 17), Error); // 2^17 > 2^16
    CHECK_NOTHROW(Field::make(2, 16, []{
        // x^16 + x^5 + x^3 + x + 1 is irreducible over gf(2)
        std::vector<uint32_t> c(17, 0);
        c[0] = c[1] = c[3] = c[5] = c[16] = 1;
        return c;
    }()));
}

TEST_CASE("field spec parsing round-trips") {
    for (const char* spec : {"gf(2)", "gf(3)", "gf(2^4):x^4+x+1", "gf(3^2):x^2+1"}) {
        auto f = Field::parse(spec);
        CHECK(f->to_string() == spec);
    }
    CHECK_THROWS_AS(Field::parse("gf(2^4)"), Error);       // missing modulus
    CHECK_THROWS_AS(Field::parse("gf(2):x+1"), Error);     // modulus on a prime field
    CHECK_THROWS_AS(Field::parse("field(2)"), Error);
    CHECK_THROWS_AS(Field::parse("gf(2^4):x^3+x+1"), Error); // degree mismatch
}

TEST_CASE("element parsing and printing") {
    auto f16 = Field::parse("gf(2^4):x^4+x+1");
    CHECK(f16->parse_element("a^3+a+1") == 11);
    CHECK(f16->parse_element("11") == 11);
    CHECK(f16->parse_element("0") == 0);
    CHECK(f16->element_to_string(11, true) == "a^3+a+1");
    CHECK(f16->element_to_string(11) == "11");
    CHECK_THROWS_AS(f16->parse_element("16"), Error);
    CHECK_THROWS_AS(f16->parse_element("b+1"), Error);

    auto f9 = Field::parse("gf(3^2):x^2+1");
    CHECK(f9->parse_element("2a+2") == 8);
    CHECK(f9->element_to_string(8, true) == "2a+2");
}

TEST_CASE("multiplication in gf(16) matches the reference and the stated relation") {
    auto f16 = Field::parse("gf(2^4):x^4+x+1");
    // a^3 * a = a^4 = a + 1
    CHECK(f16->mul(8, 2) == 3);
    for (uint32_t a = 0; a < 16; ++a)
        for (uint32_t b = 0; b < 16; ++b) CHECK(f16->mul(a, b) == slow_mul(*f16, a, b));
}

TEST_CASE("field axioms hold exhaustively in every small field") {
    for (const auto& f : small_fields()) {
        const uint32_t q = f->size();
        for (uint32_t a = 0; a < q; ++a) {
            CHECK(f->add(a, f->neg(a)) == 0);
            CHECK(f->mul(1, a) == a);
            CHECK(f->add(0, a) == a);
            if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
            for (uint32_t b = 0; b < q; ++b) {
                CHECK(f->add(a, b) == f->add(b, a));
                CHECK(f->mul(a, b) == f->mul(b, a));
                if (q <= 16)
                    for (uint32_t c = 0; c < q; ++c) {
                        CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
                        CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
                        CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
                    }
            }
        }
        CHECK_THROWS_AS(f->inv(0), Error);
    }
}

TEST_CASE("element order puts 0 first and 1 second and is total") {
    for (const auto& f : small_fields()) {
        const uint32_t q = f->size();
        FieldElement zero(f, 0), one(f, 1);
        CHECK(elem_cmp(zero, one) < 0);
        for (uint32_t x = 2; x < q; ++x) {
            CHECK(elem_cmp(one, FieldElement(f, x)) < 0);
            CHECK(elem_cmp(zero, FieldElement(f, x)) < 0);
        }
        if (q > 16) continue;
        for (uint32_t a = 0; a < q; ++a)
            for (uint32_t b = 0; b < q; ++b) {
                int ab = f->cmp(a, b), ba = f->cmp(b, a);
                CHECK(ab == -ba);
                CHECK((ab == 0) == (a == b));
                for (uint32_t c = 0; c < q; ++c)
                    if (f->cmp(a, b) <= 0 && f->cmp(b, c) <= 0) CHECK(f->cmp(a, c) <= 0);
            }
    }
}

TEST_CASE("arithmetic across distinct fields is rejected") {
    auto f2 = Field::prime_field(2);
    auto f4 = Field::parse("gf(2^2):x^2+x+1");
    CHECK_THROWS_WITH_AS(FieldElement(f2, 1) + FieldElement(f4, 1),
                         doctest::Contains("FieldMismatch"), Error);
    CHECK_THROWS_AS(vec_cmp(FieldVector(f2, {0, 1}), FieldVector(f4, {0, 1})), Error);
}

TEST_CASE("vector order is lexicographic with the zero vector minimal") {
    auto f2 = Field::prime_field(2);
    CHECK(vec_cmp(FieldVector(f2, {0, 1, 0, 0}), FieldVector(f2, {1, 1, 0, 0})) < 0);
    CHECK(vec_cmp(FieldVector(f2, {0, 0}), FieldVector(f2, {0, 0})) == 0);

    for (const auto& f : {Field::prime_field(2), Field::prime_field(3)}) {
        const uint32_t q = f->size();
        const size_t n = 3;
        std::vector<FieldVector> all;
        for (uint32_t code = 0; code < q * q * q; ++code) {
            std::vector<uint32_t> c(n);
            uint32_t v = code;
            for (size_t i = 0; i < n; ++i, v /= q) c[i] = v % q;
            all.emplace_back(f, c);
        }
        FieldVector zero = FieldVector::zero(f, n);
        for (const auto& v : all)
            if (!v.is_zero()) CHECK(vec_cmp(zero, v) < 0);
        for (const auto& a : all)
            for (const auto& b : all) {
                CHECK(vec_cmp(a, b) == -vec_cmp(b, a));
                CHECK((vec_cmp(a, b) == 0) == (a == b));
            }
    }
    CHECK_THROWS_AS(vec_cmp(FieldVector(f2, {0, 1}), FieldVector(f2, {0, 1, 0})), Error);
}

TEST_CASE("alternative element orders must keep 0 first and 1 second") {
    auto f4 = Field::parse("gf(2^2):x^2+x+1");
    auto alt = f4->with_element_order({0, 1, 3, 2});
    CHECK(alt->cmp(3, 2) < 0);
    CHECK(alt->cmp(1, 3) < 0);
    CHECK_FALSE(alt->same(*f4));
    CHECK_THROWS_AS(f4->with_element_order({1, 0, 2, 3}), Error);
    CHECK_THROWS_AS(f4->with_element_order({0, 2, 1, 3}), Error);
    CHECK_THROWS_AS(f4->with_element_order({0, 1, 2}), Error);
    CHECK_THROWS_AS(f4->with_element_order({0, 1, 2, 2}), Error);
}

TEST_CASE("vector parse and to_string round-trip") {
    auto f16 = Field::parse("gf(2^4):x^4+x+1");
    FieldVector v = FieldVector::parse(f16, "1,15,6");
    CHECK(v.size() == 3);
    CHECK(v[1] == 15);
    CHECK(v.to_string() == "1,15,6");
}
