#include <catch2/catch_amalgamated.hpp>

#include "qsh/element.hpp"
#include "test_util.hpp"

using namespace qsh;
using qsh::testing::Lcg;

namespace {
Element w(const std::string& text, int dim = 2, int cap = 6, Field f = Field::Q) {
    return element_parse(text, dim, cap, f);
}
} // namespace

TEST_CASE("element addition and scaling") {
    CHECK(w("e1") + w("e1") == w("2*e1"));
    CHECK(w("e1|e2") + w("-e1|e2") == w("e1|e2").scaled(Scalar::zero(Field::Q)));
    CHECK((w("e1|e2") + w("-e1|e2")).is_zero());

    Element x = element_parse("q*e1|e1", 2, 6, Field::Qq);
    CHECK(x.scaled(Scalar::q()) == element_parse("q^2*e1|e1", 2, 6, Field::Qq));

    Element other_cap(2, 3, Field::Q);
    CHECK_THROWS_AS(w("e1") + other_cap, DimensionMismatch);
}

TEST_CASE("concatenation") {
    CHECK(concat(w("e1"), w("e2")) == w("e1|e2"));
    CHECK(concat(w("1"), w("e1|e2|e1")) == w("e1|e2|e1"));
    CHECK(concat(w("e1|e2|e1"), w("1")) == w("e1|e2|e1"));
    CHECK(concat(w("e1+e2"), w("e1")) == w("e1|e1 + e2|e1"));

    Element long_word = w("e1|e1|e1|e1");
    CHECK_THROWS_AS(concat(long_word, w("e1|e1|e1")), TruncationOverflow);
}

TEST_CASE("concat is associative with unit on basis triples") {
    const int d = 2, cap = 6;
    for (const auto& a : words_of_grade(d, 2))
        for (const auto& b : words_of_grade(d, 1))
            for (const auto& c : words_of_grade(d, 2)) {
                Element ea = Element::of_word(a, d, cap, Field::Q);
                Element eb = Element::of_word(b, d, cap, Field::Q);
                Element ec = Element::of_word(c, d, cap, Field::Q);
                CHECK(concat(concat(ea, eb), ec) == concat(ea, concat(eb, ec)));
            }
}

TEST_CASE("deconcatenation") {
    TupleElement full = deconcat(w("e1|e2"));
    TupleElement expect(2, 2, 6, Field::Q);
    expect.add_term({Word(), Word({1, 2})}, Scalar::one(Field::Q));
    expect.add_term({Word({1}), Word({2})}, Scalar::one(Field::Q));
    expect.add_term({Word({1, 2}), Word()}, Scalar::one(Field::Q));
    CHECK(full == expect);

    TupleElement unit = deconcat(w("1"));
    TupleElement unit_expect(2, 2, 6, Field::Q);
    unit_expect.add_term({Word(), Word()}, Scalar::one(Field::Q));
    CHECK(unit == unit_expect);

    TupleElement single = deconcat(w("e1"));
    TupleElement single_expect(2, 2, 6, Field::Q);
    single_expect.add_term({Word(), Word({1})}, Scalar::one(Field::Q));
    single_expect.add_term({Word({1}), Word()}, Scalar::one(Field::Q));
    CHECK(single == single_expect);
}

TEST_CASE("reduced deconcatenation") {
    CHECK(deconcat_reduced(w("e1")).is_zero());

    TupleElement cut = deconcat_reduced(w("e1|e2"));
    TupleElement cut_expect(2, 2, 6, Field::Q);
    cut_expect.add_term({Word({1}), Word({2})}, Scalar::one(Field::Q));
    CHECK(cut == cut_expect);

    TupleElement two = deconcat_reduced(w("e1|e1|e2"));
    TupleElement two_expect(2, 2, 6, Field::Q);
    two_expect.add_term({Word({1}), Word({1, 2})}, Scalar::one(Field::Q));
    two_expect.add_term({Word({1, 1}), Word({2})}, Scalar::one(Field::Q));
    CHECK(two == two_expect);

    CHECK_THROWS_AS(deconcat_reduced(w("1 + e1")), GradeZeroInput);
}

TEST_CASE("counit") {
    CHECK(counit(w("1")) == Scalar::one(Field::Q));
    CHECK(counit(w("e1|e2")) == Scalar::zero(Field::Q));
    CHECK(counit(w("3*1 + e1")) == Scalar(Rational(3)));
}

TEST_CASE("coassociativity and counit law") {
    const int d = 2, cap = 4;
    auto co = [](const Word& x) {
        return deconcat(Element::of_word(x, 2, 4, Field::Q));
    };
    for (int g = 0; g <= cap; ++g) {
        for (const auto& word : words_of_grade(d, g)) {
            Element e = Element::of_word(word, d, cap, Field::Q);
            TupleElement once = deconcat(e);
            CHECK(once.apply_coproduct(0, co) == once.apply_coproduct(1, co));

            // (eps (x) id) Delta = id = (id (x) eps) Delta
            Element left(d, cap, Field::Q), right(d, cap, Field::Q);
            for (const auto& [k, c] : once.terms()) {
                if (k[0].empty()) left.add_term(k[1], c);
                if (k[1].empty()) right.add_term(k[0], c);
            }
            CHECK(left == e);
            CHECK(right == e);
        }
    }
}

TEST_CASE("element text round-trips") {
    Lcg g(31);
    for (int trial = 0; trial < 80; ++trial) {
        Element e = qsh::testing::random_element(g, 3, 4, Field::Qq);
        CHECK(element_parse(e.str(), 3, 4, Field::Qq) == e);
    }
    Lcg g2(32);
    for (int trial = 0; trial < 80; ++trial) {
        Element e = qsh::testing::random_element(g2, 2, 4, Field::Q);
        CHECK(element_parse(e.str(), 2, 4, Field::Q) == e);
    }
    CHECK(w("e1|e2 + q*e2|e1", 2, 6, Field::Qq).str() == "e1|e2 + q*e2|e1");
}

TEST_CASE("truncation is never silent") {
    Element e(2, 3, Field::Q);
    CHECK_THROWS_AS(e.add_term(Word({1, 1, 1, 1}), Scalar::one(Field::Q)),
                    TruncationOverflow);
    CHECK_THROWS_AS(element_parse("e1|e1|e1|e1", 2, 3, Field::Q), TruncationOverflow);
    CHECK_THROWS_AS(element_parse("e3", 2, 3, Field::Q), ParseError);
}
