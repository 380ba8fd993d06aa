#include <catch2/catch_amalgamated.hpp>

#include "gallery.hpp"
#include "qsh/products.hpp"

using namespace qsh;
using qsh::testing::diagonal_all;
using qsh::testing::dual_numbers;

namespace {
Element pw(const std::string& text, int d, int cap, Field f) {
    return element_parse(text, d, cap, f);
}
} // namespace

TEST_CASE("classical shuffle") {
    const int d = 2, cap = 6;
    CHECK(shuffle(pw("e1", d, cap, Field::Q), pw("e2", d, cap, Field::Q)) ==
          pw("e1|e2 + e2|e1", d, cap, Field::Q));
    CHECK(shuffle(pw("e1|e1", d, cap, Field::Q), pw("e1", d, cap, Field::Q)) ==
          pw("3*e1|e1|e1", d, cap, Field::Q));
    Element u = pw("e1|e2|e1", d, cap, Field::Q);
    CHECK(shuffle(u, pw("1", d, cap, Field::Q)) == u);
    CHECK(shuffle(pw("1", d, cap, Field::Q), u) == u);
}

TEST_CASE("quantum shuffle base examples") {
    const int cap = 6;
    QuantumShuffle ctx(diagonal_all(2, Field::Qq, Scalar::q()), cap);
    CHECK(ctx.mul(pw("e1", 2, cap, Field::Qq), pw("e2", 2, cap, Field::Qq)) ==
          pw("e1|e2 + q*e2|e1", 2, cap, Field::Qq));
    CHECK(ctx.mul(pw("e1", 2, cap, Field::Qq), pw("e1", 2, cap, Field::Qq)) ==
          pw("(1+q)*e1|e1", 2, cap, Field::Qq));
    Element u = pw("e1|e2", 2, cap, Field::Qq);
    CHECK(ctx.mul(Element::unit(2, cap, Field::Qq), u) == u);
    CHECK(ctx.mul(u, Element::unit(2, cap, Field::Qq)) == u);
}

TEST_CASE("quantum shuffle equals classical shuffle under the flip") {
    const int d = 2, cap = 5;
    QuantumShuffle ctx(make_flip(d, Field::Q), cap);
    for (int m = 0; m + 1 <= cap; ++m)
        for (int n = 0; m + n <= cap; ++n)
            for (const auto& u : words_of_grade(d, m))
                for (const auto& v : words_of_grade(d, n)) {
                    Element ue = Element::of_word(u, d, cap, Field::Q);
                    Element ve = Element::of_word(v, d, cap, Field::Q);
                    CHECK(ctx.mul(ue, ve) == shuffle(ue, ve));
                }
}

TEST_CASE("recursion matches the shuffle-set oracle") {
    struct Case {
        BraidingPtr s;
        int cap;
    };
    std::vector<Case> cases = {{make_flip(2, Field::Q), 5},
                               {diagonal_all(2, Field::Qq, Scalar::q()), 5},
                               {diagonal_all(3, Field::Qq, Scalar::q()), 4},
                               {qsh::testing::negated_flip(2, Field::Q), 5}};
    for (const auto&[s, cap] : cases) {
        QuantumShuffle ctx(s, cap);
        const int d = s->dim();
        for (int m = 0; m <= cap; ++m)
            for (int n = 0; m + n <= cap; ++n)
                for (const auto& u : words_of_grade(d, m))
                    for (const auto& v : words_of_grade(d, n))
                        CHECK(ctx.mul_words(u, v) == ctx.oracle_words(u, v));
    }
}

TEST_CASE("oracle on letters is id + sigma") {
    auto s = diagonal_all(2, Field::Qq, Scalar::q());
    QuantumShuffle ctx(s, 4);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            Word u = Word::letter(i), v = Word::letter(j);
            Element expect = Element::of_word(concat(u, v), 2, 4, Field::Qq) +
                             s->pair_image(i, j, 4);
            CHECK(ctx.oracle_words(u, v) == expect);
        }
}

TEST_CASE("quantum shuffle is associative") {
    QuantumShuffle ctx(diagonal_all(2, Field::Qq, Scalar::q()), 5);
    for (int m = 0; m <= 3; ++m)
        for (int n = 0; m + n <= 4; ++n)
            for (int l = 0; m + n + l <= 5; ++l)
                for (const auto& u : words_of_grade(2, m))
                    for (const auto& v : words_of_grade(2, n))
                        for (const auto& w : words_of_grade(2, l)) {
                            Element eu = Element::of_word(u, 2, 5, Field::Qq);
                            Element ev = Element::of_word(v, 2, 5, Field::Qq);
                            Element ew = Element::of_word(w, 2, 5, Field::Qq);
                            CHECK(ctx.mul(ctx.mul(eu, ev), ew) ==
                                  ctx.mul(eu, ctx.mul(ev, ew)));
                        }
}

TEST_CASE("dendriform splitting of the quantum shuffle") {
    QuantumShuffle ctx(diagonal_all(2, Field::Qq, Scalar::q()), 5);
    CHECK(ctx.prec(pw("e1", 2, 5, Field::Qq), pw("e2", 2, 5, Field::Qq)) ==
          pw("e1|e2", 2, 5, Field::Qq));
    CHECK(ctx.succ(pw("e1", 2, 5, Field::Qq), pw("e2", 2, 5, Field::Qq)) ==
          pw("q*e2|e1", 2, 5, Field::Qq));
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; m + n <= 5; ++n)
            for (const auto& u : words_of_grade(2, m))
                for (const auto& v : words_of_grade(2, n))
                    CHECK(ctx.prec_words(u, v) + ctx.succ_words(u, v) == ctx.mul_words(u, v));
    CHECK_THROWS_AS(ctx.prec(Element::unit(2, 5, Field::Qq), pw("e1", 2, 5, Field::Qq)),
                    GradeZeroInput);
}

TEST_CASE("classical quasi-shuffle on dual numbers") {
    auto a = dual_numbers(Field::Q, Scalar::one(Field::Q));
    const Scalar lambda = Scalar::one(Field::Q);
    const int cap = 4;
    // grade-1 words multiply through the algebra
    CHECK(classical_quasi_shuffle(*a, lambda, pw("e2", 2, cap, Field::Q),
                                  pw("e2", 2, cap, Field::Q))
              .is_zero()); // x*x = 0
    CHECK(classical_quasi_shuffle(*a, lambda, pw("e1", 2, cap, Field::Q),
                                  pw("e2", 2, cap, Field::Q)) == pw("e2", 2, cap, Field::Q));
    // (a0) d (b0 (x) b1) = (a0 b0) (x) b1
    CHECK(classical_quasi_shuffle(*a, lambda, pw("e2", 2, cap, Field::Q),
                                  pw("e1|e2", 2, cap, Field::Q)) ==
          pw("e2|e2", 2, cap, Field::Q));
    // (1 (x) x) d (1 (x) x) = 1 (x) (x * x) with x * x = 2 x (x) x
    CHECK(classical_quasi_shuffle(*a, lambda, pw("e1|e2", 2, cap, Field::Q),
                                  pw("e1|e2", 2, cap, Field::Q)) ==
          pw("2*e1|e2|e2", 2, cap, Field::Q));
}

TEST_CASE("quantum quasi-shuffle on letters") {
    // x *_{sigma,lambda} y = x (x) y + sigma(x (x) y) + lambda x.y
    for (const Scalar& lambda :
         {Scalar::zero(Field::Q), Scalar::one(Field::Q), -Scalar::one(Field::Q)}) {
        auto a = dual_numbers(Field::Q, -Scalar::one(Field::Q));
        QuasiShuffle ctx(a, lambda, 4);
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j) {
                Word u = Word::letter(i), v = Word::letter(j);
                Element expect = Element::of_word(concat(u, v), 2, 4, Field::Q) +
                                 a->sigma()->pair_image(i, j, 4) +
                                 a->mul_letters(i, j, 4).scaled(lambda);
                CHECK(ctx.star_words(u, v) == expect);
            }
    }
}

TEST_CASE("quasi-shuffle specializations") {
    // lambda = 0: star equals the quantum shuffle of the underlying space
    auto a = dual_numbers(Field::Qq, Scalar::q());
    QuasiShuffle qs0(a, Scalar::zero(Field::Qq), 4);
    QuantumShuffle sh(a->sigma(), 4);
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; m + n <= 4; ++n)
            for (const auto& u : words_of_grade(2, m))
                for (const auto& v : words_of_grade(2, n))
                    CHECK(qs0.star_words(u, v) == sh.mul_words(u, v));

    // flip + commutative A: diamond equals the classical mixable product
    for (long lam : {0L, 1L, -1L}) {
        auto af = dual_numbers(Field::Q, Scalar::one(Field::Q));
        QuasiShuffle ctx(af, Scalar::integer(Field::Q, lam), 4);
        for (int m = 1; m <= 3; ++m)
            for (int n = 1; m + n <= 4; ++n)
                for (const auto& u : words_of_grade(2, m))
                    for (const auto& v : words_of_grade(2, n))
                        CHECK(ctx.diamond_words(u, v) ==
                              classical_quasi_shuffle_words(
                                  *af, Scalar::integer(Field::Q, lam), u, v, 4));
    }
}

TEST_CASE("mixable product basics") {
    auto a = dual_numbers(Field::Qq, Scalar::q());
    QuasiShuffle ctx(a, Scalar::one(Field::Qq), 5);
    // grade-1 words: a d b = a.b
    CHECK(ctx.diamond_words(Word::letter(2), Word::letter(2)).is_zero());
    CHECK(ctx.diamond_words(Word::letter(1), Word::letter(2)) ==
          pw("e2", 2, 5, Field::Qq));
    // m = 0: (a0) d (b0 (x) b*) = (a0 b0) (x) b*
    CHECK(ctx.diamond_words(Word::letter(1), Word({2, 2})) == pw("e2|e2", 2, 5, Field::Qq));

    // the grade-1 unit word is a unit for diamond
    Element one = pw("e1", 2, 5, Field::Qq);
    for (int g = 1; g <= 4; ++g)
        for (const auto& w : words_of_grade(2, g)) {
            Element e = Element::of_word(w, 2, 5, Field::Qq);
            CHECK(ctx.diamond(one, e) == e);
            CHECK(ctx.diamond(e, one) == e);
        }
}

TEST_CASE("mixable product is associative") {
    for (long lam : {0L, 1L}) {
        auto a = dual_numbers(Field::Qq, Scalar::q());
        QuasiShuffle ctx(a, Scalar::integer(Field::Qq, lam), 5);
        for (int m = 1; m <= 3; ++m)
            for (int n = 1; m + n <= 4; ++n)
                for (int l = 1; m + n + l <= 5; ++l)
                    for (const auto& u : words_of_grade(2, m))
                        for (const auto& v : words_of_grade(2, n))
                            for (const auto& w : words_of_grade(2, l)) {
                                Element eu = Element::of_word(u, 2, 5, Field::Qq);
                                Element ev = Element::of_word(v, 2, 5, Field::Qq);
                                Element ew = Element::of_word(w, 2, 5, Field::Qq);
                                CHECK(ctx.diamond(ctx.diamond(eu, ev), ew) ==
                                      ctx.diamond(eu, ctx.diamond(ev, ew)));
                            }
    }
}

TEST_CASE("Rota-Baxter operator prepends the unit") {
    auto a = dual_numbers(Field::Q, Scalar::one(Field::Q));
    QuasiShuffle ctx(a, Scalar::zero(Field::Q), 4);
    CHECK(ctx.P(pw("e2", 2, 4, Field::Q)) == pw("e1|e2", 2, 4, Field::Q));
    CHECK(ctx.P(pw("e1", 2, 4, Field::Q)) == pw("e1|e1", 2, 4, Field::Q));
    CHECK(ctx.P(pw("2*e2|e2", 2, 4, Field::Q)) == pw("2*e1|e2|e2", 2, 4, Field::Q));
    CHECK_THROWS_AS(ctx.P(pw("e1|e1|e1|e1", 2, 4, Field::Q)), TruncationOverflow);
}

TEST_CASE("dendriform pair from the Rota-Baxter operator") {
    auto a = dual_numbers(Field::Qq, Scalar::q());
    QuasiShuffle ctx(a, Scalar::zero(Field::Qq), 5);
    for (int m = 1; m <= 2; ++m)
        for (int n = 1; m + n <= 4; ++n)
            for (const auto& u : words_of_grade(2, m))
                for (const auto& v : words_of_grade(2, n)) {
                    Element x = Element::of_word(u, 2, 5, Field::Qq);
                    Element y = Element::of_word(v, 2, 5, Field::Qq);
                    CHECK(ctx.succ_P(x, y) == ctx.diamond(ctx.P(x), y));
                    CHECK(ctx.prec_P(x, y) + ctx.succ_P(x, y) ==
                          ctx.diamond(x, ctx.P(y)) + ctx.diamond(ctx.P(x), y));
                }
}

TEST_CASE("contexts reject unverified or incompatible inputs") {
    auto a = dual_numbers(Field::Q, Scalar::one(Field::Q));
    CHECK_THROWS_AS(QuasiShuffle(a, Scalar::q(), 4), FieldMismatch);

    // an algebra that never ran its checks is rejected
    std::map<std::pair<int, int>, std::vector<BraidedAlgebra::MuEntry>> mu;
    mu[{1, 1}] = {{1, Scalar::one(Field::Q)}};
    auto raw = std::make_shared<BraidedAlgebra>(1, Field::Q, std::move(mu), std::nullopt,
                                                make_flip(1, Field::Q));
    CHECK_THROWS_AS(QuasiShuffle(raw, Scalar::zero(Field::Q), 4), IncompatibleAlgebra);
}
