#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "permpoly/field.hpp"

using namespace permpoly;

TEST_SUITE_BEGIN("field");

TEST_CASE("construction picks the smallest-index irreducible modulus") {
    const auto f5 = FieldCtx::make(5, 1);
    CHECK(f5->modulus() == std::vector<std::uint64_t>{0, 1});  // the polynomial x

    const auto f9 = FieldCtx::make(3, 2);
    CHECK(f9->modulus() == oracle::smallest_irreducible_quadratic(3));
    CHECK(f9->modulus() == std::vector<std::uint64_t>{1, 0, 1});  // x^2 + 1

    const auto f25 = FieldCtx::make(5, 2);
    CHECK(f25->modulus() == oracle::smallest_irreducible_quadratic(5));
    CHECK(f25->modulus() == std::vector<std::uint64_t>{2, 0, 1});  // x^2 + 2
}

TEST_CASE("construction rejects bad parameters") {
    CHECK_THROWS_AS(FieldCtx::make(4, 1), FieldError);
    CHECK_THROWS_AS(FieldCtx::make(1, 3), FieldError);
    CHECK_THROWS_AS(FieldCtx::make(2, 25), FieldError);  // 2^25 above the cap
    CHECK_THROWS_AS(FieldCtx::make(3, 0), FieldError);
}

TEST_CASE("construction is deterministic") {
    const auto a = FieldCtx::make(5, 4);
    const auto b = FieldCtx::make(5, 4);
    CHECK(a->modulus() == b->modulus());
    CHECK(a->generator() == b->generator());
    CHECK(a->order() == 625);
    // Same indexing: arithmetic agrees elementwise on a sample.
    for (std::uint64_t x : {3ULL, 77ULL, 624ULL})
        for (std::uint64_t y : {1ULL, 5ULL, 311ULL}) {
            CHECK(a->mul(x, y) == b->mul(x, y));
            CHECK(a->add(x, y) == b->add(x, y));
        }
}

TEST_CASE("generator has full multiplicative order") {
    for (const auto& [p, m] : {std::pair<std::uint64_t, unsigned>{5, 1},
                               {3, 2},
                               {5, 2},
                               {7, 2},
                               {3, 4}}) {
        const auto f = FieldCtx::make(p, m);
        CHECK(oracle::element_order(*f, f->generator()) == f->order() - 1);
        // Smallest primitive index: nothing below it is primitive.
        for (std::uint64_t g = 1; g < f->generator(); ++g)
            CHECK(oracle::element_order(*f, g) != f->order() - 1);
    }
}

TEST_CASE("basic arithmetic values") {
    const auto f5 = FieldCtx::make(5, 1);
    CHECK(f5->inv(4) == 4);  // 4*4 = 16 = 1

    const auto f9 = FieldCtx::make(3, 2);
    const std::uint64_t alpha = 3;  // the class of x
    CHECK(f9->mul(alpha, alpha) == 2);  // x^2 = -1

    const auto f25 = FieldCtx::make(5, 2);
    CHECK(f25->pow(2, 12) == 1);  // ord(2) = 4 divides 12

    CHECK_THROWS_AS(f5->inv(0), FieldError);
}

TEST_CASE("field axioms hold on random triples") {
    std::mt19937_64 rng(0xf1e1dULL);
    for (const auto& [p, m] : {std::pair<std::uint64_t, unsigned>{5, 1},
                               {3, 2},
                               {5, 2},
                               {7, 2},
                               {3, 4},
                               {5, 3},
                               {2, 6}}) {
        const auto f = FieldCtx::make(p, m);
        std::uniform_int_distribution<std::uint64_t> dist(0, f->order() - 1);
        bool ok = true;
        for (int i = 0; i < 10000 && ok; ++i) {
            const std::uint64_t a = dist(rng), b = dist(rng), c = dist(rng);
            ok = ok && f->add(a, f->add(b, c)) == f->add(f->add(a, b), c);
            ok = ok && f->mul(a, f->mul(b, c)) == f->mul(f->mul(a, b), c);
            ok = ok && f->add(a, b) == f->add(b, a);
            ok = ok && f->mul(a, b) == f->mul(b, a);
            ok = ok && f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c));
            ok = ok && f->add(a, f->neg(a)) == 0;
            if (a != 0) ok = ok && f->mul(a, f->inv(a)) == 1;
        }
        INFO("field F_", p, "^", m);
        CHECK(ok);
    }
}

TEST_CASE("frobenius is a field automorphism with period m") {
    std::mt19937_64 rng(0xf20bULL);
    for (const auto& [p, m] :
         {std::pair<std::uint64_t, unsigned>{3, 2}, {5, 2}, {3, 4}, {5, 4}}) {
        const auto f = FieldCtx::make(p, m);
        std::uniform_int_distribution<std::uint64_t> dist(0, f->order() - 1);
        bool ok = true;
        for (int i = 0; i < 2000 && ok; ++i) {
            const std::uint64_t a = dist(rng), b = dist(rng);
            ok = ok && f->frobenius(f->add(a, b), 1) ==
                           f->add(f->frobenius(a, 1), f->frobenius(b, 1));
            ok = ok && f->frobenius(f->mul(a, b), 1) ==
                           f->mul(f->frobenius(a, 1), f->frobenius(b, 1));
            ok = ok && f->frobenius(a, 0) == a;
            ok = ok && f->frobenius(a, m) == a;
        }
        INFO("field F_", p, "^", m);
        CHECK(ok);
    }
}

TEST_CASE("frobenius worked values") {
    const auto f9 = FieldCtx::make(3, 2);
    const std::uint64_t alpha = 3;  // alpha^2 = -1
    CHECK(f9->frobenius(alpha, 1) == f9->neg(alpha));  // alpha^3 = -alpha

    const auto f25 = FieldCtx::make(5, 2);
    for (std::uint64_t x = 0; x < 5; ++x)  // prime subfield is fixed
        CHECK(f25->frobenius(x, 1) == x);
}

TEST_CASE("trace values and subfield containment") {
    const auto f9 = FieldCtx::make(3, 2);
    CHECK(f9->trace(1, 1) == 2);  // Tr(1) = n*1 with n = 2 in characteristic 3
    CHECK(f9->trace(3, 1) == 0);  // alpha + alpha^3 = alpha - alpha

    const auto f81 = FieldCtx::make(3, 4);
    std::mt19937_64 rng(0x7aceULL);
    std::uniform_int_distribution<std::uint64_t> dist(0, 80);
    bool frob_invariant = true;
    for (int i = 0; i < 100; ++i) {
        const std::uint64_t x = dist(rng);
        frob_invariant = frob_invariant &&
                         f81->trace(f81->frobenius(x, 2), 2) == f81->trace(x, 2);
    }
    CHECK(frob_invariant);  // Tr_{81/9}(x^9) = Tr_{81/9}(x)

    for (const auto& [p, m] :
         {std::pair<std::uint64_t, unsigned>{3, 2}, {5, 2}, {3, 4}, {5, 4}}) {
        const auto f = FieldCtx::make(p, m);
        bool lands = true, additive = true;
        for (std::uint64_t x = 0; x < f->order(); ++x) {
            lands = lands && f->in_subfield(f->trace(x, 1), 1);
            if (x > 0)
                additive = additive && f->trace(f->add(x, x - 1), 1) ==
                                           f->add(f->trace(x, 1), f->trace(x - 1, 1));
        }
        INFO("field F_", p, "^", m);
        CHECK(lands);
        CHECK(additive);
    }

    CHECK_THROWS_AS(f81->trace(1, 3), FieldError);  // 3 does not divide 4
}

TEST_CASE("square test agrees with exhaustive enumeration") {
    const auto f5 = FieldCtx::make(5, 1);
    CHECK_FALSE(f5->is_square(2));

    const auto f25 = FieldCtx::make(5, 2);
    CHECK(f25->is_square(2));
    CHECK(f25->is_square(f25->neg(2)));

    const auto f9 = FieldCtx::make(3, 2);
    CHECK(f9->is_square(f9->neg(1)));

    for (const auto& [p, m] : {std::pair<std::uint64_t, unsigned>{5, 1},
                               {3, 2},
                               {5, 2},
                               {3, 4},
                               {7, 2},
                               {11, 2},
                               {5, 4},
                               {5, 3}}) {
        const auto f = FieldCtx::make(p, m);
        const auto squares = oracle::all_squares(*f);
        bool agree = true;
        for (std::uint64_t x = 0; x < f->order(); ++x)
            agree = agree && f->is_square(x) == (squares.count(x) > 0);
        INFO("field F_", p, "^", m);
        CHECK(agree);
    }

    const auto f4 = FieldCtx::make(2, 2);
    CHECK_THROWS_AS(f4->is_square(1), FieldError);
    CHECK_THROWS_AS(f4->sqrt(1), FieldError);
}

TEST_CASE("square roots pick the smaller representative") {
    const auto f5 = FieldCtx::make(5, 1);
    CHECK(f5->sqrt(4) == 2);  // 2 < 3
    CHECK_FALSE(f5->sqrt(2).has_value());
    CHECK(f5->sqrt(0) == 0);

    // In F_{5^4} (q = 25, k even), sqrt(+-2) lies in the subfield F_25;
    // membership is sign-independent, so both roots pass the test.
    const auto f = FieldCtx::make(5, 4);
    for (const std::uint64_t v : {std::uint64_t{2}, f->neg(2)}) {
        const auto y = f->sqrt(v);
        REQUIRE(y.has_value());
        CHECK(f->mul(*y, *y) == v);
        CHECK(f->in_subfield(*y, 2));
        CHECK(f->in_subfield(f->neg(*y), 2));
        CHECK(*y <= f->neg(*y));
    }

    const auto f81 = FieldCtx::make(3, 4);
    for (std::uint64_t x = 0; x < f81->order(); ++x) {
        const auto y = f81->sqrt(x);
        if (f81->is_square(x)) {
            REQUIRE(y.has_value());
            CHECK(f81->mul(*y, *y) == x);
        } else {
            CHECK_FALSE(y.has_value());
        }
    }
}

TEST_CASE("discriminant criterion matches exhaustive root search") {
    for (const unsigned k : {1u, 3u}) {
        const auto f = FieldCtx::make(5, k);
        const auto r1 = quad_discriminant_irreducible((*f)(1), (*f)(1));
        CHECK(r1.discriminant == (*f)(2));
        CHECK(r1.irreducible);
        const auto r2 = quad_discriminant_irreducible((*f)(-2), (*f)(-1));
        CHECK(r2.discriminant == (*f)(3));
        CHECK(r2.irreducible);
    }

    const auto f5 = FieldCtx::make(5, 1);
    const auto r3 = quad_discriminant_irreducible((*f5)(0), (*f5)(-1));
    CHECK(r3.discriminant == (*f5)(4));
    CHECK_FALSE(r3.irreducible);  // x^2 - 1 factors

    for (const auto& [p, m] :
         {std::pair<std::uint64_t, unsigned>{5, 2}, {7, 2}}) {
        const auto f = FieldCtx::make(p, m);
        bool agree = true;
        for (std::uint64_t a = 0; a < f->order(); ++a)
            for (std::uint64_t b = 0; b < f->order(); ++b) {
                const auto verdict =
                    quad_discriminant_irreducible(f->element(a), f->element(b));
                agree = agree && verdict.irreducible == !oracle::quad_has_root(*f, a, b);
            }
        INFO("field F_", p, "^", m);
        CHECK(agree);
    }
}

TEST_CASE("elements of different contexts never mix") {
    const auto f5 = FieldCtx::make(5, 1);
    const auto f25 = FieldCtx::make(5, 2);
    CHECK_THROWS_AS((*f5)(1) + (*f25)(1), FieldMismatchError);
    CHECK_THROWS_AS((*f5)(2) * (*f25)(3), FieldMismatchError);

    // Two constructions of the same field are the same field value.
    const auto f25b = FieldCtx::make(5, 2);
    CHECK(((*f25)(2) + (*f25b)(3)).index() == 0);
}

TEST_CASE("characteristic-2 arithmetic works, odd-only operations refuse") {
    const auto f16 = FieldCtx::make(2, 4);
    CHECK(f16->order() == 16);
    bool ok = true;
    for (std::uint64_t x = 0; x < 16; ++x) ok = ok && f16->add(x, x) == 0;
    CHECK(ok);
    CHECK(oracle::element_order(*f16, f16->generator()) == 15);
    CHECK_THROWS_AS(f16->is_square(3), FieldError);
}

TEST_CASE("tables and schoolbook arithmetic agree") {
    const auto with = FieldCtx::make(5, 3);                       // tables on
    const auto without = FieldCtx::make(5, 3, /*table_cap=*/1);   // forced off
    CHECK(with->has_tables());
    CHECK_FALSE(without->has_tables());
    bool agree = true;
    for (std::uint64_t a = 0; a < 125; ++a)
        for (std::uint64_t b = 0; b < 125; ++b) {
            agree = agree && with->mul(a, b) == without->mul(a, b);
            if (b != 0) agree = agree && with->inv(b) == without->inv(b);
            agree = agree && with->pow(a, b) == without->pow(a, b);
        }
    CHECK(agree);
    CHECK(with->sqrt(2) == without->sqrt(2));
}

TEST_SUITE_END();
