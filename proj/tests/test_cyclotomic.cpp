#include <doctest.h>

#include "djones/cyclotomic.hpp"
#include "djones/serialize.hpp"

using namespace djones;

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<Int>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<Int>{1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<Int>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<Int>{1, -1, 1});
    CHECK(cyclotomic_polynomial(5) == std::vector<Int>{1, 1, 1, 1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<Int>{1, 0, -1, 0, 1});
}

TEST_CASE("field arithmetic") {
    FieldPtr f = CycloField::get(4);
    Cyclo i = Cyclo::zeta(f);
    CHECK(i * i == Cyclo::from_int(f, -1));
    CHECK(i.pow(4) == Cyclo::one(f));
    Cyclo z = Cyclo::one(f) - i;  // 1 - i
    CHECK(z.inverse() == (Cyclo::one(f) + i).scaled(Rat(1, 2)));
    CHECK(z * z.inverse() == Cyclo::one(f));
    CHECK_THROWS_AS(Cyclo::zero(f).inverse(), std::domain_error);
    // conjugation is an involution fixing rationals
    for (long N = 2; N <= 8; ++N) {
        FieldPtr g = CycloField::get(N);
        Cyclo w = Cyclo::zeta(g, 1) + Cyclo::from_rat(g, Rat(3, 7));
        CHECK(w.conj().conj() == w);
        CHECK(Cyclo::from_rat(g, Rat(3, 7)).conj() == Cyclo::from_rat(g, Rat(3, 7)));
        for (long k = 0; k < N; ++k)
            CHECK(Cyclo::zeta(g, k).conj() == Cyclo::zeta(g, N - k));
    }
}

TEST_CASE("norm of 1-zeta products") {
    // prod_{k=1}^{N-1} (1 - zeta^k) = N
    for (long N = 2; N <= 8; ++N) {
        FieldPtr f = CycloField::get(N);
        CHECK(zeta_poch(f, N - 1) == Cyclo::from_int(f, N));
    }
}

TEST_CASE("random inverses") {
    for (long N : {3L, 5L, 7L, 8L}) {
        FieldPtr f = CycloField::get(N);
        for (long a = 0; a < N; ++a) {
            Cyclo z = Cyclo::zeta(f, a) + Cyclo::from_int(f, 2) - Cyclo::zeta(f, a + 1);
            if (z.is_zero()) continue;
            CHECK(z * z.inverse() == Cyclo::one(f));
        }
    }
}

TEST_CASE("double angle") {
    FieldPtr f = CycloField::get(5);
    CHECK(double_angle(Cyclo::one(f)) == Cyclo::one(f));
    CHECK(double_angle(Cyclo::zeta(f)) == Cyclo::zero(f));
    CHECK(double_angle_rat(Rat(2), 3) == Rat(7, 3));
    CHECK(double_angle_rat(Rat(1), 7) == Rat(1));
    // <<x>>_N * N * (1-x) = 1 - x^N as polynomials in x
    for (long N = 2; N <= 6; ++N) {
        Laurent sum;  // sum_{a<N} x^a, with x as the variable
        for (long a = 0; a < N; ++a) sum.add_term(a, 1);
        Laurent lhs = sum * (Laurent(1) - Laurent::q());
        Laurent rhs = Laurent(1) - Laurent::q(N);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("evaluation and galois twists") {
    FieldPtr f = CycloField::get(4);
    Laurent p = Laurent(1) - Laurent::q();  // 1 - q
    Cyclo v = eval_at_root(p, f);
    CHECK(v == Cyclo::one(f) - Cyclo::zeta(f));
    CHECK(eval_at_root(Laurent::q(2), f, 1) == Cyclo::from_int(f, -1));
    // twisted evaluation equals galois image
    FieldPtr g = CycloField::get(5);
    Laurent r = Laurent::q(3) + Laurent(2) - Laurent::q(1);
    CHECK(eval_at_root(r, g, 2) == eval_at_root(r, g, 1).galois(2));
    CHECK_THROWS_AS(v.galois(2), std::domain_error);  // gcd(2,4) != 1
}

TEST_CASE("serialization") {
    FieldPtr f = CycloField::get(4);
    Cyclo z = (Cyclo::one(f) + Cyclo::zeta(f)).scaled(Rat(1, 2));
    CHECK(cyclo_from_json_text(cyclo_to_json_text(z)) == z);
    CHECK(cyclo_to_json_text(z).find("\"order\":4") != std::string::npos);
}
