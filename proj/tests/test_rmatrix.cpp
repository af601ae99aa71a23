#include <doctest.h>

#include "djones/rmatrix.hpp"

using namespace djones;

TEST_CASE("residues") {
    CHECK(prin(-1, 5) == 4);
    CHECK(prin(12, 5) == 2);
    CHECK(hev(0, 4) == 1);
    CHECK(hev(3, 4) == 1);
    CHECK(hev(4, 4) == 0);
    CHECK(hev(-1, 4) == 0);
}

TEST_CASE("w-function") {
    FieldPtr f = CycloField::get(2);
    Cyclo two = Cyclo::from_int(f, 2);
    CHECK(w_eval(two, 0) == Cyclo::one(f));
    CHECK(w_eval(two, 1) == Cyclo::from_rat(f, Rat(1, 3)));  // 1/(1-2*(-1))
    for (long N : {2L, 3L, 5L}) {
        CHECK(check_w_properties(N, Rat(2)).all_pass());
        CHECK(check_w_properties(N, Rat(5, 3)).all_pass());
        // w(x|N) = 1/(1-x^N)
        FieldPtr g = CycloField::get(N);
        Cyclo x = Cyclo::from_rat(g, Rat(2));
        CHECK(w_eval(x, N) == (Cyclo::one(g) - x.pow(N)).inverse());
    }
    // pole at x = zeta^{-1}
    FieldPtr g = CycloField::get(3);
    CHECK_THROWS_AS(w_eval(Cyclo::zeta(g, -1), 1), std::domain_error);
}

TEST_CASE("V symbols") {
    for (long N = 2; N <= 6; ++N) {
        FieldPtr f = CycloField::get(N);
        CHECK(v_symbol(f, 0, 0, 0, 0) == Cyclo::one(f));
        CHECK(v_symbol(f, 0, 0, 0, 0, true) == Cyclo::one(f));
    }
    // hev kill: prin(j-i-1) + prin(l-k) >= N forces zero
    FieldPtr f = CycloField::get(4);
    CHECK(v_symbol(f, 0, 3, 0, 3).is_zero());  // prin(2) + prin(3) = 5 >= 4
    // (zeta)_k (conj zeta)_{N-1-k} = N
    for (long N = 2; N <= 7; ++N) {
        FieldPtr g = CycloField::get(N);
        for (long k = 0; k < N; ++k)
            CHECK(zeta_poch(g, k) * zeta_poch(g, N - 1 - k, true) ==
                  Cyclo::from_int(g, N));
    }
}

TEST_CASE("gauge matrices") {
    for (long N : {2L, 3L, 4L}) {
        FieldPtr f = CycloField::get(N);
        for (long m = 0; m < N; ++m)
            CHECK(h_matrix(Cyclo::one(f), m) == CMatrix::identity(f, N));
        CHECK(check_gauge_identities(N, Rat(2), Rat(3)).all_pass());
        CHECK(check_fourier_h(N, Rat(2)).all_pass());
    }
    // h(2,1) h(3,1) = h(6,1) at N = 3
    FieldPtr f = CycloField::get(3);
    CHECK(h_matrix(Cyclo::from_int(f, 2), 1) * h_matrix(Cyclo::from_int(f, 3), 1) ==
          h_matrix(Cyclo::from_int(f, 6), 1));
}

TEST_CASE("r at one against the gauge-limit oracle") {
    CHECK(check_r_at_one(2, Rat(3)).all_pass());
    CHECK(check_r_at_one(3, Rat(2)).all_pass());
    CHECK(check_r_at_one(4, Rat(2)).all_pass());
    // indexing sanity
    FieldPtr f = CycloField::get(3);
    CMatrix r = r_at_one(f, 1, 2);
    CHECK(r.rows() == 9);
    CHECK(r.cols() == 9);
}

TEST_CASE("fourier transform of r") {
    CHECK(check_fourier_r(2, Rat(2)).all_pass());
    CHECK(check_fourier_r(3, Rat(2)).all_pass());
    // delta structure of the closed form
    long N = 3;
    FieldPtr f = CycloField::get(N);
    Cyclo x = Cyclo::from_rat(f, Rat(2));
    for (long m = 0; m < N; ++m)
        for (long n = 0; n < N; ++n) {
            CMatrix cf = fourier_r_closed_form(x, m, n);
            for (long i = 0; i < N; ++i)
                for (long j = 0; j < N; ++j)
                    for (long k = 0; k < N; ++k)
                        for (long l = 0; l < N; ++l)
                            if (prin(i - m - 1, N) + j != prin(k - m - 1, N) + l)
                                CHECK(cf.at(i * N + j, k * N + l).is_zero());
        }
}

TEST_CASE("f-function") {
    CHECK(check_f_special_values(2, Rat(2)).all_pass());
    CHECK(check_f_special_values(3, Rat(2)).all_pass());
    CHECK(check_f_special_values(3, Rat(5, 2)).all_pass());
    CHECK(check_q_binomial(3, Rat(2)).all_pass());
    CHECK(check_q_binomial(5, Rat(-3, 7)).all_pass());
    // constraint violation
    FieldPtr f = CycloField::get(3);
    CHECK_THROWS_AS(f_function(Cyclo::from_int(f, 2), Cyclo::from_int(f, 3),
                               Cyclo::from_int(f, 1)),
                    std::domain_error);
    // (zeta^a; zeta)_b = (zeta)_{prin(a-1)+b} / (zeta)_{prin(a-1)}
    for (long N : {3L, 5L}) {
        FieldPtr g = CycloField::get(N);
        for (long a = -3; a <= 3; ++a)
            for (long b = 0; b < N; ++b) {
                Cyclo lhs = poch_cyclo(Cyclo::zeta(g, a), b);
                Cyclo rhs = zeta_poch(g, prin(a - 1, N) + b) *
                            zeta_poch(g, prin(a - 1, N)).inverse();
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("yang-baxter small orders") {
    CHECK(check_yang_baxter(2, Rat(2), Rat(3)).all_pass());
    CHECK(check_yang_baxter(3, Rat(2), Rat(3)).all_pass());
    CHECK(check_yang_baxter_at_one(2).all_pass());
    CHECK(check_yang_baxter_at_one(3).all_pass());
}
