#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "djones/habiro.hpp"
#include "djones/serialize.hpp"

using namespace djones;

TEST_CASE("kernel examples and vanishing") {
    CHECK(kernel_cnk(1, 1).is_zero());
    CHECK(kernel_cnk(5, 0) == Laurent(1));
    // c_{2,1} = q^{-2} (1-q^3)(1-q)
    Laurent want = (Laurent(1) - Laurent::q(3)) * (Laurent(1) - Laurent::q());
    CHECK(kernel_cnk(2, 1) == want.shifted(-2));
    for (long k = 1; k <= 12; ++k)
        for (long n = 1; n <= k; ++n) CHECK(kernel_cnk(n, k).is_zero());
}

TEST_CASE("two-variable kernel") {
    CHECK(kernel_x(0) == BiLaurent(1));
    // c_1(x,q) = x^{-1}(1-qx)(1-q^{-1}x)
    BiLaurent a(1), b(1);
    a.add_term(1, 1, -1);
    b.add_term(-1, 1, -1);
    CHECK(kernel_x(1) == a * b * BiLaurent::x(-1));
    for (long k = 0; k <= 10; ++k)
        for (long n = 1; n <= 10; ++n)
            CHECK(kernel_x(k).subst_x_qpow(n) == kernel_cnk(n, k));
    // the kernel is invariant under (x,q) -> (x^{-1},q^{-1}), which is what
    // makes the mirror rule a termwise statement
    for (long k = 0; k <= 8; ++k)
        CHECK(kernel_x(k).invert_q().invert_x() == kernel_x(k));
}

TEST_CASE("gamma") {
    CHECK(gamma_kn(0, 2).is_zero());
    for (long k = 0; k <= 6; ++k) CHECK(gamma_kn(k, k + 2).is_zero());
    CHECK(gamma_kn(0, 1).to_laurent() == Laurent(1));  // forces H_0 = J_1
}

TEST_CASE("colored Jones from Habiro data") {
    HabiroSequence k31 = HabiroSequence::builtin("3_1");
    HabiroSequence k41 = HabiroSequence::builtin("4_1");
    HabiroSequence k52 = HabiroSequence::builtin("5_2");
    for (const auto& seq : {k31, k41, k52}) CHECK(jones_from_habiro(seq, 1) == Laurent(1));
    // J_2 of 4_1 = q^{-2} - q^{-1} + 1 - q + q^2
    Laurent j2;
    j2.add_term(-2, 1);
    j2.add_term(-1, -1);
    j2.add_term(0, 1);
    j2.add_term(1, -1);
    j2.add_term(2, 1);
    CHECK(jones_from_habiro(k41, 2) == j2);
    // J_2 of 3_1 = q + q^3 - q^4
    Laurent t2;
    t2.add_term(1, 1);
    t2.add_term(3, 1);
    t2.add_term(4, -1);
    CHECK(jones_from_habiro(k31, 2) == t2);
    CHECK_THROWS_AS(jones_from_habiro(k41, 0), std::domain_error);
}

TEST_CASE("built-in coefficients") {
    CHECK(habiro_31(1) == Laurent::monomial(-1, 2));
    CHECK(habiro_41(7) == Laurent(1));
    Laurent h2;  // q^5 + q^7 + q^8 + q^11
    h2.add_term(5, 1);
    h2.add_term(7, 1);
    h2.add_term(8, 1);
    h2.add_term(11, 1);
    CHECK(habiro_52(2) == h2);
    CHECK_THROWS_AS(HabiroSequence::builtin("6_1"), std::invalid_argument);
}

TEST_CASE("5_2 recursion") {
    CHECK(habiro_recursion_52(-3).is_zero());
    CHECK(habiro_recursion_52(0) == Laurent(1));
    Laurent h1;
    h1.add_term(2, -1);
    h1.add_term(4, -1);
    CHECK(habiro_recursion_52(1) == h1);
    for (long k = 0; k <= 15; ++k) CHECK(habiro_recursion_52(k) == habiro_52(k));
    HabiroSequence rec = HabiroSequence::recursion_52();
    CHECK(rec.h(5) == HabiroSequence::builtin("5_2").h(5));
}

TEST_CASE("inversion round trip") {
    for (const char* knot : {"3_1", "4_1", "5_2"}) {
        HabiroSequence seq = HabiroSequence::builtin(knot);
        std::vector<Laurent> js;
        for (long n = 1; n <= 13; ++n) js.push_back(jones_from_habiro(seq, n));
        for (long k = 0; k <= 12; ++k) CHECK(habiro_from_jones(js, k) == seq.h(k));
    }
    // recovering H_1 for 3_1 and 5_2 explicitly
    HabiroSequence k31 = HabiroSequence::builtin("3_1");
    std::vector<Laurent> js = {jones_from_habiro(k31, 1), jones_from_habiro(k31, 2)};
    CHECK(habiro_from_jones(js, 1) == Laurent::monomial(-1, 2));
    // inconsistent data fails to cancel
    std::vector<Laurent> bad = {Laurent(1), Laurent::q(7) + Laurent(3)};
    CHECK_THROWS_AS(habiro_from_jones(bad, 1), std::domain_error);
}

TEST_CASE("mirror") {
    HabiroSequence k31 = HabiroSequence::builtin("3_1");
    HabiroSequence k41 = HabiroSequence::builtin("4_1");
    HabiroSequence k52 = HabiroSequence::builtin("5_2");
    CHECK(mirror_habiro(k31, 1) == Laurent::monomial(-1, -2));
    for (long k = 0; k <= 6; ++k) CHECK(mirror_habiro(k41, k) == Laurent(1));
    HabiroSequence m = HabiroSequence::mirror(k52);
    HabiroSequence mm = HabiroSequence::mirror(m);
    for (long k = 0; k <= 10; ++k) CHECK(mm.h(k) == k52.h(k));
}

TEST_CASE("user data files") {
    std::string path = "/tmp/djones_test_habiro.tsv";
    {
        std::ofstream out(path);
        out << "# comment\n";
        out << "0\t" << laurent_to_json_text(Laurent(1)) << "\n";
        out << "1\t" << laurent_to_json_text(Laurent::monomial(-1, 2)) << "\n";
    }
    HabiroSequence seq = HabiroSequence::from_file(path);
    CHECK(seq.h(0) == Laurent(1));
    CHECK(seq.h(1) == Laurent::monomial(-1, 2));
    CHECK(jones_from_habiro(seq, 2) == jones_from_habiro(HabiroSequence::builtin("3_1"), 2));
    CHECK_THROWS_AS(seq.h(2), std::out_of_range);
    std::remove(path.c_str());
}

TEST_CASE("integrality of inversion") {
    // habiro_from_jones returns Z-coefficients by construction; spot-check
    // that the intermediate rational form also cancels for mixed input
    HabiroSequence seq = HabiroSequence::builtin("5_2");
    std::vector<Laurent> js;
    for (long n = 1; n <= 7; ++n) js.push_back(jones_from_habiro(seq, n));
    for (long k = 0; k <= 6; ++k) {
        RationalLaurent acc;
        for (long n = 1; n <= k + 1; ++n) acc += gamma_kn(k, n) * RationalLaurent(js[n - 1]);
        CHECK(acc.to_laurent() == seq.h(k));
    }
}
