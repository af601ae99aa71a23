// Acceptance suite: checks the full battery of identities the library is
// built around, one PASS/FAIL line per criterion. The state-sum/colored-Jones
// comparison (criterion 10) is conjectural: it is reported loudly but does
// not gate the exit status.
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "djones/descend.hpp"
#include "djones/qdiff.hpp"
#include "djones/rmatrix.hpp"
#include "djones/statesum.hpp"

using namespace djones;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void line(int criterion, bool pass, const std::string& what, double secs) {
    if (!pass) ++failures;
    std::ostringstream os;
    os << "CRITERION " << criterion << " " << (pass ? "PASS" : "FAIL") << " " << what << " ["
       << static_cast<long>(secs * 1000) << " ms]";
    std::cout << os.str() << std::endl;
}

bool criterion1() {
    for (const char* knot : {"3_1", "4_1", "5_2"}) {
        HabiroSequence seq = HabiroSequence::builtin(knot);
        std::vector<Laurent> js;
        for (long n = 1; n <= 21; ++n) js.push_back(jones_from_habiro(seq, n));
        for (long k = 0; k <= 20; ++k)
            if (habiro_from_jones(js, k) != seq.h(k)) return false;  // throws if non-integral
    }
    return true;
}

bool criterion2() {
    for (long k = 0; k <= 30; ++k)
        if (habiro_recursion_52(k) != habiro_52(k)) return false;
    return true;
}

bool criterion3() {
    return verify_relation("3_1", -4, 5, 1, 8).all_pass() &&
           verify_relation("4_1", -4, 5, 1, 8).all_pass() &&
           verify_relation("5_2", 0, 5, 1, 6).all_pass();
}

bool criterion4() {
    Laurent l52 = builtin_relation("5_2").lhs.classical_limit();
    Laurent want52;  // -L^2(-5 + 7L - 4L^2 + L^3)
    want52.add_term(2, 5);
    want52.add_term(3, -7);
    want52.add_term(4, 4);
    want52.add_term(5, -1);
    if (l52 != want52) return false;
    Laurent cubic;
    cubic.add_term(3, 1);
    cubic.add_term(2, -4);
    cubic.add_term(1, 7);
    cubic.add_term(0, -5);
    if (cubic_discriminant(cubic) != -23) return false;
    Laurent l41 = builtin_relation("4_1").lhs.classical_limit();
    Laurent want41;  // L^2 - L + 1 up to a unit monomial
    want41.add_term(2, 1);
    want41.add_term(1, -1);
    want41.add_term(0, 1);
    return equal_up_to_unit_monomial(l41, want41);
}

bool criterion5() { return verify_52_identities({10, 20}, {5, 7}).all_pass(); }

bool criterion6() {
    // independent oracle: the finite sum with H_k = 1, written out in place
    const long want[] = {1, 5, 13};
    for (long N = 1; N <= 3; ++N) {
        FieldPtr f = CycloField::get(N);
        Cyclo u = Cyclo::zeta(f), ub = Cyclo::zeta(f, -1);
        Cyclo oracle = Cyclo::zero(f);
        for (long k = 0; k < N; ++k)
            oracle += poch_cyclo(u, u, k) * poch_cyclo(ub, ub, k);
        if (oracle != Cyclo::from_int(f, want[N - 1])) return false;
        if (dj_eval_root(HabiroSequence::builtin("4_1"), 0, N) !=
            Cyclo::from_int(f, want[N - 1]))
            return false;
    }
    // the state-sum diagonal at color n = N-1 carries the same values
    ValidatedDiagram d41 = validate_diagram(builtin_diagram("4_1"));
    for (long N = 1; N <= 3; ++N) {
        FieldPtr f = CycloField::get(N);
        CMatrix m = contract(d41, N, N - 1);
        for (long i = 0; i < N; ++i)
            if (m.at(i, i) != Cyclo::from_int(f, want[N - 1])) return false;
    }
    return true;
}

bool criterion7() {
    for (long N = 2; N <= 4; ++N) {
        if (!check_yang_baxter(N, Rat(2), Rat(3)).all_pass()) return false;
        if (!check_yang_baxter(N, Rat(5), Rat(7)).all_pass()) return false;
        if (!check_yang_baxter_at_one(N).all_pass()) return false;
        if (!check_gauge_identities(N, Rat(2), Rat(3)).all_pass()) return false;
        if (!check_fourier_h(N, Rat(2)).all_pass()) return false;
        if (!check_r_at_one(N, Rat(N == 2 ? 3 : 2)).all_pass()) return false;
        if (!check_fourier_r(N, Rat(2)).all_pass()) return false;
    }
    return true;
}

bool criterion8() {
    ValidatedDiagram d41 = validate_diagram(builtin_diagram("4_1"));
    for (long N = 2; N <= 4; ++N)
        for (long n = 0; n < N; ++n)
            if (!(contract(d41, N, n) == naive_sum_41(N, n))) return false;
    return true;
}

bool criterion9() {
    ValidatedDiagram a = validate_diagram(builtin_diagram("4_1"));
    ValidatedDiagram b = validate_diagram(builtin_diagram("4_1_kinked"));
    ValidatedDiagram c = validate_diagram(builtin_diagram("4_1_kink_mid"));
    ValidatedDiagram flat = validate_diagram(builtin_diagram("unknot"));
    ValidatedDiagram kk = validate_diagram(builtin_diagram("unknot_kinks"));
    for (long N = 2; N <= 4; ++N) {
        if (!invariance_check(a, b, N).all_pass()) return false;
        if (!invariance_check(a, c, N).all_pass()) return false;
        if (!invariance_check(flat, kk, N).all_pass()) return false;
    }
    return true;
}

bool criterion10(std::string& detail) {
    HabiroSequence k41 = HabiroSequence::builtin("4_1");
    ValidatedDiagram d41 = validate_diagram(builtin_diagram("4_1"));
    bool all = true;
    std::ostringstream os;
    for (long N = 2; N <= 5; ++N)
        for (long n = 0; n < N; ++n) {
            bool ok = conjecture2_check(k41, d41, N, n).all_pass();
            all = all && ok;
            if (!ok) os << " FAIL(N=" << N << ",n=" << n << ")";
        }
    detail = os.str();
    return all;
}

bool shipped_files_ok(const std::string& datadir) {
    for (const char* rel : {"/diagrams/4_1.json", "/diagrams/3_1_balanced.json",
                            "/diagrams/5_2_balanced.json"}) {
        std::ifstream in(datadir + rel);
        if (!in) return false;
        std::stringstream ss;
        ss << in.rdbuf();
        ValidatedDiagram vd = validate_diagram(diagram_from_json_text(ss.str()));
        ValidatedDiagram builtin = validate_diagram(builtin_diagram(vd.d.name));
        if (!invariance_check(vd, builtin, 2).all_pass()) return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    {
        Timer t;
        bool ok = criterion1();
        line(1, ok, "Habiro round trip k=0..20 for 3_1, 4_1, 5_2", t.seconds());
    }
    {
        Timer t;
        bool ok = criterion2();
        line(2, ok, "5_2 closed form equals recursion for k=0..30", t.seconds());
    }
    {
        Timer t;
        bool ok = criterion3();
        line(3, ok, "descendant recursions exact on the stated grids",
             t.seconds());
    }
    {
        Timer t;
        bool ok = criterion4();
        line(4, ok, "classical limits and discriminant -23", t.seconds());
    }
    {
        Timer t;
        bool ok = criterion5();
        line(5, ok, "five DJ_{a,b} identities at levels 10,20 and N=5,7",
             t.seconds());
    }
    {
        Timer t;
        bool ok = criterion6();
        line(6, ok, "Kashaev values 1,5,13 and state-sum diagonal", t.seconds());
    }
    {
        Timer t;
        bool ok = criterion7();
        line(7, ok, "R-matrix suite (Yang-Baxter, gauge, Fourier) N=2..4",
             t.seconds());
    }
    {
        Timer t;
        bool ok = criterion8();
        line(8, ok, "state-sum contraction equals seven-fold oracle N=2..4",
             t.seconds());
    }
    {
        Timer t;
        bool ok = criterion9();
        line(9, ok, "projection independence for 4_1 and the unknot N=2..4",
             t.seconds());
    }
    {
        Timer t;
        std::string detail;
        bool ok = criterion10(detail);
        std::cout << "CRITERION 10 " << (ok ? "CONJECTURE-PASS" : "CONJECTURE-FAIL")
                  << " <4_1>_{N,n} = J_{n+1}(zeta_N) * Id for N=2..5" << detail << " ["
                  << static_cast<long>(t.seconds() * 1000) << " ms]" << std::endl;
        if (!ok)
            std::cout << "NOTE: the comparison above is a conjecture check; the failure is "
                         "reported, not fatal."
                      << std::endl;
    }
    if (argc > 1) {
        Timer t;
        bool ok = false;
        try {
            ok = shipped_files_ok(argv[1]);
        } catch (const std::exception& e) {
            std::cout << "shipped diagram defect: " << e.what() << std::endl;
        }
        line(0, ok, "shipped diagram files parse and validate", t.seconds());
    }
    std::cout << (failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << std::endl;
    return failures == 0 ? 0 : 1;
}
