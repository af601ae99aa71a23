#include "djones/habiro.hpp"

#include <fstream>
#include <sstream>

#include "djones/serialize.hpp"

namespace djones {

Laurent kernel_cnk(long n, long k) {
    if (n < 0 || k < 0) throw std::domain_error("kernel_cnk needs n, k >= 0");
    // (q^{n+1};q)_k (q^{n-1};q^{-1})_k shifted by q^{-kn}
    Laurent r = poch_linear(n + 1, 1, k) * poch_linear(n - 1, -1, k);
    return r.shifted(-k * n);
}

BiLaurent kernel_x(long k) {
    if (k < 0) throw std::domain_error("kernel_x needs k >= 0");
    BiLaurent r = pochhammer(Monomial{1, 1, 1}, Monomial{1, 1, 0}, k) *
                  pochhammer(Monomial{1, -1, 1}, Monomial{1, -1, 0}, k);
    return r * BiLaurent::x(-k);
}

RationalLaurent gamma_kn(long k, long n) {
    if (k < 0 || n < 1) throw std::domain_error("gamma_kn needs k >= 0, n >= 1");
    if (n >= k + 2) return RationalLaurent();
    long e = (k * (k + 3) + n * (n - 3)) / 2 + 1;
    Int sign = ((k - n - 1) % 2 + 2) % 2 == 0 ? 1 : -1;
    Laurent num = Laurent::monomial(sign, e) * poch_linear(n, n, 2);  // (1-q^n)(1-q^{2n})
    Laurent den = poch_q(k + n + 1) * poch_q(k - n + 1);
    return RationalLaurent(num, den);
}

Laurent habiro_31(long k) {
    Int sign = k % 2 == 0 ? 1 : -1;
    return Laurent::monomial(sign, k * (k + 3) / 2);
}

Laurent habiro_41(long /*k*/) { return Laurent(1); }

Laurent habiro_52(long k) {
    Laurent sum;
    for (long s = 0; s <= k; ++s)
        sum += gauss_binomial(k, s).shifted(s * (s + 1));
    Int sign = k % 2 == 0 ? 1 : -1;
    return Laurent::monomial(sign, k * (k + 3) / 2) * sum;
}

Laurent habiro_recursion_52(long k) {
    if (k < 0) return Laurent();
    // H_{j+2} = delta_{j+2,0} - q^{3+j}(1 + q - q^{2+j} + q^{4+2j}) H_{j+1}
    //           + q^{6+2j}(-1 + q^{1+j}) H_j, run upward from j = -2
    Laurent hm2, hm1;  // H_{j}, H_{j+1} with j starting at -2
    for (long j = -2; j + 2 <= k; ++j) {
        Laurent mid;
        mid.add_term(3 + j, 1);
        mid.add_term(4 + j, 1);
        mid.add_term(5 + 2 * j, -1);
        mid.add_term(7 + 3 * j, 1);
        Laurent low;
        low.add_term(6 + 2 * j, -1);
        low.add_term(7 + 3 * j, 1);
        Laurent next = -(mid * hm1) + low * hm2;
        if (j + 2 == 0) next += Laurent(1);
        hm2 = std::move(hm1);
        hm1 = std::move(next);
    }
    return hm1;
}

HabiroSequence HabiroSequence::builtin(const std::string& knot) {
    if (knot == "3_1") return HabiroSequence("3_1", habiro_31);
    if (knot == "4_1") return HabiroSequence("4_1", habiro_41);
    if (knot == "5_2") return HabiroSequence("5_2", habiro_52);
    throw std::invalid_argument("unknown knot: " + knot);
}

HabiroSequence HabiroSequence::recursion_52() {
    return HabiroSequence("5_2", habiro_recursion_52);
}

HabiroSequence HabiroSequence::user(std::string name, std::vector<Laurent> hs) {
    auto data = std::make_shared<std::vector<Laurent>>(std::move(hs));
    return HabiroSequence(std::move(name), [data](long k) -> Laurent {
        if (k < 0 || k >= static_cast<long>(data->size()))
            throw std::out_of_range("user Habiro data has no coefficient for k=" +
                                    std::to_string(k));
        return (*data)[k];
    });
}

HabiroSequence HabiroSequence::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open Habiro data file: " + path);
    std::vector<Laurent> hs;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos) throw std::runtime_error("bad Habiro data line: " + line);
        long k = std::stol(line.substr(0, tab));
        if (k != static_cast<long>(hs.size()))
            throw std::runtime_error("Habiro data must list k = 0,1,2,... in order");
        hs.push_back(laurent_from_json_text(line.substr(tab + 1)));
    }
    return user(path, std::move(hs));
}

HabiroSequence HabiroSequence::mirror(const HabiroSequence& seq) {
    HabiroSequence base = seq;
    return HabiroSequence(seq.name() + "*",
                          [base](long k) { return base.h(k).inverted_variable(); });
}

const Laurent& HabiroSequence::h(long k) const {
    if (k < 0) throw std::domain_error("Habiro coefficient index must be >= 0");
    while (static_cast<long>(cache_->size()) <= k)
        cache_->push_back(gen_(static_cast<long>(cache_->size())));
    return (*cache_)[k];
}

Laurent jones_from_habiro(const HabiroSequence& seq, long n) {
    if (n < 1) throw std::domain_error("color n must be >= 1");
    Laurent r;
    for (long k = 0; k < n; ++k) r += kernel_cnk(n, k) * seq.h(k);
    return r;
}

Laurent habiro_from_jones(const std::vector<Laurent>& jones, long k) {
    if (k < 0) throw std::domain_error("k must be >= 0");
    if (static_cast<long>(jones.size()) < k + 1)
        throw std::invalid_argument("need J_1..J_{k+1}");
    // common denominator (q;q)_{2k+2}; the cofactor for step n is the
    // Gaussian binomial [2k+2, k+n+1], advanced by one cheap binomial
    // multiply/divide per step
    Laurent acc;
    Laurent cofactor = gauss_binomial(2 * k + 2, k + 2);
    for (long n = 1; n <= k + 1; ++n) {
        long e = (k * (k + 3) + n * (n - 3)) / 2 + 1;
        Int sign = ((k - n - 1) % 2 + 2) % 2 == 0 ? 1 : -1;
        Laurent num = Laurent::monomial(sign, e) * poch_linear(n, n, 2);
        acc += num * cofactor * jones[n - 1];
        if (n <= k) {
            Laurent up(1);
            up.add_term(k - n + 1, -1);
            Laurent down(1);
            down.add_term(k + n + 2, -1);
            auto next = Laurent::div_exact(cofactor * up, down);
            if (!next) throw std::logic_error("cofactor recurrence failed");
            cofactor = std::move(*next);
        }
    }
    auto h = Laurent::div_exact(acc, poch_q(2 * k + 2));
    if (!h)
        throw std::domain_error(
            "inconsistent colored Jones data: inversion does not cancel to Z[q,q^-1]");
    return *h;
}

Laurent mirror_habiro(const HabiroSequence& seq, long k) {
    return seq.h(k).inverted_variable();
}

}  // namespace djones
