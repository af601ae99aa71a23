#include "djones/descend.hpp"

#include <numeric>
#include <sstream>

namespace djones {

Laurent dj_colored(const HabiroSequence& seq, long m, long n) {
    if (n < 1) throw std::domain_error("color n must be >= 1");
    Laurent r;
    for (long k = 0; k < n; ++k)
        r += (kernel_cnk(n, k) * seq.h(k)).shifted(k * m);
    return r;
}

std::vector<BiLaurent> dj_x_terms(const HabiroSequence& seq, long m, long kmax) {
    if (kmax < 1) throw std::domain_error("kmax must be >= 1");
    std::vector<BiLaurent> terms;
    terms.reserve(kmax);
    for (long k = 0; k < kmax; ++k) {
        BiLaurent t = kernel_x(k) * BiLaurent::from_q(seq.h(k)) * BiLaurent::q(k * m);
        terms.push_back(std::move(t));
    }
    return terms;
}

HabiroTruncation dj_habiro(const HabiroSequence& seq, long m, long level) {
    if (level < 1) throw std::domain_error("level must be >= 1");
    Laurent sum;
    for (long k = 0; k < level; ++k)
        sum += (poch_q(k) * poch_qinv(k) * seq.h(k)).shifted(k * m);
    return habiro_reduce(sum, level);
}

namespace {

void require_primitive(long twist, long N) {
    if (std::gcd(mod_reduce(twist, N) == 0 ? N : mod_reduce(twist, N), N) != 1)
        throw std::domain_error("twist exponent must be a unit mod N");
}

}  // namespace

Cyclo dj_eval_root(const HabiroSequence& seq, long m, long N, long twist) {
    require_primitive(twist, N);
    FieldPtr f = CycloField::get(N);
    Cyclo u = Cyclo::zeta(f, twist), ubar = Cyclo::zeta(f, -twist);
    Cyclo r = Cyclo::zero(f);
    for (long k = 0; k < N; ++k) {
        Cyclo term = poch_cyclo(u, u, k);        // (q;q)_k at q = zeta^t
        term *= poch_cyclo(ubar, ubar, k);       // (q^{-1};q^{-1})_k
        term *= eval_at_root(seq.h(k), f, twist);
        term *= Cyclo::zeta(f, twist * mod_reduce(k * m, N));
        r += term;
    }
    return r;
}

Laurent mirror_dj_colored(const HabiroSequence& seq, long m, long n) {
    return dj_colored(seq, -m, n).inverted_variable();
}

Cyclo dj_ab_52_root(long a, long b, long N, long twist) {
    require_primitive(twist, N);
    FieldPtr f = CycloField::get(N);
    Cyclo u = Cyclo::zeta(f, twist);
    Cyclo r = Cyclo::zero(f);
    for (long k = 0; k < N; ++k) {
        for (long l = 0; k + l < N; ++l) {
            // exponent -(2k+l+1)l/2 + ak + bl is an integer: l(l+1)/2 is
            if ((l * (l + 1)) % 2 != 0) throw std::logic_error("non-integral exponent");
            long e = -(k * l + l * (l + 1) / 2) + a * k + b * l;
            Cyclo num = poch_cyclo(u, u, k + l);
            num *= num;
            Cyclo den = poch_cyclo(u, u, l);
            Cyclo term = num / den;
            term *= Cyclo::zeta(f, twist * mod_reduce(e, N));
            if (l % 2 != 0) term = -term;
            r += term;
        }
    }
    return r;
}

HabiroTruncation dj_ab_52_trunc(long a, long b, long level) {
    Laurent sum;
    for (long k = 0; k < level; ++k) {
        for (long l = 0; k + l < level; ++l) {
            long e = -(k * l + l * (l + 1) / 2) + a * k + b * l;
            // (q;q)_{k+l}^2 / (q;q)_l = (q;q)_{k+l} * prod_{i=l+1}^{k+l} (1-q^i)
            Laurent t = poch_q(k + l) * poch_linear(l + 1, 1, k);
            t = t.shifted(e);
            if (l % 2 != 0) t = -t;
            sum += t;
        }
    }
    return habiro_reduce(sum, level);
}

namespace {

struct Identity52 {
    long a, b;
    // coefficients of DJ^{(0)}, DJ^{(1)}, DJ^{(2)} and the constant, as
    // Laurent polynomials in q
    Laurent c0, c1, c2, konst;
};

std::vector<Identity52> identities_52() {
    auto L = [](std::initializer_list<std::pair<long, long>> terms) {
        Laurent p;
        for (auto [e, c] : terms) p.add_term(e, c);
        return p;
    };
    std::vector<Identity52> ids;
    // DJ_{1,0}  = (3 - q^{-1}) DJ0 + (1 - 3q) DJ1 + q^2 DJ2
    ids.push_back({1, 0, L({{0, 3}, {-1, -1}}), L({{0, 1}, {1, -3}}), L({{2, 1}}), L({})});
    // DJ_{-1,0} = 3q DJ0 - 3q^2 DJ1 + q^3 DJ2
    ids.push_back({-1, 0, L({{1, 3}}), L({{2, -3}}), L({{3, 1}}), L({})});
    // DJ_{1,-1} = (3 + q^{-2} - q^{-1}) DJ0 + (1 - q^{-1} - 3q) DJ1 + q^2 DJ2 - q^{-2} + q^{-1}
    ids.push_back({1, -1, L({{0, 3}, {-2, 1}, {-1, -1}}), L({{0, 1}, {-1, -1}, {1, -3}}),
                   L({{2, 1}}), L({{-2, -1}, {-1, 1}})});
    // DJ_{0,-1} = -DJ0 + q DJ1 + 1
    ids.push_back({0, -1, L({{0, -1}}), L({{1, 1}}), L({}), L({{0, 1}})});
    // DJ_{-1,-1} = 2q DJ0 - q^2 DJ1
    ids.push_back({-1, -1, L({{1, 2}}), L({{2, -1}}), L({}), L({})});
    return ids;
}

std::string id_name(const Identity52& id) {
    std::ostringstream os;
    os << "DJ_{" << id.a << "," << id.b << "}";
    return os.str();
}

}  // namespace

Report verify_52_identities(const std::vector<long>& levels, const std::vector<long>& roots) {
    Report rep;
    rep.title = "5_2 double-sum descendant identities";
    HabiroSequence seq = HabiroSequence::builtin("5_2");
    // the double-sum family carries the extra factor of q relative to the
    // cyclotomic-expansion descendants, so DJ^{(m)} enters as q*DJ^{(m)}
    for (long level : levels) {
        HabiroTruncation dj0 = dj_habiro(seq, 0, level);
        HabiroTruncation dj1 = dj_habiro(seq, 1, level);
        HabiroTruncation dj2 = dj_habiro(seq, 2, level);
        for (const auto& id : identities_52()) {
            HabiroTruncation lhs = dj_ab_52_trunc(id.a, id.b, level);
            HabiroTruncation rhs = habiro_reduce(id.c0.shifted(1), level) * dj0;
            rhs = rhs + habiro_reduce(id.c1.shifted(1), level) * dj1;
            rhs = rhs + habiro_reduce(id.c2.shifted(1), level) * dj2;
            rhs = rhs + habiro_reduce(id.konst, level);
            std::ostringstream label;
            label << "5_2 " << id_name(id) << " level=" << level;
            rep.add(lhs == rhs, label.str(), lhs.rep().str(), rhs.rep().str());
        }
    }
    for (long N : roots) {
        FieldPtr f = CycloField::get(N);
        Cyclo q = Cyclo::zeta(f);
        Cyclo dj0 = q * dj_eval_root(seq, 0, N);
        Cyclo dj1 = q * dj_eval_root(seq, 1, N);
        Cyclo dj2 = q * dj_eval_root(seq, 2, N);
        for (const auto& id : identities_52()) {
            Cyclo lhs = dj_ab_52_root(id.a, id.b, N);
            Cyclo rhs = eval_at_root(id.c0, f) * dj0 + eval_at_root(id.c1, f) * dj1 +
                        eval_at_root(id.c2, f) * dj2 + eval_at_root(id.konst, f);
            std::ostringstream label;
            label << "5_2 " << id_name(id) << " N=" << N;
            rep.add(lhs == rhs, label.str(), lhs.str(), rhs.str());
        }
    }
    return rep;
}

std::vector<Cyclo> fourier_recover_kernel_habiro(const HabiroSequence& seq, long N) {
    FieldPtr f = CycloField::get(N);
    std::vector<Cyclo> dj;
    dj.reserve(N);
    for (long m = 0; m < N; ++m) dj.push_back(dj_eval_root(seq, m, N));
    std::vector<Cyclo> out;
    out.reserve(N);
    for (long k = 0; k < N; ++k) {
        Cyclo s = Cyclo::zero(f);
        for (long m = 0; m < N; ++m)
            s += dj[m] * Cyclo::zeta(f, -k * m);
        out.push_back(s.scaled(Rat(1, N)));
    }
    return out;
}

}  // namespace djones
