#include "djones/bilaurent.hpp"

#include <sstream>

namespace djones {

BiLaurent BiLaurent::from_q(const Laurent& p) {
    BiLaurent r;
    for (const auto& [e, c] : p.terms()) r.c_.emplace(std::make_pair(e, 0L), c);
    return r;
}

BiLaurent& BiLaurent::operator+=(const BiLaurent& o) {
    for (const auto& [k, c] : o.c_) add_term(k.first, k.second, c);
    return *this;
}

BiLaurent& BiLaurent::operator-=(const BiLaurent& o) {
    for (const auto& [k, c] : o.c_) add_term(k.first, k.second, -c);
    return *this;
}

BiLaurent BiLaurent::operator-() const {
    BiLaurent r;
    for (const auto& [k, c] : c_) r.c_.emplace(k, -c);
    return r;
}

BiLaurent operator*(const BiLaurent& a, const BiLaurent& b) {
    BiLaurent r;
    for (const auto& [ka, ca] : a.c_)
        for (const auto& [kb, cb] : b.c_)
            r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

Laurent BiLaurent::subst_x_qpow(long a) const {
    Laurent r;
    for (const auto& [k, c] : c_) r.add_term(k.first + a * k.second, c);
    return r;
}

BiLaurent BiLaurent::invert_q() const {
    BiLaurent r;
    for (const auto& [k, c] : c_) r.c_.emplace(std::make_pair(-k.first, k.second), c);
    return r;
}

BiLaurent BiLaurent::invert_x() const {
    BiLaurent r;
    for (const auto& [k, c] : c_) r.c_.emplace(std::make_pair(k.first, -k.second), c);
    return r;
}

BiLaurent BiLaurent::pow(unsigned long e) const {
    BiLaurent r(1);
    BiLaurent b = *this;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Laurent BiLaurent::as_univariate_q() const {
    Laurent r;
    for (const auto& [k, c] : c_) {
        if (k.second != 0) throw std::domain_error("polynomial depends on x");
        r.set(k.first, c);
    }
    return r;
}

std::string BiLaurent::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : c_) {
        Int ab = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool hasvar = k.first != 0 || k.second != 0;
        if (!hasvar) {
            os << ab.get_str();
        } else {
            bool lead = false;
            if (ab != 1) {
                os << ab.get_str();
                lead = true;
            }
            if (k.first != 0) {
                if (lead) os << "*";
                os << "q";
                if (k.first != 1) os << "^" << k.first;
                lead = true;
            }
            if (k.second != 0) {
                if (lead) os << "*";
                os << "x";
                if (k.second != 1) os << "^" << k.second;
            }
        }
    }
    return os.str();
}

BiLaurent pochhammer(const Monomial& z, const Monomial& step, long count) {
    if (count < 0) throw std::domain_error("pochhammer count must be nonnegative");
    BiLaurent r(1);
    for (long j = 0; j < count; ++j) {
        BiLaurent f(1);
        f.add_term(z.qe + j * step.qe, z.xe + j * step.xe, -z.c * int_pow(step.c, j));
        r *= f;
    }
    return r;
}

}  // namespace djones
