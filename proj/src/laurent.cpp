#include "djones/laurent.hpp"

#include <sstream>

namespace djones {

namespace {
const Int kZero = 0;
}

bool Laurent::is_one() const {
    return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1;
}

const Int& Laurent::coeff(long e) const {
    auto it = c_.find(e);
    return it == c_.end() ? kZero : it->second;
}

long Laurent::min_exp() const {
    if (c_.empty()) throw std::domain_error("min_exp of zero polynomial");
    return c_.begin()->first;
}

long Laurent::max_exp() const {
    if (c_.empty()) throw std::domain_error("max_exp of zero polynomial");
    return c_.rbegin()->first;
}

Laurent& Laurent::operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.c_) add_term(e, c);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.c_) add_term(e, -c);
    return *this;
}

Laurent Laurent::operator-() const {
    Laurent r;
    for (const auto& [e, c] : c_) r.c_.emplace(e, -c);
    return r;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ea, ca] : a.c_)
        for (const auto& [eb, cb] : b.c_) r.add_term(ea + eb, ca * cb);
    return r;
}

Laurent Laurent::shifted(long e) const {
    Laurent r;
    for (const auto& [ee, c] : c_) r.c_.emplace(ee + e, c);
    return r;
}

Laurent Laurent::inverted_variable() const {
    Laurent r;
    for (const auto& [e, c] : c_) r.c_.emplace(-e, c);
    return r;
}

Laurent Laurent::pow(unsigned long e) const {
    Laurent r = Laurent(1);
    Laurent b = *this;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Rat Laurent::eval_rat(const Rat& x) const {
    Rat r(0);
    for (const auto& [e, c] : c_) r += Rat(c) * rat_pow(x, e);
    return r;
}

std::optional<Laurent> Laurent::div_exact(const Laurent& a, const Laurent& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.is_zero()) return Laurent();
    // shift so both are ordinary polynomials, divide, demand zero remainder
    // and integer coefficients
    long sa = a.min_exp(), sb = b.min_exp();
    long da = a.max_exp() - sa, db = b.max_exp() - sb;
    if (da < db) return std::nullopt;
    std::vector<std::pair<long, Int>> den;
    den.reserve(b.terms().size());
    for (const auto& [e, c] : b.terms()) den.emplace_back(e - sb, c);
    const Int& lead = den.back().second;
    if (lead == 1 || lead == -1) {
        // quotient coefficients stay integral at every step
        std::vector<Int> num(da + 1);
        for (const auto& [e, c] : a.terms()) num[e - sa] = c;
        std::vector<Int> quot(da - db + 1);
        for (long i = da; i >= db; --i) {
            if (num[i] == 0) continue;
            Int f = lead == 1 ? num[i] : -num[i];
            quot[i - db] = f;
            for (const auto& [j, c] : den) num[i - db + j] -= f * c;
        }
        for (const Int& r : num)
            if (r != 0) return std::nullopt;
        Laurent out;
        for (long i = 0; i < static_cast<long>(quot.size()); ++i)
            if (quot[i] != 0) out.set(i + sa - sb, quot[i]);
        return out;
    }
    std::vector<Rat> num(da + 1);
    for (const auto& [e, c] : a.terms()) num[e - sa] = Rat(c);
    std::vector<Rat> quot(da - db + 1);
    const Rat rlead(lead);
    for (long i = da; i >= db; --i) {
        if (num[i] == 0) continue;
        Rat f = num[i] / rlead;
        quot[i - db] = f;
        for (const auto& [j, c] : den) num[i - db + j] -= f * Rat(c);
    }
    for (const Rat& r : num)
        if (r != 0) return std::nullopt;
    Laurent out;
    for (long i = 0; i < static_cast<long>(quot.size()); ++i) {
        if (quot[i] == 0) continue;
        if (quot[i].get_den() != 1) return std::nullopt;
        out.set(i + sa - sb, quot[i].get_num());
    }
    return out;
}

Laurent Laurent::rem_by_unit_leading(const Laurent& a, const Laurent& b) {
    if (b.is_zero()) throw std::domain_error("remainder by zero polynomial");
    const Int& lead = b.coeff(b.max_exp());
    if (lead != 1 && lead != -1)
        throw std::domain_error("rem_by_unit_leading needs +-1 leading coefficient");
    if (a.is_zero()) return a;
    if (a.min_exp() < 0 || b.min_exp() < 0)
        throw std::domain_error("rem_by_unit_leading expects ordinary polynomials");
    Laurent r = a;
    long db = b.max_exp();
    while (!r.is_zero() && r.max_exp() >= db) {
        long e = r.max_exp();
        Int f = r.coeff(e) * lead;  // lead is +-1 so this divides exactly
        for (const auto& [eb, cb] : b.terms()) r.add_term(e - db + eb, -f * cb);
    }
    return r;
}

std::string Laurent::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : c_) {
        Int ab = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (e == 0) {
            os << ab.get_str();
        } else {
            if (ab != 1) os << ab.get_str() << "*";
            os << var;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

Laurent poch_linear(long start, long step, long count) {
    if (count < 0) throw std::domain_error("pochhammer count must be nonnegative");
    Laurent r(1);
    for (long j = 0; j < count; ++j) {
        Laurent f(1);
        f.add_term(start + j * step, Int(-1));
        r *= f;
    }
    return r;
}

Laurent gauss_binomial(long a, long b) {
    if (b < 0 || b > a) return Laurent();
    auto q = Laurent::div_exact(poch_q(a), poch_q(b) * poch_q(a - b));
    if (!q) throw std::logic_error("gauss_binomial: non-exact division");
    return *q;
}

}  // namespace djones
