// Sparse Laurent polynomials in one variable with integer coefficients.
#ifndef DJONES_LAURENT_HPP
#define DJONES_LAURENT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "djones/numbers.hpp"

namespace djones {

class Laurent {
  public:
    Laurent() = default;
    Laurent(long value) { set(0, Int(value)); }  // NOLINT: implicit on purpose
    Laurent(const Int& value) { set(0, value); }
    static Laurent monomial(const Int& c, long e) {
        Laurent p;
        p.set(e, c);
        return p;
    }
    static Laurent q(long e = 1) { return monomial(1, e); }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    const std::map<long, Int>& terms() const { return c_; }
    const Int& coeff(long e) const;
    long min_exp() const;  // throws on zero
    long max_exp() const;

    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent operator-() const;
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
    friend bool operator==(const Laurent& a, const Laurent& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

    Laurent shifted(long e) const;              // multiply by q^e
    Laurent inverted_variable() const;          // q -> q^{-1}
    Laurent pow(unsigned long e) const;
    Rat eval_rat(const Rat& x) const;

    // exact division; nullopt when the quotient is not a Laurent polynomial over Z
    static std::optional<Laurent> div_exact(const Laurent& a, const Laurent& b);
    // remainder of a by b (negative exponents cleared first is the caller's job);
    // b must have invertible (+-1) leading coefficient
    static Laurent rem_by_unit_leading(const Laurent& a, const Laurent& b);

    std::string str(const std::string& var = "q") const;

    void set(long e, const Int& c) {
        if (c == 0)
            c_.erase(e);
        else
            c_[e] = c;
    }
    void add_term(long e, const Int& c) {
        if (c == 0) return;
        auto it = c_.find(e);
        if (it == c_.end()) {
            c_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) c_.erase(it);
        }
    }

  private:
    std::map<long, Int> c_;
};

// prod_{j=0}^{count-1} (1 - q^{start + j*step})
Laurent poch_linear(long start, long step, long count);
// (q;q)_n
inline Laurent poch_q(long n) { return poch_linear(1, 1, n); }
// (q^{-1};q^{-1})_n
inline Laurent poch_qinv(long n) { return poch_linear(-1, -1, n); }
// Gaussian binomial [a, b]_q = (q;q)_a / ((q;q)_b (q;q)_{a-b}); zero outside 0 <= b <= a
Laurent gauss_binomial(long a, long b);

}  // namespace djones

#endif
