// Sparse Laurent polynomials in q and x with integer coefficients.
#ifndef DJONES_BILAURENT_HPP
#define DJONES_BILAURENT_HPP

#include <map>
#include <string>
#include <utility>

#include "djones/laurent.hpp"

namespace djones {

// c * q^qe * x^xe
struct Monomial {
    Int c = 1;
    long qe = 0;
    long xe = 0;
};

class BiLaurent {
  public:
    BiLaurent() = default;
    BiLaurent(long value) { set(0, 0, Int(value)); }  // NOLINT
    BiLaurent(const Int& value) { set(0, 0, value); }
    BiLaurent(const Monomial& m) { set(m.qe, m.xe, m.c); }  // NOLINT
    static BiLaurent from_q(const Laurent& p);
    static BiLaurent q(long e = 1) { return BiLaurent(Monomial{1, e, 0}); }
    static BiLaurent x(long e = 1) { return BiLaurent(Monomial{1, 0, e}); }

    bool is_zero() const { return c_.empty(); }
    const std::map<std::pair<long, long>, Int>& terms() const { return c_; }

    BiLaurent& operator+=(const BiLaurent& o);
    BiLaurent& operator-=(const BiLaurent& o);
    BiLaurent operator-() const;
    friend BiLaurent operator+(BiLaurent a, const BiLaurent& b) { return a += b; }
    friend BiLaurent operator-(BiLaurent a, const BiLaurent& b) { return a -= b; }
    friend BiLaurent operator*(const BiLaurent& a, const BiLaurent& b);
    BiLaurent& operator*=(const BiLaurent& o) { return *this = *this * o; }
    friend bool operator==(const BiLaurent& a, const BiLaurent& b) { return a.c_ == b.c_; }
    friend bool operator!=(const BiLaurent& a, const BiLaurent& b) { return !(a == b); }

    Laurent subst_x_qpow(long a) const;  // x -> q^a, result univariate in q
    BiLaurent invert_q() const;          // q -> q^{-1}
    BiLaurent invert_x() const;          // x -> x^{-1}
    BiLaurent pow(unsigned long e) const;
    Laurent as_univariate_q() const;     // requires no x dependence

    std::string str() const;

    void set(long qe, long xe, const Int& c) {
        if (c == 0)
            c_.erase({qe, xe});
        else
            c_[{qe, xe}] = c;
    }
    void add_term(long qe, long xe, const Int& c) {
        if (c == 0) return;
        auto key = std::make_pair(qe, xe);
        auto it = c_.find(key);
        if (it == c_.end()) {
            c_.emplace(key, c);
        } else {
            it->second += c;
            if (it->second == 0) c_.erase(it);
        }
    }

  private:
    std::map<std::pair<long, long>, Int> c_;
};

// prod_{j=0}^{count-1} (1 - z * step^j) for monomials z, step
BiLaurent pochhammer(const Monomial& z, const Monomial& step, long count);

}  // namespace djones

#endif
