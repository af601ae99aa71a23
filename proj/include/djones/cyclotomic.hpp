// Exact arithmetic in Q(zeta_N), elements stored in the power basis modulo
// the N-th cyclotomic polynomial.
#ifndef DJONES_CYCLOTOMIC_HPP
#define DJONES_CYCLOTOMIC_HPP

#include <memory>
#include <string>
#include <vector>

#include "djones/laurent.hpp"

namespace djones {

class CycloField;
using FieldPtr = std::shared_ptr<const CycloField>;

class CycloField {
  public:
    // shared, cached per order
    static FieldPtr get(long N);

    long order() const { return n_; }
    long degree() const { return deg_; }
    const std::vector<Int>& cyclotomic_poly() const { return phi_; }
    // coordinates of zeta^{j mod N} in the power basis
    const std::vector<Int>& zeta_power_coords(long j) const {
        return zpow_[mod_reduce(j, n_)];
    }
    // fold a raw convolution (size <= 2*deg-1) back to basis length
    void reduce(std::vector<Int>& v) const;

    explicit CycloField(long N);  // use get()

  private:
    long n_ = 0;
    long deg_ = 0;
    std::vector<Int> phi_;                    // dense, monic, degree deg_
    std::vector<std::vector<Int>> fold_;      // x^{deg+i} mod phi
    std::vector<std::vector<Int>> zpow_;      // zeta^j reduced, j in [0,N)
};

// dense integer cyclotomic polynomial Phi_N
std::vector<Int> cyclotomic_polynomial(long N);

class Cyclo {
  public:
    Cyclo() = default;  // usable only as a placeholder
    Cyclo(FieldPtr f, std::vector<Int> num, Int den);
    static Cyclo zero(const FieldPtr& f) { return from_int(f, 0); }
    static Cyclo one(const FieldPtr& f) { return from_int(f, 1); }
    static Cyclo from_int(const FieldPtr& f, const Int& v);
    static Cyclo from_rat(const FieldPtr& f, const Rat& v);
    static Cyclo zeta(const FieldPtr& f, long e = 1);

    const FieldPtr& field() const { return f_; }
    bool is_zero() const;
    bool is_rational() const;
    Rat to_rat() const;  // throws if not rational
    const std::vector<Int>& num_coords() const { return num_; }
    const Int& den() const { return den_; }

    friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }
    Cyclo operator-() const;
    Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
    Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
    Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }
    Cyclo& operator/=(const Cyclo& o) { return *this = *this / o; }
    friend bool operator==(const Cyclo& a, const Cyclo& b);
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

    Cyclo scaled(const Rat& r) const;
    Cyclo inverse() const;           // throws on zero
    Cyclo conj() const;              // zeta -> zeta^{N-1}
    Cyclo galois(long t) const;      // zeta -> zeta^t (t must be a unit mod N)
    Cyclo pow(long e) const;

    std::string str() const;

  private:
    void normalize();
    FieldPtr f_;
    std::vector<Int> num_;  // length degree
    Int den_ = 1;           // > 0
};

// (z; step)_count = prod_{j=0}^{count-1} (1 - z step^j), count >= 0
Cyclo poch_cyclo(const Cyclo& z, const Cyclo& step, long count);
// (z; zeta)_count
Cyclo poch_cyclo(const Cyclo& z, long count);
// (zeta)_t = (zeta;zeta)_t = prod_{k=1}^{t} (1 - zeta^k); conjugate variant uses zeta^{-1}
Cyclo zeta_poch(const FieldPtr& f, long t, bool conjugate = false);
// <<x>>_N = (1/N) sum_{a=0}^{N-1} x^a
Cyclo double_angle(const Cyclo& x);
Rat double_angle_rat(const Rat& x, long N);
// p(zeta^t)
Cyclo eval_at_root(const Laurent& p, const FieldPtr& f, long t = 1);

}  // namespace djones

#endif
