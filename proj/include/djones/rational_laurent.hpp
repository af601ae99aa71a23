// Quotients of Laurent polynomials, compared by cross-multiplication.
#ifndef DJONES_RATIONAL_LAURENT_HPP
#define DJONES_RATIONAL_LAURENT_HPP

#include "djones/laurent.hpp"

namespace djones {

class RationalLaurent {
  public:
    RationalLaurent() : num_(), den_(1) {}
    RationalLaurent(Laurent num) : num_(std::move(num)), den_(1) {}  // NOLINT
    RationalLaurent(Laurent num, Laurent den);

    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RationalLaurent operator+(const RationalLaurent& a, const RationalLaurent& b);
    friend RationalLaurent operator*(const RationalLaurent& a, const RationalLaurent& b);
    RationalLaurent& operator+=(const RationalLaurent& o) { return *this = *this + o; }
    RationalLaurent& operator*=(const RationalLaurent& o) { return *this = *this * o; }
    friend bool operator==(const RationalLaurent& a, const RationalLaurent& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RationalLaurent& a, const RationalLaurent& b) {
        return !(a == b);
    }

    // exact cancellation to a Laurent polynomial; throws when the value is not one
    Laurent to_laurent() const;

  private:
    Laurent num_, den_;
};

}  // namespace djones

#endif
