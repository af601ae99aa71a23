#include "djones/rational_laurent.hpp"

namespace djones {

RationalLaurent::RationalLaurent(Laurent num, Laurent den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RationalLaurent: zero denominator");
}

RationalLaurent operator+(const RationalLaurent& a, const RationalLaurent& b) {
    return RationalLaurent(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalLaurent operator*(const RationalLaurent& a, const RationalLaurent& b) {
    return RationalLaurent(a.num_ * b.num_, a.den_ * b.den_);
}

Laurent RationalLaurent::to_laurent() const {
    auto q = Laurent::div_exact(num_, den_);
    if (!q) throw std::domain_error("RationalLaurent does not cancel to a Laurent polynomial");
    return *q;
}

}  // namespace djones
