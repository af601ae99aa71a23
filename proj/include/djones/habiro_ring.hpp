// Laurent polynomials modulo the ideal ((q;q)_n): a finite-level model of the
// Habiro ring. Negative powers of q are cleared through the unit inverse
// q^{-1} = -g(q) coming from (q;q)_n = 1 + q g(q), so everything stays over Z.
#ifndef DJONES_HABIRO_RING_HPP
#define DJONES_HABIRO_RING_HPP

#include "djones/cyclotomic.hpp"
#include "djones/laurent.hpp"

namespace djones {

class HabiroTruncation {
  public:
    HabiroTruncation(long level, const Laurent& p);

    long level() const { return level_; }
    // canonical representative: nonnegative exponents, degree below
    // deg (q;q)_level
    const Laurent& rep() const { return rep_; }

    friend HabiroTruncation operator+(const HabiroTruncation& a, const HabiroTruncation& b);
    friend HabiroTruncation operator-(const HabiroTruncation& a, const HabiroTruncation& b);
    friend HabiroTruncation operator*(const HabiroTruncation& a, const HabiroTruncation& b);
    friend bool operator==(const HabiroTruncation& a, const HabiroTruncation& b);
    friend bool operator!=(const HabiroTruncation& a, const HabiroTruncation& b) {
        return !(a == b);
    }

    HabiroTruncation at_level(long lower) const;  // project to a coarser level
    Cyclo eval_at_root(const FieldPtr& f, long t = 1) const;

  private:
    long level_;
    Laurent rep_;
};

inline HabiroTruncation habiro_reduce(const Laurent& p, long level) {
    return HabiroTruncation(level, p);
}

}  // namespace djones

#endif
