#include "djones/habiro_ring.hpp"

namespace djones {

HabiroTruncation::HabiroTruncation(long level, const Laurent& p) : level_(level) {
    if (level < 1) throw std::domain_error("truncation level must be >= 1");
    const Laurent ideal = poch_q(level);
    Laurent work;
    if (!p.is_zero() && p.min_exp() < 0) {
        // g with (q;q)_level = 1 + q g(q); q^{-1} == -g modulo the ideal
        Laurent g;
        for (const auto& [e, c] : ideal.terms())
            if (e > 0) g.add_term(e - 1, c);
        Laurent qinv = Laurent::rem_by_unit_leading(-g, ideal);
        // replace each q^{-k} by qinv^k, reducing as we go
        long maxneg = -p.min_exp();
        std::vector<Laurent> invpow(maxneg + 1);
        invpow[0] = Laurent(1);
        for (long k = 1; k <= maxneg; ++k)
            invpow[k] = Laurent::rem_by_unit_leading(invpow[k - 1] * qinv, ideal);
        for (const auto& [e, c] : p.terms()) {
            if (e >= 0)
                work.add_term(e, c);
            else
                work += invpow[-e] * Laurent::monomial(c, 0);
        }
    } else {
        work = p;
    }
    rep_ = Laurent::rem_by_unit_leading(work, ideal);
}

HabiroTruncation operator+(const HabiroTruncation& a, const HabiroTruncation& b) {
    if (a.level_ != b.level_) throw std::invalid_argument("truncation level mismatch");
    return HabiroTruncation(a.level_, a.rep_ + b.rep_);
}

HabiroTruncation operator-(const HabiroTruncation& a, const HabiroTruncation& b) {
    if (a.level_ != b.level_) throw std::invalid_argument("truncation level mismatch");
    return HabiroTruncation(a.level_, a.rep_ - b.rep_);
}

HabiroTruncation operator*(const HabiroTruncation& a, const HabiroTruncation& b) {
    if (a.level_ != b.level_) throw std::invalid_argument("truncation level mismatch");
    return HabiroTruncation(a.level_, a.rep_ * b.rep_);
}

bool operator==(const HabiroTruncation& a, const HabiroTruncation& b) {
    if (a.level_ != b.level_) throw std::invalid_argument("truncation level mismatch");
    return a.rep_ == b.rep_;
}

HabiroTruncation HabiroTruncation::at_level(long lower) const {
    if (lower > level_) throw std::invalid_argument("cannot refine a truncation");
    return HabiroTruncation(lower, rep_);
}

Cyclo HabiroTruncation::eval_at_root(const FieldPtr& f, long t) const {
    return djones::eval_at_root(rep_, f, t);
}

}  // namespace djones
