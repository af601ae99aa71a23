#include "djones/cyclotomic.hpp"

#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace djones {

namespace {

// exact division of dense integer polynomials, divisor monic
std::vector<Int> divide_monic(std::vector<Int> num, const std::vector<Int>& den) {
    long dn = static_cast<long>(num.size()) - 1;
    long dd = static_cast<long>(den.size()) - 1;
    if (dn < dd) throw std::logic_error("divide_monic: degree underflow");
    std::vector<Int> quot(dn - dd + 1);
    for (long i = dn; i >= dd; --i) {
        Int f = num[i];
        quot[i - dd] = f;
        if (f == 0) continue;
        for (long j = 0; j <= dd; ++j) num[i - dd + j] -= f * den[j];
    }
    for (const Int& c : num)
        if (c != 0) throw std::logic_error("divide_monic: non-exact division");
    return quot;
}

}  // namespace

std::vector<Int> cyclotomic_polynomial(long N) {
    if (N < 1) throw std::domain_error("cyclotomic order must be positive");
    // x^N - 1 divided by Phi_d for all proper divisors d
    std::vector<Int> p(N + 1);
    p[0] = -1;
    p[N] = 1;
    for (long d = 1; d < N; ++d) {
        if (N % d != 0) continue;
        p = divide_monic(std::move(p), cyclotomic_polynomial(d));
    }
    return p;
}

CycloField::CycloField(long N) : n_(N), phi_(cyclotomic_polynomial(N)) {
    deg_ = static_cast<long>(phi_.size()) - 1;
    // x^{deg+i} mod phi, enough for products of two reduced elements
    fold_.resize(deg_ > 1 ? deg_ - 1 : 0);
    std::vector<Int> cur(deg_);  // start with x^{deg} mod phi = -low part of phi
    for (long j = 0; j < deg_; ++j) cur[j] = -phi_[j];
    for (long i = 0; i < static_cast<long>(fold_.size()); ++i) {
        fold_[i] = cur;
        // multiply by x and reduce
        std::vector<Int> nxt(deg_);
        for (long j = deg_ - 1; j >= 1; --j) nxt[j] = cur[j - 1];
        if (cur[deg_ - 1] != 0)
            for (long j = 0; j < deg_; ++j) nxt[j] += cur[deg_ - 1] * fold_[0][j];
        cur = std::move(nxt);
    }
    zpow_.resize(n_);
    for (long j = 0; j < n_; ++j) {
        std::vector<Int> v(std::max<long>(deg_, j + 1));
        v[j] = 1;
        reduce(v);
        zpow_[j] = std::move(v);
    }
}

void CycloField::reduce(std::vector<Int>& v) const {
    if (static_cast<long>(v.size()) > 2 * deg_ - 1 && deg_ > 0) {
        // rare path (zeta powers during construction): peel from the top
        while (static_cast<long>(v.size()) > deg_) {
            long top = static_cast<long>(v.size()) - 1;
            Int c = std::move(v.back());
            v.pop_back();
            if (c != 0) {
                // x^top = x^{top-deg} * x^{deg}
                for (long j = 0; j < deg_; ++j) {
                    long e = top - deg_ + j;
                    Int add = c * -phi_[j];
                    if (add == 0) continue;
                    if (e >= static_cast<long>(v.size()))
                        throw std::logic_error("reduce: bad shape");
                    v[e] += add;
                }
            }
        }
        v.resize(deg_, Int(0));
        return;
    }
    for (long e = static_cast<long>(v.size()) - 1; e >= deg_; --e) {
        if (v[e] == 0) continue;
        const std::vector<Int>& row = fold_[e - deg_];
        for (long j = 0; j < deg_; ++j) v[j] += v[e] * row[j];
        v[e] = 0;
    }
    v.resize(deg_, Int(0));
}

FieldPtr CycloField::get(long N) {
    static std::mutex mu;
    static std::unordered_map<long, FieldPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
    auto f = std::make_shared<CycloField>(N);
    cache.emplace(N, f);
    return f;
}

Cyclo::Cyclo(FieldPtr f, std::vector<Int> num, Int den)
    : f_(std::move(f)), num_(std::move(num)), den_(std::move(den)) {
    if (!f_) throw std::invalid_argument("Cyclo: null field");
    num_.resize(f_->degree(), Int(0));
    if (den_ == 0) throw std::domain_error("Cyclo: zero denominator");
    normalize();
}

Cyclo Cyclo::from_int(const FieldPtr& f, const Int& v) {
    std::vector<Int> num(f->degree());
    num[0] = v;
    return Cyclo(f, std::move(num), 1);
}

Cyclo Cyclo::from_rat(const FieldPtr& f, const Rat& v) {
    std::vector<Int> num(f->degree());
    num[0] = v.get_num();
    return Cyclo(f, std::move(num), v.get_den());
}

Cyclo Cyclo::zeta(const FieldPtr& f, long e) {
    return Cyclo(f, f->zeta_power_coords(e), 1);
}

bool Cyclo::is_zero() const {
    for (const Int& c : num_)
        if (c != 0) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (std::size_t j = 1; j < num_.size(); ++j)
        if (num_[j] != 0) return false;
    return true;
}

Rat Cyclo::to_rat() const {
    if (!is_rational()) throw std::domain_error("Cyclo value is not rational");
    Rat r(num_.empty() ? Int(0) : num_[0], den_);
    r.canonicalize();
    return r;
}

void Cyclo::normalize() {
    if (den_ < 0) {
        den_ = -den_;
        for (Int& c : num_) c = -c;
    }
    Int g = den_;
    for (const Int& c : num_) {
        if (g == 1) break;
        g = gcd(g, c);
    }
    if (g > 1) {
        den_ /= g;
        for (Int& c : num_) c /= g;
    }
}

static void check_same_field(const Cyclo& a, const Cyclo& b) {
    if (!a.field() || !b.field() || a.field()->order() != b.field()->order())
        throw std::invalid_argument("Cyclo operands from different fields");
}

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
    check_same_field(a, b);
    std::vector<Int> num(a.num_.size());
    for (std::size_t j = 0; j < num.size(); ++j)
        num[j] = a.num_[j] * b.den_ + b.num_[j] * a.den_;
    return Cyclo(a.f_, std::move(num), a.den_ * b.den_);
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) {
    check_same_field(a, b);
    std::vector<Int> num(a.num_.size());
    for (std::size_t j = 0; j < num.size(); ++j)
        num[j] = a.num_[j] * b.den_ - b.num_[j] * a.den_;
    return Cyclo(a.f_, std::move(num), a.den_ * b.den_);
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    check_same_field(a, b);
    long deg = a.f_->degree();
    std::vector<Int> conv(2 * deg - 1);
    for (long i = 0; i < deg; ++i) {
        if (a.num_[i] == 0) continue;
        for (long j = 0; j < deg; ++j) {
            if (b.num_[j] == 0) continue;
            conv[i + j] += a.num_[i] * b.num_[j];
        }
    }
    a.f_->reduce(conv);
    return Cyclo(a.f_, std::move(conv), a.den_ * b.den_);
}

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (Int& c : r.num_) c = -c;
    return r;
}

bool operator==(const Cyclo& a, const Cyclo& b) {
    check_same_field(a, b);
    return a.den_ == b.den_ && a.num_ == b.num_;
}

Cyclo Cyclo::scaled(const Rat& r) const {
    std::vector<Int> num(num_.size());
    for (std::size_t j = 0; j < num.size(); ++j) num[j] = num_[j] * r.get_num();
    return Cyclo(f_, std::move(num), den_ * r.get_den());
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(zeta)");
    long deg = f_->degree();
    // solve (this) * w = 1 by Gaussian elimination; column j of the system
    // is this * zeta^j
    std::vector<std::vector<Rat>> m(deg, std::vector<Rat>(deg + 1));
    for (long j = 0; j < deg; ++j) {
        Cyclo col = *this * Cyclo(f_, f_->zeta_power_coords(j), 1);
        for (long i = 0; i < deg; ++i)
            m[i][j] = Rat(col.num_coords()[i], col.den());
    }
    m[0][deg] = 1;
    for (long col = 0, row = 0; col < deg && row < deg; ++col) {
        long piv = -1;
        for (long r = row; r < deg; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[row]);
        Rat p = m[row][col];
        for (long c = col; c <= deg; ++c) m[row][c] /= p;
        for (long r = 0; r < deg; ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rat f = m[r][col];
            for (long c = col; c <= deg; ++c) m[r][c] -= f * m[row][c];
        }
        ++row;
    }
    // read off solution; the matrix is invertible since the field has no zero divisors
    std::vector<Rat> sol(deg);
    for (long i = 0; i < deg; ++i) {
        long lead = -1;
        for (long j = 0; j < deg; ++j)
            if (m[i][j] != 0) {
                lead = j;
                break;
            }
        if (lead >= 0) sol[lead] = m[i][deg];
    }
    Int den = 1;
    for (const Rat& s : sol) den = lcm(den, Int(s.get_den()));
    std::vector<Int> num(deg);
    for (long j = 0; j < deg; ++j) num[j] = Int(sol[j].get_num()) * (den / Int(sol[j].get_den()));
    return Cyclo(f_, std::move(num), std::move(den));
}

Cyclo Cyclo::conj() const { return galois(f_->order() - 1); }

Cyclo Cyclo::galois(long t) const {
    long n = f_->order();
    t = mod_reduce(t, n);
    if (std::gcd(t, n) != 1) throw std::domain_error("galois exponent not a unit mod N");
    long deg = f_->degree();
    std::vector<Int> out(deg);
    for (long j = 0; j < deg; ++j) {
        if (num_[j] == 0) continue;
        const std::vector<Int>& z = f_->zeta_power_coords(j * t % n);
        for (long i = 0; i < deg; ++i) out[i] += num_[j] * z[i];
    }
    return Cyclo(f_, std::move(out), den_);
}

Cyclo Cyclo::pow(long e) const {
    Cyclo base = e >= 0 ? *this : inverse();
    unsigned long n = e >= 0 ? e : -e;
    Cyclo r = Cyclo::one(f_);
    while (n) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

std::string Cyclo::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < num_.size(); ++j) {
        if (num_[j] == 0) continue;
        Int ab = abs(num_[j]);
        if (first) {
            if (num_[j] < 0) os << "-";
            first = false;
        } else {
            os << (num_[j] < 0 ? " - " : " + ");
        }
        if (j == 0) {
            os << ab.get_str();
        } else {
            if (ab != 1) os << ab.get_str() << "*";
            os << "z";
            if (j != 1) os << "^" << j;
        }
    }
    if (first) return "0";
    std::string s = os.str();
    if (den_ != 1) {
        bool sum = s.find(' ') != std::string::npos;
        s = (sum ? "(" + s + ")" : s) + "/" + den_.get_str();
    }
    return s;
}

Cyclo poch_cyclo(const Cyclo& z, const Cyclo& step, long count) {
    if (count < 0) throw std::domain_error("poch_cyclo count must be nonnegative");
    const FieldPtr& f = z.field();
    Cyclo r = Cyclo::one(f);
    Cyclo zz = z;
    for (long j = 0; j < count; ++j) {
        r *= Cyclo::one(f) - zz;
        zz *= step;
    }
    return r;
}

Cyclo poch_cyclo(const Cyclo& z, long count) {
    return poch_cyclo(z, Cyclo::zeta(z.field()), count);
}

Cyclo zeta_poch(const FieldPtr& f, long t, bool conjugate) {
    Cyclo r = Cyclo::one(f);
    for (long k = 1; k <= t; ++k)
        r *= Cyclo::one(f) - Cyclo::zeta(f, conjugate ? -k : k);
    return r;
}

Cyclo double_angle(const Cyclo& x) {
    const FieldPtr& f = x.field();
    long n = f->order();
    Cyclo s = Cyclo::zero(f);
    Cyclo p = Cyclo::one(f);
    for (long a = 0; a < n; ++a) {
        s += p;
        p *= x;
    }
    return s.scaled(Rat(1, n));
}

Rat double_angle_rat(const Rat& x, long N) {
    Rat s(0), p(1);
    for (long a = 0; a < N; ++a) {
        s += p;
        p *= x;
    }
    return s / Rat(N);
}

Cyclo eval_at_root(const Laurent& p, const FieldPtr& f, long t) {
    Cyclo r = Cyclo::zero(f);
    long n = f->order();
    for (const auto& [e, c] : p.terms()) {
        long ee = mod_reduce(e * t, n);
        r += Cyclo::zeta(f, ee).scaled(Rat(c));
    }
    return r;
}

}  // namespace djones
