#include "djones/rmatrix.hpp"

#include <map>
#include <sstream>

namespace djones {

CMatrix::CMatrix(long rows, long cols, const Cyclo& fill)
    : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

CMatrix CMatrix::identity(const FieldPtr& f, long n) {
    CMatrix m(n, n, Cyclo::zero(f));
    for (long i = 0; i < n; ++i) m.at(i, i) = Cyclo::one(f);
    return m;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
    const FieldPtr& f = a.a_.front().field();
    CMatrix c(a.rows_, b.cols_, Cyclo::zero(f));
    for (long i = 0; i < a.rows_; ++i) {
        for (long k = 0; k < a.cols_; ++k) {
            const Cyclo& av = a.at(i, k);
            if (av.is_zero()) continue;
            for (long j = 0; j < b.cols_; ++j) {
                const Cyclo& bv = b.at(k, j);
                if (bv.is_zero()) continue;
                c.at(i, j) += av * bv;
            }
        }
    }
    return c;
}

bool operator==(const CMatrix& a, const CMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.a_.size(); ++i)
        if (a.a_[i] != b.a_[i]) return false;
    return true;
}

CMatrix CMatrix::scaled(const Cyclo& z) const {
    CMatrix m = *this;
    for (Cyclo& e : m.a_) e *= z;
    return m;
}

CMatrix CMatrix::conjugated() const {
    CMatrix m = *this;
    for (Cyclo& e : m.a_) e = e.conj();
    return m;
}

CMatrix CMatrix::embed(const CMatrix& a, long left_dim, long right_dim) {
    long n = a.rows();
    long dim = left_dim * n * right_dim;
    const FieldPtr& f = a.a_.front().field();
    CMatrix m(dim, dim, Cyclo::zero(f));
    for (long l = 0; l < left_dim; ++l)
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j) {
                if (a.at(i, j).is_zero()) continue;
                for (long r = 0; r < right_dim; ++r)
                    m.at((l * n + i) * right_dim + r, (l * n + j) * right_dim + r) = a.at(i, j);
            }
    return m;
}

CMatrix CMatrix::kron(const CMatrix& a, const CMatrix& b) {
    const FieldPtr& f = a.a_.front().field();
    CMatrix m(a.rows() * b.rows(), a.cols() * b.cols(), Cyclo::zero(f));
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (long k = 0; k < b.rows(); ++k)
                for (long l = 0; l < b.cols(); ++l)
                    m.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
        }
    return m;
}

CMatrix CMatrix::embed13(const CMatrix& a, long n) {
    // a acts on an N^2 space indexed by pairs (p,q); place p on leg 1, q on leg 3
    const FieldPtr& f = a.a_.front().field();
    CMatrix m(n * n * n, n * n * n, Cyclo::zero(f));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            for (long k = 0; k < n; ++k)
                for (long l = 0; l < n; ++l) {
                    const Cyclo& v = a.at(i * n + j, k * n + l);
                    if (v.is_zero()) continue;
                    for (long b = 0; b < n; ++b)
                        m.at(i * n * n + b * n + j, k * n * n + b * n + l) = v;
                }
    return m;
}

Cyclo w_eval(const Cyclo& x, long n) {
    const FieldPtr& f = x.field();
    Cyclo prod = Cyclo::one(f);
    if (n >= 0) {
        for (long k = 1; k <= n; ++k) {
            Cyclo factor = Cyclo::one(f) - x * Cyclo::zeta(f, k);
            if (factor.is_zero()) throw std::domain_error("w(x|n) evaluated at a pole");
            prod *= factor;
        }
        return prod.inverse();
    }
    for (long k = n + 1; k <= 0; ++k)
        prod *= Cyclo::one(f) - x * Cyclo::zeta(f, k);
    return prod;
}

CMatrix h_matrix(const Cyclo& y, long m) {
    const FieldPtr& f = y.field();
    long n = f->order();
    CMatrix h(n, n, Cyclo::zero(f));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            h.at(i, j) = Cyclo::zeta(f, (j - i) * m) * double_angle(y * Cyclo::zeta(f, j - i));
    return h;
}

CMatrix r_spectral(const Cyclo& x, long m, long n) {
    const FieldPtr& f = x.field();
    long N = f->order();
    Cyclo xz = x * Cyclo::zeta(f, -1);
    std::map<long, Cyclo> wx, wxz;
    auto w_of = [](std::map<long, Cyclo>& memo, const Cyclo& base, long t) -> const Cyclo& {
        auto it = memo.find(t);
        if (it == memo.end()) it = memo.emplace(t, w_eval(base, t)).first;
        return it->second;
    };
    Cyclo da = double_angle(x);
    CMatrix r(N * N, N * N, Cyclo::zero(f));
    for (long i = 0; i < N; ++i)
        for (long j = 0; j < N; ++j)
            for (long k = 0; k < N; ++k)
                for (long l = 0; l < N; ++l) {
                    Cyclo v = da * Cyclo::zeta(f, (i - k + n) * (l - j));
                    v *= w_of(wxz, xz, j - i - m);
                    v *= w_of(wx, x, l - k + n);
                    v /= w_of(wxz, xz, j - k + n - m);
                    v /= w_of(wxz, xz, l - i);
                    r.at(i * N + j, k * N + l) = std::move(v);
                }
    return r;
}

Cyclo v_symbol(const FieldPtr& f, long i, long j, long k, long l, bool conjugate) {
    long N = f->order();
    long a = prin(j - i - 1, N), b = prin(l - k, N);
    long c = prin(i - l, N), d = prin(k - j, N);
    if (a + b >= N || c + d >= N) return Cyclo::zero(f);
    Cyclo den = zeta_poch(f, a, !conjugate) * zeta_poch(f, c, conjugate) *
                zeta_poch(f, b, !conjugate) * zeta_poch(f, d, conjugate);
    return Cyclo::from_int(f, N) * den.inverse();
}

CMatrix r_at_one(const FieldPtr& f, long m, long n) {
    long N = f->order();
    CMatrix r(N * N, N * N, Cyclo::zero(f));
    for (long i = 0; i < N; ++i)
        for (long j = 0; j < N; ++j)
            for (long k = 0; k < N; ++k)
                for (long l = 0; l < N; ++l) {
                    Cyclo v = v_symbol(f, i, j - m, k - n, l);
                    if (v.is_zero()) continue;
                    v *= Cyclo::zeta(f, k - l - n + (k - i - n) * m);
                    r.at(i * N + j, k * N + l) = std::move(v);
                }
    return r;
}

CMatrix r_at_one_gauge_oracle(const Cyclo& x, long m, long n) {
    const FieldPtr& f = x.field();
    long N = f->order();
    CMatrix h2a = CMatrix::embed(h_matrix(x, 0), N, 1);
    CMatrix h2b = CMatrix::embed(h_matrix(x.inverse(), 0), N, 1);
    return h2a * r_spectral(x, m, n) * h2b;
}

CMatrix fourier_matrix(const FieldPtr& f) {
    long n = f->order();
    CMatrix m(n, n, Cyclo::zero(f));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) m.at(i, j) = Cyclo::zeta(f, i * j);
    return m;
}

CMatrix fourier_matrix_inverse(const FieldPtr& f) {
    long n = f->order();
    CMatrix m(n, n, Cyclo::zero(f));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            m.at(i, j) = Cyclo::zeta(f, -i * j).scaled(Rat(1, n));
    return m;
}

CMatrix fourier_r_closed_form(const Cyclo& x, long m, long n) {
    const FieldPtr& f = x.field();
    long N = f->order();
    CMatrix r(N * N, N * N, Cyclo::zero(f));
    for (long i = 0; i < N; ++i)
        for (long j = 0; j < N; ++j)
            for (long k = 0; k < N; ++k)
                for (long l = 0; l < N; ++l) {
                    if (l < j) continue;
                    if (prin(i - m - 1, N) + j != prin(k - m - 1, N) + l) continue;
                    Cyclo v = Cyclo::zeta(f, (j - n) * k) * x.pow(l - j);
                    v *= zeta_poch(f, l) * zeta_poch(f, prin(i - m - 1, N));
                    Cyclo den = zeta_poch(f, j) * zeta_poch(f, l - j) *
                                zeta_poch(f, prin(k - m - 1, N));
                    v *= den.inverse();
                    r.at(i * N + j, k * N + l) = std::move(v);
                }
    return r;
}

Cyclo f_function(const Cyclo& x, const Cyclo& y, const Cyclo& z) {
    const FieldPtr& f = x.field();
    long N = f->order();
    Cyclo one = Cyclo::one(f);
    if ((one - y.pow(N)) * z.pow(N) != one - x.pow(N))
        throw std::domain_error("f(x,y|z): constraint (1-y^N) z^N = 1-x^N violated");
    Cyclo s = Cyclo::zero(f);
    for (long a = 0; a < N; ++a)
        s += w_eval(x, a) / w_eval(y, a) * z.pow(a);
    return s;
}

// ---------------------------------------------------------------------------
// identity suites

namespace {

std::string tag(long N, std::initializer_list<std::pair<const char*, long>> kv) {
    std::ostringstream os;
    os << "N=" << N;
    for (const auto& [k, v] : kv) os << " " << k << "=" << v;
    return os.str();
}

// integer-scaled matrices over Z[zeta]: one shared convention for products so
// both sides of an identity carry the same scalar
struct ZMat {
    long n = 0;
    long deg = 0;
    std::vector<Int> a;    // n*n*deg, row major
    std::vector<char> nz;  // n*n
};

ZMat scale_matrix(const CMatrix& m) {
    ZMat z;
    z.n = m.rows();
    const FieldPtr& f = m.at(0, 0).field();
    z.deg = f->degree();
    Int l = 1;
    for (long r = 0; r < z.n; ++r)
        for (long c = 0; c < z.n; ++c) l = lcm(l, m.at(r, c).den());
    z.a.assign(z.n * z.n * z.deg, Int(0));
    z.nz.assign(z.n * z.n, 0);
    for (long r = 0; r < z.n; ++r)
        for (long c = 0; c < z.n; ++c) {
            const Cyclo& e = m.at(r, c);
            Int s = l / e.den();
            bool any = false;
            for (long d = 0; d < z.deg; ++d) {
                Int v = e.num_coords()[d] * s;
                if (v != 0) any = true;
                z.a[(r * z.n + c) * z.deg + d] = std::move(v);
            }
            z.nz[r * z.n + c] = any ? 1 : 0;
        }
    return z;
}

ZMat zmul(const CycloField& f, const ZMat& A, const ZMat& B) {
    ZMat C;
    C.n = A.n;
    C.deg = A.deg;
    C.a.assign(C.n * C.n * C.deg, Int(0));
    C.nz.assign(C.n * C.n, 0);
    std::vector<std::vector<long>> rownz(A.n);
    for (long r = 0; r < A.n; ++r)
        for (long s = 0; s < A.n; ++s)
            if (A.nz[r * A.n + s]) rownz[r].push_back(s);
    std::vector<Int> conv;
    for (long r = 0; r < C.n; ++r) {
        for (long c = 0; c < C.n; ++c) {
            conv.assign(2 * C.deg - 1, Int(0));
            bool any = false;
            for (long s : rownz[r]) {
                if (!B.nz[s * B.n + c]) continue;
                any = true;
                const Int* pa = &A.a[(r * A.n + s) * A.deg];
                const Int* pb = &B.a[(s * B.n + c) * B.deg];
                for (long i = 0; i < C.deg; ++i) {
                    if (pa[i] == 0) continue;
                    for (long j = 0; j < C.deg; ++j) {
                        if (pb[j] == 0) continue;
                        conv[i + j] += pa[i] * pb[j];
                    }
                }
            }
            if (!any) continue;
            f.reduce(conv);
            bool nz = false;
            for (long d = 0; d < C.deg; ++d) {
                if (conv[d] != 0) nz = true;
                C.a[(r * C.n + c) * C.deg + d] = conv[d];
            }
            C.nz[r * C.n + c] = nz ? 1 : 0;
        }
    }
    return C;
}

bool yb_triple(const CycloField& f, const ZMat& e12, const ZMat& e13, const ZMat& e23) {
    ZMat lhs = zmul(f, zmul(f, e12, e13), e23);
    ZMat rhs = zmul(f, zmul(f, e23, e13), e12);
    return lhs.a == rhs.a;
}

Report yang_baxter_report(long N, const std::string& what,
                          const std::function<CMatrix(long, long)>& r_x,
                          const std::function<CMatrix(long, long)>& r_xy,
                          const std::function<CMatrix(long, long)>& r_y) {
    Report rep;
    rep.title = "Yang-Baxter " + what;
    FieldPtr f = CycloField::get(N);
    std::vector<ZMat> e12(N * N), e13(N * N), e23(N * N);
    for (long a = 0; a < N; ++a)
        for (long b = 0; b < N; ++b) {
            e12[a * N + b] = scale_matrix(CMatrix::embed(r_x(a, b), 1, N));
            e13[a * N + b] = scale_matrix(CMatrix::embed13(r_xy(a, b), N));
            e23[a * N + b] = scale_matrix(CMatrix::embed(r_y(a, b), N, 1));
        }
    for (long m1 = 0; m1 < N; ++m1)
        for (long m2 = 0; m2 < N; ++m2)
            for (long m3 = 0; m3 < N; ++m3) {
                bool ok = yb_triple(*f, e12[m1 * N + m2], e13[m1 * N + m3], e23[m2 * N + m3]);
                std::ostringstream label;
                label << what << " N=" << N << " m=(" << m1 << "," << m2 << "," << m3 << ")";
                rep.add(ok, label.str(), ok ? "equal" : "unequal", "equal");
            }
    return rep;
}

}  // namespace

Report check_w_properties(long N, const Rat& x) {
    Report rep;
    rep.title = "w-function properties";
    FieldPtr f = CycloField::get(N);
    Cyclo xc = Cyclo::from_rat(f, x);
    Cyclo one = Cyclo::one(f);
    bool rec = true, add = true, quasi = true;
    for (long n = -2 * N; n <= 2 * N; ++n)
        rec = rec && w_eval(xc, n) * (one - xc * Cyclo::zeta(f, n)) == w_eval(xc, n - 1);
    for (long m = -N; m <= N; ++m)
        for (long n = -N; n <= N; ++n)
            add = add &&
                  w_eval(xc, m + n) == w_eval(xc, m) * w_eval(xc * Cyclo::zeta(f, m), n);
    Cyclo xn = one - xc.pow(N);
    for (long n = -N; n <= N; ++n)
        quasi = quasi && xn * w_eval(xc, n + N) == w_eval(xc, n);
    rep.add(rec, tag(N, {{"recurrence", 0}}), "", "");
    rep.add(add, tag(N, {{"addition", 0}}), "", "");
    rep.add(quasi, tag(N, {{"quasi-periodicity", 0}}), "", "");
    rep.add(w_eval(xc, N) == xn.inverse(), tag(N, {{"w(x|N)", 0}}), w_eval(xc, N).str(),
            xn.inverse().str());
    return rep;
}

Report check_gauge_identities(long N, const Rat& x, const Rat& y) {
    Report rep;
    rep.title = "gauge identities";
    FieldPtr f = CycloField::get(N);
    Cyclo xc = Cyclo::from_rat(f, x), yc = Cyclo::from_rat(f, y);
    for (long m = 0; m < N; ++m) {
        bool ok = h_matrix(xc, m) * h_matrix(yc, m) == h_matrix(xc * yc, m);
        rep.add(ok, tag(N, {{"h-multiplicative m", m}}), "", "");
    }
    for (long m = 0; m < N; ++m)
        for (long n = 0; n < N; ++n) {
            CMatrix r = r_spectral(xc, m, n);
            CMatrix rxy = r_spectral(xc * yc, m, n);
            CMatrix h1a = CMatrix::embed(h_matrix(yc, m + 1), 1, N);
            CMatrix h1b = CMatrix::embed(h_matrix(yc.inverse(), m + 1), 1, N);
            CMatrix h2a = CMatrix::embed(h_matrix(yc.inverse(), 0), N, 1);
            CMatrix h2b = CMatrix::embed(h_matrix(yc, 0), N, 1);
            rep.add(h1a * r * h1b == rxy, tag(N, {{"h1-route m", m}, {"n", n}}), "", "");
            rep.add(h2a * r * h2b == rxy, tag(N, {{"h2-route m", m}, {"n", n}}), "", "");
        }
    return rep;
}

Report check_fourier_h(long N, const Rat& x) {
    Report rep;
    rep.title = "Fourier diagonalization of h";
    FieldPtr f = CycloField::get(N);
    Cyclo xc = Cyclo::from_rat(f, x);
    CMatrix F = fourier_matrix(f), Fi = fourier_matrix_inverse(f);
    for (long m = 0; m < N; ++m) {
        CMatrix got = F * h_matrix(xc, m) * Fi;
        CMatrix want(N, N, Cyclo::zero(f));
        for (long j = 0; j < N; ++j) want.at(j, j) = xc.pow(prin(j - m, N));
        rep.add(got == want, tag(N, {{"diag m", m}}), "", "");
    }
    return rep;
}

Report check_r_at_one(long N, const Rat& x) {
    Report rep;
    rep.title = "r(1;m,n) closed form against the gauge-limit oracle";
    FieldPtr f = CycloField::get(N);
    Cyclo xc = Cyclo::from_rat(f, x);
    for (long m = 0; m < N; ++m)
        for (long n = 0; n < N; ++n) {
            bool ok = r_at_one(f, m, n) == r_at_one_gauge_oracle(xc, m, n);
            rep.add(ok, tag(N, {{"m", m}, {"n", n}}), "", "");
        }
    return rep;
}

Report check_fourier_r(long N, const Rat& x) {
    Report rep;
    rep.title = "Fourier transform of r against the closed form";
    FieldPtr f = CycloField::get(N);
    Cyclo xc = Cyclo::from_rat(f, x);
    CMatrix FF = CMatrix::kron(fourier_matrix(f), fourier_matrix(f));
    CMatrix FFi = CMatrix::kron(fourier_matrix_inverse(f), fourier_matrix_inverse(f));
    for (long m = 0; m < N; ++m)
        for (long n = 0; n < N; ++n) {
            CMatrix got = FF * r_spectral(xc, m, n) * FFi;
            bool ok = got == fourier_r_closed_form(xc, m, n);
            rep.add(ok, tag(N, {{"m", m}, {"n", n}}), "", "");
        }
    return rep;
}

Report check_f_special_values(long N, const Rat& x) {
    Report rep;
    rep.title = "f-function special values";
    FieldPtr f = CycloField::get(N);
    Cyclo xc = Cyclo::from_rat(f, x);
    Cyclo da = double_angle(xc);
    for (long a = -2; a <= N + 1; ++a)
        for (long b = -2; b <= N + 1; ++b) {
            Cyclo lhs = f_function(xc * Cyclo::zeta(f, a), xc * Cyclo::zeta(f, -1),
                                   Cyclo::zeta(f, -b));
            Cyclo rhs = xc.pow(prin(b, N)) *
                        (da * w_eval(xc, prin(a, N))).inverse() *
                        zeta_poch(f, prin(a, N) + prin(b, N)) *
                        (zeta_poch(f, prin(a, N)) * zeta_poch(f, prin(b, N))).inverse();
            rep.add(lhs == rhs, tag(N, {{"a", a}, {"b", b}}), lhs.str(), rhs.str());
        }
    return rep;
}

Report check_q_binomial(long N, const Rat& z) {
    Report rep;
    rep.title = "q-binomial identity at q=zeta";
    FieldPtr f = CycloField::get(N);
    Cyclo zc = Cyclo::from_rat(f, z);
    for (long s = 0; s < N; ++s) {
        Cyclo lhs = poch_cyclo(zc, s);
        Cyclo rhs = Cyclo::zero(f);
        for (long t = 0; t <= s; ++t) {
            Cyclo term = (-zc).pow(t) * Cyclo::zeta(f, t * (t - 1) / 2);
            term *= zeta_poch(f, s) * (zeta_poch(f, t) * zeta_poch(f, s - t)).inverse();
            rhs += term;
        }
        rep.add(lhs == rhs, tag(N, {{"s", s}}), lhs.str(), rhs.str());
    }
    return rep;
}

Report check_yang_baxter(long N, const Rat& x, const Rat& y) {
    FieldPtr f = CycloField::get(N);
    Cyclo xc = Cyclo::from_rat(f, x), yc = Cyclo::from_rat(f, y);
    Cyclo xy = xc * yc;
    std::ostringstream what;
    what << "x=" << x.get_str() << " y=" << y.get_str();
    return yang_baxter_report(
        N, what.str(), [&](long a, long b) { return r_spectral(xc, a, b); },
        [&](long a, long b) { return r_spectral(xy, a, b); },
        [&](long a, long b) { return r_spectral(yc, a, b); });
}

Report check_yang_baxter_at_one(long N) {
    FieldPtr f = CycloField::get(N);
    auto r1 = [&](long a, long b) { return r_at_one(f, a, b); };
    return yang_baxter_report(N, "x=y=1", r1, r1, r1);
}

}  // namespace djones
