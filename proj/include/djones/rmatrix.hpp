// Root-of-unity R-matrices with discrete and continuous spectral parameters:
// w-functions, gauge matrices, the closed form at x = 1 through V-symbols,
// Fourier diagonalization, and the identity suites that certify them.
#ifndef DJONES_RMATRIX_HPP
#define DJONES_RMATRIX_HPP

#include <vector>

#include "djones/cyclotomic.hpp"
#include "djones/report.hpp"

namespace djones {

// principal residue of k mod N, in [0, N)
inline long prin(long k, long N) { return mod_reduce(k, N); }
// 1 when k already lies in [0, N), else 0
inline long hev(long k, long N) { return k == prin(k, N) ? 1 : 0; }

// dense matrix over Q(zeta)
class CMatrix {
  public:
    CMatrix() = default;
    CMatrix(long rows, long cols, const Cyclo& fill);
    static CMatrix identity(const FieldPtr& f, long n);

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    Cyclo& at(long r, long c) { return a_[r * cols_ + c]; }
    const Cyclo& at(long r, long c) const { return a_[r * cols_ + c]; }

    friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
    friend bool operator==(const CMatrix& a, const CMatrix& b);
    friend bool operator!=(const CMatrix& a, const CMatrix& b) { return !(a == b); }
    CMatrix scaled(const Cyclo& z) const;
    CMatrix conjugated() const;

    // id (x) a (x) id with the given slot sizes
    static CMatrix embed(const CMatrix& a, long left_dim, long right_dim);
    static CMatrix kron(const CMatrix& a, const CMatrix& b);
    // act on tensor slots 1 and 3 of three N-dimensional factors
    static CMatrix embed13(const CMatrix& a, long n);

  private:
    long rows_ = 0, cols_ = 0;
    std::vector<Cyclo> a_;
};

// w(x|n): w(x|0) = 1, w(x|n)(1 - x zeta^n) = w(x|n-1); throws on a pole
Cyclo w_eval(const Cyclo& x, long n);

// <i|h(y,m)|j> = zeta^{(j-i)m} <<y zeta^{j-i}>>_N
CMatrix h_matrix(const Cyclo& y, long m);

// the N^2 x N^2 spectral matrix r(x;m,n); rows (i,j), columns (k,l), both
// in lexicographic order
CMatrix r_spectral(const Cyclo& x, long m, long n);

// V_{i,j,k,l}(zeta), conjugate flag swaps zeta and its inverse
Cyclo v_symbol(const FieldPtr& f, long i, long j, long k, long l, bool conjugate = false);

// closed form of r(1;m,n)
CMatrix r_at_one(const FieldPtr& f, long m, long n);
// limit through the gauge symmetry: h_2(x,0) r(x;m,n) h_2(x^{-1},0)
CMatrix r_at_one_gauge_oracle(const Cyclo& x, long m, long n);

// discrete Fourier matrix <i|F|j> = zeta^{ij} and its inverse
CMatrix fourier_matrix(const FieldPtr& f);
CMatrix fourier_matrix_inverse(const FieldPtr& f);

// closed form of (F (x) F) r(x;m,n) (F^{-1} (x) F^{-1}) evaluated at x
CMatrix fourier_r_closed_form(const Cyclo& x, long m, long n);

// f(x,y|z) = sum_{a=0}^{N-1} w(x|a)/w(y|a) z^a, requires (1-y^N) z^N = 1-x^N
Cyclo f_function(const Cyclo& x, const Cyclo& y, const Cyclo& z);

// identity suites
Report check_w_properties(long N, const Rat& x);
Report check_gauge_identities(long N, const Rat& x, const Rat& y);
Report check_fourier_h(long N, const Rat& x);
Report check_r_at_one(long N, const Rat& x);
Report check_fourier_r(long N, const Rat& x);
Report check_f_special_values(long N, const Rat& x);
Report check_q_binomial(long N, const Rat& z);
Report check_yang_baxter(long N, const Rat& x, const Rat& y);
Report check_yang_baxter_at_one(long N);

}  // namespace djones

#endif
