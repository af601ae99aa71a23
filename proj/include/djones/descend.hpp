// The three-parameter descendant family: colored values, the x-symbolic
// expansion, Habiro-ring truncations, root-of-unity evaluations, the 5_2
// double-sum descendants and their linear identities.
#ifndef DJONES_DESCEND_HPP
#define DJONES_DESCEND_HPP

#include <vector>

#include "djones/cyclotomic.hpp"
#include "djones/habiro.hpp"
#include "djones/habiro_ring.hpp"
#include "djones/report.hpp"

namespace djones {

// DJ^{(m)}_n(q) = sum_{k<n} c_{n,k}(q) H_k(q) q^{km}, n >= 1
Laurent dj_colored(const HabiroSequence& seq, long m, long n);
// the first kmax terms c_k(x,q) H_k(q) q^{km} of DJ^{(m)}(x,q)
std::vector<BiLaurent> dj_x_terms(const HabiroSequence& seq, long m, long kmax);
// DJ^{(m)}(q) truncated at the given level
HabiroTruncation dj_habiro(const HabiroSequence& seq, long m, long level);
// DJ^{(m)}(zeta_N^twist), an exact finite sum
Cyclo dj_eval_root(const HabiroSequence& seq, long m, long N, long twist = 1);

// descendants of the mirror knot
Laurent mirror_dj_colored(const HabiroSequence& seq, long m, long n);

// the 5_2 double-sum descendants DJ_{a,b}
Cyclo dj_ab_52_root(long a, long b, long N, long twist = 1);
HabiroTruncation dj_ab_52_trunc(long a, long b, long level);

// the five linear identities between DJ_{a,b} and {1, DJ^{(0)}, DJ^{(1)},
// DJ^{(2)}} for 5_2, checked in truncations and at roots of unity
Report verify_52_identities(const std::vector<long>& levels, const std::vector<long>& roots);

// recover (zeta;zeta)_k (zeta^{-1};zeta^{-1})_k H_k(zeta) from the root
// evaluations DJ^{(m)}(zeta), m = 0..N-1, by inverse discrete Fourier transform
std::vector<Cyclo> fourier_recover_kernel_habiro(const HabiroSequence& seq, long N);

}  // namespace djones

#endif
