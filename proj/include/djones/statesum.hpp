// Sliced long-knot diagrams and the exact transfer contraction computing the
// matrix invariant <D>_{N,n} from local crossing, segment and extremum
// weights.
#ifndef DJONES_STATESUM_HPP
#define DJONES_STATESUM_HPP

#include <optional>
#include <string>
#include <vector>

#include "djones/cyclotomic.hpp"
#include "djones/habiro.hpp"
#include "djones/report.hpp"
#include "djones/rmatrix.hpp"

namespace djones {

enum class EventKind { X1p, X2p, X3p, X4p, X1n, X2n, X3n, X4n, Cup, Cap, Id };

const char* event_code(EventKind k);
EventKind event_from_code(const std::string& code);
bool is_crossing(EventKind k);
int crossing_sign(EventKind k);  // +1 / -1, crossings only

struct Slice {
    EventKind ev = EventKind::Id;
    long pos = 0;
    // strand orientations above this slice, 'u'/'d'; required after a cup,
    // optional (verified) elsewhere
    std::optional<std::string> orient;
};

struct LongKnotDiagram {
    std::string name;
    std::vector<Slice> slices;
};

struct ValidatedDiagram {
    LongKnotDiagram d;
    std::vector<std::string> levels;  // orientations between slices, bottom to top
    long max_strands = 0;
};

// checks strand-count chaining, orientation consistency, zero writhe and the
// long-knot boundary condition; throws std::invalid_argument on violations
ValidatedDiagram validate_diagram(const LongKnotDiagram& d);

LongKnotDiagram diagram_from_json_text(const std::string& text);
std::string diagram_to_json_text(const LongKnotDiagram& d);
// built-ins: "4_1", "4_1_kinked", "3_1_balanced", "unknot", "unknot_kinks"
LongKnotDiagram builtin_diagram(const std::string& name);

// weight of one crossing in role indices (i,j,k,l), per matched display
Cyclo crossing_weight(const FieldPtr& f, EventKind kind, long i, long j, long k, long l,
                      long m, long n);
// the same weight addressed by corner colors (sw, se below; nw, ne above)
Cyclo crossing_weight_corners(const FieldPtr& f, EventKind kind, long sw, long se, long nw,
                              long ne, long m, long n);
// segment and extremum weights are Kronecker deltas
inline Cyclo segment_weight(const FieldPtr& f, long i, long j) {
    return i == j ? Cyclo::one(f) : Cyclo::zero(f);
}

// <D>_{N,n}: entry (i,j) pairs outgoing color i with incoming color j
CMatrix contract(const ValidatedDiagram& vd, long N, long n);

// the reduced seven-fold sum for the 4_1 diagram, used as an oracle
CMatrix naive_sum_41(long N, long n);

Report conjecture2_check(const HabiroSequence& seq, const ValidatedDiagram& vd, long N,
                         long n);
Report invariance_check(const ValidatedDiagram& d1, const ValidatedDiagram& d2, long N);

// entries of <D>_{N,n} lie in Z[1/N, zeta]: true when every denominator's
// prime factors divide N
bool entries_in_zn_ring(const CMatrix& m, long N);

}  // namespace djones

#endif
