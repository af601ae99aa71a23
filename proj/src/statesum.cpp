#include "djones/statesum.hpp"

#include <functional>
#include <json.hpp>
#include <sstream>

#include "djones/serialize.hpp"

namespace djones {

using nlohmann::json;

const char* event_code(EventKind k) {
    switch (k) {
        case EventKind::X1p: return "X1+";
        case EventKind::X2p: return "X2+";
        case EventKind::X3p: return "X3+";
        case EventKind::X4p: return "X4+";
        case EventKind::X1n: return "X1-";
        case EventKind::X2n: return "X2-";
        case EventKind::X3n: return "X3-";
        case EventKind::X4n: return "X4-";
        case EventKind::Cup: return "cup";
        case EventKind::Cap: return "cap";
        case EventKind::Id: return "id";
    }
    throw std::logic_error("bad event kind");
}

EventKind event_from_code(const std::string& code) {
    static const std::pair<const char*, EventKind> table[] = {
        {"X1+", EventKind::X1p}, {"X2+", EventKind::X2p}, {"X3+", EventKind::X3p},
        {"X4+", EventKind::X4p}, {"X1-", EventKind::X1n}, {"X2-", EventKind::X2n},
        {"X3-", EventKind::X3n}, {"X4-", EventKind::X4n}, {"cup", EventKind::Cup},
        {"cap", EventKind::Cap}, {"id", EventKind::Id},
    };
    for (const auto& [c, k] : table)
        if (code == c) return k;
    throw std::invalid_argument("unknown event code: " + code);
}

bool is_crossing(EventKind k) {
    return k != EventKind::Cup && k != EventKind::Cap && k != EventKind::Id;
}

int crossing_sign(EventKind k) {
    switch (k) {
        case EventKind::X1p:
        case EventKind::X2p:
        case EventKind::X3p:
        case EventKind::X4p: return 1;
        case EventKind::X1n:
        case EventKind::X2n:
        case EventKind::X3n:
        case EventKind::X4n: return -1;
        default: throw std::invalid_argument("not a crossing");
    }
}

namespace {

// strand orientations through a crossing, (below-left, below-right) ->
// (above-left, above-right); 'u' means the knot travels upward there
struct OrientSig {
    char bl, br, al, ar;
};

OrientSig orient_sig(EventKind k) {
    switch (k) {
        case EventKind::X1p:
        case EventKind::X1n: return {'u', 'u', 'u', 'u'};
        case EventKind::X2p:
        case EventKind::X2n: return {'d', 'u', 'u', 'd'};
        case EventKind::X3p:
        case EventKind::X3n: return {'d', 'd', 'd', 'd'};
        case EventKind::X4p:
        case EventKind::X4n: return {'u', 'd', 'd', 'u'};
        default: throw std::invalid_argument("not a crossing");
    }
}

}  // namespace

ValidatedDiagram validate_diagram(const LongKnotDiagram& d) {
    ValidatedDiagram vd;
    vd.d = d;
    std::string cur = "u";  // one incoming strand, oriented upward
    vd.levels.push_back(cur);
    vd.max_strands = 1;
    long writhe = 0;
    for (std::size_t si = 0; si < d.slices.size(); ++si) {
        const Slice& s = d.slices[si];
        const long n = static_cast<long>(cur.size());
        std::string next;
        switch (s.ev) {
            case EventKind::Id:
                next = cur;
                break;
            case EventKind::Cup: {
                if (s.pos < 0 || s.pos > n)
                    throw std::invalid_argument("cup position out of range");
                if (!s.orient)
                    throw std::invalid_argument("cup slice needs an orient field");
                next = *s.orient;
                if (static_cast<long>(next.size()) != n + 2)
                    throw std::invalid_argument("cup orient has wrong strand count");
                std::string expect = cur;
                std::string pair = next.substr(s.pos, 2);
                if (pair != "ud" && pair != "du")
                    throw std::invalid_argument("cup must create oppositely oriented strands");
                expect.insert(s.pos, pair);
                if (expect != next)
                    throw std::invalid_argument("cup orient changes unrelated strands");
                break;
            }
            case EventKind::Cap: {
                if (s.pos < 0 || s.pos + 1 >= n)
                    throw std::invalid_argument("cap position out of range");
                std::string pair = cur.substr(s.pos, 2);
                if (pair != "ud" && pair != "du")
                    throw std::invalid_argument(
                        "cap joins strands with mismatched orientations");
                next = cur;
                next.erase(s.pos, 2);
                break;
            }
            default: {
                if (s.pos < 0 || s.pos + 1 >= n)
                    throw std::invalid_argument("crossing position out of range");
                OrientSig sig = orient_sig(s.ev);
                if (cur[s.pos] != sig.bl || cur[s.pos + 1] != sig.br) {
                    std::ostringstream os;
                    os << "orientation mismatch at slice " << si << ": " << event_code(s.ev)
                       << " expects (" << sig.bl << "," << sig.br << ") below, found ("
                       << cur[s.pos] << "," << cur[s.pos + 1] << ")";
                    throw std::invalid_argument(os.str());
                }
                next = cur;
                next[s.pos] = sig.al;
                next[s.pos + 1] = sig.ar;
                writhe += crossing_sign(s.ev);
                break;
            }
        }
        if (s.orient && s.ev != EventKind::Cup && *s.orient != next)
            throw std::invalid_argument("orient annotation disagrees with computed orientations");
        cur = next;
        vd.levels.push_back(cur);
        vd.max_strands = std::max(vd.max_strands, static_cast<long>(cur.size()));
    }
    if (cur != "u")
        throw std::invalid_argument("diagram must end in a single outgoing upward strand");
    if (writhe != 0)
        throw std::invalid_argument("diagram has nonzero writhe " + std::to_string(writhe));

    // connectivity: a long knot is one component. Walk the slices assigning
    // segment ids and union them through each event.
    std::vector<long> parent;
    auto fresh = [&parent]() {
        parent.push_back(static_cast<long>(parent.size()));
        return static_cast<long>(parent.size()) - 1;
    };
    std::function<long(long)> find = [&](long x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](long x, long y) { parent[find(x)] = find(y); };
    std::vector<long> ids = {fresh()};
    long loops = 0;
    for (const Slice& s : d.slices) {
        switch (s.ev) {
            case EventKind::Id:
                break;
            case EventKind::Cup: {
                long seg = fresh();
                ids.insert(ids.begin() + s.pos, 2, seg);
                break;
            }
            case EventKind::Cap: {
                if (find(ids[s.pos]) == find(ids[s.pos + 1])) ++loops;
                unite(ids[s.pos], ids[s.pos + 1]);
                ids.erase(ids.begin() + s.pos, ids.begin() + s.pos + 2);
                break;
            }
            default: {
                long a = fresh(), b = fresh();
                unite(ids[s.pos], b);      // below-left continues above-right
                unite(ids[s.pos + 1], a);  // below-right continues above-left
                ids[s.pos] = a;
                ids[s.pos + 1] = b;
                break;
            }
        }
    }
    if (loops > 0)
        throw std::invalid_argument(
            "diagram has closed components: a long knot must be connected");
    return vd;
}

// ---------------------------------------------------------------------------
// weights

Cyclo crossing_weight(const FieldPtr& f, EventKind kind, long i, long j, long k, long l,
                      long m, long n) {
    switch (kind) {
        case EventKind::X1p:
        case EventKind::X2p:
        case EventKind::X3p:
            return v_symbol(f, i, j - m, k - n, l) *
                   Cyclo::zeta(f, k - l - n + (k - i - n) * m);
        case EventKind::X4p:
            return v_symbol(f, k, l, i - m, j - n - 1, true) *
                   Cyclo::zeta(f, j - 1 - k - n + (j - l - n) * m);
        case EventKind::X1n:
        case EventKind::X2n:
        case EventKind::X3n:
            return v_symbol(f, i, j - n, k - m, l, true) *
                   Cyclo::zeta(f, l - k + (l - j + 1 + n) * m);
        case EventKind::X4n:
            return v_symbol(f, k, l, i - n, j - m - 1) *
                   Cyclo::zeta(f, k - j + 1 + (k - i + 1 + n) * m);
        default: throw std::invalid_argument("not a crossing");
    }
}

Cyclo crossing_weight_corners(const FieldPtr& f, EventKind kind, long sw, long se, long nw,
                              long ne, long m, long n) {
    long i = 0, j = 0, k = 0, l = 0;
    switch (kind) {
        case EventKind::X1p:
        case EventKind::X4p:
        case EventKind::X1n:
        case EventKind::X4n:
            i = ne, j = nw, k = sw, l = se;
            break;
        case EventKind::X2p:
        case EventKind::X2n:
            i = nw, j = sw, k = se, l = ne;
            break;
        case EventKind::X3p:
        case EventKind::X3n:
            i = sw, j = se, k = ne, l = nw;
            break;
        default: throw std::invalid_argument("not a crossing");
    }
    return crossing_weight(f, kind, i, j, k, l, m, n);
}

// ---------------------------------------------------------------------------
// contraction

namespace {

// dense weight table for one crossing kind at fixed color
struct WeightTable {
    long N = 0;
    std::vector<Cyclo> w;  // [sw][se][nw][ne]
    const Cyclo& at(long sw, long se, long nw, long ne) const {
        return w[((sw * N + se) * N + nw) * N + ne];
    }
};

WeightTable build_table(const FieldPtr& f, EventKind kind, long color) {
    long N = f->order();
    WeightTable t;
    t.N = N;
    t.w.reserve(N * N * N * N);
    for (long sw = 0; sw < N; ++sw)
        for (long se = 0; se < N; ++se)
            for (long nw = 0; nw < N; ++nw)
                for (long ne = 0; ne < N; ++ne)
                    t.w.push_back(
                        crossing_weight_corners(f, kind, sw, se, nw, ne, color, color));
    return t;
}

}  // namespace

CMatrix contract(const ValidatedDiagram& vd, long N, long n) {
    FieldPtr f = CycloField::get(N);
    std::map<EventKind, WeightTable> tables;
    for (const Slice& s : vd.d.slices)
        if (is_crossing(s.ev) && !tables.count(s.ev))
            tables.emplace(s.ev, build_table(f, s.ev, n));

    CMatrix out(N, N, Cyclo::zero(f));
    std::vector<long> pw(vd.max_strands + 3, 1);
    for (std::size_t i = 1; i < pw.size(); ++i) pw[i] = pw[i - 1] * N;

    for (long jin = 0; jin < N; ++jin) {
        long strands = 1;
        std::vector<Cyclo> state(N, Cyclo::zero(f));
        state[jin] = Cyclo::one(f);
        for (const Slice& s : vd.d.slices) {
            if (s.ev == EventKind::Id) continue;
            if (s.ev == EventKind::Cup) {
                long ns = strands + 2;
                std::vector<Cyclo> next(pw[ns], Cyclo::zero(f));
                long hi = pw[strands - s.pos];  // contribution of slots >= pos
                for (long idx = 0; idx < pw[strands]; ++idx) {
                    if (state[idx].is_zero()) continue;
                    long head = idx / hi, tail = idx % hi;
                    for (long a = 0; a < N; ++a) {
                        long nidx = ((head * N + a) * N + a) * hi + tail;
                        next[nidx] = state[idx];
                    }
                }
                state = std::move(next);
                strands = ns;
            } else if (s.ev == EventKind::Cap) {
                long ns = strands - 2;
                std::vector<Cyclo> next(pw[ns], Cyclo::zero(f));
                long hi = pw[strands - s.pos - 2];
                for (long idx = 0; idx < pw[strands]; ++idx) {
                    if (state[idx].is_zero()) continue;
                    long tail = idx % hi;
                    long rest = idx / hi;
                    long b = rest % N;
                    rest /= N;
                    long a = rest % N;
                    long head = rest / N;
                    if (a != b) continue;
                    next[head * hi + tail] += state[idx];
                }
                state = std::move(next);
                strands = ns;
            } else {
                const WeightTable& t = tables.at(s.ev);
                std::vector<Cyclo> next(pw[strands], Cyclo::zero(f));
                long hi = pw[strands - s.pos - 2];
                for (long idx = 0; idx < pw[strands]; ++idx) {
                    if (state[idx].is_zero()) continue;
                    long tail = idx % hi;
                    long rest = idx / hi;
                    long se = rest % N;
                    rest /= N;
                    long sw = rest % N;
                    long head = rest / N;
                    for (long nw = 0; nw < N; ++nw)
                        for (long ne = 0; ne < N; ++ne) {
                            const Cyclo& wt = t.at(sw, se, nw, ne);
                            if (wt.is_zero()) continue;
                            long nidx = ((head * N + nw) * N + ne) * hi + tail;
                            next[nidx] += wt * state[idx];
                        }
                }
                state = std::move(next);
            }
        }
        for (long iout = 0; iout < N; ++iout) out.at(iout, jin) = state[iout];
    }
    return out;
}

CMatrix naive_sum_41(long N, long n) {
    FieldPtr f = CycloField::get(N);
    // V_{0,j,k,l} tables for zeta and its conjugate
    std::vector<Cyclo> vz(N * N * N), vzb(N * N * N);
    for (long j = 0; j < N; ++j)
        for (long k = 0; k < N; ++k)
            for (long l = 0; l < N; ++l) {
                vz[(j * N + k) * N + l] = v_symbol(f, 0, j, k, l);
                vzb[(j * N + k) * N + l] = v_symbol(f, 0, j, k, l, true);
            }
    auto V = [&](const std::vector<Cyclo>& t, long j, long k, long l) -> const Cyclo& {
        return t[(prin(j, N) * N + prin(k, N)) * N + prin(l, N)];
    };
    std::vector<Cyclo> g(N, Cyclo::zero(f));  // entry depends on j - i only
    for (long d = 0; d < N; ++d) {
        Cyclo acc = Cyclo::zero(f);
        for (long k3 = 0; k3 < N; ++k3)
            for (long k7 = 0; k7 < N; ++k7)
                for (long k2 = 0; k2 < N; ++k2) {
                    const Cyclo& f1 = V(vzb, k3, k7, k2);
                    if (f1.is_zero()) continue;
                    for (long k6 = 0; k6 < N; ++k6)
                        for (long k4 = 0; k4 < N; ++k4) {
                            const Cyclo& f2 = V(vz, k4, k7 - k6, k3 - k6 - 1);
                            if (f2.is_zero()) continue;
                            Cyclo f12 = f1 * f2;
                            for (long k1 = 0; k1 < N; ++k1)
                                for (long k5 = 0; k5 < N; ++k5) {
                                    const Cyclo& f3 = V(vzb, k5, k2 + k1 - k6, k4 + k1 - 1);
                                    if (f3.is_zero()) continue;
                                    const Cyclo& f4 = V(vz, k1, d - k6 + k1, k5);
                                    if (f4.is_zero()) continue;
                                    long e = (d + 2 * k1 + k2 - k3 + k4 - k5 - k7) * (n + 1);
                                    acc += f12 * f3 * f4 * Cyclo::zeta(f, e);
                                }
                        }
                }
        g[d] = std::move(acc);
    }
    CMatrix m(N, N, Cyclo::zero(f));
    for (long i = 0; i < N; ++i)
        for (long j = 0; j < N; ++j) m.at(i, j) = g[prin(j - i, N)];
    return m;
}

Report conjecture2_check(const HabiroSequence& seq, const ValidatedDiagram& vd, long N,
                         long n) {
    Report rep;
    rep.title = "state-sum against the colored Jones evaluation";
    FieldPtr f = CycloField::get(N);
    Cyclo jn = eval_at_root(jones_from_habiro(seq, n + 1), f);
    CMatrix want = CMatrix::identity(f, N).scaled(jn);
    CMatrix got = contract(vd, N, n);
    std::ostringstream label;
    label << seq.name() << " N=" << N << " n=" << n;
    rep.add(got == want, label.str(),
            got == want ? jn.str() : "matrix differs from J*id", jn.str());
    return rep;
}

Report invariance_check(const ValidatedDiagram& d1, const ValidatedDiagram& d2, long N) {
    Report rep;
    rep.title = "projection independence";
    for (long n = 0; n < N; ++n) {
        bool ok = contract(d1, N, n) == contract(d2, N, n);
        std::ostringstream label;
        label << d1.d.name << " vs " << d2.d.name << " N=" << N << " n=" << n;
        rep.add(ok, label.str(), ok ? "equal" : "unequal", "equal");
    }
    return rep;
}

bool entries_in_zn_ring(const CMatrix& m, long N) {
    for (long r = 0; r < m.rows(); ++r)
        for (long c = 0; c < m.cols(); ++c) {
            Int den = m.at(r, c).den();
            Int g = gcd(den, Int(N));
            while (g > 1) {
                den /= g;
                g = gcd(den, Int(N));
            }
            if (den != 1) return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// diagrams

LongKnotDiagram diagram_from_json_text(const std::string& text) {
    json o = json::parse(text);
    LongKnotDiagram d;
    d.name = o.value("name", "diagram");
    for (const auto& js : o.at("slices")) {
        Slice s;
        s.ev = event_from_code(js.at("event").get<std::string>());
        s.pos = js.value("pos", 0L);
        if (js.contains("orient")) {
            std::string orient;
            if (js["orient"].is_string()) {
                orient = js["orient"].get<std::string>();
            } else {
                for (const auto& c : js["orient"]) orient += c.get<std::string>();
            }
            s.orient = orient;
        }
        d.slices.push_back(std::move(s));
    }
    if (o.contains("strands_max")) {
        long declared = o["strands_max"].get<long>();
        long got = validate_diagram(d).max_strands;
        if (declared != got)
            throw std::invalid_argument("strands_max disagrees with the slice list");
    }
    return d;
}

std::string diagram_to_json_text(const LongKnotDiagram& d) {
    json o;
    o["name"] = d.name;
    o["strands_max"] = validate_diagram(d).max_strands;
    json slices = json::array();
    for (const Slice& s : d.slices) {
        json js;
        js["event"] = event_code(s.ev);
        js["pos"] = s.pos;
        if (s.orient) {
            json arr = json::array();
            for (char c : *s.orient) arr.push_back(std::string(1, c));
            js["orient"] = arr;
        }
        slices.push_back(js);
    }
    o["slices"] = slices;
    return o.dump(2);
}

namespace {

// single curls on an upward strand at slot 0; "a" curls close the cap on the
// left, "b" curls open the cup with the downward strand first
void append_curl_a(std::vector<Slice>& slices, bool positive) {
    slices.push_back({EventKind::Cup, 1, "uud"});
    slices.push_back({positive ? EventKind::X4p : EventKind::X4n, 1, std::nullopt});
    slices.push_back({EventKind::Cap, 0, std::nullopt});
}

void append_curl_b(std::vector<Slice>& slices, bool positive) {
    slices.push_back({EventKind::Cup, 1, "udu"});
    slices.push_back({positive ? EventKind::X4p : EventKind::X4n, 0, std::nullopt});
    slices.push_back({EventKind::Cap, 0, std::nullopt});
}

// writhe-balanced curl pair whose transfer is the identity
void append_kink_pair(std::vector<Slice>& slices) {
    append_curl_a(slices, true);
    append_curl_b(slices, false);
}

}  // namespace

LongKnotDiagram builtin_diagram(const std::string& name) {
    LongKnotDiagram d;
    d.name = name;
    if (name == "4_1" || name == "4_1_kinked" || name == "4_1_kink_mid") {
        d.slices = {
            {EventKind::Cup, 1, "uud"}, {EventKind::X1p, 0, std::nullopt},
            {EventKind::X4p, 1, std::nullopt}, {EventKind::X4n, 0, std::nullopt},
            {EventKind::X2n, 0, std::nullopt}, {EventKind::Cap, 1, std::nullopt},
        };
        if (name == "4_1_kinked") append_kink_pair(d.slices);
        if (name == "4_1_kink_mid") {
            // balanced curl pair on the rightmost strand between the braid events
            std::vector<Slice> mid = {
                {EventKind::Cup, 3, "uduud"}, {EventKind::X4p, 3, std::nullopt},
                {EventKind::Cap, 2, std::nullopt}, {EventKind::Cup, 3, "ududu"},
                {EventKind::X4n, 2, std::nullopt}, {EventKind::Cap, 2, std::nullopt},
            };
            d.slices.insert(d.slices.begin() + 3, mid.begin(), mid.end());
        }
        return d;
    }
    if (name == "3_1_balanced") {
        // twist form of the trefoil: all-negative clasp and twist region,
        // balanced by four positive curls with both loop sides paired
        d.slices = {
            {EventKind::Cup, 1, "uud"},        {EventKind::X1n, 0, std::nullopt},
            {EventKind::X4n, 1, std::nullopt}, {EventKind::X4n, 0, std::nullopt},
            {EventKind::X2n, 0, std::nullopt}, {EventKind::Cap, 1, std::nullopt},
        };
        append_curl_a(d.slices, true);
        append_curl_b(d.slices, true);
        append_curl_a(d.slices, true);
        append_curl_b(d.slices, true);
        return d;
    }
    if (name == "5_2_balanced") {
        // one more full twist than the trefoil, same clasp; six positive
        // curls restore writhe zero
        d.slices = {
            {EventKind::Cup, 1, "uud"},        {EventKind::X1n, 0, std::nullopt},
            {EventKind::X4n, 1, std::nullopt}, {EventKind::X2n, 1, std::nullopt},
            {EventKind::X4n, 1, std::nullopt}, {EventKind::X4n, 0, std::nullopt},
            {EventKind::X2n, 0, std::nullopt}, {EventKind::Cap, 1, std::nullopt},
        };
        for (int i = 0; i < 3; ++i) {
            append_curl_a(d.slices, true);
            append_curl_b(d.slices, true);
        }
        return d;
    }
    if (name == "unknot") return d;
    if (name == "unknot_kinks") {
        append_kink_pair(d.slices);
        return d;
    }
    throw std::invalid_argument("unknown built-in diagram: " + name);
}

}  // namespace djones
