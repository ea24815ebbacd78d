#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mpqw/fullsim.hpp"
#include "mpqw/graph.hpp"
#include "mpqw/io.hpp"
#include "mpqw/linalg.hpp"

namespace mpqw {

// ---------------------------------------------------------------------------
// Qubit layout
//
// Registers in ascending qubit order (qubit 0 is the least significant bit of
// a basis index):
//   pos_sub  (l_m+1)  subset index q_u of the position vertex
//   pos_idx  (l_n)    vertex index p_u within the subset
//   coin_sub (l_m)    subset code c of the coin vertex, skipping the position
//                     subset: c = q_v if q_v < q_u else q_v - 1
//   coin_idx (l_n)    vertex index p_v
//   flag     (1)      comparison ancilla, |0> outside every block
//   scratch  (1)      carry ancilla for the register swap, |0> outside blocks
// ---------------------------------------------------------------------------

enum class Register : int { PosSub = 0, PosIdx, CoinSub, CoinIdx, Flag, Scratch };

inline const char* register_name(Register r) {
    switch (r) {
        case Register::PosSub: return "pos_sub";
        case Register::PosIdx: return "pos_idx";
        case Register::CoinSub: return "coin_sub";
        case Register::CoinIdx: return "coin_idx";
        case Register::Flag: return "flag";
        case Register::Scratch: return "scratch";
    }
    return "?";
}

struct QubitLayout {
    GraphConfig config;
    int lm = 0;
    int ln = 0;
    std::array<int, 6> first{};
    std::array<int, 6> width{};
    int total_qubits = 0;

    int reg_first(Register r) const { return first[static_cast<int>(r)]; }
    int reg_width(Register r) const { return width[static_cast<int>(r)]; }
};

inline bool is_power_of_two(long long v) { return v >= 1 && (v & (v - 1)) == 0; }

/// Builds the register map; requires M-1 and N to be powers of two (the
/// encoding then covers the coin register exactly, no padding states).
inline QubitLayout layout_for(const GraphConfig& g) {
    if (!is_power_of_two(g.M - 1))
        throw std::domain_error("layout_for: M-1 must be a power of two");
    if (!is_power_of_two(g.N)) throw std::domain_error("layout_for: N must be a power of two");
    QubitLayout lay{g, 0, 0, {}, {}, 0};
    while ((1 << lay.lm) < g.M - 1) ++lay.lm;
    while ((1LL << lay.ln) < g.N) ++lay.ln;
    const int widths[6] = {lay.lm + 1, lay.ln, lay.lm, lay.ln, 1, 1};
    int q = 0;
    for (int r = 0; r < 6; ++r) {
        lay.first[r] = q;
        lay.width[r] = widths[r];
        q += widths[r];
    }
    lay.total_qubits = q;  // 2(l_m + l_n) + 3
    return lay;
}

// ---------------------------------------------------------------------------
// Gate IR
// ---------------------------------------------------------------------------

enum class GateKind : int { H = 0, X, Swap, CompareLE, Inc, Dec, Phase0, Rz, GPhase, Oracle };
inline constexpr int kGateKindCount = 10;

inline const char* gate_kind_name(GateKind k) {
    switch (k) {
        case GateKind::H: return "H";
        case GateKind::X: return "X";
        case GateKind::Swap: return "SWAP";
        case GateKind::CompareLE: return "CLE";
        case GateKind::Inc: return "INC";
        case GateKind::Dec: return "DEC";
        case GateKind::Phase0: return "PHASE0";
        case GateKind::Rz: return "RZ";
        case GateKind::GPhase: return "GPHASE";
        case GateKind::Oracle: return "ORACLE";
    }
    return "?";
}

/// Reference to qubit lo..hi (inclusive, LSB first) of a named register.
/// `range` only controls the emitted spelling: name[i] vs name[lo..hi].
struct RegRef {
    Register reg = Register::Flag;
    int lo = 0;
    int hi = 0;
    bool range = false;

    static RegRef bit(Register r, int i) { return {r, i, i, false}; }
    static RegRef whole(Register r, int w) { return {r, 0, w - 1, true}; }
};

/// One gate. Operand layout per kind:
///   H/X/Rz:      args = {qubit}
///   Swap:        args = {qubit, qubit}
///   CompareLE:   args = {A, B, flag qubit}; flag ^= (A <= B), unsigned,
///                shorter operand zero-extended
///   Inc/Dec:     args = target ranges, LSB-first; optional control
///   Phase0:      args = ranges; amplitude *= e^{i angle} when all bits are 0
///   Rz:          diag(1, e^{i angle}) on the qubit
///   GPhase:      amplitude *= e^{i angle}
///   Oracle:      args = {flag qubit}; flag ^= is_marked(position registers)
struct Gate {
    GateKind kind = GateKind::H;
    std::vector<RegRef> args;
    double angle = 0.0;
    bool has_ctrl = false;
    RegRef ctrl;
    bool ctrl_polarity = true;
};

struct Circuit {
    QubitLayout layout;
    std::vector<Gate> gates;
    std::optional<double> alpha;
    std::optional<double> beta;
};

// ---------------------------------------------------------------------------
// Encoding
// ---------------------------------------------------------------------------

inline std::size_t set_reg_bits(const QubitLayout& lay, std::size_t basis, Register r, int lo,
                                long long value) {
    const int base = lay.reg_first(r) + lo;
    const int w = lay.reg_width(r) - lo;
    for (int k = 0; k < w; ++k) {
        const std::size_t bit = std::size_t{1} << (base + k);
        if ((value >> k) & 1)
            basis |= bit;
        else
            basis &= ~bit;
    }
    return basis;
}

inline long long reg_value(const QubitLayout& lay, std::size_t basis, Register r) {
    const int base = lay.reg_first(r);
    long long v = 0;
    for (int k = 0; k < lay.reg_width(r); ++k) v |= static_cast<long long>((basis >> (base + k)) & 1) << k;
    return v;
}

/// Basis index of an encoded arc |q_u p_u, c p_v> with both ancillas |0>.
inline std::size_t encode(const QubitLayout& lay, VertexId u, VertexId v) {
    const GraphConfig& g = lay.config;
    if (!g.contains(u) || !g.contains(v)) throw std::out_of_range("encode: vertex out of range");
    if (u.set == v.set) throw std::invalid_argument("encode: same-set pair is not an edge");
    const long long c = v.set < u.set ? v.set : v.set - 1;
    std::size_t basis = 0;
    basis = set_reg_bits(lay, basis, Register::PosSub, 0, u.set);
    basis = set_reg_bits(lay, basis, Register::PosIdx, 0, u.vertex);
    basis = set_reg_bits(lay, basis, Register::CoinSub, 0, c);
    basis = set_reg_bits(lay, basis, Register::CoinIdx, 0, v.vertex);
    return basis;
}

/// Inverse of encode; nullopt for basis states that are not valid encodings
/// (nonzero ancillas or out-of-range subset values).
inline std::optional<Arc> decode(const QubitLayout& lay, std::size_t basis) {
    if (reg_value(lay, basis, Register::Flag) != 0 ||
        reg_value(lay, basis, Register::Scratch) != 0)
        return std::nullopt;
    const long long qu = reg_value(lay, basis, Register::PosSub);
    const long long c = reg_value(lay, basis, Register::CoinSub);
    if (qu >= lay.config.M || c >= lay.config.M - 1) return std::nullopt;
    const long long qv = c < qu ? c : c + 1;
    VertexId u{static_cast<int>(qu), reg_value(lay, basis, Register::PosIdx)};
    VertexId v{static_cast<int>(qv), reg_value(lay, basis, Register::CoinIdx)};
    return Arc{u, v};
}

/// Edge state -> statevector over the circuit's 2^q basis.
inline CVec embed_edge_state(const QubitLayout& lay, const EdgeState& s) {
    CVec out(std::size_t{1} << lay.total_qubits);
    const long long dim = s.config.edge_space_dimension();
    for (long long idx = 0; idx < dim; ++idx) {
        const Arc a = arc_at(s.config, idx);
        out[encode(lay, a.u, a.v)] = s.amp[static_cast<std::size_t>(idx)];
    }
    return out;
}

/// Norm of the amplitude living outside valid arc encodings.
inline double encoding_leakage(const QubitLayout& lay, const CVec& state) {
    double s = 0.0;
    for (std::size_t b = 0; b < state.size(); ++b)
        if (!decode(lay, b)) s += std::norm(state[b]);
    return std::sqrt(s);
}

/// Success probability read off a circuit statevector: mass on encoded arcs
/// with a marked endpoint (leaked amplitude counts as failure).
inline double success_from_statevector(const QubitLayout& lay, const CVec& state) {
    double p = 0.0;
    for (std::size_t b = 0; b < state.size(); ++b) {
        const auto arc = decode(lay, b);
        if (!arc) continue;
        if (lay.config.is_marked(arc->u) || lay.config.is_marked(arc->v))
            p += std::norm(state[b]);
    }
    return p;
}

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

/// Shift block. Implements the arc transposition
///   S|q_u p_u, c p_v> = |(c+1) p_v, q_u p_u>   if q_u <= c
///                       |c p_v, (q_u-1) p_u>   otherwise
/// as: swap index registers; flag ^= (q_u <= c); swap pos_sub with the
/// scratch-extended coin_sub; +1 on the new position subset when flag is set,
/// -1 on the parked q_u otherwise (post-swap, so the +1 cannot overflow);
/// final comparison plus X returns the flag to |0>.
inline Circuit build_shift(const QubitLayout& lay) {
    Circuit c{lay, {}, std::nullopt, std::nullopt};
    for (int k = 0; k < lay.ln; ++k)
        c.gates.push_back({GateKind::Swap,
                           {RegRef::bit(Register::PosIdx, k), RegRef::bit(Register::CoinIdx, k)}});
    const RegRef pos_sub = RegRef::whole(Register::PosSub, lay.lm + 1);
    const RegRef coin_sub{Register::CoinSub, 0, lay.lm - 1, true};
    const RegRef flag = RegRef::bit(Register::Flag, 0);
    c.gates.push_back({GateKind::CompareLE, {pos_sub, coin_sub, flag}});
    for (int k = 0; k < lay.lm; ++k)
        c.gates.push_back({GateKind::Swap,
                           {RegRef::bit(Register::PosSub, k), RegRef::bit(Register::CoinSub, k)}});
    c.gates.push_back({GateKind::Swap,
                       {RegRef::bit(Register::PosSub, lay.lm), RegRef::bit(Register::Scratch, 0)}});
    Gate inc{GateKind::Inc, {pos_sub}};
    inc.has_ctrl = true;
    inc.ctrl = flag;
    inc.ctrl_polarity = true;
    c.gates.push_back(inc);
    Gate dec{GateKind::Dec, {coin_sub, RegRef::whole(Register::Scratch, 1)}};
    dec.has_ctrl = true;
    dec.ctrl = flag;
    dec.ctrl_polarity = false;
    c.gates.push_back(dec);
    c.gates.push_back({GateKind::CompareLE, {pos_sub, coin_sub, flag}});
    c.gates.push_back({GateKind::X, {flag}});
    return c;
}

/// Coin block: H^(x)k [(1 - e^{-ia})|0><0| - I] H^(x)k over the coin
/// registers. The bracket is GPHASE(pi) followed by PHASE0(-a), keeping the
/// global -1 explicit so equivalence checks are exact rather than up to phase.
inline Circuit build_coin(const QubitLayout& lay, double alpha) {
    Circuit c{lay, {}, alpha, std::nullopt};
    auto hadamards = [&] {
        for (int k = 0; k < lay.lm; ++k)
            c.gates.push_back({GateKind::H, {RegRef::bit(Register::CoinSub, k)}});
        for (int k = 0; k < lay.ln; ++k)
            c.gates.push_back({GateKind::H, {RegRef::bit(Register::CoinIdx, k)}});
    };
    hadamards();
    Gate gph{GateKind::GPhase, {}};
    gph.angle = kPi;
    c.gates.push_back(gph);
    Gate p0{GateKind::Phase0,
            {RegRef{Register::CoinSub, 0, lay.lm - 1, true},
             RegRef{Register::CoinIdx, 0, lay.ln - 1, true}}};
    p0.angle = -alpha;
    c.gates.push_back(p0);
    hadamards();
    return c;
}

/// Query block: mark-flag oracle, RZ(beta) on the flag, oracle again to
/// restore it. Net effect is the phase e^{ib} on marked-position states.
inline Circuit build_query(const QubitLayout& lay, double beta) {
    Circuit c{lay, {}, std::nullopt, beta};
    const RegRef flag = RegRef::bit(Register::Flag, 0);
    c.gates.push_back({GateKind::Oracle, {flag}});
    Gate rz{GateKind::Rz, {flag}};
    rz.angle = beta;
    c.gates.push_back(rz);
    c.gates.push_back({GateKind::Oracle, {flag}});
    return c;
}

/// One walk step U(alpha, beta) = S C(alpha) Q(beta): query, coin, shift.
inline Circuit build_step(const QubitLayout& lay, double alpha, double beta) {
    Circuit c{lay, {}, alpha, beta};
    for (const Circuit& block : {build_query(lay, beta), build_coin(lay, alpha), build_shift(lay)})
        c.gates.insert(c.gates.end(), block.gates.begin(), block.gates.end());
    return c;
}

// ---------------------------------------------------------------------------
// Interpreter
// ---------------------------------------------------------------------------

inline std::vector<int> flatten_qubits(const QubitLayout& lay, const std::vector<RegRef>& refs,
                                       std::size_t from, std::size_t to) {
    std::vector<int> qs;
    for (std::size_t r = from; r < to; ++r)
        for (int k = refs[r].lo; k <= refs[r].hi; ++k)
            qs.push_back(lay.reg_first(refs[r].reg) + k);
    return qs;
}

inline long long bits_value(std::size_t basis, const std::vector<int>& qs) {
    long long v = 0;
    for (std::size_t k = 0; k < qs.size(); ++k)
        v |= static_cast<long long>((basis >> qs[k]) & 1) << k;
    return v;
}

inline std::size_t bits_with_value(std::size_t basis, const std::vector<int>& qs, long long v) {
    for (std::size_t k = 0; k < qs.size(); ++k) {
        const std::size_t bit = std::size_t{1} << qs[k];
        if ((v >> k) & 1)
            basis |= bit;
        else
            basis &= ~bit;
    }
    return basis;
}

inline void apply_gate(const Circuit& c, const Gate& g, CVec& state) {
    const QubitLayout& lay = c.layout;
    const std::size_t dim = state.size();
    switch (g.kind) {
        case GateKind::H: {
            const int q = lay.reg_first(g.args[0].reg) + g.args[0].lo;
            const std::size_t bit = std::size_t{1} << q;
            const double inv = 1.0 / std::sqrt(2.0);
            for (std::size_t b = 0; b < dim; ++b)
                if (!(b & bit)) {
                    const Complex a0 = state[b], a1 = state[b | bit];
                    state[b] = (a0 + a1) * inv;
                    state[b | bit] = (a0 - a1) * inv;
                }
            return;
        }
        case GateKind::X: {
            const int q = lay.reg_first(g.args[0].reg) + g.args[0].lo;
            const std::size_t bit = std::size_t{1} << q;
            for (std::size_t b = 0; b < dim; ++b)
                if (!(b & bit)) std::swap(state[b], state[b | bit]);
            return;
        }
        case GateKind::Swap: {
            const int q0 = lay.reg_first(g.args[0].reg) + g.args[0].lo;
            const int q1 = lay.reg_first(g.args[1].reg) + g.args[1].lo;
            const std::size_t b0 = std::size_t{1} << q0, b1 = std::size_t{1} << q1;
            for (std::size_t b = 0; b < dim; ++b)
                if ((b & b0) && !(b & b1)) std::swap(state[b], state[(b & ~b0) | b1]);
            return;
        }
        case GateKind::CompareLE: {
            const std::vector<int> qa = flatten_qubits(lay, g.args, 0, 1);
            const std::vector<int> qb = flatten_qubits(lay, g.args, 1, 2);
            const std::size_t fbit = std::size_t{1}
                                     << (lay.reg_first(g.args[2].reg) + g.args[2].lo);
            for (std::size_t b = 0; b < dim; ++b)
                if (!(b & fbit) && bits_value(b, qa) <= bits_value(b, qb))
                    std::swap(state[b], state[b | fbit]);
            return;
        }
        case GateKind::Inc:
        case GateKind::Dec: {
            const std::vector<int> qs =
                flatten_qubits(lay, g.args, 0, g.args.size());
            const long long span = 1LL << qs.size();
            const long long delta = g.kind == GateKind::Inc ? 1 : span - 1;
            std::size_t cbit = 0;
            if (g.has_ctrl) cbit = std::size_t{1} << (lay.reg_first(g.ctrl.reg) + g.ctrl.lo);
            CVec next(dim);
            for (std::size_t b = 0; b < dim; ++b) {
                const bool act = !g.has_ctrl || (((b & cbit) != 0) == g.ctrl_polarity);
                if (!act) {
                    next[b] = state[b];
                    continue;
                }
                const long long v = (bits_value(b, qs) + delta) & (span - 1);
                next[bits_with_value(b, qs, v)] = state[b];
            }
            state = std::move(next);
            return;
        }
        case GateKind::Phase0: {
            const std::vector<int> qs = flatten_qubits(lay, g.args, 0, g.args.size());
            std::size_t mask = 0;
            for (int q : qs) mask |= std::size_t{1} << q;
            const Complex ph = std::exp(Complex(0.0, g.angle));
            for (std::size_t b = 0; b < dim; ++b)
                if (!(b & mask)) state[b] *= ph;
            return;
        }
        case GateKind::Rz: {
            const std::size_t bit = std::size_t{1}
                                    << (lay.reg_first(g.args[0].reg) + g.args[0].lo);
            const Complex ph = std::exp(Complex(0.0, g.angle));
            for (std::size_t b = 0; b < dim; ++b)
                if (b & bit) state[b] *= ph;
            return;
        }
        case GateKind::GPhase: {
            const Complex ph = std::exp(Complex(0.0, g.angle));
            for (Complex& a : state) a *= ph;
            return;
        }
        case GateKind::Oracle: {
            const std::size_t fbit = std::size_t{1}
                                     << (lay.reg_first(g.args[0].reg) + g.args[0].lo);
            const GraphConfig& gc = lay.config;
            for (std::size_t b = 0; b < dim; ++b) {
                if (b & fbit) continue;
                const long long qu = reg_value(lay, b, Register::PosSub);
                const long long pu = reg_value(lay, b, Register::PosIdx);
                if (qu >= gc.M) continue;  // outside the graph: treated as unmarked
                if (gc.is_marked({static_cast<int>(qu), pu}))
                    std::swap(state[b], state[b | fbit]);
            }
            return;
        }
    }
}

inline void execute_in_place(const Circuit& c, CVec& state) {
    if (state.size() != (std::size_t{1} << c.layout.total_qubits))
        throw std::invalid_argument("execute: statevector dimension mismatch");
    for (const Gate& g : c.gates) apply_gate(c, g, state);
}

inline CVec execute(const Circuit& c, CVec state) {
    execute_in_place(c, state);
    return state;
}

// ---------------------------------------------------------------------------
// Gate accounting
// ---------------------------------------------------------------------------

struct GateTally {
    std::array<long long, kGateKindCount> counts{};

    long long operator[](GateKind k) const { return counts[static_cast<int>(k)]; }
};

inline GateTally gate_counts(const Circuit& c) {
    GateTally t;
    for (const Gate& g : c.gates) ++t.counts[static_cast<int>(g.kind)];
    return t;
}

/// Conversion rates from IR primitives to basic two-qubit-gate counts.
/// The linear/quadratic shapes follow the cited constructions (comparator and
/// ripple adder O(l), multi-controlled phase O(k^2)); the constants are
/// estimate parameters, not measured values.
struct CostModel {
    long long swap_basic = 3;
    long long cle_per_qubit = 8;
    long long incdec_per_qubit = 6;
    long long phase0_per_qubit_sq = 4;
    long long oracle_per_qubit = 8;  // comparator-style mark test on the position register
};

struct GateEstimate {
    long long single = 0;
    long long swaps = 0;
    long long compare = 0;
    long long incdec = 0;
    long long phase0 = 0;
    long long oracle = 0;

    long long total() const { return single + swaps + compare + incdec + phase0 + oracle; }
};

inline GateEstimate basic_gate_estimate(const Circuit& c, const CostModel& model = {}) {
    GateEstimate e;
    const QubitLayout& lay = c.layout;
    auto ref_width = [](const RegRef& r) { return r.hi - r.lo + 1; };
    for (const Gate& g : c.gates) {
        switch (g.kind) {
            case GateKind::H:
            case GateKind::X:
            case GateKind::Rz: e.single += 1; break;
            case GateKind::GPhase: break;  // bookkeeping only
            case GateKind::Swap: e.swaps += model.swap_basic; break;
            case GateKind::CompareLE:
                e.compare +=
                    model.cle_per_qubit * std::max(ref_width(g.args[0]), ref_width(g.args[1]));
                break;
            case GateKind::Inc:
            case GateKind::Dec: {
                long long w = 0;
                for (const RegRef& r : g.args) w += ref_width(r);
                e.incdec += model.incdec_per_qubit * w;
                break;
            }
            case GateKind::Phase0: {
                long long k = 0;
                for (const RegRef& r : g.args) k += ref_width(r);
                e.phase0 += model.phase0_per_qubit_sq * k * k;
                break;
            }
            case GateKind::Oracle:
                e.oracle += model.oracle_per_qubit * (lay.lm + 1 + lay.ln);
                break;
        }
    }
    return e;
}

// ---------------------------------------------------------------------------
// Textual format
//
//   # mpqw-circuit v1
//   # layout l_m=1 l_n=1 M=3 N=2 n=1 case=1
//   # step alpha=3.14159265 beta=3.14159265      (build_step only)
//   GATE arg1 arg2 ... [; angle=<9 significant digits>]
//
// Register operands are name[i] for single qubits, name[lo..hi] for ranges
// (name[] when the register is empty); INC/DEC controls appear as
// "if+ flag[0]" / "if- flag[0]". emit -> parse -> emit is byte-identical.
// ---------------------------------------------------------------------------

inline std::string emit_ref(const RegRef& r) {
    std::string s = register_name(r.reg);
    if (!r.range) return s + "[" + std::to_string(r.lo) + "]";
    if (r.hi < r.lo) return s + "[]";
    return s + "[" + std::to_string(r.lo) + ".." + std::to_string(r.hi) + "]";
}

inline std::string emit(const Circuit& c) {
    std::string out = "# mpqw-circuit v1\n";
    const GraphConfig& g = c.layout.config;
    out += "# layout l_m=" + std::to_string(c.layout.lm) + " l_n=" + std::to_string(c.layout.ln) +
           " M=" + std::to_string(g.M) + " N=" + std::to_string(g.N) +
           " n=" + std::to_string(g.n) +
           " case=" + (g.kind == GraphCase::EverySet ? "1" : "2") + "\n";
    if (c.alpha && c.beta)
        out += "# step alpha=" + format_double(*c.alpha, 9) + " beta=" +
               format_double(*c.beta, 9) + "\n";
    for (const Gate& gate : c.gates) {
        out += gate_kind_name(gate.kind);
        for (const RegRef& r : gate.args) out += " " + emit_ref(r);
        if (gate.has_ctrl) out += std::string(" if") + (gate.ctrl_polarity ? "+" : "-") + " " +
                                  emit_ref(gate.ctrl);
        if (gate.kind == GateKind::Phase0 || gate.kind == GateKind::Rz ||
            gate.kind == GateKind::GPhase)
            out += " ; angle=" + format_double(gate.angle, 9);
        out += "\n";
    }
    return out;
}

inline Register register_from_name(const std::string& name) {
    for (int r = 0; r < 6; ++r)
        if (name == register_name(static_cast<Register>(r))) return static_cast<Register>(r);
    throw std::invalid_argument("unknown register: " + name);
}

inline RegRef parse_ref(const std::string& tok) {
    const auto open = tok.find('[');
    const auto close = tok.find(']');
    if (open == std::string::npos || close != tok.size() - 1)
        throw std::invalid_argument("malformed register operand: " + tok);
    RegRef r;
    r.reg = register_from_name(tok.substr(0, open));
    const std::string inner = tok.substr(open + 1, close - open - 1);
    if (inner.empty()) {
        r.lo = 0;
        r.hi = -1;
        r.range = true;
        return r;
    }
    const auto dots = inner.find("..");
    if (dots == std::string::npos) {
        r.lo = r.hi = static_cast<int>(parse_int(inner));
        r.range = false;
    } else {
        r.lo = static_cast<int>(parse_int(inner.substr(0, dots)));
        r.hi = static_cast<int>(parse_int(inner.substr(dots + 2)));
        r.range = true;
    }
    return r;
}

inline Circuit parse_circuit(const std::string& text) {
    std::optional<GraphConfig> config;
    std::optional<double> alpha, beta;
    std::vector<Gate> gates;
    bool header_seen = false;
    for (const std::string& line : split_lines(text)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto toks = split_tokens(line);
            if (toks.size() >= 2 && toks[1] == "mpqw-circuit") {
                header_seen = true;
            } else if (toks.size() >= 2 && toks[1] == "layout") {
                long long M = 0, N = 0, n = 0;
                int case_id = 0;
                for (std::size_t k = 2; k < toks.size(); ++k) {
                    std::string key, value;
                    if (!parse_key_value(toks[k], key, value)) continue;
                    if (key == "M") M = parse_int(value);
                    if (key == "N") N = parse_int(value);
                    if (key == "n") n = parse_int(value);
                    if (key == "case") case_id = static_cast<int>(parse_int(value));
                }
                config = GraphConfig(static_cast<int>(M), N, n,
                                     case_id == 1 ? GraphCase::EverySet : GraphCase::OneSet);
            } else if (toks.size() >= 2 && toks[1] == "step") {
                for (std::size_t k = 2; k < toks.size(); ++k) {
                    std::string key, value;
                    if (!parse_key_value(toks[k], key, value)) continue;
                    if (key == "alpha") alpha = parse_double(value);
                    if (key == "beta") beta = parse_double(value);
                }
            }
            continue;
        }
        auto toks = split_tokens(line);
        double angle = 0.0;
        bool has_angle = false;
        for (std::size_t k = 0; k < toks.size(); ++k) {
            if (toks[k] == ";") {
                if (k + 1 >= toks.size()) throw std::invalid_argument("dangling ';': " + line);
                std::string key, value;
                if (!parse_key_value(toks[k + 1], key, value) || key != "angle")
                    throw std::invalid_argument("expected angle=...: " + line);
                angle = parse_double(value);
                has_angle = true;
                toks.resize(k);
                break;
            }
        }
        if (toks.empty()) throw std::invalid_argument("empty gate line");
        Gate g;
        bool kind_ok = false;
        for (int k = 0; k < kGateKindCount; ++k)
            if (toks[0] == gate_kind_name(static_cast<GateKind>(k))) {
                g.kind = static_cast<GateKind>(k);
                kind_ok = true;
            }
        if (!kind_ok) throw std::invalid_argument("unknown gate: " + toks[0]);
        g.angle = angle;
        if ((g.kind == GateKind::Phase0 || g.kind == GateKind::Rz ||
             g.kind == GateKind::GPhase) != has_angle)
            throw std::invalid_argument("angle clause mismatch: " + line);
        for (std::size_t k = 1; k < toks.size(); ++k) {
            if (toks[k] == "if+" || toks[k] == "if-") {
                if (k + 2 != toks.size())
                    throw std::invalid_argument("control must be the last operand: " + line);
                g.has_ctrl = true;
                g.ctrl_polarity = toks[k] == "if+";
                g.ctrl = parse_ref(toks[k + 1]);
                break;
            }
            g.args.push_back(parse_ref(toks[k]));
        }
        gates.push_back(std::move(g));
    }
    if (!header_seen || !config) throw std::invalid_argument("missing mpqw-circuit header");
    Circuit c{layout_for(*config), std::move(gates), alpha, beta};
    return c;
}

// ---------------------------------------------------------------------------
// Verification against the full-space simulator
// ---------------------------------------------------------------------------

/// Executes the compiled step on every encoded arc basis state and compares
/// with the embedded full-space step; returns the worst per-amplitude
/// deviation (leakage outside valid encodings counts as deviation).
inline double max_step_deviation(const QubitLayout& lay, double alpha, double beta) {
    const GraphConfig& g = lay.config;
    const Circuit step = build_step(lay, alpha, beta);
    double worst = 0.0;
    const long long dim = g.edge_space_dimension();
    for (long long idx = 0; idx < dim; ++idx) {
        const Arc a = arc_at(g, idx);
        CVec state(std::size_t{1} << lay.total_qubits);
        state[encode(lay, a.u, a.v)] = 1.0;
        execute_in_place(step, state);
        const CVec want = embed_edge_state(lay, walk_step(basis_arc_state(g, a.u, a.v), alpha, beta));
        worst = std::max(worst, max_abs_diff(state, want));
    }
    return worst;
}

}  // namespace mpqw
