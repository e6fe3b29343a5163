#ifndef LCADC_AFSM_HPP
#define LCADC_AFSM_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace lcadc {

// Burst-mode asynchronous FSM controlling the update handshake:
//
//   REQ = INC + DEC + !ACK.REQ
//   ON  = !(INC + DEC + ACK + REQ)
//   SEL = DEC + !ACK.SEL
//   L   = !INC.!DEC.ACK
//
// REQ and SEL double as state variables (feedback outputs). The evaluator
// settles the equations with delta passes: every pass recomputes all four
// outputs from the inputs and the previous pass's REQ/SEL. For every legal
// burst the machine settles in a single changing pass; needing more than
// one is a glitch and the equivalence checker treats it as a failure.
struct AfsmSignals {
    bool inc = false, dec = false, ack = false;           // inputs
    bool on = true, req = false, sel = false, l = false;  // outputs

    bool operator==(const AfsmSignals&) const = default;
    bool outputs_equal(const AfsmSignals& o) const {
        return on == o.on && req == o.req && sel == o.sel && l == o.l;
    }
};

// Single-literal mutation hooks used by the equivalence checker to prove it
// can distinguish the equations from near-misses. Literal positions:
//   REQ = 0:INC + 1:DEC + (2:!ACK & 3:REQ)
//   ON  = !(4:INC + 5:DEC + 6:ACK + 7:REQ)
//   SEL = 8:DEC + (9:!ACK & 10:SEL)
//   L   = 11:!INC & 12:!DEC & 13:ACK
enum class MutationKind { None, DropLiteral, NegateLiteral };

struct EqMutation {
    MutationKind kind = MutationKind::None;
    int literal = -1;
};

inline constexpr int kEquationLiterals = 14;

struct AfsmEval {
    AfsmSignals signals;
    int settle_passes = 0;  // delta passes that changed an output
};

AfsmEval afsm_eval_detail(const AfsmSignals& prev, bool inc, bool dec, bool ack,
                          const EqMutation& mut = {});
AfsmSignals afsm_eval(const AfsmSignals& prev, bool inc, bool dec, bool ack);

// Reference state graph. S0 is the tracking state (comparators on), S1 is
// entered on a falling crossing, S2 on a rising crossing, S3 holds the
// loaded register while waiting for ACK-.
enum class AfsmStateId { S0, S1, S2, S3 };

enum class Wire { Inc, Dec, Ack, On, Req, Sel, L };
const char* wire_name(Wire w);

struct Edge {
    Wire wire;
    bool rising;
    bool operator==(const Edge&) const = default;
};

struct GraphArc {
    AfsmStateId from;
    AfsmStateId to;
    std::vector<Edge> input_burst;
    std::vector<Edge> output_burst;
};

const std::vector<GraphArc>& afsm_graph();

struct GraphStep {
    AfsmStateId next;
    std::vector<Edge> outputs;
};

// Follows one arc of the graph; the burst is matched as a set. Throws if
// the burst is not enabled in the given state.
GraphStep graph_step(AfsmStateId state, const std::vector<Edge>& burst);

struct EquivalenceReport {
    bool ok = true;
    std::string counterexample;
    std::size_t bursts_checked = 0;
    int max_depth = 0;

    std::string to_string() const;
};

// Replays every burst sequence of the graph up to max_depth bursts against
// the equation evaluator, in every input-arrival order, and checks that the
// evaluator produces exactly the arc's output transitions, produces none
// mid-burst, and settles without glitches. Returns the first mismatch.
EquivalenceReport check_equivalence(int max_depth, const EqMutation& mut = {});

}  // namespace lcadc

#endif
