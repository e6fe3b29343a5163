#include "lcadc/afsm.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lcadc {

namespace {

constexpr int kMaxPasses = 16;

// A dropped literal collapses to the identity of its operator: true inside
// an AND term, false inside an OR list.
bool lit(bool base, int idx, const EqMutation& mut, bool in_and) {
    if (mut.literal != idx || mut.kind == MutationKind::None)
        return base;
    if (mut.kind == MutationKind::DropLiteral)
        return in_and;
    return !base;
}

AfsmSignals eval_pass(const AfsmSignals& s, bool inc, bool dec, bool ack, const EqMutation& m) {
    AfsmSignals n;
    n.inc = inc;
    n.dec = dec;
    n.ack = ack;
    n.req = lit(inc, 0, m, false) || lit(dec, 1, m, false) ||
            (lit(!ack, 2, m, true) && lit(s.req, 3, m, true));
    n.on = !(lit(inc, 4, m, false) || lit(dec, 5, m, false) || lit(ack, 6, m, false) ||
             lit(s.req, 7, m, false));
    n.sel = lit(dec, 8, m, false) || (lit(!ack, 9, m, true) && lit(s.sel, 10, m, true));
    n.l = lit(!inc, 11, m, true) && lit(!dec, 12, m, true) && lit(ack, 13, m, true);
    return n;
}

}  // namespace

AfsmEval afsm_eval_detail(const AfsmSignals& prev, bool inc, bool dec, bool ack,
                          const EqMutation& mut) {
    if (inc && dec)
        throw std::invalid_argument("INC and DEC cannot be high together");

    AfsmSignals cur = prev;
    int changes = 0;
    for (int pass = 0; pass < kMaxPasses; ++pass) {
        AfsmSignals next = eval_pass(cur, inc, dec, ack, mut);
        if (next.outputs_equal(cur))
            return {next, changes};
        ++changes;
        cur = next;
    }
    throw std::runtime_error("FSM equations did not settle (oscillation)");
}

AfsmSignals afsm_eval(const AfsmSignals& prev, bool inc, bool dec, bool ack) {
    return afsm_eval_detail(prev, inc, dec, ack).signals;
}

const char* wire_name(Wire w) {
    switch (w) {
        case Wire::Inc: return "INC";
        case Wire::Dec: return "DEC";
        case Wire::Ack: return "ACK";
        case Wire::On: return "ON";
        case Wire::Req: return "REQ";
        case Wire::Sel: return "SEL";
        case Wire::L: return "L";
    }
    return "?";
}

const std::vector<GraphArc>& afsm_graph() {
    static const std::vector<GraphArc> arcs = {
        // tracking -> rising crossing in progress
        {AfsmStateId::S0, AfsmStateId::S2,
         {{Wire::Inc, true}},
         {{Wire::On, false}, {Wire::Req, true}}},
        // tracking -> falling crossing in progress
        {AfsmStateId::S0, AfsmStateId::S1,
         {{Wire::Dec, true}},
         {{Wire::On, false}, {Wire::Req, true}, {Wire::Sel, true}}},
        // acknowledged falling update loads the register
        {AfsmStateId::S1, AfsmStateId::S3,
         {{Wire::Dec, false}, {Wire::Ack, true}},
         {{Wire::Req, false}, {Wire::L, true}, {Wire::Sel, false}}},
        // acknowledged rising update loads the register
        {AfsmStateId::S2, AfsmStateId::S3,
         {{Wire::Inc, false}, {Wire::Ack, true}},
         {{Wire::Req, false}, {Wire::L, true}}},
        // ACK release returns to tracking
        {AfsmStateId::S3, AfsmStateId::S0,
         {{Wire::Ack, false}},
         {{Wire::L, false}, {Wire::On, true}}},
    };
    return arcs;
}

namespace {

bool same_edge_set(const std::vector<Edge>& a, const std::vector<Edge>& b) {
    if (a.size() != b.size())
        return false;
    for (const Edge& e : a) {
        if (std::find(b.begin(), b.end(), e) == b.end())
            return false;
    }
    return true;
}

std::string edge_set_str(const std::vector<Edge>& edges) {
    std::string s = "{";
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i)
            s += ", ";
        s += wire_name(edges[i].wire);
        s += edges[i].rising ? "+" : "-";
    }
    s += "}";
    return s;
}

const char* state_name(AfsmStateId s) {
    switch (s) {
        case AfsmStateId::S0: return "S0";
        case AfsmStateId::S1: return "S1";
        case AfsmStateId::S2: return "S2";
        case AfsmStateId::S3: return "S3";
    }
    return "?";
}

struct InputLevels {
    bool inc = false, dec = false, ack = false;

    void apply(const Edge& e) {
        bool* target = nullptr;
        switch (e.wire) {
            case Wire::Inc: target = &inc; break;
            case Wire::Dec: target = &dec; break;
            case Wire::Ack: target = &ack; break;
            default:
                throw std::invalid_argument("burst contains a non-input wire");
        }
        if (*target == e.rising)
            throw std::invalid_argument("burst edge does not change the input level");
        *target = e.rising;
    }
};

std::vector<Edge> output_transitions(const AfsmSignals& before, const AfsmSignals& after) {
    std::vector<Edge> out;
    if (before.on != after.on)
        out.push_back({Wire::On, after.on});
    if (before.req != after.req)
        out.push_back({Wire::Req, after.req});
    if (before.sel != after.sel)
        out.push_back({Wire::Sel, after.sel});
    if (before.l != after.l)
        out.push_back({Wire::L, after.l});
    return out;
}

struct Checker {
    const EqMutation& mut;
    EquivalenceReport report;

    bool fail(const std::string& what) {
        report.ok = false;
        report.counterexample = what;
        return false;
    }

    // Applies one burst in a fixed input order; checks that outputs stay
    // quiet mid-burst, fire exactly the arc's transition set on the last
    // edge, and settle in at most one changing pass throughout.
    bool run_burst(const GraphArc& arc, const std::vector<const Edge*>& order,
                   AfsmSignals& sig, InputLevels& in, const std::string& path) {
        for (std::size_t i = 0; i < order.size(); ++i) {
            in.apply(*order[i]);
            AfsmEval r;
            try {
                r = afsm_eval_detail(sig, in.inc, in.dec, in.ack, mut);
            } catch (const std::exception& e) {
                return fail(path + ": " + e.what());
            }
            if (r.settle_passes > 1)
                return fail(path + ": glitch after " + wire_name(order[i]->wire) +
                            (order[i]->rising ? "+" : "-") + " (outputs needed " +
                            std::to_string(r.settle_passes) + " passes to settle)");
            auto fired = output_transitions(sig, r.signals);
            if (i + 1 < order.size()) {
                if (!fired.empty())
                    return fail(path + ": premature output transition " + edge_set_str(fired) +
                                " before the burst completed");
            } else {
                if (!same_edge_set(fired, arc.output_burst))
                    return fail(path + ": expected outputs " + edge_set_str(arc.output_burst) +
                                ", evaluator produced " + edge_set_str(fired));
            }
            sig = r.signals;
        }
        return true;
    }

    bool explore(AfsmStateId state, const AfsmSignals& sig, const InputLevels& in, int depth,
                 int max_depth, const std::string& path) {
        // the tracking state is the only one with the comparators powered
        if (sig.on != (state == AfsmStateId::S0))
            return fail(path + ": ON level disagrees with state " + state_name(state));
        if (depth == max_depth)
            return true;
        for (const GraphArc& arc : afsm_graph()) {
            if (arc.from != state)
                continue;
            std::string arc_path = path + " " + state_name(arc.from) + "-" +
                                   edge_set_str(arc.input_burst) + "->" + state_name(arc.to);

            // every arrival order of the burst must behave
            std::vector<const Edge*> order;
            for (const Edge& e : arc.input_burst)
                order.push_back(&e);
            std::sort(order.begin(), order.end());
            AfsmSignals settled;
            bool first = true;
            do {
                AfsmSignals s = sig;
                InputLevels lv = in;
                ++report.bursts_checked;
                if (!run_burst(arc, order, s, lv, arc_path))
                    return false;
                if (first) {
                    settled = s;
                    first = false;
                } else if (!(settled == s)) {
                    return fail(arc_path + ": settled state depends on input arrival order");
                }
            } while (std::next_permutation(order.begin(), order.end()));

            InputLevels lv = in;
            for (const Edge& e : arc.input_burst)
                lv.apply(e);
            if (!explore(arc.to, settled, lv, depth + 1, max_depth, arc_path))
                return false;
        }
        return true;
    }
};

}  // namespace

GraphStep graph_step(AfsmStateId state, const std::vector<Edge>& burst) {
    for (const GraphArc& arc : afsm_graph()) {
        if (arc.from == state && same_edge_set(arc.input_burst, burst))
            return {arc.to, arc.output_burst};
    }
    throw std::invalid_argument(std::string("burst ") + edge_set_str(burst) +
                                " not enabled in state " + state_name(state));
}

EquivalenceReport check_equivalence(int max_depth, const EqMutation& mut) {
    if (max_depth < 1)
        throw std::invalid_argument("max_depth must be at least 1");

    Checker ck{mut, {}};
    ck.report.max_depth = max_depth;

    // idle stability: no input change, no output change
    AfsmSignals init;
    try {
        AfsmEval r = afsm_eval_detail(init, false, false, false, mut);
        if (!r.signals.outputs_equal(init) || r.settle_passes > 0) {
            ck.fail("idle: outputs moved with no input transition");
            return ck.report;
        }
    } catch (const std::exception& e) {
        ck.fail(std::string("idle: ") + e.what());
        return ck.report;
    }

    ck.explore(AfsmStateId::S0, init, InputLevels{}, 0, max_depth, "");
    return ck.report;
}

std::string EquivalenceReport::to_string() const {
    std::ostringstream os;
    if (ok) {
        os << "equations match the state graph: " << bursts_checked
           << " burst replays checked to depth " << max_depth;
    } else {
        os << "MISMATCH after " << bursts_checked << " burst replays (depth " << max_depth
           << "):" << counterexample;
    }
    return os.str();
}

}  // namespace lcadc
