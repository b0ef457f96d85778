#pragma once

#include "tmoments/rational.hpp"

#include <optional>
#include <span>
#include <vector>

namespace tmoments {

// States are 1-based; state 1 is the initial state.
using StateId = int;

struct Transition {
    StateId from = 0;
    StateId to = 0;
    Rational input;  // the symbol consumed
    Rational output; // the value emitted

    friend bool operator==(const Transition&, const Transition&) = default;
};

// Raw, unvalidated description of a machine, as read from a spec file or
// assembled programmatically. build_transducer turns it into a Transducer.
struct TransducerSpec {
    int states = 0;
    StateId initial = 1;
    std::vector<Transition> transitions;
    // Omitted states get final output 0.
    std::vector<std::pair<StateId, Rational>> final_outputs;
    // When present, must equal the set of transition inputs.
    std::optional<std::vector<Rational>> declared_alphabet;
};

// A validated, deterministic, complete machine. Immutable after
// construction; safe to share across threads.
struct Transducer {
    int state_count = 0;
    StateId initial = 1;
    std::vector<Transition> transitions; // sorted by (from, input)
    std::vector<int> out_offsets;        // state s owns [out_offsets[s-1], out_offsets[s])
    std::vector<Rational> final_outputs; // indexed by state-1
    std::vector<Rational> alphabet;      // distinct inputs, ascending

    int alphabet_size() const { return static_cast<int>(alphabet.size()); }

    std::span<const Transition> out(StateId s) const {
        return {transitions.data() + out_offsets[s - 1],
                transitions.data() + out_offsets[s]};
    }

    const Rational& final_output(StateId s) const { return final_outputs[s - 1]; }

    // Moment analysis needs at least two input symbols; smaller alphabets
    // are structurally fine but flagged here.
    bool alphabet_too_small() const { return alphabet_size() < 2; }
};

// The unique sink strongly connected component, with its induced
// transitions. Completeness of the whole machine guarantees the induced
// component is complete again.
struct FinalComponent {
    std::vector<StateId> states;         // ascending
    std::vector<Transition> transitions; // induced, sorted by (from, input)
    std::vector<int> out_offsets;        // per component index
    std::vector<Rational> alphabet;      // same as the parent machine

    int size() const { return static_cast<int>(states.size()); }
    int alphabet_size() const { return static_cast<int>(alphabet.size()); }

    // 0-based position of a state inside `states`, or -1.
    int index_of(StateId s) const;

    std::span<const Transition> out_by_index(int i) const {
        return {transitions.data() + out_offsets[i],
                transitions.data() + out_offsets[i + 1]};
    }

    bool contains(StateId s) const { return index_of(s) >= 0; }
};

struct RunResult {
    Rational output_sum;        // transition outputs plus the final output
    std::vector<StateId> path;  // |input| + 1 states, starting at the start state
};

// Validates determinism, completeness, state references and the declared
// alphabet (when given). Throws tmoments::error on violations; an alphabet
// with fewer than two symbols is allowed and only flagged.
Transducer build_transducer(const TransducerSpec& spec);

// Requires a unique sink in the SCC condensation; throws
// errc::not_finally_connected otherwise.
FinalComponent final_component(const Transducer& t);

// gcd of the lengths of all closed walks; 1 means aperiodic.
int period(const FinalComponent& fc);

RunResult run(const Transducer& t, std::span<const Rational> input);
RunResult run_from(const Transducer& t, StateId start, std::span<const Rational> input);

// True when every state can reach every other along undirected edges.
bool weakly_connected(const Transducer& t);

} // namespace tmoments
