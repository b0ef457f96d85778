#pragma once

// Shared fixtures and random-machine generators for the test suites.

#include "tmoments/builtins.hpp"
#include "tmoments/transducer.hpp"

#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

namespace testsupport {

using namespace tmoments;

inline Rational make_rat(int num, int den = 1) {
    Rational value(num, den);
    value.canonicalize();
    return value;
}

inline Transition edge(StateId from, StateId to, Rational input, Rational output) {
    return Transition{from, to, std::move(input), std::move(output)};
}

// Single state looping on inputs 0 and 1 with the given outputs.
inline Transducer one_state_machine(Rational out0, Rational out1) {
    TransducerSpec spec;
    spec.states = 1;
    spec.transitions = {edge(1, 1, 0, std::move(out0)), edge(1, 1, 1, std::move(out1))};
    return build_transducer(spec);
}

// Counts the 1s before the first 0: bounded output variance on the final
// component, but not quasi-deterministic on the whole graph.
inline Transducer count_ones_before_zero() {
    TransducerSpec spec;
    spec.states = 2;
    spec.transitions = {
        edge(1, 1, 1, 1), edge(1, 2, 0, 0),
        edge(2, 2, 0, 0), edge(2, 2, 1, 0),
    };
    return build_transducer(spec);
}

// Two absorbing loops unreachable from each other: two condensation sinks.
inline TransducerSpec two_sinks_spec() {
    TransducerSpec spec;
    spec.states = 3;
    spec.transitions = {
        edge(1, 2, 0, 0), edge(1, 3, 1, 0),
        edge(2, 2, 0, 0), edge(2, 2, 1, 0),
        edge(3, 3, 0, 0), edge(3, 3, 1, 0),
    };
    return spec;
}

// Strongly connected 2-state machine with no loops: period 2.
inline Transducer period_two_machine() {
    TransducerSpec spec;
    spec.states = 2;
    spec.transitions = {
        edge(1, 2, 0, 0), edge(1, 2, 1, 1),
        edge(2, 1, 0, 0), edge(2, 1, 1, 1),
    };
    return build_transducer(spec);
}

// Directed 3-ring with a loop at every state; the all-loops choice map has
// three components, so |D1| + |D2| < K^N here.
inline Transducer looped_ring_machine() {
    TransducerSpec spec;
    spec.states = 3;
    spec.transitions = {
        edge(1, 1, 0, 0), edge(1, 2, 1, 0),
        edge(2, 2, 0, 0), edge(2, 3, 1, 0),
        edge(3, 3, 0, 0), edge(3, 1, 1, 0),
    };
    return build_transducer(spec);
}

// Output labels equal to input labels: perfectly correlated sums.
inline Transducer identity_machine() {
    return simple_transducer({make_rat(0), make_rat(1), make_rat(1), make_rat(0)});
}

inline Transducer map_outputs(const Transducer& t,
                              const std::function<Rational(const Transition&)>& fn,
                              const std::function<Rational(const Rational&)>& final_fn) {
    TransducerSpec spec;
    spec.states = t.state_count;
    for (const Transition& tr : t.transitions) {
        Transition copy = tr;
        copy.output = fn(tr);
        spec.transitions.push_back(std::move(copy));
    }
    for (StateId s = 1; s <= t.state_count; ++s)
        spec.final_outputs.emplace_back(s, final_fn(t.final_output(s)));
    return build_transducer(spec);
}

inline Transducer scale_outputs(const Transducer& t, const Rational& lambda) {
    return map_outputs(
        t, [&](const Transition& tr) { return lambda * tr.output; },
        [&](const Rational& a) { return lambda * a; });
}

inline Transducer shift_outputs(const Transducer& t, const Rational& mu) {
    return map_outputs(
        t, [&](const Transition& tr) { return tr.output + mu; },
        [](const Rational& a) { return a; });
}

// Exchanges input and output labels. Only valid when each state's outputs
// form the same alphabet again (e.g. per-state permutations of the inputs).
inline Transducer swap_labels(const Transducer& t) {
    TransducerSpec spec;
    spec.states = t.state_count;
    for (const Transition& tr : t.transitions)
        spec.transitions.push_back(edge(tr.from, tr.to, tr.output, tr.input));
    for (StateId s = 1; s <= t.state_count; ++s)
        spec.final_outputs.emplace_back(s, t.final_output(s));
    return build_transducer(spec);
}

enum class OutputKind {
    small_rationals, // arbitrary labels with small numerators
    zero_one,        // labels from {0,1}
    constant,        // one label everywhere (trivially bounded variance)
    potential,       // k + phi(to) - phi(from): bounded variance, not constant
    affine_potential // a + b*eps + phi(to) - phi(from): rank-1 covariance
};

struct CorpusOptions {
    int max_states = 5;
    int min_alphabet = 2;
    int max_alphabet = 3;
    OutputKind outputs = OutputKind::small_rationals;
    bool require_strongly_connected = false;
    // Per-state outputs form a permutation of the inputs (enables swapping).
    bool permutation_outputs = false;
};

inline Rational small_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    return make_rat(num(rng), den(rng));
}

// Draws complete deterministic machines until one is finally connected and
// finally aperiodic. Labels come from small pools so all arithmetic stays
// tame.
inline Transducer random_machine(std::mt19937& rng, const CorpusOptions& opt = {}) {
    const std::vector<Rational> input_pool = {
        make_rat(0),     make_rat(1), make_rat(-1), make_rat(1, 2),
        make_rat(2),     make_rat(1, 3), make_rat(3, 2),
    };

    for (int attempt = 0; attempt < 2000; ++attempt) {
        std::uniform_int_distribution<int> state_count_dist(1, opt.max_states);
        std::uniform_int_distribution<int> k_dist(opt.min_alphabet, opt.max_alphabet);
        int states = state_count_dist(rng);
        int k = k_dist(rng);

        std::vector<Rational> alphabet = input_pool;
        std::shuffle(alphabet.begin(), alphabet.end(), rng);
        alphabet.resize(k);
        std::sort(alphabet.begin(), alphabet.end());

        std::vector<Rational> potential(states);
        for (Rational& value : potential)
            value = small_rational(rng);
        Rational slope = small_rational(rng);
        Rational intercept = small_rational(rng);
        Rational constant = small_rational(rng);

        TransducerSpec spec;
        spec.states = states;
        std::uniform_int_distribution<int> target_dist(1, states);
        std::uniform_int_distribution<int> bit(0, 1);
        for (StateId s = 1; s <= states; ++s) {
            std::vector<Rational> outputs = alphabet;
            std::shuffle(outputs.begin(), outputs.end(), rng);
            for (int i = 0; i < k; ++i) {
                StateId to = target_dist(rng);
                Rational output;
                switch (opt.outputs) {
                case OutputKind::small_rationals:
                    output = small_rational(rng);
                    break;
                case OutputKind::zero_one:
                    output = make_rat(bit(rng));
                    break;
                case OutputKind::constant:
                    output = constant;
                    break;
                case OutputKind::potential:
                    output = constant + potential[to - 1] - potential[s - 1];
                    break;
                case OutputKind::affine_potential:
                    output = intercept + slope * alphabet[i] + potential[to - 1] -
                             potential[s - 1];
                    break;
                }
                if (opt.permutation_outputs)
                    output = outputs[i];
                spec.transitions.push_back(edge(s, to, alphabet[i], output));
            }
            if (bit(rng))
                spec.final_outputs.emplace_back(s, small_rational(rng));
        }

        Transducer machine = build_transducer(spec);
        try {
            FinalComponent fc = final_component(machine);
            if (period(fc) != 1)
                continue;
            if (opt.require_strongly_connected &&
                fc.size() != machine.state_count)
                continue;
            return machine;
        } catch (const std::exception&) {
            continue;
        }
    }
    throw std::runtime_error("no valid random machine found within the retry limit");
}

} // namespace testsupport
