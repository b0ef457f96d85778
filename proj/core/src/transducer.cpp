#include "tmoments/transducer.hpp"

#include "tmoments/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <vector>

namespace tmoments {

namespace {

void check_state(StateId s, int state_count, const char* what) {
    if (s < 1 || s > state_count)
        raise(errc::unknown_state,
              std::string(what) + " references state " + std::to_string(s) +
                  " outside 1.." + std::to_string(state_count));
}

// offsets[s] = number of transitions with from <= s, so state s owns the
// slice [offsets[s-1], offsets[s]) of the (from, input)-sorted list.
std::vector<int> offsets_by_from(const std::vector<Transition>& sorted, int state_count) {
    std::vector<int> offsets(state_count + 1, 0);
    for (const Transition& t : sorted)
        offsets[t.from] += 1;
    for (int s = 1; s <= state_count; ++s)
        offsets[s] += offsets[s - 1];
    return offsets;
}

// Iterative Tarjan; returns the SCC id of each state (0-based states).
// Component ids are assigned in reverse topological order of discovery.
std::vector<int> strongly_connected_components(int n, const std::vector<std::vector<int>>& succ,
                                               int& component_count) {
    std::vector<int> index(n, -1), lowlink(n, 0), component(n, -1);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stack;
    int next_index = 0;
    component_count = 0;

    struct Frame {
        int v;
        size_t edge;
    };
    std::vector<Frame> call;

    for (int root = 0; root < n; ++root) {
        if (index[root] != -1)
            continue;
        call.push_back({root, 0});
        while (!call.empty()) {
            Frame& frame = call.back();
            int v = frame.v;
            if (frame.edge == 0) {
                index[v] = lowlink[v] = next_index++;
                stack.push_back(v);
                on_stack[v] = true;
            }
            bool descended = false;
            while (frame.edge < succ[v].size()) {
                int w = succ[v][frame.edge++];
                if (index[w] == -1) {
                    call.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[w])
                    lowlink[v] = std::min(lowlink[v], index[w]);
            }
            if (descended)
                continue;
            if (lowlink[v] == index[v]) {
                while (true) {
                    int w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    component[w] = component_count;
                    if (w == v)
                        break;
                }
                ++component_count;
            }
            call.pop_back();
            if (!call.empty()) {
                int parent = call.back().v;
                lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
            }
        }
    }
    return component;
}

} // namespace

int FinalComponent::index_of(StateId s) const {
    auto it = std::lower_bound(states.begin(), states.end(), s);
    if (it == states.end() || *it != s)
        return -1;
    return static_cast<int>(it - states.begin());
}

Transducer build_transducer(const TransducerSpec& spec) {
    if (spec.states < 1)
        raise(errc::unknown_state, "a transducer needs at least one state");
    if (spec.initial != 1)
        raise(errc::unknown_state, "the initial state must be state 1");

    Transducer t;
    t.state_count = spec.states;
    t.initial = spec.initial;
    t.transitions = spec.transitions;

    for (const Transition& tr : t.transitions) {
        check_state(tr.from, t.state_count, "transition");
        check_state(tr.to, t.state_count, "transition");
    }

    std::sort(t.transitions.begin(), t.transitions.end(),
              [](const Transition& a, const Transition& b) {
                  if (a.from != b.from)
                      return a.from < b.from;
                  return a.input < b.input;
              });
    for (size_t i = 1; i < t.transitions.size(); ++i) {
        const Transition& a = t.transitions[i - 1];
        const Transition& b = t.transitions[i];
        if (a.from == b.from && a.input == b.input)
            raise(errc::duplicate_transition,
                  "state " + std::to_string(a.from) + " has two transitions on input " +
                      to_string(a.input));
    }
    t.out_offsets = offsets_by_from(t.transitions, t.state_count);

    std::set<Rational> inputs;
    for (const Transition& tr : t.transitions)
        inputs.insert(tr.input);
    t.alphabet.assign(inputs.begin(), inputs.end());

    if (spec.declared_alphabet) {
        std::set<Rational> declared(spec.declared_alphabet->begin(),
                                    spec.declared_alphabet->end());
        if (declared != inputs)
            raise(errc::alphabet_mismatch,
                  "declared input alphabet differs from the set of transition inputs");
    }

    // Complete: every state carries exactly one transition per symbol.
    // Determinism was already established by the duplicate check above.
    int expected = t.alphabet_size();
    for (StateId s = 1; s <= t.state_count; ++s) {
        auto edges = t.out(s);
        if (static_cast<int>(edges.size()) == expected)
            continue;
        for (const Rational& symbol : t.alphabet) {
            bool found = std::any_of(edges.begin(), edges.end(),
                                     [&](const Transition& tr) { return tr.input == symbol; });
            if (!found)
                raise(errc::incomplete,
                      "state " + std::to_string(s) + " has no transition on input " +
                          to_string(symbol));
        }
    }

    t.final_outputs.assign(t.state_count, Rational(0));
    for (const auto& [state, value] : spec.final_outputs) {
        check_state(state, t.state_count, "final output");
        t.final_outputs[state - 1] = value;
    }
    return t;
}

FinalComponent final_component(const Transducer& t) {
    int n = t.state_count;
    std::vector<std::vector<int>> succ(n);
    for (const Transition& tr : t.transitions)
        succ[tr.from - 1].push_back(tr.to - 1);

    int component_count = 0;
    std::vector<int> component = strongly_connected_components(n, succ, component_count);

    std::vector<bool> has_exit(component_count, false);
    for (const Transition& tr : t.transitions) {
        int a = component[tr.from - 1];
        int b = component[tr.to - 1];
        if (a != b)
            has_exit[a] = true;
    }
    std::vector<int> sinks;
    for (int c = 0; c < component_count; ++c)
        if (!has_exit[c])
            sinks.push_back(c);
    if (sinks.size() != 1)
        raise(errc::not_finally_connected,
              "condensation has " + std::to_string(sinks.size()) +
                  " sink components; a finally connected transducer has exactly one");

    int sink = sinks.front();
    FinalComponent fc;
    for (int v = 0; v < n; ++v)
        if (component[v] == sink)
            fc.states.push_back(v + 1);
    for (const Transition& tr : t.transitions)
        if (component[tr.from - 1] == sink) {
            // Sink components have no outgoing edges, so `to` stays inside.
            fc.transitions.push_back(tr);
        }
    fc.alphabet = t.alphabet;

    std::sort(fc.transitions.begin(), fc.transitions.end(),
              [](const Transition& a, const Transition& b) {
                  if (a.from != b.from)
                      return a.from < b.from;
                  return a.input < b.input;
              });
    fc.out_offsets.assign(fc.size() + 1, 0);
    for (const Transition& tr : fc.transitions)
        fc.out_offsets[fc.index_of(tr.from) + 1] += 1;
    std::partial_sum(fc.out_offsets.begin(), fc.out_offsets.end(), fc.out_offsets.begin());
    return fc;
}

int period(const FinalComponent& fc) {
    if (fc.states.empty())
        raise(errc::precondition_violated, "period of an empty component");

    // BFS levels from an arbitrary root; every edge u->v satisfies
    // depth(v) <= depth(u) + 1, and the gcd of the slacks
    // depth(u) + 1 - depth(v) over all edges is the period.
    int n = fc.size();
    std::vector<int> depth(n, -1);
    std::deque<int> queue;
    depth[0] = 0;
    queue.push_back(0);
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (const Transition& tr : fc.out_by_index(u)) {
            int v = fc.index_of(tr.to);
            if (depth[v] == -1) {
                depth[v] = depth[u] + 1;
                queue.push_back(v);
            }
        }
    }

    long long g = 0;
    for (const Transition& tr : fc.transitions) {
        int u = fc.index_of(tr.from);
        int v = fc.index_of(tr.to);
        g = std::gcd(g, static_cast<long long>(depth[u]) + 1 - depth[v]);
    }
    if (g == 0)
        raise(errc::precondition_violated,
              "component has no closed walk; period is undefined");
    return static_cast<int>(g);
}

RunResult run_from(const Transducer& t, StateId start, std::span<const Rational> input) {
    RunResult result;
    result.path.reserve(input.size() + 1);
    StateId state = start;
    result.path.push_back(state);
    result.output_sum = 0;
    for (const Rational& symbol : input) {
        auto edges = t.out(state);
        auto it = std::lower_bound(edges.begin(), edges.end(), symbol,
                                   [](const Transition& tr, const Rational& value) {
                                       return tr.input < value;
                                   });
        if (it == edges.end() || it->input != symbol)
            raise(errc::symbol_not_in_alphabet,
                  "input symbol " + to_string(symbol) + " is not in the alphabet");
        result.output_sum += it->output;
        state = it->to;
        result.path.push_back(state);
    }
    result.output_sum += t.final_output(state);
    return result;
}

RunResult run(const Transducer& t, std::span<const Rational> input) {
    return run_from(t, t.initial, input);
}

bool weakly_connected(const Transducer& t) {
    int n = t.state_count;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    int components = n;
    for (const Transition& tr : t.transitions) {
        int a = find(tr.from - 1);
        int b = find(tr.to - 1);
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    return components == 1;
}

} // namespace tmoments
