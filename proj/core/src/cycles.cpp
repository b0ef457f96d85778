#include "tmoments/cycles.hpp"

#include "tmoments/errors.hpp"

#include <algorithm>
#include <map>

namespace tmoments {

namespace {

// Shared view over either a whole transducer or a final component.
struct GraphView {
    std::vector<StateId> states;                       // ascending
    std::vector<std::vector<Transition>> out_by_index; // per position in `states`

    int index_of(StateId s) const {
        auto it = std::lower_bound(states.begin(), states.end(), s);
        return (it != states.end() && *it == s) ? static_cast<int>(it - states.begin())
                                                : -1;
    }
};

GraphView make_view(const Transducer& t) {
    GraphView g;
    g.states.resize(t.state_count);
    for (int s = 0; s < t.state_count; ++s)
        g.states[s] = s + 1;
    g.out_by_index.resize(t.state_count);
    for (const Transition& tr : t.transitions)
        g.out_by_index[tr.from - 1].push_back(tr);
    return g;
}

GraphView make_view(const FinalComponent& fc) {
    GraphView g;
    g.states = fc.states;
    g.out_by_index.resize(fc.size());
    for (int i = 0; i < fc.size(); ++i) {
        auto span = fc.out_by_index(i);
        g.out_by_index[i].assign(span.begin(), span.end());
    }
    return g;
}

// Anchored backtracking: cycles are rooted at their smallest vertex, and the
// search from root r only moves through vertices with index > r. Every simple
// cycle is found exactly once, in a deterministic order.
struct CycleSearch {
    const GraphView& graph;
    long max_cycles;
    std::vector<Cycle>& found;
    std::vector<bool> on_path;
    std::vector<Transition> path;
    int root = 0;

    void dfs(int at) {
        for (const Transition& tr : graph.out_by_index[at]) {
            int next = graph.index_of(tr.to);
            if (next < root || on_path[next])
                continue;
            if (next == root) {
                if (static_cast<long>(found.size()) >= max_cycles)
                    raise(errc::cycle_budget_exceeded,
                          "more than " + std::to_string(max_cycles) + " simple cycles");
                Cycle cycle;
                cycle.edges = path;
                cycle.edges.push_back(tr);
                cycle.input_sum = 0;
                cycle.output_sum = 0;
                for (const Transition& e : cycle.edges) {
                    cycle.input_sum += e.input;
                    cycle.output_sum += e.output;
                }
                found.push_back(std::move(cycle));
                continue;
            }
            on_path[next] = true;
            path.push_back(tr);
            dfs(next);
            path.pop_back();
            on_path[next] = false;
        }
    }
};

std::vector<Cycle> cycles_of(const GraphView& graph, long max_cycles) {
    std::vector<Cycle> found;
    int n = static_cast<int>(graph.states.size());
    CycleSearch search{graph, max_cycles, found, std::vector<bool>(n, false), {}, 0};
    for (int root = 0; root < n; ++root) {
        search.root = root;
        search.dfs(root);
    }
    return found;
}

Certificate proportionality_certificate(const std::vector<Cycle>& cycles) {
    Certificate cert;
    if (cycles.empty()) {
        cert.verdict = true;
        cert.k = Rational(0);
        return cert;
    }
    Rational k = cycles.front().output_sum / cycles.front().length();
    for (const Cycle& c : cycles) {
        if (c.output_sum != k * c.length()) {
            cert.verdict = false;
            cert.counterexample = c;
            return cert;
        }
    }
    cert.verdict = true;
    cert.k = k;
    return cert;
}

} // namespace

std::vector<Cycle> simple_cycles(const FinalComponent& fc, long max_cycles) {
    return cycles_of(make_view(fc), max_cycles);
}

std::vector<Cycle> simple_cycles(const Transducer& t, long max_cycles) {
    return cycles_of(make_view(t), max_cycles);
}

Certificate bounded_variance_certificate(const FinalComponent& fc, long max_cycles) {
    return proportionality_certificate(simple_cycles(fc, max_cycles));
}

Certificate quasi_deterministic_certificate(const Transducer& t, long max_cycles) {
    if (!weakly_connected(t))
        raise(errc::not_weakly_connected,
              "quasi-determinism is only defined for weakly connected machines");
    return proportionality_certificate(simple_cycles(t, max_cycles));
}

Certificate rank1_certificate(const FinalComponent& fc, const Moments& m,
                              long max_cycles) {
    Certificate cert;
    Rational b = m.c / m.v1;
    Rational a = m.e2 - b * m.e1;
    cert.ab = std::make_pair(a, b);
    for (const Cycle& c : simple_cycles(fc, max_cycles)) {
        if (c.output_sum != a * c.length() + b * c.input_sum) {
            cert.verdict = false;
            cert.counterexample = c;
            return cert;
        }
    }
    cert.verdict = true;
    return cert;
}

bool closed_walk_spot_check(const FinalComponent& fc, StateId s, int max_len,
                            const Rational& k) {
    int start = fc.index_of(s);
    if (start < 0)
        raise(errc::unknown_state,
              "state " + std::to_string(s) + " is not in the final component");

    // Walks are in bijection with input words, so enumerate words from s and
    // keep the branches that return to s for the first time within max_len.
    bool ok = true;
    struct Walker {
        const FinalComponent& fc;
        int start;
        int max_len;
        const Rational& k;
        bool& ok;

        void extend(int at, int len, const Rational& delta_sum) {
            if (!ok)
                return;
            for (const Transition& tr : fc.out_by_index(at)) {
                int next = fc.index_of(tr.to);
                Rational sum = delta_sum + tr.output;
                if (next == start) {
                    if (sum != k * (len + 1)) {
                        ok = false;
                        return;
                    }
                    continue; // extending past s would visit it twice
                }
                if (len + 1 < max_len)
                    extend(next, len + 1, sum);
            }
        }
    };
    Walker walker{fc, start, max_len, k, ok};
    walker.extend(start, 0, Rational(0));
    return ok;
}

bool zero_one_output_check(const FinalComponent& fc) {
    if (fc.transitions.empty())
        raise(errc::precondition_violated, "component has no transitions");
    bool all_equal = true;
    const Rational& first = fc.transitions.front().output;
    for (const Transition& tr : fc.transitions) {
        if (tr.output != 0 && tr.output != 1)
            raise(errc::precondition_violated,
                  "output " + to_string(tr.output) + " is outside {0,1}");
        if (tr.output != first)
            all_equal = false;
    }
    bool v2_zero = bounded_variance_certificate(fc).verdict;
    if (v2_zero != all_equal)
        raise(errc::internal_mismatch,
              "cycle certificate disagrees with the constant-output criterion "
              "for a {0,1}-output component");
    return v2_zero;
}

} // namespace tmoments
