#pragma once

#include "tmoments/moments.hpp"
#include "tmoments/transducer.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace tmoments {

inline constexpr long kDefaultCycleBudget = 1'000'000;

// A simple directed cycle: distinct vertices, listed starting from the
// smallest state id on the cycle. Parallel transitions give distinct cycles.
struct Cycle {
    std::vector<Transition> edges;
    Rational input_sum;  // eps(C)
    Rational output_sum; // delta(C)

    int length() const { return static_cast<int>(edges.size()); }

    friend bool operator==(const Cycle&, const Cycle&) = default;
};

// All simple cycles, in a fixed deterministic order: by smallest state on
// the cycle, then depth-first over transitions sorted by input symbol.
std::vector<Cycle> simple_cycles(const FinalComponent& fc,
                                 long max_cycles = kDefaultCycleBudget);
std::vector<Cycle> simple_cycles(const Transducer& t,
                                 long max_cycles = kDefaultCycleBudget);

// Outcome of a cycle-based decision. A true verdict carries the witnessing
// constant(s); a false verdict carries a violating cycle.
struct Certificate {
    bool verdict = false;
    std::optional<Rational> k;                       // delta(C) = k * len(C)
    std::optional<std::pair<Rational, Rational>> ab; // delta(C) = a*len(C) + b*eps(C)
    std::optional<Cycle> counterexample;
};

// v2 = 0 iff one constant k fits delta(C) = k * len(C) on every cycle of
// the final component; the witness then equals e2.
Certificate bounded_variance_certificate(const FinalComponent& fc,
                                         long max_cycles = kDefaultCycleBudget);

// Same test over every cycle of the whole machine. A true verdict means the
// output sum is k*n + O(1) for every input, not just on average. Requires a
// weakly connected underlying graph.
Certificate quasi_deterministic_certificate(const Transducer& t,
                                            long max_cycles = kDefaultCycleBudget);

// The covariance matrix has rank 1 iff delta(C) = a*len(C) + b*eps(C) fits
// every cycle, with a = e2 - (c/v1)*e1 and b = c/v1.
Certificate rank1_certificate(const FinalComponent& fc, const Moments& m,
                              long max_cycles = kDefaultCycleBudget);

// Checks delta(W) = k * len(W) for every closed walk through s of length at
// most max_len that visits s exactly once. A bounded-depth probe of the
// closed-walk formulation of the bounded-variance criterion.
bool closed_walk_spot_check(const FinalComponent& fc, StateId s, int max_len,
                            const Rational& k);

// For components whose outputs all lie in {0,1}: returns whether v2 = 0,
// which happens exactly when all outputs are equal.
bool zero_one_output_check(const FinalComponent& fc);

} // namespace tmoments
