#pragma once

#include "tmoments/transducer.hpp"

#include <vector>

namespace tmoments {

inline constexpr long kDefaultEnumerationBudget = 1'000'000;

// Exact per-state aggregates over all length-i input words whose run ends
// at this state: the word count and the first and second moments of the
// (input sum, output sum) pair. Together these determine the exact joint
// moments at length i without tabulating the value distribution.
struct StateAccumulator {
    Integer count;       // number of words
    Rational sum_in;     // sum of input sums
    Rational sum_out;    // sum of output sums
    Rational sum_in_sq;  // sum of squared input sums
    Rational sum_in_out; // sum of products
    Rational sum_out_sq; // sum of squared output sums
};

// Exact moments of the joint distribution at a fixed input length. Final
// outputs are part of the output sum, matching the machine's definition of
// output; the asymptotic constants exclude them, which only shifts the O(1)
// terms.
struct ExactMoments {
    int n = 0;
    Rational e_in, e_out;
    Rational v_in, v_out;
    Rational cov;

    friend bool operator==(const ExactMoments&, const ExactMoments&) = default;
};

// Dynamic program over state accumulators: O(n * S * K) ring operations.
ExactMoments exact_moments_dp(const Transducer& t, int n);

// Brute force over all K^n input words through run(); same contract as the
// DP, kept as an independent cross-check.
ExactMoments exact_moments_enumeration(const Transducer& t, int n,
                                       long budget = kDefaultEnumerationBudget);

// First differences of the exact output moments; they approach the
// asymptotic constants e2, v2, c with geometrically decaying residuals.
struct SlopeRow {
    int n = 0;
    Rational e_out, d_e_out;
    Rational v_out, d_v_out;
    Rational cov, d_cov;
};

std::vector<SlopeRow> slope_report(const Transducer& t, int n_min, int n_max);

// Extremes of (output sum - k*n) over all inputs of length n, final outputs
// included. For quasi-deterministic machines with witness k the band stays
// fixed once n is large enough.
struct Band {
    Rational lo, hi;
};

Band quasi_det_bound(const Transducer& t, const Rational& k, int n);

} // namespace tmoments
