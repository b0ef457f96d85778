#pragma once

#include "tmoments/jet.hpp"
#include "tmoments/transducer.hpp"

#include <optional>
#include <span>

namespace tmoments {

// The five asymptotic constants of the joint (input sum, output sum)
// distribution under uniformly random input of length n:
//
//   E(Input)  = e1*n            V(Input)  = v1*n
//   E(Output) = e2*n + O(1)     V(Output) = v2*n + O(1)
//   Cov       = c*n + O(1)
struct Moments {
    Rational e1, e2, v1, v2, c;

    friend bool operator==(const Moments&, const Moments&) = default;
};

enum class LimitLaw {
    joint_normal,            // covariance matrix has rank 2
    degenerate_output,       // v2 = 0: the output sum concentrates at e2*n
    linear_relationship,     // rank 1 with v2 != 0: perfect correlation
    normal_times_degenerate, // rank 1 with v1 = 0 (not reachable for valid machines)
};

const char* to_string(LimitLaw law);

struct Classification {
    bool independent = false;      // c = 0
    bool bounded_variance = false; // v2 = 0
    int sigma_rank = 0;            // rank of ((v1, c), (c, v2))
    // c^2 / (v1*v2); undefined when v2 = 0. Kept squared so the whole
    // pipeline stays rational (2/sqrt(5) is reported as 4/5 with sign +1).
    std::optional<Rational> squared_correlation;
    int correlation_sign = 0; // sign of c
    LimitLaw limit_law = LimitLaw::joint_normal;
};

// det(I - (z/K) sum_eps x^eps M_eps(y)) of the final component as a jet at
// (1,1,1). Requires K >= 2 and an aperiodic component; the constant term of
// the result is always 0 and the w-coefficient is nonzero.
Jet2 characteristic_jet(const FinalComponent& fc);

// Reads the five constants off the characteristic jet. e1 and v1 are also
// recomputed from the input alphabet alone ((1/K) sum eps and the matching
// variance) and any disagreement raises errc::internal_mismatch.
Moments asymptotic_moments(const Jet2& jet, std::span<const Rational> alphabet);

// characteristic_jet + asymptotic_moments in one step.
Moments algebraic_moments(const FinalComponent& fc);

Classification classify(const Moments& m);

} // namespace tmoments
