#pragma once

#include "tmoments/cycles.hpp"
#include "tmoments/jet.hpp"
#include "tmoments/moments.hpp"
#include "tmoments/transducer.hpp"

#include <string>
#include <vector>

namespace tmoments {

inline constexpr long kDefaultDigraphBudget = 10'000'000;

// A spanning functional digraph of the final component: one chosen outgoing
// transition per state. Parallel transitions are distinct choices. The
// number of weakly connected components equals the number of cycles.
struct FunctionalDigraph {
    std::vector<int> choice; // per component index: offset into its out-list
    std::vector<Cycle> cycles;
    int component_count = 0;
};

struct DigraphFamilies {
    std::vector<FunctionalDigraph> d1; // exactly one component
    std::vector<FunctionalDigraph> d2; // exactly two components
};

// Materializes D1 and D2 by iterating all K^N choice maps. Intended for
// small components; the aggregate functions below stream instead.
DigraphFamilies spanning_functional_digraphs(const FinalComponent& fc,
                                             long budget = kDefaultDigraphBudget);

// Every weighted sum over D1 and D2 that the moment formulas and the
// derivative identities consume, collected in one enumeration pass.
// First-order sums run over the single cycle of each D in D1; the pair
// sums over D2 run over ordered pairs of its two distinct cycles.
struct DigraphAggregates {
    Integer d1_count, d2_count; // |D1|, |D2|
    Integer total;              // K^N
    Rational one_d1, eps_d1, delta_d1;
    // gh(D1) = sum_D g(C) h(C), gh(D2) = sum_D sum_{C1 != C2} g(C1) h(C2)
    Rational oo_d1, oe_d1, od_d1, ee_d1, ed_d1, dd_d1;
    Rational oo_d2, oe_d2, od_d2, ee_d2, ed_d2, dd_d2;
};

DigraphAggregates digraph_aggregates(const FinalComponent& fc,
                                     long budget = kDefaultDigraphBudget);

// Affine edge weight g(e) = base(e) - center, with base one of the length
// indicator, the input label or the output label.
enum class EdgeWeight { one, eps, delta };

struct EdgeSelector {
    EdgeWeight base = EdgeWeight::one;
    Rational center; // 0 for the plain weights
};

struct SelectorSums {
    Rational g_d1;  // g(D1)
    Rational gh_d1; // gh(D1)
    Rational gh_d2; // gh(D2)
};

SelectorSums digraph_sums(const DigraphAggregates& agg, const EdgeSelector& g,
                          const EdgeSelector& h);

// The same five constants as the algebraic route, via the functional-digraph
// sums alone.
Moments combinatorial_moments(const FinalComponent& fc,
                              long budget = kDefaultDigraphBudget);
Moments combinatorial_moments(const DigraphAggregates& agg);

// The nine exact identities tying the partial derivatives of the
// characteristic determinant at (1,1,1) to the digraph sums. Any violation
// is an implementation bug, never a property of the input.
struct DerivativeIdentityReport {
    struct Entry {
        std::string name;
        Rational jet_side;
        Rational digraph_side;
        bool holds = false;
    };
    std::vector<Entry> entries;
    bool all_hold = false;
};

DerivativeIdentityReport verify_derivative_identities(
    const FinalComponent& fc, long budget = kDefaultDigraphBudget);

} // namespace tmoments
