#include "tmoments/functional_digraphs.hpp"

#include "tmoments/errors.hpp"

#include <functional>

namespace tmoments {

namespace {

void check_budget(const FinalComponent& fc, long budget) {
    Integer total = pow_integer(Integer(fc.alphabet_size()),
                                static_cast<unsigned long>(fc.size()));
    if (total > budget)
        raise(errc::budget_exceeded,
              "K^N = " + total.get_str() + " choice maps exceed the enumeration budget of " +
                  std::to_string(budget));
}

// Extracts the cycles of a choice map (one out-transition per state) and
// returns them in order of their smallest state index. The number of weak
// components of a functional digraph equals its number of cycles.
std::vector<Cycle> cycles_of_choice(const FinalComponent& fc,
                                    const std::vector<const Transition*>& succ) {
    int n = fc.size();
    std::vector<int> state(n, 0); // 0 unvisited, 1 in progress, 2 done
    std::vector<int> position(n, -1);
    std::vector<Cycle> cycles;

    for (int start = 0; start < n; ++start) {
        if (state[start] != 0)
            continue;
        std::vector<int> trail;
        int at = start;
        while (state[at] == 0) {
            state[at] = 1;
            position[at] = static_cast<int>(trail.size());
            trail.push_back(at);
            at = fc.index_of(succ[at]->to);
        }
        if (state[at] == 1) {
            // Found a new cycle: the tail of the trail from `at` onwards.
            Cycle cycle;
            cycle.input_sum = 0;
            cycle.output_sum = 0;
            for (size_t i = position[at]; i < trail.size(); ++i) {
                const Transition& tr = *succ[trail[i]];
                cycle.edges.push_back(tr);
                cycle.input_sum += tr.input;
                cycle.output_sum += tr.output;
            }
            cycles.push_back(std::move(cycle));
        }
        for (int v : trail)
            state[v] = 2;
    }
    return cycles;
}

// Count weak components of the chosen 1-out-degree subgraph by union-find
// over its undirected support.
int weak_components(const FinalComponent& fc,
                    const std::vector<const Transition*>& succ) {
    int n = fc.size();
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i)
        parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    int components = n;
    for (int i = 0; i < n; ++i) {
        int a = find(i);
        int b = find(fc.index_of(succ[i]->to));
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    return components;
}

// Iterates all choice maps as a mixed-radix odometer (last state fastest)
// and hands each to `visit` with its cycles and component count.
void for_each_choice(const FinalComponent& fc, long budget,
                     const std::function<void(const std::vector<int>&,
                                              const std::vector<Cycle>&, int)>& visit) {
    check_budget(fc, budget);
    int n = fc.size();
    std::vector<int> choice(n, 0);
    std::vector<const Transition*> succ(n);
    while (true) {
        for (int i = 0; i < n; ++i)
            succ[i] = &fc.out_by_index(i)[choice[i]];
        std::vector<Cycle> cycles = cycles_of_choice(fc, succ);
        int components = weak_components(fc, succ);
        if (components != static_cast<int>(cycles.size()))
            raise(errc::internal_mismatch,
                  "component count disagrees with cycle count in a functional digraph");
        visit(choice, cycles, components);

        int pos = n - 1;
        while (pos >= 0) {
            choice[pos] += 1;
            if (choice[pos] < static_cast<int>(fc.out_by_index(pos).size()))
                break;
            choice[pos] = 0;
            --pos;
        }
        if (pos < 0)
            break;
    }
}

} // namespace

DigraphFamilies spanning_functional_digraphs(const FinalComponent& fc, long budget) {
    DigraphFamilies families;
    for_each_choice(fc, budget,
                    [&](const std::vector<int>& choice, const std::vector<Cycle>& cycles,
                        int components) {
                        if (components > 2)
                            return;
                        FunctionalDigraph d{choice, cycles, components};
                        (components == 1 ? families.d1 : families.d2)
                            .push_back(std::move(d));
                    });
    return families;
}

DigraphAggregates digraph_aggregates(const FinalComponent& fc, long budget) {
    DigraphAggregates agg;
    agg.d1_count = 0;
    agg.d2_count = 0;
    agg.total = pow_integer(Integer(fc.alphabet_size()),
                            static_cast<unsigned long>(fc.size()));

    for_each_choice(
        fc, budget,
        [&](const std::vector<int>&, const std::vector<Cycle>& cycles, int components) {
            if (components == 1) {
                agg.d1_count += 1;
                const Cycle& c = cycles.front();
                Rational len(c.length());
                agg.one_d1 += len;
                agg.eps_d1 += c.input_sum;
                agg.delta_d1 += c.output_sum;
                agg.oo_d1 += len * len;
                agg.oe_d1 += len * c.input_sum;
                agg.od_d1 += len * c.output_sum;
                agg.ee_d1 += c.input_sum * c.input_sum;
                agg.ed_d1 += c.input_sum * c.output_sum;
                agg.dd_d1 += c.output_sum * c.output_sum;
            } else if (components == 2) {
                agg.d2_count += 1;
                const Cycle& a = cycles[0];
                const Cycle& b = cycles[1];
                Rational la(a.length()), lb(b.length());
                // Ordered pairs of the two distinct cycles.
                agg.oo_d2 += 2 * la * lb;
                agg.oe_d2 += la * b.input_sum + lb * a.input_sum;
                agg.od_d2 += la * b.output_sum + lb * a.output_sum;
                agg.ee_d2 += 2 * a.input_sum * b.input_sum;
                agg.ed_d2 += a.input_sum * b.output_sum + b.input_sum * a.output_sum;
                agg.dd_d2 += 2 * a.output_sum * b.output_sum;
            }
        });
    return agg;
}

namespace {

struct BaseSums {
    const Rational* first_d1; // base(D1)
    // pair sums with the other bases, indexed by EdgeWeight
    const Rational* pair_d1[3];
    const Rational* pair_d2[3];
};

BaseSums base_sums(const DigraphAggregates& agg, EdgeWeight base) {
    switch (base) {
    case EdgeWeight::one:
        return {&agg.one_d1,
                {&agg.oo_d1, &agg.oe_d1, &agg.od_d1},
                {&agg.oo_d2, &agg.oe_d2, &agg.od_d2}};
    case EdgeWeight::eps:
        return {&agg.eps_d1,
                {&agg.oe_d1, &agg.ee_d1, &agg.ed_d1},
                {&agg.oe_d2, &agg.ee_d2, &agg.ed_d2}};
    case EdgeWeight::delta:
    default:
        return {&agg.delta_d1,
                {&agg.od_d1, &agg.ed_d1, &agg.dd_d1},
                {&agg.od_d2, &agg.ed_d2, &agg.dd_d2}};
    }
}

} // namespace

SelectorSums digraph_sums(const DigraphAggregates& agg, const EdgeSelector& g,
                          const EdgeSelector& h) {
    BaseSums gs = base_sums(agg, g.base);
    BaseSums hs = base_sums(agg, h.base);
    int hb = static_cast<int>(h.base);
    int one = static_cast<int>(EdgeWeight::one);

    SelectorSums sums;
    sums.g_d1 = *gs.first_d1 - g.center * agg.one_d1;
    // (base_g - cg*1)(base_h - ch*1) expands over the stored raw pair sums.
    sums.gh_d1 = *gs.pair_d1[hb] - h.center * *gs.pair_d1[one] -
                 g.center * *hs.pair_d1[one] + g.center * h.center * agg.oo_d1;
    sums.gh_d2 = *gs.pair_d2[hb] - h.center * *gs.pair_d2[one] -
                 g.center * *hs.pair_d2[one] + g.center * h.center * agg.oo_d2;
    return sums;
}

Moments combinatorial_moments(const DigraphAggregates& agg) {
    if (agg.one_d1 == 0)
        raise(errc::internal_mismatch,
              "no single-component spanning functional digraph found; the "
              "component cannot be strongly connected");
    Moments m;
    m.e1 = agg.eps_d1 / agg.one_d1;
    m.e2 = agg.delta_d1 / agg.one_d1;

    EdgeSelector eps_centered{EdgeWeight::eps, m.e1};
    EdgeSelector delta_centered{EdgeWeight::delta, m.e2};
    SelectorSums ee = digraph_sums(agg, eps_centered, eps_centered);
    SelectorSums dd = digraph_sums(agg, delta_centered, delta_centered);
    SelectorSums ed = digraph_sums(agg, eps_centered, delta_centered);

    m.v1 = (ee.gh_d1 - ee.gh_d2) / agg.one_d1;
    m.v2 = (dd.gh_d1 - dd.gh_d2) / agg.one_d1;
    m.c = (ed.gh_d1 - ed.gh_d2) / agg.one_d1;
    return m;
}

Moments combinatorial_moments(const FinalComponent& fc, long budget) {
    return combinatorial_moments(digraph_aggregates(fc, budget));
}

DerivativeIdentityReport verify_derivative_identities(const FinalComponent& fc,
                                                      long budget) {
    Jet2 jet = characteristic_jet(fc);
    DigraphAggregates agg = digraph_aggregates(fc, budget);
    Rational scale = Rational(1) / Rational(agg.total);

    DerivativeIdentityReport report;
    auto add = [&](std::string name, Rational jet_side, Rational digraph_side) {
        bool holds = (jet_side == digraph_side);
        report.entries.push_back(
            {std::move(name), std::move(jet_side), std::move(digraph_side), holds});
    };

    add("f_x", jet.fx(), -scale * agg.eps_d1);
    add("f_y", jet.fy(), -scale * agg.delta_d1);
    add("f_z", jet.fz(), -scale * agg.one_d1);
    add("f_xy", jet.fxy(), scale * (agg.ed_d2 - agg.ed_d1));
    add("f_xz", jet.fxz(), scale * (agg.oe_d2 - agg.oe_d1));
    add("f_yz", jet.fyz(), scale * (agg.od_d2 - agg.od_d1));
    add("f_xx+f_x", jet.fxx() + jet.fx(), scale * (agg.ee_d2 - agg.ee_d1));
    add("f_yy+f_y", jet.fyy() + jet.fy(), scale * (agg.dd_d2 - agg.dd_d1));
    add("f_zz+f_z", jet.fzz() + jet.fz(), scale * (agg.oo_d2 - agg.oo_d1));

    report.all_hold = true;
    for (const auto& entry : report.entries)
        report.all_hold = report.all_hold && entry.holds;
    return report;
}

} // namespace tmoments
