#include "tmoments/functional_digraphs.hpp"

#include "tmoments/builtins.hpp"
#include "tmoments/errors.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace tmoments;
using namespace testsupport;

TEST_CASE("digraph families of the two-state parametric machine") {
    // Three one-component spanning functional digraphs and a single
    // two-component one (the two loops).
    Transducer t = simple_transducer({make_rat(1), make_rat(0), make_rat(0), make_rat(0)});
    DigraphFamilies families = spanning_functional_digraphs(final_component(t));
    CHECK(families.d1.size() == 3);
    CHECK(families.d2.size() == 1);
    for (const FunctionalDigraph& d : families.d1)
        CHECK(d.cycles.size() == 1);
    for (const FunctionalDigraph& d : families.d2)
        CHECK(d.cycles.size() == 2);
}

TEST_CASE("one-state machines only have one-component digraphs") {
    DigraphFamilies families = spanning_functional_digraphs(
        final_component(one_state_machine(make_rat(2), make_rat(3))));
    CHECK(families.d1.size() == 2);
    CHECK(families.d2.empty());
}

TEST_CASE("digraph counts and sums of the naf machine") {
    // All 2^3 = 8 choice maps, checked by hand: four give one component and
    // four give two.
    DigraphAggregates agg = digraph_aggregates(final_component(naf_transducer()));
    CHECK(agg.total == 8);
    CHECK(agg.d1_count == 4);
    CHECK(agg.d2_count == 4);
    CHECK(agg.one_d1 == 6);
    CHECK(agg.eps_d1 == 3);
    CHECK(agg.delta_d1 == 2);
    CHECK(agg.oo_d1 == 10);
    CHECK(agg.ee_d1 == 3);
    CHECK(agg.dd_d1 == 2);
    CHECK(agg.ed_d1 == 2);
    CHECK(agg.oe_d1 == 5);
    CHECK(agg.od_d1 == 4);
    CHECK(agg.oo_d2 == 12);
    CHECK(agg.ee_d2 == 2);
    CHECK(agg.dd_d2 == 0);
    CHECK(agg.ed_d2 == 1);
    CHECK(agg.oe_d2 == 6);
    CHECK(agg.od_d2 == 2);
}

TEST_CASE("first-order digraph sums of the parametric machine") {
    // delta(D1) = a1 + a2 + a3 + a4; with (1,0,0,0) this is 1.
    Transducer t = simple_transducer({make_rat(1), make_rat(0), make_rat(0), make_rat(0)});
    DigraphAggregates agg = digraph_aggregates(final_component(t));
    CHECK(agg.delta_d1 == 1);
    CHECK(agg.one_d1 == 4);
    CHECK(agg.eps_d1 == 2);
}

TEST_CASE("selector sums expand centered weights correctly") {
    Transducer t = simple_transducer({make_rat(1), make_rat(0), make_rat(0), make_rat(0)});
    DigraphFamilies families = spanning_functional_digraphs(final_component(t));
    DigraphAggregates agg = digraph_aggregates(final_component(t));

    EdgeSelector eps_centered{EdgeWeight::eps, make_rat(1, 2)};
    EdgeSelector delta_plain{EdgeWeight::delta, make_rat(0)};
    SelectorSums sums = digraph_sums(agg, eps_centered, delta_plain);

    // Same values straight from the materialized families.
    Rational g_d1(0), gh_d1(0), gh_d2(0);
    for (const FunctionalDigraph& d : families.d1) {
        const Cycle& c = d.cycles.front();
        Rational g = c.input_sum - make_rat(1, 2) * c.length();
        g_d1 += g;
        gh_d1 += g * c.output_sum;
    }
    for (const FunctionalDigraph& d : families.d2) {
        const Cycle& x = d.cycles[0];
        const Cycle& y = d.cycles[1];
        Rational gx = x.input_sum - make_rat(1, 2) * x.length();
        Rational gy = y.input_sum - make_rat(1, 2) * y.length();
        gh_d2 += gx * y.output_sum + gy * x.output_sum;
    }
    CHECK(sums.g_d1 == g_d1);
    CHECK(sums.gh_d1 == gh_d1);
    CHECK(sums.gh_d2 == gh_d2);
}

TEST_CASE("ordered pair symmetry: one.one over D2 doubles the length products") {
    Transducer t = naf_transducer();
    DigraphFamilies families = spanning_functional_digraphs(final_component(t));
    DigraphAggregates agg = digraph_aggregates(final_component(t));
    Rational expected(0);
    for (const FunctionalDigraph& d : families.d2)
        expected += 2 * Rational(d.cycles[0].length()) * Rational(d.cycles[1].length());
    CHECK(agg.oo_d2 == expected);
}

TEST_CASE("centered cross sums decide independence of the parametric machine") {
    // With both sums centered, independence is eps.delta(D1) = eps.delta(D2),
    // which for this machine is exactly a1 = a2.
    auto centered_gap = [](const std::array<Rational, 4>& a) -> Rational {
        Transducer t = simple_transducer(a);
        FinalComponent fc = final_component(t);
        DigraphAggregates agg = digraph_aggregates(fc);
        Moments m = combinatorial_moments(agg);
        SelectorSums sums = digraph_sums(agg, EdgeSelector{EdgeWeight::eps, m.e1},
                                         EdgeSelector{EdgeWeight::delta, m.e2});
        return sums.gh_d1 - sums.gh_d2;
    };
    CHECK(centered_gap({make_rat(2), make_rat(2), make_rat(5), make_rat(-1)}) == 0);
    CHECK(centered_gap({make_rat(2), make_rat(1), make_rat(5), make_rat(-1)}) != 0);
}

TEST_CASE("|D1| + |D2| never exceeds K^N") {
    SUBCASE("equality when no choice map has three components") {
        DigraphAggregates agg = digraph_aggregates(final_component(naf_transducer()));
        CHECK(agg.d1_count + agg.d2_count == agg.total);
    }
    SUBCASE("strict when loops allow three components") {
        DigraphAggregates agg = digraph_aggregates(final_component(looped_ring_machine()));
        CHECK(agg.total == 8);
        CHECK(agg.d1_count + agg.d2_count == 7); // all-loops map has 3 components
    }
    SUBCASE("random machines") {
        std::mt19937 rng(67);
        for (int i = 0; i < 15; ++i) {
            DigraphAggregates agg =
                digraph_aggregates(final_component(random_machine(rng)));
            CHECK(agg.d1_count + agg.d2_count <= agg.total);
        }
    }
}

TEST_CASE("enumeration budget is enforced") {
    try {
        digraph_aggregates(final_component(naf_transducer()), 4);
        FAIL("expected budget_exceeded");
    } catch (const error& err) {
        CHECK(err.code() == errc::budget_exceeded);
        CHECK(std::string(err.what()).find("8") != std::string::npos);
    }
}

TEST_CASE("combinatorial moments agree with the algebraic route") {
    SUBCASE("fixtures") {
        std::vector<Transducer> machines = {
            naf_transducer(),     wnaf_transducer(3),
            gray_transducer(),    block01_transducer(),
            block11_transducer(), block10m01_transducer(),
            identity_machine(),
            simple_transducer({make_rat(1), make_rat(0), make_rat(0), make_rat(0)})};
        for (const Transducer& t : machines) {
            FinalComponent fc = final_component(t);
            CHECK(combinatorial_moments(fc) == algebraic_moments(fc));
        }
    }
    SUBCASE("random corpus") {
        std::mt19937 rng(71);
        for (int i = 0; i < 40; ++i) {
            FinalComponent fc = final_component(random_machine(rng));
            CHECK(combinatorial_moments(fc) == algebraic_moments(fc));
        }
    }
}

TEST_CASE("expected output of the parametric machine is the label average") {
    std::mt19937 rng(73);
    for (int i = 0; i < 10; ++i) {
        std::array<Rational, 4> a = {small_rational(rng), small_rational(rng),
                                     small_rational(rng), small_rational(rng)};
        Moments m = combinatorial_moments(final_component(simple_transducer(a)));
        CHECK(m.e2 == (a[0] + a[1] + a[2] + a[3]) / 4);
    }
}

TEST_CASE("all-zero outputs have vanishing output moments") {
    Moments m = combinatorial_moments(final_component(
        simple_transducer({make_rat(0), make_rat(0), make_rat(0), make_rat(0)})));
    CHECK(m.e2 == 0);
    CHECK(m.v2 == 0);
    CHECK(m.c == 0);
}

TEST_CASE("derivative identities") {
    SUBCASE("every fixture satisfies all nine") {
        for (const Transducer& t :
             {naf_transducer(), wnaf_transducer(4), gray_transducer(),
              block01_transducer(), block11_transducer(), block10m01_transducer()}) {
            DerivativeIdentityReport report =
                verify_derivative_identities(final_component(t));
            REQUIRE(report.entries.size() == 9);
            CHECK(report.all_hold);
        }
    }
    SUBCASE("one-state machine: f_y equals minus the average output") {
        Rational d1 = make_rat(1, 2), d2 = make_rat(-2);
        FinalComponent fc = final_component(one_state_machine(d1, d2));
        Jet2 jet = characteristic_jet(fc);
        CHECK(jet.fy() == -(d1 + d2) / 2);
        DigraphAggregates agg = digraph_aggregates(fc);
        CHECK(jet.fy() == -Rational(1, 2) * agg.delta_d1);
        CHECK(verify_derivative_identities(fc).all_hold);
    }
    SUBCASE("random corpus") {
        std::mt19937 rng(79);
        for (int i = 0; i < 40; ++i) {
            DerivativeIdentityReport report =
                verify_derivative_identities(final_component(random_machine(rng)));
            CHECK(report.all_hold);
        }
    }
}
