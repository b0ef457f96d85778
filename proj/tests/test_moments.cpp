#include "tmoments/moments.hpp"

#include "tmoments/builtins.hpp"
#include "tmoments/errors.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace tmoments;
using namespace testsupport;

namespace {

Moments moments_of(const Transducer& t) {
    return algebraic_moments(final_component(t));
}

// Closed forms for the two-state parametric machine: expected output
// (a1+a2+a3+a4)/4, covariance -(a1-a2)/4 and the quadratic variance form.
Moments simple_machine_expected(const std::array<Rational, 4>& a) {
    Moments m;
    m.e1 = make_rat(1, 2);
    m.v1 = make_rat(1, 4);
    m.e2 = (a[0] + a[1] + a[2] + a[3]) / 4;
    m.c = -(a[0] - a[1]) / 4;
    m.v2 = (5 * a[0] * a[0] - 6 * a[0] * a[1] + 5 * a[1] * a[1] - 2 * a[0] * a[2] -
            2 * a[1] * a[2] + a[2] * a[2] - 2 * a[0] * a[3] - 2 * a[1] * a[3] +
            2 * a[2] * a[3] + a[3] * a[3]) /
           16;
    return m;
}

} // namespace

TEST_CASE("characteristic jet of the naf machine") {
    // Expanding det(I - (z/2) sum x^eps M_eps(y)) for the 3-state machine by
    // hand gives f = (1 - z/2)(1 - zx/2) - (z^2/4) x y (2 - z/2 - zx/2); its
    // (1,1,z)-slice factors as (1 - z/2)(1 - z/2 - z^2/2).
    Jet2 jet = characteristic_jet(final_component(naf_transducer()));
    CHECK(jet.c0 == 0);
    CHECK(jet.cu == make_rat(-3, 8));
    CHECK(jet.cv == make_rat(-1, 4));
    CHECK(jet.cw == make_rat(-3, 4));
    CHECK(jet.cuu == make_rat(1, 8));
    CHECK(jet.cuv == make_rat(-1, 8));
    CHECK(jet.cuw == make_rat(1, 8));
    CHECK(jet.cvv == 0);
    CHECK(jet.cvw == make_rat(-1, 4));
    CHECK(jet.cww == make_rat(1, 2));
}

TEST_CASE("one-state machine has f = 1 - z") {
    Jet2 jet = characteristic_jet(
        final_component(one_state_machine(make_rat(0), make_rat(0))));
    CHECK(jet.c0 == 0);
    CHECK(jet.cw == -1);
    CHECK(jet.cu == make_rat(-1, 2)); // f = 1 - (z/2)(1 + x)
    CHECK(jet.cv == 0);
}

TEST_CASE("all-zero outputs never touch y") {
    Jet2 jet = characteristic_jet(final_component(
        simple_transducer({make_rat(0), make_rat(0), make_rat(0), make_rat(0)})));
    CHECK(jet.cv == 0);
    CHECK(jet.cvv == 0);
    CHECK(jet.cuv == 0);
    CHECK(jet.cvw == 0);
}

TEST_CASE("characteristic jet refuses periodic components") {
    try {
        characteristic_jet(final_component(period_two_machine()));
        FAIL("expected periodic");
    } catch (const error& err) {
        CHECK(err.code() == errc::periodic);
    }
}

TEST_CASE("characteristic jet refuses one-letter alphabets") {
    TransducerSpec spec;
    spec.states = 1;
    spec.transitions = {edge(1, 1, make_rat(0), make_rat(0))};
    Transducer t = build_transducer(spec);
    try {
        characteristic_jet(final_component(t));
        FAIL("expected alphabet_too_small");
    } catch (const error& err) {
        CHECK(err.code() == errc::alphabet_too_small);
    }
}

TEST_CASE("block counting machines match the published constants") {
    Moments m01 = moments_of(block01_transducer());
    CHECK(m01.v2 == make_rat(1, 16));
    CHECK(m01.c == 0);
    CHECK(m01.e2 == make_rat(1, 4));

    Moments m11 = moments_of(block11_transducer());
    CHECK(m11.v2 == make_rat(5, 16));
    CHECK(m11.c == make_rat(1, 4));
    Classification cls = classify(m11);
    REQUIRE(cls.squared_correlation.has_value());
    CHECK(*cls.squared_correlation == make_rat(4, 5));
    CHECK(cls.correlation_sign == 1);
}

TEST_CASE("parametric machine reproduces its closed forms") {
    SUBCASE("the (1,0,0,0) instance") {
        Moments m = moments_of(
            simple_transducer({make_rat(1), make_rat(0), make_rat(0), make_rat(0)}));
        CHECK(m.e2 == make_rat(1, 4));
        CHECK(m.c == make_rat(-1, 4));
        CHECK(m.v2 == make_rat(5, 16));
    }
    SUBCASE("random tuples") {
        std::mt19937 rng(23);
        for (int i = 0; i < 25; ++i) {
            std::array<Rational, 4> a = {small_rational(rng), small_rational(rng),
                                         small_rational(rng), small_rational(rng)};
            std::string tuple = to_string(a[0]) + "," + to_string(a[1]) + "," +
                                to_string(a[2]) + "," + to_string(a[3]);
            CAPTURE(tuple);
            CHECK(moments_of(simple_transducer(a)) == simple_machine_expected(a));
        }
    }
}

TEST_CASE("binary alphabets give e1 = 1/2 and v1 = 1/4") {
    std::mt19937 rng(29);
    for (const Transducer& t :
         {naf_transducer(), gray_transducer(), block10m01_transducer(),
          simple_transducer({small_rational(rng), small_rational(rng),
                             small_rational(rng), small_rational(rng)})}) {
        Moments m = moments_of(t);
        CHECK(m.e1 == make_rat(1, 2));
        CHECK(m.v1 == make_rat(1, 4));
    }
}

TEST_CASE("classification of the standard examples") {
    SUBCASE("naf: independent with unbounded output variance") {
        Classification cls = classify(moments_of(naf_transducer()));
        CHECK(cls.independent);
        CHECK_FALSE(cls.bounded_variance);
        CHECK(cls.sigma_rank == 2);
        CHECK(cls.limit_law == LimitLaw::joint_normal);
    }
    SUBCASE("11-blocks: dependent") {
        Classification cls = classify(moments_of(block11_transducer()));
        CHECK_FALSE(cls.independent);
        CHECK(cls.limit_law == LimitLaw::joint_normal);
    }
    SUBCASE("constant outputs: degenerate output sum") {
        Rational k = make_rat(3, 2);
        Classification cls = classify(moments_of(simple_transducer({k, k, k, k})));
        CHECK(cls.bounded_variance);
        CHECK(cls.independent);
        CHECK(cls.sigma_rank == 1);
        CHECK(cls.limit_law == LimitLaw::degenerate_output);
        CHECK_FALSE(cls.squared_correlation.has_value());
    }
    SUBCASE("output equal to input: perfect correlation") {
        Classification cls = classify(moments_of(identity_machine()));
        CHECK(cls.sigma_rank == 1);
        CHECK_FALSE(cls.bounded_variance);
        CHECK(cls.limit_law == LimitLaw::linear_relationship);
        REQUIRE(cls.squared_correlation.has_value());
        CHECK(*cls.squared_correlation == 1);
        CHECK(cls.correlation_sign == 1);
    }
}

TEST_CASE("scaling the outputs scales (e2, v2, c) as (l, l^2, l)") {
    std::mt19937 rng(31);
    for (int i = 0; i < 25; ++i) {
        Transducer t = random_machine(rng);
        Rational lambda = small_rational(rng);
        if (lambda == 0)
            lambda = make_rat(2, 3);
        Moments base = moments_of(t);
        Moments scaled = moments_of(scale_outputs(t, lambda));
        CHECK(scaled.e1 == base.e1);
        CHECK(scaled.v1 == base.v1);
        CHECK(scaled.e2 == lambda * base.e2);
        CHECK(scaled.v2 == lambda * lambda * base.v2);
        CHECK(scaled.c == lambda * base.c);
    }
}

TEST_CASE("shifting the outputs shifts e2 and fixes v2 and c") {
    std::mt19937 rng(37);
    for (int i = 0; i < 25; ++i) {
        Transducer t = random_machine(rng);
        Rational mu = small_rational(rng);
        Moments base = moments_of(t);
        Moments shifted = moments_of(shift_outputs(t, mu));
        CHECK(shifted.e2 == base.e2 + mu);
        CHECK(shifted.v2 == base.v2);
        CHECK(shifted.c == base.c);
        CHECK(shifted.e1 == base.e1);
        CHECK(shifted.v1 == base.v1);
    }
}

TEST_CASE("swapping input and output labels swaps the moment pairs") {
    std::mt19937 rng(41);
    CorpusOptions opt;
    opt.permutation_outputs = true;
    for (int i = 0; i < 20; ++i) {
        Transducer t = random_machine(rng, opt);
        Moments base = moments_of(t);
        Moments swapped = moments_of(swap_labels(t));
        CHECK(swapped.e1 == base.e2);
        CHECK(swapped.v1 == base.v2);
        CHECK(swapped.e2 == base.e1);
        CHECK(swapped.v2 == base.v1);
        CHECK(swapped.c == base.c);
    }
}

TEST_CASE("the covariance matrix is positive semidefinite on random machines") {
    std::mt19937 rng(43);
    for (int i = 0; i < 40; ++i) {
        Moments m = moments_of(random_machine(rng));
        CHECK(m.v1 > 0);
        CHECK(m.v2 >= 0);
        CHECK(m.v1 * m.v2 - m.c * m.c >= 0);
    }
}

TEST_CASE("final outputs never change the constants") {
    Transducer base = naf_transducer();
    TransducerSpec spec;
    spec.states = base.state_count;
    for (const Transition& tr : base.transitions)
        spec.transitions.push_back(tr);
    spec.final_outputs = {{1, make_rat(7)}, {2, make_rat(-2, 3)}, {3, make_rat(11, 5)}};
    CHECK(moments_of(build_transducer(spec)) == moments_of(base));
}
