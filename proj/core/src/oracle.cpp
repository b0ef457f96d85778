#include "tmoments/oracle.hpp"

#include "tmoments/errors.hpp"

#include <optional>

namespace tmoments {

namespace {

ExactMoments moments_from_totals(int n, const Integer& total_count,
                                 const StateAccumulator& totals) {
    Rational count(total_count);
    ExactMoments m;
    m.n = n;
    m.e_in = totals.sum_in / count;
    m.e_out = totals.sum_out / count;
    m.v_in = totals.sum_in_sq / count - m.e_in * m.e_in;
    m.v_out = totals.sum_out_sq / count - m.e_out * m.e_out;
    m.cov = totals.sum_in_out / count - m.e_in * m.e_out;
    return m;
}

} // namespace

ExactMoments exact_moments_dp(const Transducer& t, int n) {
    if (n < 0)
        raise(errc::precondition_violated, "negative input length");

    std::vector<StateAccumulator> current(t.state_count);
    current[t.initial - 1].count = 1;

    std::vector<StateAccumulator> next(t.state_count);
    for (int step = 0; step < n; ++step) {
        for (auto& acc : next)
            acc = StateAccumulator{};
        for (StateId s = 1; s <= t.state_count; ++s) {
            const StateAccumulator& from = current[s - 1];
            if (from.count == 0)
                continue;
            Rational count(from.count);
            for (const Transition& tr : t.out(s)) {
                StateAccumulator& to = next[tr.to - 1];
                const Rational& eps = tr.input;
                const Rational& delta = tr.output;
                to.count += from.count;
                to.sum_in += from.sum_in + count * eps;
                to.sum_out += from.sum_out + count * delta;
                to.sum_in_sq += from.sum_in_sq + 2 * eps * from.sum_in + count * eps * eps;
                to.sum_out_sq +=
                    from.sum_out_sq + 2 * delta * from.sum_out + count * delta * delta;
                to.sum_in_out += from.sum_in_out + delta * from.sum_in +
                                 eps * from.sum_out + count * eps * delta;
            }
        }
        std::swap(current, next);
    }

    // Fold in the final outputs, then collapse over states.
    StateAccumulator totals;
    for (StateId s = 1; s <= t.state_count; ++s) {
        const StateAccumulator& acc = current[s - 1];
        if (acc.count == 0)
            continue;
        const Rational& a = t.final_output(s);
        Rational count(acc.count);
        totals.count += acc.count;
        totals.sum_in += acc.sum_in;
        totals.sum_in_sq += acc.sum_in_sq;
        totals.sum_out += acc.sum_out + count * a;
        totals.sum_out_sq += acc.sum_out_sq + 2 * a * acc.sum_out + count * a * a;
        totals.sum_in_out += acc.sum_in_out + a * acc.sum_in;
    }
    return moments_from_totals(n, totals.count, totals);
}

ExactMoments exact_moments_enumeration(const Transducer& t, int n, long budget) {
    if (n < 0)
        raise(errc::precondition_violated, "negative input length");
    int k = t.alphabet_size();
    if (k == 0 && n > 0)
        raise(errc::precondition_violated,
              "no input words of positive length over an empty alphabet");
    Integer total = pow_integer(Integer(k), static_cast<unsigned long>(n));
    if (total > budget)
        raise(errc::budget_exceeded, "K^n = " + total.get_str() +
                                         " words exceed the enumeration budget of " +
                                         std::to_string(budget));

    StateAccumulator totals;
    std::vector<int> word(n, 0);
    std::vector<Rational> symbols(n, k > 0 ? t.alphabet[0] : Rational(0));
    while (true) {
        RunResult result = run(t, symbols);
        Rational in_sum(0);
        for (const Rational& symbol : symbols)
            in_sum += symbol;
        totals.count += 1;
        totals.sum_in += in_sum;
        totals.sum_out += result.output_sum;
        totals.sum_in_sq += in_sum * in_sum;
        totals.sum_out_sq += result.output_sum * result.output_sum;
        totals.sum_in_out += in_sum * result.output_sum;

        int pos = n - 1;
        while (pos >= 0) {
            word[pos] += 1;
            if (word[pos] < k) {
                symbols[pos] = t.alphabet[word[pos]];
                break;
            }
            word[pos] = 0;
            symbols[pos] = t.alphabet[0];
            --pos;
        }
        if (pos < 0)
            break;
    }
    return moments_from_totals(n, totals.count, totals);
}

std::vector<SlopeRow> slope_report(const Transducer& t, int n_min, int n_max) {
    if (n_min < 0 || n_max < n_min)
        raise(errc::precondition_violated, "bad length range for the slope report");

    std::vector<SlopeRow> rows;
    ExactMoments previous = exact_moments_dp(t, n_min);
    for (int n = n_min; n < n_max; ++n) {
        ExactMoments current = exact_moments_dp(t, n + 1);
        SlopeRow row;
        row.n = n;
        row.e_out = previous.e_out;
        row.v_out = previous.v_out;
        row.cov = previous.cov;
        row.d_e_out = current.e_out - previous.e_out;
        row.d_v_out = current.v_out - previous.v_out;
        row.d_cov = current.cov - previous.cov;
        rows.push_back(row);
        previous = current;
    }
    return rows;
}

Band quasi_det_bound(const Transducer& t, const Rational& k, int n) {
    if (n < 0)
        raise(errc::precondition_violated, "negative input length");

    // Per-state extremes of (output sum - k * steps) over all words of the
    // current length that end there; states without such a word stay empty.
    std::vector<std::optional<Band>> current(t.state_count);
    current[t.initial - 1] = Band{Rational(0), Rational(0)};
    std::vector<std::optional<Band>> next(t.state_count);

    for (int step = 0; step < n; ++step) {
        for (auto& band : next)
            band.reset();
        for (StateId s = 1; s <= t.state_count; ++s) {
            if (!current[s - 1])
                continue;
            const Band& from = *current[s - 1];
            for (const Transition& tr : t.out(s)) {
                Rational lo = from.lo + tr.output - k;
                Rational hi = from.hi + tr.output - k;
                auto& to = next[tr.to - 1];
                if (!to)
                    to = Band{lo, hi};
                else {
                    if (lo < to->lo)
                        to->lo = lo;
                    if (hi > to->hi)
                        to->hi = hi;
                }
            }
        }
        std::swap(current, next);
    }

    std::optional<Band> result;
    for (StateId s = 1; s <= t.state_count; ++s) {
        if (!current[s - 1])
            continue;
        Rational lo = current[s - 1]->lo + t.final_output(s);
        Rational hi = current[s - 1]->hi + t.final_output(s);
        if (!result)
            result = Band{lo, hi};
        else {
            if (lo < result->lo)
                result->lo = lo;
            if (hi > result->hi)
                result->hi = hi;
        }
    }
    if (!result)
        raise(errc::precondition_violated, "no path of the requested length");
    return *result;
}

} // namespace tmoments
