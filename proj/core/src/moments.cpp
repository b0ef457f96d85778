#include "tmoments/moments.hpp"

#include "tmoments/errors.hpp"

namespace tmoments {

const char* to_string(LimitLaw law) {
    switch (law) {
    case LimitLaw::joint_normal: return "joint-normal";
    case LimitLaw::degenerate_output: return "degenerate-output";
    case LimitLaw::linear_relationship: return "linear-relationship";
    case LimitLaw::normal_times_degenerate: return "normal-times-degenerate";
    }
    return "unknown";
}

Jet2 characteristic_jet(const FinalComponent& fc) {
    int n = fc.size();
    int k = fc.alphabet_size();
    if (k < 2)
        raise(errc::alphabet_too_small,
              "moment analysis needs an input alphabet with at least 2 symbols, got " +
                  std::to_string(k));
    if (period(fc) != 1)
        raise(errc::periodic, "the final component is periodic (period " +
                                  std::to_string(period(fc)) + ")");

    JetMatrix m = JetMatrix::identity(n);
    for (const Transition& tr : fc.transitions) {
        int row = fc.index_of(tr.from);
        int col = fc.index_of(tr.to);
        m.at(row, col) -= edge_weight_jet(tr.input, tr.output, k);
    }

    Jet2 jet = det(m);
    if (jet.c0 != 0)
        raise(errc::internal_mismatch,
              "characteristic determinant does not vanish at (1,1,1): " + to_string(jet.c0));
    if (jet.cw == 0)
        raise(errc::degenerate_characteristic,
              "f_z(1,1,1) = 0; z = 1 is not a simple root, which violates the "
              "preconditions of the moment formulas");
    return jet;
}

Moments asymptotic_moments(const Jet2& jet, std::span<const Rational> alphabet) {
    const Rational& fx = jet.fx();
    const Rational& fy = jet.fy();
    const Rational& fz = jet.fz();
    if (fz == 0)
        raise(errc::degenerate_characteristic, "f_z(1,1,1) = 0");
    Rational fxx = jet.fxx();
    Rational fyy = jet.fyy();
    Rational fzz = jet.fzz();
    const Rational& fxy = jet.fxy();
    const Rational& fxz = jet.fxz();
    const Rational& fyz = jet.fyz();

    Rational fz3 = fz * fz * fz;

    Moments m;
    m.e1 = fx / fz;
    m.e2 = fy / fz;
    m.v1 = (fx * fx * (fzz + fz) + fz * fz * (fxx + fx) - 2 * fx * fz * fxz) / fz3;
    m.v2 = (fy * fy * (fzz + fz) + fz * fz * (fyy + fy) - 2 * fy * fz * fyz) / fz3;
    m.c = (fx * fy * (fzz + fz) + fz * fz * fxy - fy * fz * fxz - fx * fz * fyz) / fz3;

    // e1 and v1 only depend on the i.i.d. uniform input letters; recompute
    // them directly as a tripwire against matrix-construction bugs.
    Rational k(static_cast<int>(alphabet.size()));
    Rational mean(0), mean_sq(0);
    for (const Rational& eps : alphabet) {
        mean += eps;
        mean_sq += eps * eps;
    }
    mean /= k;
    mean_sq /= k;
    Rational var = mean_sq - mean * mean;
    if (m.e1 != mean || m.v1 != var)
        raise(errc::internal_mismatch,
              "jet-derived input moments (e1 = " + to_string(m.e1) + ", v1 = " +
                  to_string(m.v1) + ") disagree with the closed forms (e1 = " +
                  to_string(mean) + ", v1 = " + to_string(var) + ")");

    if (m.v1 <= 0 || m.v2 < 0 || m.v1 * m.v2 - m.c * m.c < 0)
        raise(errc::internal_mismatch,
              "asymptotic covariance matrix is not positive semidefinite");
    return m;
}

Moments algebraic_moments(const FinalComponent& fc) {
    return asymptotic_moments(characteristic_jet(fc), fc.alphabet);
}

Classification classify(const Moments& m) {
    Classification result;
    result.independent = (m.c == 0);
    result.bounded_variance = (m.v2 == 0);
    Rational det = m.v1 * m.v2 - m.c * m.c;
    bool v1_zero = (m.v1 == 0);
    bool v2_zero = (m.v2 == 0);
    if (det != 0)
        result.sigma_rank = 2;
    else
        result.sigma_rank = (v1_zero && v2_zero && m.c == 0) ? 0 : 1;
    if (!v2_zero && !v1_zero)
        result.squared_correlation = (m.c * m.c) / (m.v1 * m.v2);
    result.correlation_sign = sign(m.c);

    if (result.sigma_rank == 2)
        result.limit_law = LimitLaw::joint_normal;
    else if (v2_zero)
        result.limit_law = LimitLaw::degenerate_output;
    else if (v1_zero)
        result.limit_law = LimitLaw::normal_times_degenerate;
    else
        result.limit_law = LimitLaw::linear_relationship;
    return result;
}

} // namespace tmoments
