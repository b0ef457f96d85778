#include "tmoments/analysis.hpp"

#include "tmoments/errors.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>

namespace tmoments {

namespace {

using json = nlohmann::ordered_json;

std::string with_approx(const Rational& value) {
    std::string text = to_string(value);
    if (value.get_den() != 1) {
        char buffer[48];
        std::snprintf(buffer, sizeof(buffer), " (~%.6g)", approx(value));
        text += buffer;
    }
    return text;
}

std::string cycle_summary(const Cycle& cycle) {
    std::string text = "states";
    for (const Transition& tr : cycle.edges)
        text += " " + std::to_string(tr.from);
    text += ", len " + std::to_string(cycle.length());
    text += ", eps " + to_string(cycle.input_sum);
    text += ", delta " + to_string(cycle.output_sum);
    return text;
}

void describe_certificate(std::ostringstream& out, const char* label,
                          const Certificate& cert) {
    out << "  " << label << ": " << (cert.verdict ? "yes" : "no");
    if (cert.verdict && cert.k)
        out << " (k = " << to_string(*cert.k) << ")";
    if (cert.ab)
        out << " (a = " << to_string(cert.ab->first)
            << ", b = " << to_string(cert.ab->second) << ")";
    if (cert.counterexample)
        out << " (counterexample: " << cycle_summary(*cert.counterexample) << ")";
    out << "\n";
}

json moments_to_json(const Moments& m) {
    json node;
    node["e1"] = to_string(m.e1);
    node["e2"] = to_string(m.e2);
    node["v1"] = to_string(m.v1);
    node["v2"] = to_string(m.v2);
    node["c"] = to_string(m.c);
    return node;
}

json certificate_to_json(const Certificate& cert) {
    json node;
    node["verdict"] = cert.verdict;
    if (cert.k)
        node["k"] = to_string(*cert.k);
    if (cert.ab) {
        node["a"] = to_string(cert.ab->first);
        node["b"] = to_string(cert.ab->second);
    }
    if (cert.counterexample) {
        const Cycle& cycle = *cert.counterexample;
        json ce;
        json states = json::array();
        for (const Transition& tr : cycle.edges)
            states.push_back(tr.from);
        ce["states"] = std::move(states);
        ce["length"] = cycle.length();
        ce["input_sum"] = to_string(cycle.input_sum);
        ce["output_sum"] = to_string(cycle.output_sum);
        node["counterexample"] = std::move(ce);
    }
    return node;
}

} // namespace

AnalysisReport analyze(const Transducer& t, const AnalyzeOptions& options) {
    AnalysisReport report;
    report.source = options.source;
    report.state_count = t.state_count;
    report.transition_count = static_cast<int>(t.transitions.size());
    report.alphabet = t.alphabet;

    if (t.alphabet_too_small())
        raise(errc::alphabet_too_small,
              "moment analysis needs at least two input symbols");

    FinalComponent fc = final_component(t);
    report.final_states = fc.states;
    report.period = period(fc);
    if (report.period != 1)
        raise(errc::periodic, "final component has period " +
                                  std::to_string(report.period) +
                                  "; the asymptotic moments require period 1");

    Jet2 jet = characteristic_jet(fc);
    report.algebraic = asymptotic_moments(jet, fc.alphabet);
    report.classification = classify(report.algebraic);

    report.bounded_variance = bounded_variance_certificate(fc, options.cycle_budget);
    if (weakly_connected(t))
        report.quasi_deterministic =
            quasi_deterministic_certificate(t, options.cycle_budget);
    report.rank1 = rank1_certificate(fc, report.algebraic, options.cycle_budget);

    // The certificates decide the same questions as the moment constants;
    // any disagreement means a bug, so it is checked unconditionally.
    if (report.bounded_variance.verdict != (report.algebraic.v2 == 0))
        raise(errc::internal_mismatch,
              "bounded-variance certificate disagrees with v2");
    bool rank1_expected = report.algebraic.v1 * report.algebraic.v2 ==
                          report.algebraic.c * report.algebraic.c;
    if (report.rank1.verdict != rank1_expected)
        raise(errc::internal_mismatch, "rank-1 certificate disagrees with det(Sigma)");

    if (options.check_all) {
        report.combinatorial = combinatorial_moments(fc, options.digraph_budget);
        if (!(*report.combinatorial == report.algebraic))
            raise(errc::internal_mismatch,
                  "combinatorial moments disagree with the algebraic moments");
        report.identities = verify_derivative_identities(fc, options.digraph_budget);
        if (!report.identities->all_hold) {
            std::string failing;
            for (const auto& entry : report.identities->entries)
                if (!entry.holds)
                    failing += (failing.empty() ? "" : ", ") + entry.name;
            raise(errc::identity_violated,
                  "derivative identities violated: " + failing);
        }
    }

    if (options.oracle_n_max > 0)
        report.slopes = slope_report(t, 1, options.oracle_n_max);
    return report;
}

std::string render_text(const AnalysisReport& report) {
    std::ostringstream out;
    const Moments& m = report.algebraic;
    const Classification& cls = report.classification;

    out << "analysis of " << report.source << "\n";
    out << "  states: " << report.state_count
        << ", transitions: " << report.transition_count << ", alphabet:";
    for (const Rational& symbol : report.alphabet)
        out << " " << to_string(symbol);
    out << "\n";
    out << "  final component:";
    for (StateId s : report.final_states)
        out << " " << s;
    out << " (N = " << report.final_states.size() << ", period " << report.period
        << ")\n";

    out << "moments (per input letter)\n";
    out << "  e1 = " << with_approx(m.e1) << "\n";
    out << "  e2 = " << with_approx(m.e2) << "\n";
    out << "  v1 = " << with_approx(m.v1) << "\n";
    out << "  v2 = " << with_approx(m.v2) << "\n";
    out << "  c  = " << with_approx(m.c) << "\n";
    if (report.combinatorial)
        out << "  combinatorial route: "
            << (*report.combinatorial == m ? "agrees" : "DISAGREES") << "\n";

    out << "classification\n";
    out << "  independent: " << (cls.independent ? "yes" : "no") << "\n";
    out << "  bounded output variance: " << (cls.bounded_variance ? "yes" : "no")
        << "\n";
    out << "  sigma rank: " << cls.sigma_rank << "\n";
    if (cls.squared_correlation)
        out << "  squared correlation: " << with_approx(*cls.squared_correlation)
            << ", sign " << (cls.correlation_sign > 0   ? "+1"
                             : cls.correlation_sign < 0 ? "-1"
                                                        : "0")
            << "\n";
    out << "  limit law: " << to_string(cls.limit_law) << "\n";

    out << "certificates\n";
    describe_certificate(out, "bounded variance (final component cycles)",
                         report.bounded_variance);
    if (report.quasi_deterministic)
        describe_certificate(out, "quasi-deterministic (all cycles)",
                             *report.quasi_deterministic);
    else
        out << "  quasi-deterministic (all cycles): not applicable "
               "(graph is not weakly connected)\n";
    describe_certificate(out, "rank-1 relation", report.rank1);

    if (report.identities) {
        out << "derivative identities\n";
        for (const auto& entry : report.identities->entries)
            out << "  " << entry.name << ": "
                << (entry.holds ? "holds" : "VIOLATED") << " ("
                << to_string(entry.jet_side) << ")\n";
    }

    if (!report.slopes.empty()) {
        out << "oracle slopes (first differences vs e2 = " << to_string(m.e2)
            << ", v2 = " << to_string(m.v2) << ", c = " << to_string(m.c) << ")\n";
        for (const SlopeRow& row : report.slopes)
            out << "  n = " << row.n << ": dE = " << to_string(row.d_e_out)
                << ", dV = " << to_string(row.d_v_out)
                << ", dCov = " << to_string(row.d_cov) << "\n";
    }
    return out.str();
}

std::string render_json(const AnalysisReport& report) {
    json document;
    document["source"] = report.source;

    json machine;
    machine["states"] = report.state_count;
    machine["transitions"] = report.transition_count;
    json alphabet = json::array();
    for (const Rational& symbol : report.alphabet)
        alphabet.push_back(to_string(symbol));
    machine["alphabet"] = std::move(alphabet);
    document["machine"] = std::move(machine);

    json fc;
    json states = json::array();
    for (StateId s : report.final_states)
        states.push_back(s);
    fc["states"] = std::move(states);
    fc["size"] = report.final_states.size();
    fc["period"] = report.period;
    document["final_component"] = std::move(fc);

    json moments;
    moments["algebraic"] = moments_to_json(report.algebraic);
    if (report.combinatorial) {
        moments["combinatorial"] = moments_to_json(*report.combinatorial);
        moments["agree"] = (*report.combinatorial == report.algebraic);
    } else {
        moments["combinatorial"] = nullptr;
    }
    document["moments"] = std::move(moments);

    json cls;
    cls["independent"] = report.classification.independent;
    cls["bounded_variance"] = report.classification.bounded_variance;
    cls["sigma_rank"] = report.classification.sigma_rank;
    if (report.classification.squared_correlation)
        cls["squared_correlation"] =
            to_string(*report.classification.squared_correlation);
    else
        cls["squared_correlation"] = nullptr;
    cls["correlation_sign"] = report.classification.correlation_sign;
    cls["limit_law"] = to_string(report.classification.limit_law);
    document["classification"] = std::move(cls);

    json certificates;
    certificates["bounded_variance"] = certificate_to_json(report.bounded_variance);
    if (report.quasi_deterministic)
        certificates["quasi_deterministic"] =
            certificate_to_json(*report.quasi_deterministic);
    else
        certificates["quasi_deterministic"] = nullptr;
    certificates["rank1"] = certificate_to_json(report.rank1);
    document["certificates"] = std::move(certificates);

    if (report.identities) {
        json identities;
        identities["all_hold"] = report.identities->all_hold;
        json entries = json::array();
        for (const auto& entry : report.identities->entries) {
            json node;
            node["name"] = entry.name;
            node["value"] = to_string(entry.jet_side);
            node["holds"] = entry.holds;
            entries.push_back(std::move(node));
        }
        identities["entries"] = std::move(entries);
        document["identities"] = std::move(identities);
    } else {
        document["identities"] = nullptr;
    }

    if (!report.slopes.empty()) {
        json rows = json::array();
        for (const SlopeRow& row : report.slopes) {
            json node;
            node["n"] = row.n;
            node["e_out"] = to_string(row.e_out);
            node["d_e_out"] = to_string(row.d_e_out);
            node["v_out"] = to_string(row.v_out);
            node["d_v_out"] = to_string(row.d_v_out);
            node["cov"] = to_string(row.cov);
            node["d_cov"] = to_string(row.d_cov);
            rows.push_back(std::move(node));
        }
        document["oracle"] = std::move(rows);
    } else {
        document["oracle"] = nullptr;
    }
    return document.dump(2) + "\n";
}

} // namespace tmoments
