#pragma once

#include "tmoments/cycles.hpp"
#include "tmoments/functional_digraphs.hpp"
#include "tmoments/moments.hpp"
#include "tmoments/oracle.hpp"
#include "tmoments/transducer.hpp"

#include <optional>
#include <string>

namespace tmoments {

struct AnalyzeOptions {
    // Also compute the combinatorial moments and the derivative identities,
    // and fail if either disagrees with the algebraic route.
    bool check_all = false;
    // When positive, append an oracle slope table for n = 1..oracle_n_max.
    int oracle_n_max = 0;
    long digraph_budget = kDefaultDigraphBudget;
    long cycle_budget = kDefaultCycleBudget;
    // Label for the report header, e.g. "builtin:naf" or a file name.
    std::string source = "transducer";
};

struct AnalysisReport {
    std::string source;
    int state_count = 0;
    int transition_count = 0;
    std::vector<Rational> alphabet;
    std::vector<StateId> final_states;
    int period = 0;

    Moments algebraic;
    std::optional<Moments> combinatorial;
    Classification classification;

    Certificate bounded_variance;
    std::optional<Certificate> quasi_deterministic; // absent: not weakly connected
    Certificate rank1;

    std::optional<DerivativeIdentityReport> identities;
    std::vector<SlopeRow> slopes;
};

// Runs validate -> final component -> period -> characteristic jet ->
// moments -> classification -> certificates, plus the optional
// cross-checks. Throws tmoments::error, including errc::internal_mismatch
// when check_all finds the two moment routes apart.
AnalysisReport analyze(const Transducer& t, const AnalyzeOptions& options = {});

// Deterministic renderings: same report, same bytes.
std::string render_text(const AnalysisReport& report);
std::string render_json(const AnalysisReport& report);

} // namespace tmoments
