// Command-line front end: loads a machine from a spec file or one of the
// built-in generators, runs the requested analysis and prints a text or
// JSON report. Reports are deterministic byte-for-byte for fixed inputs.

#include "tmoments/analysis.hpp"
#include "tmoments/builtins.hpp"
#include "tmoments/errors.hpp"
#include "tmoments/spec_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <map>
#include <string>
#include <vector>

namespace {

using nlohmann::ordered_json;
using namespace tmoments;

int exit_code_for(errc code) {
    switch (code) {
    case errc::parse_error:
    case errc::unknown_builtin:
    case errc::bad_param:
        return 2;
    case errc::duplicate_transition:
    case errc::incomplete:
    case errc::unknown_state:
    case errc::alphabet_too_small:
    case errc::alphabet_mismatch:
    case errc::symbol_not_in_alphabet:
    case errc::precondition_violated:
        return 3;
    case errc::not_finally_connected:
    case errc::periodic:
    case errc::not_weakly_connected:
    case errc::degenerate_characteristic:
        return 4;
    case errc::budget_exceeded:
    case errc::cycle_budget_exceeded:
        return 5;
    case errc::internal_mismatch:
    case errc::identity_violated:
        return 1;
    }
    return 1;
}

struct MachineArgs {
    std::string builtin;
    std::string file;
    std::vector<std::string> params;
    std::string format = "text";
    long budget = kDefaultDigraphBudget;
    int n_max = 0;
    bool check_all = false;
    bool final_only = false;
};

void add_machine_options(CLI::App* cmd, MachineArgs& args) {
    auto* builtin =
        cmd->add_option("--builtin", args.builtin, "Use a built-in machine by name");
    auto* file = cmd->add_option("--file", args.file, "Load a machine spec file (JSON)");
    builtin->excludes(file);
    cmd->add_option("--param", args.params,
                    "Builtin parameter key=value (e.g. w=3 or \"a=(1,0,0,0)\")");
    cmd->add_option("--format", args.format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--budget", args.budget,
                    "Enumeration budget for digraphs and cycles");
}

Transducer load_machine(const MachineArgs& args, std::string& source) {
    if (!args.builtin.empty()) {
        std::map<std::string, std::string> params;
        for (const std::string& param : args.params) {
            auto eq = param.find('=');
            if (eq == std::string::npos)
                raise(errc::bad_param, "--param needs key=value, got '" + param + "'");
            params[param.substr(0, eq)] = param.substr(eq + 1);
        }
        source = "builtin:" + args.builtin;
        return make_builtin(args.builtin, params);
    }
    if (!args.file.empty()) {
        source = args.file;
        return build_transducer(load_transducer_spec(args.file));
    }
    raise(errc::bad_param, "either --builtin or --file is required");
}

std::string render_rational_list(const std::vector<Rational>& values) {
    std::string text;
    for (const Rational& value : values) {
        if (!text.empty())
            text += " ";
        text += to_string(value);
    }
    return text;
}

int cmd_analyze(const MachineArgs& args) {
    AnalyzeOptions options;
    options.check_all = args.check_all;
    options.oracle_n_max = args.n_max;
    options.digraph_budget = args.budget;
    options.cycle_budget = args.budget;

    Transducer machine = load_machine(args, options.source);
    AnalysisReport report = analyze(machine, options);
    std::cout << (args.format == "json" ? render_json(report) : render_text(report));
    return 0;
}

int cmd_validate(const MachineArgs& args) {
    std::string source;
    Transducer machine = load_machine(args, source);

    if (args.format == "json") {
        ordered_json document;
        document["source"] = source;
        document["valid"] = true;
        document["states"] = machine.state_count;
        document["transitions"] = machine.transitions.size();
        ordered_json alphabet = ordered_json::array();
        for (const Rational& symbol : machine.alphabet)
            alphabet.push_back(to_string(symbol));
        document["alphabet"] = std::move(alphabet);
        document["alphabet_too_small"] = machine.alphabet_too_small();
        FinalComponent fc = final_component(machine);
        ordered_json states = ordered_json::array();
        for (StateId s : fc.states)
            states.push_back(s);
        document["final_component"] = std::move(states);
        document["period"] = period(fc);
        std::cout << document.dump(2) << "\n";
        return 0;
    }

    std::cout << "valid: " << source << "\n";
    std::cout << "  states: " << machine.state_count
              << ", transitions: " << machine.transitions.size() << "\n";
    std::cout << "  alphabet: " << render_rational_list(machine.alphabet);
    if (machine.alphabet_too_small())
        std::cout << " (too small for moment analysis)";
    std::cout << "\n";
    FinalComponent fc = final_component(machine);
    std::cout << "  final component:";
    for (StateId s : fc.states)
        std::cout << " " << s;
    std::cout << " (period " << period(fc) << ")\n";
    return 0;
}

int cmd_cycles(const MachineArgs& args) {
    std::string source;
    Transducer machine = load_machine(args, source);
    std::vector<Cycle> cycles;
    if (args.final_only)
        cycles = simple_cycles(final_component(machine), args.budget);
    else
        cycles = simple_cycles(machine, args.budget);

    if (args.format == "json") {
        ordered_json document;
        document["source"] = source;
        document["scope"] = args.final_only ? "final-component" : "whole-graph";
        document["count"] = cycles.size();
        ordered_json rows = ordered_json::array();
        for (const Cycle& cycle : cycles) {
            ordered_json node;
            ordered_json states = ordered_json::array();
            for (const Transition& tr : cycle.edges)
                states.push_back(tr.from);
            node["states"] = std::move(states);
            node["length"] = cycle.length();
            node["input_sum"] = to_string(cycle.input_sum);
            node["output_sum"] = to_string(cycle.output_sum);
            rows.push_back(std::move(node));
        }
        document["cycles"] = std::move(rows);
        std::cout << document.dump(2) << "\n";
        return 0;
    }

    std::cout << cycles.size() << " simple cycles in " << source
              << (args.final_only ? " (final component)" : "") << "\n";
    for (const Cycle& cycle : cycles) {
        std::cout << "  states";
        for (const Transition& tr : cycle.edges)
            std::cout << " " << tr.from;
        std::cout << ": len " << cycle.length() << ", eps "
                  << to_string(cycle.input_sum) << ", delta "
                  << to_string(cycle.output_sum) << "\n";
    }
    return 0;
}

int cmd_digraphs(const MachineArgs& args) {
    std::string source;
    Transducer machine = load_machine(args, source);
    FinalComponent fc = final_component(machine);
    DigraphAggregates agg = digraph_aggregates(fc, args.budget);

    if (args.format == "json") {
        ordered_json document;
        document["source"] = source;
        document["choice_maps"] = agg.total.get_str();
        document["d1"] = agg.d1_count.get_str();
        document["d2"] = agg.d2_count.get_str();
        ordered_json sums;
        sums["one(D1)"] = to_string(agg.one_d1);
        sums["eps(D1)"] = to_string(agg.eps_d1);
        sums["delta(D1)"] = to_string(agg.delta_d1);
        sums["one.one(D1)"] = to_string(agg.oo_d1);
        sums["one.eps(D1)"] = to_string(agg.oe_d1);
        sums["one.delta(D1)"] = to_string(agg.od_d1);
        sums["eps.eps(D1)"] = to_string(agg.ee_d1);
        sums["eps.delta(D1)"] = to_string(agg.ed_d1);
        sums["delta.delta(D1)"] = to_string(agg.dd_d1);
        sums["one.one(D2)"] = to_string(agg.oo_d2);
        sums["one.eps(D2)"] = to_string(agg.oe_d2);
        sums["one.delta(D2)"] = to_string(agg.od_d2);
        sums["eps.eps(D2)"] = to_string(agg.ee_d2);
        sums["eps.delta(D2)"] = to_string(agg.ed_d2);
        sums["delta.delta(D2)"] = to_string(agg.dd_d2);
        document["sums"] = std::move(sums);
        std::cout << document.dump(2) << "\n";
        return 0;
    }

    std::cout << "spanning functional digraphs of " << source << "\n";
    std::cout << "  choice maps: " << agg.total.get_str() << ", |D1| = "
              << agg.d1_count.get_str() << ", |D2| = " << agg.d2_count.get_str()
              << "\n";
    std::cout << "  one(D1) = " << to_string(agg.one_d1)
              << ", eps(D1) = " << to_string(agg.eps_d1)
              << ", delta(D1) = " << to_string(agg.delta_d1) << "\n";
    std::cout << "  pair sums over D1: one.one = " << to_string(agg.oo_d1)
              << ", one.eps = " << to_string(agg.oe_d1)
              << ", one.delta = " << to_string(agg.od_d1)
              << ", eps.eps = " << to_string(agg.ee_d1)
              << ", eps.delta = " << to_string(agg.ed_d1)
              << ", delta.delta = " << to_string(agg.dd_d1) << "\n";
    std::cout << "  pair sums over D2: one.one = " << to_string(agg.oo_d2)
              << ", one.eps = " << to_string(agg.oe_d2)
              << ", one.delta = " << to_string(agg.od_d2)
              << ", eps.eps = " << to_string(agg.ee_d2)
              << ", eps.delta = " << to_string(agg.ed_d2)
              << ", delta.delta = " << to_string(agg.dd_d2) << "\n";
    return 0;
}

int cmd_oracle(const MachineArgs& args) {
    std::string source;
    Transducer machine = load_machine(args, source);
    int n_max = args.n_max > 0 ? args.n_max : 20;
    std::vector<SlopeRow> rows = slope_report(machine, 1, n_max);

    FinalComponent fc = final_component(machine);
    Moments m = algebraic_moments(fc);

    if (args.format == "json") {
        ordered_json document;
        document["source"] = source;
        ordered_json constants;
        constants["e2"] = to_string(m.e2);
        constants["v2"] = to_string(m.v2);
        constants["c"] = to_string(m.c);
        document["asymptotic"] = std::move(constants);
        ordered_json table = ordered_json::array();
        for (const SlopeRow& row : rows) {
            ordered_json node;
            node["n"] = row.n;
            node["e_out"] = to_string(row.e_out);
            node["d_e_out"] = to_string(row.d_e_out);
            node["v_out"] = to_string(row.v_out);
            node["d_v_out"] = to_string(row.d_v_out);
            node["cov"] = to_string(row.cov);
            node["d_cov"] = to_string(row.d_cov);
            table.push_back(std::move(node));
        }
        document["rows"] = std::move(table);
        std::cout << document.dump(2) << "\n";
        return 0;
    }

    std::cout << "exact moment slopes for " << source << " (e2 = " << to_string(m.e2)
              << ", v2 = " << to_string(m.v2) << ", c = " << to_string(m.c) << ")\n";
    for (const SlopeRow& row : rows)
        std::cout << "  n = " << row.n << ": dE = " << to_string(row.d_e_out)
                  << ", dV = " << to_string(row.d_v_out)
                  << ", dCov = " << to_string(row.d_cov) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact asymptotic moment analysis of subsequential transducers"};
    app.require_subcommand(1);

    MachineArgs analyze_args, cycles_args, digraphs_args, oracle_args, validate_args;

    CLI::App* analyze = app.add_subcommand(
        "analyze", "Moments, classification and certificates for a machine");
    add_machine_options(analyze, analyze_args);
    analyze->add_flag("--check-all", analyze_args.check_all,
                      "Cross-validate via functional digraphs and the "
                      "derivative identities");
    analyze->add_option("--n-max", analyze_args.n_max,
                        "Append an oracle slope table up to this input length");

    CLI::App* cycles = app.add_subcommand("cycles", "List all simple cycles");
    add_machine_options(cycles, cycles_args);
    cycles->add_flag("--final-only", cycles_args.final_only,
                     "Restrict to the final component");

    CLI::App* digraphs = app.add_subcommand(
        "digraphs", "Spanning functional digraph counts and weighted sums");
    add_machine_options(digraphs, digraphs_args);

    CLI::App* oracle = app.add_subcommand(
        "oracle", "Exact finite-length moments and their first differences");
    add_machine_options(oracle, oracle_args);
    oracle->add_option("--n-max", oracle_args.n_max, "Largest input length (default 20)");

    CLI::App* validate = app.add_subcommand(
        "validate", "Check determinism, completeness and connectivity");
    add_machine_options(validate, validate_args);

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed())
            return cmd_analyze(analyze_args);
        if (cycles->parsed())
            return cmd_cycles(cycles_args);
        if (digraphs->parsed())
            return cmd_digraphs(digraphs_args);
        if (oracle->parsed())
            return cmd_oracle(oracle_args);
        if (validate->parsed())
            return cmd_validate(validate_args);
    } catch (const error& err) {
        std::cerr << "error (" << errc_name(err.code()) << "): " << err.what() << "\n";
        return exit_code_for(err.code());
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 0;
}
