#include "tmoments/spec_io.hpp"

#include "tmoments/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace tmoments {

namespace {

using json = nlohmann::ordered_json;

Rational rational_field(const json& value, const std::string& where) {
    if (value.is_string())
        return parse_rational(value.get<std::string>());
    if (value.is_number_integer())
        return Rational(static_cast<long>(value.get<int64_t>()));
    raise(errc::parse_error,
          where + " must be a rational string like \"3\" or \"-1/2\"");
}

int int_field(const json& object, const std::string& key) {
    if (!object.contains(key) || !object[key].is_number_integer())
        raise(errc::parse_error, "missing or non-integer field \"" + key + "\"");
    return object[key].get<int>();
}

} // namespace

TransducerSpec transducer_spec_from_json(std::string_view json_text) {
    json document;
    try {
        document = json::parse(json_text);
    } catch (const json::parse_error& err) {
        raise(errc::parse_error, err.what()); // includes the byte position
    }
    if (!document.is_object())
        raise(errc::parse_error, "top-level JSON value must be an object");

    TransducerSpec spec;
    spec.states = int_field(document, "states");
    spec.initial = document.contains("initial") ? int_field(document, "initial") : 1;

    if (!document.contains("transitions") || !document["transitions"].is_array())
        raise(errc::parse_error, "missing \"transitions\" array");
    for (const json& entry : document["transitions"]) {
        if (!entry.is_object())
            raise(errc::parse_error, "each transition must be an object");
        Transition tr;
        tr.from = int_field(entry, "from");
        tr.to = int_field(entry, "to");
        if (!entry.contains("input") || !entry.contains("output"))
            raise(errc::parse_error, "transitions need \"input\" and \"output\"");
        tr.input = rational_field(entry["input"], "transition input");
        tr.output = rational_field(entry["output"], "transition output");
        spec.transitions.push_back(std::move(tr));
    }

    if (document.contains("final_outputs")) {
        const json& outputs = document["final_outputs"];
        if (!outputs.is_object())
            raise(errc::parse_error, "\"final_outputs\" must map state ids to rationals");
        for (const auto& [key, value] : outputs.items()) {
            int state = 0;
            try {
                size_t used = 0;
                state = std::stoi(key, &used);
                if (used != key.size())
                    throw std::invalid_argument(key);
            } catch (const std::exception&) {
                raise(errc::parse_error, "final output key \"" + key +
                                             "\" is not a state id");
            }
            spec.final_outputs.emplace_back(state, rational_field(value, "final output"));
        }
    }

    if (document.contains("input_alphabet")) {
        const json& alphabet = document["input_alphabet"];
        if (!alphabet.is_array())
            raise(errc::parse_error, "\"input_alphabet\" must be an array");
        std::vector<Rational> declared;
        for (const json& value : alphabet)
            declared.push_back(rational_field(value, "alphabet symbol"));
        spec.declared_alphabet = std::move(declared);
    }
    return spec;
}

TransducerSpec load_transducer_spec(const std::filesystem::path& path) {
    std::ifstream stream(path);
    if (!stream)
        raise(errc::parse_error, "cannot open " + path.string());
    std::ostringstream buffer;
    buffer << stream.rdbuf();
    return transducer_spec_from_json(buffer.str());
}

std::string transducer_to_json(const Transducer& t) {
    json document;
    document["states"] = t.state_count;
    document["initial"] = t.initial;
    json alphabet = json::array();
    for (const Rational& symbol : t.alphabet)
        alphabet.push_back(to_string(symbol));
    document["input_alphabet"] = std::move(alphabet);
    json transitions = json::array();
    for (const Transition& tr : t.transitions) {
        json entry;
        entry["from"] = tr.from;
        entry["to"] = tr.to;
        entry["input"] = to_string(tr.input);
        entry["output"] = to_string(tr.output);
        transitions.push_back(std::move(entry));
    }
    document["transitions"] = std::move(transitions);
    json final_outputs = json::object();
    for (StateId s = 1; s <= t.state_count; ++s)
        if (t.final_output(s) != 0)
            final_outputs[std::to_string(s)] = to_string(t.final_output(s));
    document["final_outputs"] = std::move(final_outputs);
    return document.dump(2) + "\n";
}

} // namespace tmoments
