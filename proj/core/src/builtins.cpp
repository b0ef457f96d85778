#include "tmoments/builtins.hpp"

#include "tmoments/errors.hpp"

#include <algorithm>

namespace tmoments {

namespace {

Transition edge(StateId from, StateId to, int input, Rational output) {
    return Transition{from, to, Rational(input), std::move(output)};
}

std::vector<Rational> parse_tuple(const std::string& text, size_t expected,
                                  const std::string& param) {
    std::string body = text;
    if (!body.empty() && body.front() == '(' && body.back() == ')')
        body = body.substr(1, body.size() - 2);
    std::vector<Rational> values;
    size_t start = 0;
    while (start <= body.size()) {
        size_t comma = body.find(',', start);
        std::string piece = body.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        try {
            values.push_back(parse_rational(piece));
        } catch (const error&) {
            raise(errc::bad_param, "parameter " + param + ": bad rational '" + piece + "'");
        }
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    if (values.size() != expected)
        raise(errc::bad_param, "parameter " + param + " needs " +
                                   std::to_string(expected) + " comma-separated values");
    return values;
}

} // namespace

Transducer naf_transducer() {
    TransducerSpec spec;
    spec.states = 3;
    spec.transitions = {
        edge(1, 1, 0, 0), edge(1, 2, 1, 1),
        edge(2, 1, 0, 0), edge(2, 3, 1, 0),
        edge(3, 2, 0, 1), edge(3, 3, 1, 0),
    };
    spec.final_outputs = {{3, Rational(1)}};
    return build_transducer(spec);
}

Transducer wnaf_transducer(int w) {
    if (w < 2)
        raise(errc::bad_param, "wnaf needs w >= 2, got " + std::to_string(w));
    TransducerSpec spec;
    spec.states = w + 1;
    spec.transitions.push_back(edge(1, 1, 0, 0));
    spec.transitions.push_back(edge(1, 2, 1, 1));
    for (StateId s = 2; s < w; ++s) {
        spec.transitions.push_back(edge(s, s + 1, 0, 0));
        spec.transitions.push_back(edge(s, s + 1, 1, 0));
    }
    spec.transitions.push_back(edge(w, 1, 0, 0));
    spec.transitions.push_back(edge(w, w + 1, 1, 0));
    spec.transitions.push_back(edge(w + 1, 2, 0, 1));
    spec.transitions.push_back(edge(w + 1, w + 1, 1, 0));
    spec.final_outputs = {{w + 1, Rational(1)}};
    return build_transducer(spec);
}

Transducer gray_transducer() {
    TransducerSpec spec;
    spec.states = 3;
    spec.transitions = {
        edge(1, 2, 0, 0), edge(1, 3, 1, 0),
        edge(2, 2, 0, 0), edge(2, 3, 1, 1),
        edge(3, 2, 0, 1), edge(3, 3, 1, 0),
    };
    spec.final_outputs = {{3, Rational(1)}};
    return build_transducer(spec);
}

Transducer block01_transducer() {
    TransducerSpec spec;
    spec.states = 2;
    spec.transitions = {
        edge(1, 1, 0, 0), edge(1, 2, 1, 0),
        edge(2, 1, 0, 1), edge(2, 2, 1, 0),
    };
    return build_transducer(spec);
}

Transducer block11_transducer() {
    TransducerSpec spec;
    spec.states = 2;
    spec.transitions = {
        edge(1, 1, 0, 0), edge(1, 2, 1, 0),
        edge(2, 1, 0, 0), edge(2, 2, 1, 1),
    };
    return build_transducer(spec);
}

Transducer block10m01_transducer() {
    TransducerSpec spec;
    spec.states = 3;
    spec.transitions = {
        edge(1, 2, 0, 0), edge(1, 3, 1, 0),
        edge(2, 2, 0, 0), edge(2, 3, 1, 1),
        edge(3, 2, 0, -1), edge(3, 3, 1, 0),
    };
    return build_transducer(spec);
}

Transducer simple_transducer(const std::array<Rational, 4>& a) {
    TransducerSpec spec;
    spec.states = 2;
    spec.transitions = {
        edge(1, 1, 0, a[0]), edge(1, 2, 1, a[2]),
        edge(2, 2, 1, a[1]), edge(2, 1, 0, a[3]),
    };
    return build_transducer(spec);
}

Transducer make_builtin(std::string_view name,
                        const std::map<std::string, std::string>& params) {
    auto unused_params = [&](std::initializer_list<std::string_view> allowed) {
        for (const auto& [key, value] : params) {
            if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
                raise(errc::bad_param,
                      "builtin '" + std::string(name) + "' does not take parameter '" +
                          key + "'");
        }
    };

    if (name == "naf") {
        unused_params({});
        return naf_transducer();
    }
    if (name == "wnaf") {
        unused_params({"w"});
        auto it = params.find("w");
        if (it == params.end())
            raise(errc::bad_param, "wnaf needs a parameter w (e.g. --param w=3)");
        int w = 0;
        try {
            size_t used = 0;
            w = std::stoi(it->second, &used);
            if (used != it->second.size())
                throw std::invalid_argument(it->second);
        } catch (const std::exception&) {
            raise(errc::bad_param, "parameter w: '" + it->second + "' is not an integer");
        }
        return wnaf_transducer(w);
    }
    if (name == "gray") {
        unused_params({});
        return gray_transducer();
    }
    if (name == "block01") {
        unused_params({});
        return block01_transducer();
    }
    if (name == "block11") {
        unused_params({});
        return block11_transducer();
    }
    if (name == "block10m01") {
        unused_params({});
        return block10m01_transducer();
    }
    if (name == "simple") {
        unused_params({"a"});
        auto it = params.find("a");
        if (it == params.end())
            raise(errc::bad_param,
                  "simple needs a parameter a (e.g. --param \"a=(1,0,0,0)\")");
        std::vector<Rational> values = parse_tuple(it->second, 4, "a");
        return simple_transducer({values[0], values[1], values[2], values[3]});
    }
    raise(errc::unknown_builtin, "unknown builtin '" + std::string(name) + "'");
}

std::vector<std::string> builtin_names() {
    return {"naf", "wnaf", "gray", "block01", "block11", "block10m01", "simple"};
}

} // namespace tmoments
