#pragma once

#include "tmoments/transducer.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace tmoments {

// Machine description files are JSON:
//
//   {
//     "states": 3,
//     "initial": 1,
//     "input_alphabet": ["0", "1"],
//     "transitions": [
//       {"from": 1, "to": 2, "input": "1", "output": "1"},
//       ...
//     ],
//     "final_outputs": {"3": "1"}
//   }
//
// Rationals are strings "p/q" or integer strings (bare JSON integers are
// accepted too); "input_alphabet" and "final_outputs" are optional. Parsing
// reports errc::parse_error with a description of the offending field.
TransducerSpec transducer_spec_from_json(std::string_view json_text);
TransducerSpec load_transducer_spec(const std::filesystem::path& path);

std::string transducer_to_json(const Transducer& t);

} // namespace tmoments
