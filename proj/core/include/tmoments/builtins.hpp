#pragma once

#include "tmoments/transducer.hpp"

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace tmoments {

// Built-in machines, all over the binary input alphabet {0,1}. They read the
// standard binary expansion from right to left and are the standard worked
// examples for the analyses in this library.

// Hamming weight of the non-adjacent form (3 states, strongly connected).
Transducer naf_transducer();

// Hamming weight of the width-w non-adjacent form (w+1 states); w = 2 gives
// the same machine as naf_transducer.
Transducer wnaf_transducer(int w);

// Hamming weight of the Gray code (3 states; final component is {2, 3}).
Transducer gray_transducer();

// Number of 01-blocks / 11-blocks in the binary expansion (2 states each).
Transducer block01_transducer();
Transducer block11_transducer();

// Number of 10-blocks minus number of 01-blocks (3 states; outputs include
// -1, and every cycle has output sum 0).
Transducer block10m01_transducer();

// Two-state machine with parametric outputs: state 1 loops on 0 emitting
// a[0] and moves to 2 on 1 emitting a[2]; state 2 loops on 1 emitting a[1]
// and moves back on 0 emitting a[3].
Transducer simple_transducer(const std::array<Rational, 4>& a);

// Lookup by name with string parameters, for the CLI: "naf", "wnaf" (w=INT),
// "gray", "block01", "block11", "block10m01", "simple" (a=(r,r,r,r)).
Transducer make_builtin(std::string_view name,
                        const std::map<std::string, std::string>& params);

std::vector<std::string> builtin_names();

} // namespace tmoments
