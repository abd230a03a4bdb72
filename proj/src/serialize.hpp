#pragma once

#include <string>

#include <json.hpp>

#include "regular.hpp"
#include "transducer.hpp"

namespace digitfn {

// Representation file format:
//   {"q": 2, "u": ["1","0",...], "M": [[["1","0"],...], ...], "v": [...]}
// with rational entries as "p" or "p/q" strings, one matrix per digit.
LinearRepresentation rep_from_json(const nlohmann::json& j);
nlohmann::ordered_json rep_to_json(const LinearRepresentation& R);
LinearRepresentation rep_from_file(const std::string& path);

// Transducer file format:
//   {"q": 2, "states": [...], "initial": "s0",
//    "transitions": [["s0", 0, "s1", "1"], ...], "final": [["s0", "0"], ...]}
Transducer transducer_from_json(const nlohmann::json& j);
nlohmann::ordered_json transducer_to_json(const Transducer& T);
Transducer transducer_from_file(const std::string& path);

}  // namespace digitfn
