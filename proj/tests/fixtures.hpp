#pragma once

#include <string>

#include "bdsa/instance_io.hpp"

namespace fixtures {

// Desk instances used across the suites.
inline const char* kLoop = "atoms a\nlabels x\nact x a = {a}\n";
inline const char* kO2 = "atoms a\nlabels x y\nact x a = {a}\nact y a = {a}\n";
inline const char* kArrow = "atoms a b\nlabels x\nact x a = {b}\n";
inline const char* kTwoLoops = "atoms a b\nlabels x y\nact x a = {a}\nact y b = {b}\n";
inline const char* kLoopExit = "atoms a b\nlabels x y\nact x a = {a}\nact y a = {b}\n";

inline bdsa::Instance loop() { return bdsa::parse_instance(kLoop); }
inline bdsa::Instance o2() { return bdsa::parse_instance(kO2); }
inline bdsa::Instance arrow() { return bdsa::parse_instance(kArrow); }
inline bdsa::Instance two_loops() { return bdsa::parse_instance(kTwoLoops); }
inline bdsa::Instance loop_exit() { return bdsa::parse_instance(kLoopExit); }

inline bdsa::Instance with_empty_j(const char* text) {
    return bdsa::parse_instance(std::string(text) + "J = {}\n");
}

inline bdsa::Element elem(const bdsa::Instance& inst, const std::string& text) {
    return bdsa::parse_element(inst.universe(), text);
}

}  // namespace fixtures
