#pragma once

#include <string>

#include "bdsa/bds.hpp"

namespace bdsa {

/// Parses the line-oriented instance format:
///   atoms a b c
///   labels x y
///   act x a = {b,c}
///   ideal x = {a,b}
///   J = {a}
/// '#' starts a comment; omitted act lines mean the empty image; ideal and J
/// lines are optional. Errors carry the offending line number.
Instance parse_instance(const std::string& text);
Instance parse_instance_file(const std::string& path);

/// Canonical rendering; ideal and J lines are emitted only when they differ
/// from their defaults, so parse ∘ render is the identity on instances.
std::string render_instance(const Instance& inst);

}  // namespace bdsa
