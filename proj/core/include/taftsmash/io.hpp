#pragma once

#include <string>
#include <variant>

#include "taftsmash/action.hpp"
#include "taftsmash/structure.hpp"

namespace taftsmash {

// JSON serialization of presentations, actions and spans. Rationals are
// written as canonical "p/q" strings, so round-trips are bit-exact.

std::string presentation_to_json(const CPres& p);
std::string presentation_to_json(const QPres& p);
using AnyPres = std::variant<CPres, QPres>;
AnyPres presentation_from_json(const std::string& text);

std::string action_to_json(const LinearAction& a);
LinearAction action_from_json(const std::string& text);

std::string span_to_json(const GradedSpan& s);

std::string elem_to_json(const CElem& e);
CElem elem_from_json(const CPres& p, const std::string& text);

}  // namespace taftsmash
