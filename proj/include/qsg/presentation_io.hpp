#pragma once

#include "qsg/rewrite.hpp"

#include <string>
#include <string_view>

namespace qsg {

inline constexpr int kPresentationFormatVersion = 1;

/// Line-based text form of a rule set; see docs/presentation-format.md.
std::string export_presentation(const RuleSet& rs);

/// Builds a fresh generator table and rule set from the text form and runs
/// the usual validation (parity, decrease, completeness). Errors name the
/// offending line.
RuleSet load_presentation(std::string_view text);
RuleSet load_presentation_file(const std::string& path);

}  // namespace qsg
