#pragma once

#include "qsg/report.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace qsg {

/// One check per line of a relation catalog, named "relations.<catalog>.<nn>".
std::vector<Check> catalog_checks(std::string_view catalog);

/// Supplementary checks for the repaired lines of the given catalog.
std::vector<Check> corrected_checks(std::string_view catalog, const std::string& prefix);

/// Critical-pair resolution for one presentation ("confluence.<name>").
std::vector<Check> confluence_checks(const std::vector<std::string>& presentations);

/// h-deletion: classical confluence of glh/gamma and agreement of normalize
/// with h-deletion on seeded random words.
std::vector<Check> classical_checks(std::size_t samples = 200, unsigned seed = 20240601);

struct SuiteInfo {
    std::string name;
    std::string summary;
};

/// relations, confluence, hopf, coactions, calculus, maurer, rmatrix,
/// superalgebra, derivatives, contraction, superplane, all.
const std::vector<SuiteInfo>& suite_list();

/// Throws ValidationError for an unknown suite.
std::vector<Check> suite_checks(std::string_view suite);

/// Free-form remarks attached to a suite's report.
std::vector<std::string> suite_notes(std::string_view suite);

}  // namespace qsg
