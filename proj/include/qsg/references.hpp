#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace qsg {

/// Source reference ("paper_eq" field) for a check family, keyed by the
/// check-name prefix (e.g. "hopf.coassociativity"). Throws ValidationError
/// for an unknown key.
const std::string& paper_ref(std::string_view key);

/// Every registered key.
std::vector<std::string> paper_ref_keys();

}  // namespace qsg
