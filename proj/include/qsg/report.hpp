#pragma once

#include "qsg/rewrite.hpp"
#include "qsg/tensor.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qsg {

inline constexpr const char* kEngineVersion = "1.0.0";
inline constexpr int kReportSchemaVersion = 1;

enum class CheckStatus { Pass, Fail, ExpectedNonzero };

std::string_view to_string(CheckStatus s);

/// What a single check produced.
struct Outcome {
    CheckStatus status = CheckStatus::Fail;
    std::optional<std::string> witness;          // ASCII normal form
    std::optional<std::string> witness_unicode;  // same, display names
    std::string detail;
};

Outcome expect_zero(const Element& normal_form);
Outcome expect_zero(const Tensor& normal_form);
/// Passes (as expected-nonzero) when the normal form is nonzero; the witness
/// is always recorded.
Outcome expect_nonzero(const Element& normal_form);
Outcome expect_nonzero(const Tensor& normal_form);
Outcome expect_true(bool ok, std::string detail, std::optional<std::string> witness = std::nullopt);
/// Normalizes under rs, then expect_zero.
Outcome zero_under(const Element& x, const RuleSet& rs);
Outcome zero_under(const Tensor& x, const SlotRules& rules);

/// A named, lazily evaluated check. Supplementary checks are reported but do
/// not decide the exit status.
struct Check {
    std::string name;
    std::string paper_eq;
    std::function<Outcome()> run;
    bool supplementary = false;
};

struct CheckResult {
    std::string name;
    std::string paper_eq;
    CheckStatus status = CheckStatus::Fail;
    std::optional<std::string> witness;
    std::optional<std::string> witness_unicode;
    std::string detail;
    bool supplementary = false;
    double runtime_ms = 0;

    bool ok() const { return status != CheckStatus::Fail; }
};

struct Report {
    std::string suite;
    std::vector<std::string> notes;
    std::vector<CheckResult> checks;  // sorted by name

    std::size_t failures(bool include_supplementary = false) const;
    bool passed() const { return failures() == 0; }
};

/// Runs checks on up to `jobs` threads; results are sorted by name. An
/// exception thrown by a check becomes a failure whose detail is the message.
Report run_checks(std::string suite, const std::vector<Check>& checks, unsigned jobs = 1);

/// Canonical JSON (2-space indent, fixed key order).
std::string to_json(const Report& r, bool include_runtime = true);
/// One line per check, witnesses indented below failures.
std::string to_text(const Report& r, bool include_runtime = true);

}  // namespace qsg
