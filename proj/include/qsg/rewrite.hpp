#pragma once

#include "qsg/core.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qsg {

/// Default number of rule applications allowed per normalize() call.
/// Honours the QSG_STEP_BUDGET environment variable when set.
std::size_t default_step_budget();

/// lhs = first*second (no h), rewritten to rhs.
struct RewriteRule {
    Letter first = 0;
    Letter second = 0;
    Element rhs;
    std::string origin;  // source tag of the line, or e.g. "localize(a)"
};

/// Immutable rewriting system over a subset (scope) of a generator table.
/// At most one rule per length-2 left-hand side.
class RuleSet {
public:
    RuleSet(std::string name, TablePtr table, std::vector<bool> scope, std::vector<RewriteRule> rules,
            std::vector<Letter> localized);

    const std::string& name() const { return name_; }
    const TablePtr& table() const { return table_; }
    bool in_scope(Letter l) const { return l < scope_.size() && scope_[l]; }
    std::vector<Letter> scope_letters() const;
    const std::vector<RewriteRule>& rules() const { return rules_; }
    const std::vector<Letter>& localized() const { return localized_; }
    bool is_localized(Letter g) const;

    const RewriteRule* find(Letter x, Letter y) const
    {
        const int idx = index_[static_cast<std::size_t>(x) * stride_ + y];
        return idx < 0 ? nullptr : &rules_[static_cast<std::size_t>(idx)];
    }

    /// Same system with every h-carrying rhs term deleted.
    RuleSet classical() const;
    RuleSet renamed(std::string name) const;

    /// Out-of-order adjacent pairs (x, y) in scope with no rule; squares and
    /// pairs involving an inverse that has not been localized are not required.
    std::vector<std::pair<Letter, Letter>> missing_rules() const;

private:
    std::string name_;
    TablePtr table_;
    std::vector<bool> scope_;
    std::vector<RewriteRule> rules_;
    std::vector<Letter> localized_;
    std::size_t stride_ = 0;
    std::vector<int> index_;
};

/// Mutable staging area for a RuleSet.
class RuleSetBuilder {
public:
    RuleSetBuilder(std::string name, TablePtr table);
    explicit RuleSetBuilder(const RuleSet& base);

    const TablePtr& table() const { return table_; }

    /// Adds generators to the scope (an invertible generator's inverse is added
    /// only by localize()).
    RuleSetBuilder& include(Letter l);
    RuleSetBuilder& include(std::string_view name) { return include(table_->at(name)); }

    /// Orients `relation` (lhs - rhs == 0) into a rule: the leading term is the
    /// h-free length-2 word with the most inversions, ties broken by rank.
    RuleSetBuilder& add_relation(const Element& relation, const std::string& origin);
    RuleSetBuilder& add_rule(Letter first, Letter second, Element rhs, const std::string& origin);

    /// Adjoins g⁻¹ (see qsg::localize).
    RuleSetBuilder& localize(Letter g);
    /// Records g as localized without deriving rules (for systems whose
    /// inverse rules are supplied explicitly, e.g. when loading a file).
    RuleSetBuilder& mark_localized(Letter g);

    /// Replaces every rhs by its normal form until nothing changes.
    RuleSetBuilder& interreduce(std::size_t max_rounds = 8);

    /// Validates (parity, decrease, completeness) and freezes the system.
    RuleSet build(bool require_complete = true) const;

    RuleSet snapshot() const;

private:
    void set_rule(RewriteRule rule);
    std::string name_;
    TablePtr table_;
    std::vector<bool> scope_;
    std::vector<RewriteRule> rules_;
    std::vector<Letter> localized_;
};

/// Rewrites every term with the leftmost applicable rule until none applies.
/// Throws UnknownGenerator for letters outside the scope and
/// StepBudgetExceeded when the budget runs out.
Element normalize(const Element& x, const RuleSet& rs, std::size_t budget = default_step_budget());

struct ZeroCheck {
    bool zero = false;
    Element normal_form;  // the witness when nonzero
};

ZeroCheck verify_zero(const Element& x, const RuleSet& rs);

/// Returns rs extended with g⁻¹: rules g g⁻¹ -> 1, g⁻¹ g -> 1 and, for every
/// other generator y, the conjugate of the g/y commutation rule.
RuleSet localize(const RuleSet& rs, Letter g);

/// Inverse of x + n in the h-truncated algebra, given x_inv with
/// x * x_inv = x_inv * x = 1 and n nilpotent: x_inv - x_inv n x_inv.
/// Both one-sided products are re-checked; throws NotInvertible on failure.
Element invert_perturbed(const Element& x, const Element& x_inv, const Element& n, const RuleSet& rs);

struct CriticalPairReport {
    std::vector<Letter> overlap;  // x y z with rules for x y and y z
    Element left;                 // normal form after rewriting x y first
    Element right;                // normal form after rewriting y z first
    bool resolved = false;
};

/// All length-3 overlaps of rule left-hand sides. Only scope 3 is meaningful
/// for length-2 rules; other values throw ValidationError.
std::vector<CriticalPairReport> critical_pairs(const RuleSet& rs, std::size_t scope = 3);

/// Order key used for the rule decrease check: (inversions, length).
bool rule_term_decreases(const std::vector<Letter>& lhs, const std::vector<Letter>& term);

}  // namespace qsg
