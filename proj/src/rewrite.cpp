#include "qsg/rewrite.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <string>

namespace qsg {

std::size_t default_step_budget()
{
    static const std::size_t budget = [] {
        if (const char* env = std::getenv("QSG_STEP_BUDGET")) {
            char* end = nullptr;
            const unsigned long long v = std::strtoull(env, &end, 10);
            if (end != env && *end == '\0' && v > 0)
                return static_cast<std::size_t>(v);
        }
        return static_cast<std::size_t>(1'000'000);
    }();
    return budget;
}

bool rule_term_decreases(const std::vector<Letter>& lhs, const std::vector<Letter>& term)
{
    const auto lhs_key = std::make_pair(inversions(lhs), lhs.size());
    const auto term_key = std::make_pair(inversions(term), term.size());
    return term_key < lhs_key;
}

// ---------------------------------------------------------------------------
// RuleSet

RuleSet::RuleSet(std::string name, TablePtr table, std::vector<bool> scope, std::vector<RewriteRule> rules,
                 std::vector<Letter> localized)
    : name_(std::move(name)),
      table_(std::move(table)),
      scope_(std::move(scope)),
      rules_(std::move(rules)),
      localized_(std::move(localized)),
      stride_(table_->size()),
      index_(stride_ * stride_, -1)
{
    scope_.resize(stride_, false);
    for (std::size_t i = 0; i < rules_.size(); ++i) {
        const auto& r = rules_[i];
        if (r.rhs.table() != table_)
            throw TableMismatch();
        int& slot = index_[static_cast<std::size_t>(r.first) * stride_ + r.second];
        if (slot >= 0)
            throw ValidationError("duplicate rule for " + (*table_)[r.first].name + "*" + (*table_)[r.second].name);
        slot = static_cast<int>(i);
    }
}

std::vector<Letter> RuleSet::scope_letters() const
{
    std::vector<Letter> out;
    for (std::size_t i = 0; i < scope_.size(); ++i)
        if (scope_[i])
            out.push_back(static_cast<Letter>(i));
    return out;
}

bool RuleSet::is_localized(Letter g) const
{
    return std::find(localized_.begin(), localized_.end(), g) != localized_.end();
}

RuleSet RuleSet::classical() const
{
    std::vector<RewriteRule> rules = rules_;
    for (auto& r : rules)
        r.rhs = r.rhs.h_part(0);
    return RuleSet(name_ + "/classical", table_, scope_, std::move(rules), localized_);
}

RuleSet RuleSet::renamed(std::string name) const
{
    RuleSet r = *this;
    r.name_ = std::move(name);
    return r;
}

namespace {

bool needs_pending_localization(const GeneratorTable& table, const std::vector<Letter>& localized, Letter l)
{
    const auto& g = table[l];
    return g.inverse_of && std::find(localized.begin(), localized.end(), *g.inverse_of) == localized.end();
}

}  // namespace

std::vector<std::pair<Letter, Letter>> RuleSet::missing_rules() const
{
    std::vector<std::pair<Letter, Letter>> missing;
    const auto letters = scope_letters();
    for (Letter x : letters) {
        if (needs_pending_localization(*table_, localized_, x))
            continue;
        for (Letter y : letters) {
            if (y >= x || needs_pending_localization(*table_, localized_, y))
                continue;
            if (!find(x, y))
                missing.emplace_back(x, y);
        }
    }
    return missing;
}

// ---------------------------------------------------------------------------
// normalize

Element normalize(const Element& x, const RuleSet& rs, std::size_t budget)
{
    if (x.table() != rs.table())
        throw TableMismatch();
    const GeneratorTable& table = *rs.table();
    for (const auto& [w, c] : x.terms())
        for (Letter l : w.letters)
            if (!rs.in_scope(l))
                throw UnknownGenerator("generator '" + table[l].name + "' is not part of presentation '" + rs.name() +
                                       "'");

    std::map<Word, Scalar, std::greater<>> work(x.terms().begin(), x.terms().end());
    Element::TermMap done;
    std::size_t steps = 0;

    auto accumulate = [](auto& map, Word&& w, Scalar&& c) {
        auto [it, inserted] = map.try_emplace(std::move(w), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                map.erase(it);
        }
    };

    while (!work.empty()) {
        auto node = work.extract(work.begin());
        const Word& w = node.key();
        const Scalar& c = node.mapped();

        const RewriteRule* rule = nullptr;
        std::size_t pos = 0;
        for (; pos + 1 < w.size(); ++pos) {
            rule = rs.find(w.letters[pos], w.letters[pos + 1]);
            if (rule)
                break;
        }
        if (!rule) {
            accumulate(done, Word(node.key()), Scalar(node.mapped()));
            continue;
        }
        if (++steps > budget)
            throw StepBudgetExceeded(to_string(table, w), budget);

        bool prefix_odd = false;
        for (std::size_t i = 0; i < pos; ++i)
            prefix_odd ^= is_odd(table[w.letters[i]].parity);

        for (const auto& [rw, rc] : rule->rhs.terms()) {
            const int hdeg = w.hdeg + rw.hdeg;
            if (hdeg > 1)
                continue;
            Word next;
            next.hdeg = static_cast<std::uint8_t>(hdeg);
            next.letters.reserve(w.size() - 2 + rw.size());
            next.letters.insert(next.letters.end(), w.letters.begin(), w.letters.begin() + static_cast<long>(pos));
            next.letters.insert(next.letters.end(), rw.letters.begin(), rw.letters.end());
            next.letters.insert(next.letters.end(), w.letters.begin() + static_cast<long>(pos + 2), w.letters.end());
            Scalar coeff = c * rc;
            if (rw.hdeg == 1 && prefix_odd)
                coeff = -coeff;
            accumulate(work, std::move(next), std::move(coeff));
        }
    }
    return Element(rs.table(), std::move(done));
}

ZeroCheck verify_zero(const Element& x, const RuleSet& rs)
{
    Element nf = normalize(x, rs);
    const bool zero = nf.is_zero();
    return ZeroCheck{zero, std::move(nf)};
}

// ---------------------------------------------------------------------------
// RuleSetBuilder

RuleSetBuilder::RuleSetBuilder(std::string name, TablePtr table)
    : name_(std::move(name)), table_(std::move(table)), scope_(table_->size(), false)
{
}

RuleSetBuilder::RuleSetBuilder(const RuleSet& base)
    : name_(base.name()), table_(base.table()), rules_(base.rules()), localized_(base.localized())
{
    scope_.assign(table_->size(), false);
    for (Letter l : base.scope_letters())
        scope_[l] = true;
}

RuleSetBuilder& RuleSetBuilder::include(Letter l)
{
    if (l >= scope_.size())
        throw UnknownGenerator("letter out of range");
    scope_[l] = true;
    return *this;
}

void RuleSetBuilder::set_rule(RewriteRule rule)
{
    for (Letter l : {rule.first, rule.second})
        include(l);
    for (Letter l : rule.rhs.letters_used())
        include(l);
    for (auto& r : rules_) {
        if (r.first == rule.first && r.second == rule.second) {
            r = std::move(rule);
            return;
        }
    }
    rules_.push_back(std::move(rule));
}

RuleSetBuilder& RuleSetBuilder::add_rule(Letter first, Letter second, Element rhs, const std::string& origin)
{
    if (rhs.table() != table_)
        throw TableMismatch();
    for (const auto& r : rules_)
        if (r.first == first && r.second == second)
            throw ValidationError("a rule for " + (*table_)[first].name + "*" + (*table_)[second].name +
                                  " already exists");
    set_rule(RewriteRule{first, second, std::move(rhs), origin});
    return *this;
}

RuleSetBuilder& RuleSetBuilder::add_relation(const Element& relation, const std::string& origin)
{
    if (relation.table() != table_)
        throw TableMismatch();
    const Word* lead = nullptr;
    for (const auto& [w, c] : relation.terms()) {
        if (w.hdeg != 0 || w.size() != 2)
            continue;
        if (!lead) {
            lead = &w;
            continue;
        }
        const auto key = std::make_pair(inversions(w.letters), w.letters);
        const auto lead_key = std::make_pair(inversions(lead->letters), lead->letters);
        if (key > lead_key)
            lead = &w;
    }
    if (!lead)
        throw ValidationError("relation " + to_string(relation) + " (" + origin +
                              ") has no h-free quadratic term to orient");
    const Scalar lead_coeff = relation.coefficient(*lead);
    const Word lhs = *lead;
    Element rhs = relation;
    rhs.add_term(lhs, -lead_coeff);
    rhs *= -lead_coeff.inverse();
    return add_rule(lhs.letters[0], lhs.letters[1], std::move(rhs), origin);
}

RuleSetBuilder& RuleSetBuilder::localize(Letter g)
{
    const GeneratorTable& table = *table_;
    const Generator& gen = table[g];
    if (!gen.invertible || !gen.inverse)
        throw ValidationError("cannot localize at '" + gen.name + "': not declared invertible");
    if (is_odd(gen.parity))
        throw ValidationError("cannot localize at odd generator '" + gen.name + "'");
    if (std::find(localized_.begin(), localized_.end(), g) != localized_.end())
        return *this;
    if (!scope_[g])
        throw ValidationError("cannot localize at '" + gen.name + "': not in scope");

    const Letter ginv = *gen.inverse;
    const RuleSet current = snapshot();
    const Element g_inv_elem = Element::generator(table_, ginv);
    const std::string origin = "localize(" + gen.name + ")";

    // One derived rule per y: lhs -> lead * other + factor * g⁻¹ P g⁻¹.
    struct Derived {
        Letter first, second;
        Element lead;    // scalar times the swapped word
        Element raw;     // factor * g⁻¹ P g⁻¹, before reduction
        Element correction;
    };
    std::vector<Derived> derived;
    for (std::size_t yi = 0; yi < scope_.size(); ++yi) {
        const auto y = static_cast<Letter>(yi);
        if (!scope_[y] || y == g || y == ginv)
            continue;
        if (needs_pending_localization(table, localized_, y))
            continue;
        const bool y_first = current.find(y, g) != nullptr;
        const RewriteRule* rule = y_first ? current.find(y, g) : current.find(g, y);
        if (!rule)
            throw ValidationError("cannot localize at '" + gen.name + "': no commutation rule with '" + table[y].name +
                                  "'");
        const Word swapped{0, y_first ? std::vector<Letter>{g, y} : std::vector<Letter>{y, g}};
        const Scalar s = rule->rhs.coefficient(swapped);
        if (s.is_zero())
            throw ValidationError("cannot localize at '" + gen.name + "': rule for " + table[rule->first].name + "*" +
                                  table[rule->second].name + " is not of commutation shape");
        Element p = rule->rhs;
        p.add_term(swapped, -s);
        // y g = s g y + P  gives  g⁻¹ y = s y g⁻¹ + g⁻¹ P g⁻¹;
        // g y = s y g + P  gives  y g⁻¹ = s g⁻¹ y + g⁻¹ P g⁻¹.
        const Element q = mul(mul(g_inv_elem, p), g_inv_elem);
        const std::vector<Letter> lhs_word = y_first ? std::vector<Letter>{ginv, y} : std::vector<Letter>{y, ginv};
        const std::vector<Letter> other_word = y_first ? std::vector<Letter>{y, ginv} : std::vector<Letter>{ginv, y};
        if (inversions(lhs_word) > 0) {
            derived.push_back({lhs_word[0], lhs_word[1], Element::word(table_, Word{0, other_word}, s), q,
                               Element(table_)});
        } else {
            const Scalar s_inv = s.inverse();
            derived.push_back({other_word[0], other_word[1], Element::word(table_, Word{0, lhs_word}, s_inv),
                               -(q * s_inv), Element(table_)});
        }
    }

    scope_[ginv] = true;
    localized_.push_back(g);
    set_rule(RewriteRule{g, ginv, Element::one(table_), origin});
    set_rule(RewriteRule{ginv, g, Element::one(table_), origin});

    // The corrections may mention the new left-hand sides themselves (no h
    // to truncate them on the q side), so solve for them by iteration: each
    // pass substitutes the previous corrections. Corrections are nilpotent,
    // so this stabilizes after a few passes.
    constexpr int kMaxPasses = 16;
    for (int pass = 0;; ++pass) {
        for (const auto& d : derived)
            set_rule(RewriteRule{d.first, d.second, d.lead + d.correction, origin});
        if (pass == kMaxPasses)
            throw ValidationError("localization at '" + gen.name + "' did not stabilize");
        const RuleSet staged = snapshot();
        bool changed = false;
        for (auto& d : derived) {
            Element next = normalize(d.raw, staged);
            if (!(next == d.correction)) {
                d.correction = std::move(next);
                changed = true;
            }
        }
        if (!changed)
            break;
    }
    return interreduce();
}

RuleSetBuilder& RuleSetBuilder::interreduce(std::size_t max_rounds)
{
    for (std::size_t round = 0; round < max_rounds; ++round) {
        const RuleSet current = snapshot();
        bool changed = false;
        for (auto& r : rules_) {
            Element nf = normalize(r.rhs, current);
            if (!(nf == r.rhs)) {
                r.rhs = std::move(nf);
                changed = true;
            }
        }
        if (!changed)
            return *this;
    }
    throw ValidationError("rule set '" + name_ + "' did not interreduce within " + std::to_string(max_rounds) +
                          " rounds");
}

RuleSet RuleSetBuilder::snapshot() const
{
    return RuleSet(name_, table_, scope_, rules_, localized_);
}

RuleSetBuilder& RuleSetBuilder::mark_localized(Letter g)
{
    const GeneratorTable& table = *table_;
    if (g >= table.size() || !table[g].inverse)
        throw ValidationError("generator '" + (g < table.size() ? table[g].name : std::string("?")) +
                              "' is not invertible");
    include(g);
    include(*table[g].inverse);
    if (std::find(localized_.begin(), localized_.end(), g) == localized_.end())
        localized_.push_back(g);
    return *this;
}

RuleSet RuleSetBuilder::build(bool require_complete) const
{
    const GeneratorTable& table = *table_;
    RuleSet rs = snapshot();
    for (const auto& r : rs.rules()) {
        const std::string lhs_text = table[r.first].name + "*" + table[r.second].name;
        const Parity lhs_parity = table[r.first].parity + table[r.second].parity;
        for (const auto& [w, c] : r.rhs.terms()) {
            if (parity_of(table, w) != lhs_parity)
                throw ValidationError("parity mismatch in rule " + lhs_text + " -> " + to_string(r.rhs));
            if (w.hdeg == 0 && !rule_term_decreases({r.first, r.second}, w.letters))
                throw ValidationError("non-decreasing rule " + lhs_text + " -> " + to_string(r.rhs) + " (term " +
                                      to_string(table, w) + ")");
        }
    }
    for (Letter l : rs.scope_letters())
        if (needs_pending_localization(table, rs.localized(), l))
            throw ValidationError("rule set '" + name_ + "' uses '" + table[l].name + "' but '" +
                                  table[*table[l].inverse_of].name + "' was never localized");
    if (require_complete) {
        const auto missing = rs.missing_rules();
        if (!missing.empty())
            throw ValidationError("rule set '" + name_ + "' has no rule for " + table[missing.front().first].name +
                                  "*" + table[missing.front().second].name);
    }
    return rs;
}

// ---------------------------------------------------------------------------

RuleSet localize(const RuleSet& rs, Letter g)
{
    RuleSetBuilder b(rs);
    b.localize(g);
    return b.build(false);
}

Element invert_perturbed(const Element& x, const Element& x_inv, const Element& n, const RuleSet& rs)
{
    const Element one = Element::one(rs.table());
    if (auto check = verify_zero(mul(x, x_inv) - one, rs); !check.zero)
        throw NotInvertible("unperturbed part is not inverted by x_inv", to_string(check.normal_form));
    if (auto check = verify_zero(mul(n, n), rs); !check.zero)
        throw NotInvertible("perturbation is not nilpotent", to_string(check.normal_form));
    Element result = normalize(x_inv - mul(mul(x_inv, n), x_inv), rs);
    const Element full = x + n;
    if (auto check = verify_zero(mul(full, result) - one, rs); !check.zero)
        throw NotInvertible("right inverse check failed", to_string(check.normal_form));
    if (auto check = verify_zero(mul(result, full) - one, rs); !check.zero)
        throw NotInvertible("left inverse check failed", to_string(check.normal_form));
    return result;
}

std::vector<CriticalPairReport> critical_pairs(const RuleSet& rs, std::size_t scope)
{
    if (scope != 3)
        throw ValidationError("critical pairs of length-2 rules live on words of length 3");
    const TablePtr& table = rs.table();
    std::vector<CriticalPairReport> out;
    for (const auto& left_rule : rs.rules()) {
        for (const auto& right_rule : rs.rules()) {
            if (right_rule.first != left_rule.second)
                continue;
            const Letter x = left_rule.first;
            const Letter z = right_rule.second;
            CriticalPairReport report;
            report.overlap = {x, left_rule.second, z};
            report.left = normalize(mul(left_rule.rhs, Element::generator(table, z)), rs);
            report.right = normalize(mul(Element::generator(table, x), right_rule.rhs), rs);
            report.resolved = report.left == report.right;
            out.push_back(std::move(report));
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.overlap < b.overlap; });
    return out;
}

}  // namespace qsg
