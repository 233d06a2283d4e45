#include "qsg/report.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <thread>

namespace qsg {

std::string_view to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::Pass:
        return "pass";
    case CheckStatus::Fail:
        return "fail";
    case CheckStatus::ExpectedNonzero:
        return "expected-nonzero";
    }
    return "fail";
}

Outcome expect_zero(const Element& normal_form)
{
    if (normal_form.is_zero())
        return {CheckStatus::Pass, std::nullopt, std::nullopt, {}};
    return {CheckStatus::Fail, to_string(normal_form), to_string(normal_form, NameStyle::Unicode), {}};
}

Outcome expect_zero(const Tensor& normal_form)
{
    if (normal_form.is_zero())
        return {CheckStatus::Pass, std::nullopt, std::nullopt, {}};
    return {CheckStatus::Fail, to_string(normal_form), to_string(normal_form, NameStyle::Unicode), {}};
}

Outcome expect_nonzero(const Element& normal_form)
{
    return {normal_form.is_zero() ? CheckStatus::Fail : CheckStatus::ExpectedNonzero, to_string(normal_form),
            to_string(normal_form, NameStyle::Unicode), {}};
}

Outcome expect_nonzero(const Tensor& normal_form)
{
    return {normal_form.is_zero() ? CheckStatus::Fail : CheckStatus::ExpectedNonzero, to_string(normal_form),
            to_string(normal_form, NameStyle::Unicode), {}};
}

Outcome expect_true(bool ok, std::string detail, std::optional<std::string> witness)
{
    Outcome o{ok ? CheckStatus::Pass : CheckStatus::Fail, std::nullopt, std::nullopt, std::move(detail)};
    if (!ok && witness) {
        o.witness = *witness;
        o.witness_unicode = *witness;
    }
    return o;
}

Outcome zero_under(const Element& x, const RuleSet& rs)
{
    return expect_zero(normalize(x, rs));
}

Outcome zero_under(const Tensor& x, const SlotRules& rules)
{
    return expect_zero(normalize(x, rules));
}

std::size_t Report::failures(bool include_supplementary) const
{
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [&](const CheckResult& c) {
        return !c.ok() && (include_supplementary || !c.supplementary);
    }));
}

Report run_checks(std::string suite, const std::vector<Check>& checks, unsigned jobs)
{
    Report report;
    report.suite = std::move(suite);
    report.checks.resize(checks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < checks.size(); i = next++) {
            const Check& check = checks[i];
            CheckResult& r = report.checks[i];
            r.name = check.name;
            r.paper_eq = check.paper_eq;
            r.supplementary = check.supplementary;
            const auto start = std::chrono::steady_clock::now();
            try {
                Outcome o = check.run();
                r.status = o.status;
                r.witness = std::move(o.witness);
                r.witness_unicode = std::move(o.witness_unicode);
                r.detail = std::move(o.detail);
            } catch (const std::exception& err) {
                r.status = CheckStatus::Fail;
                r.detail = std::string("error: ") + err.what();
            }
            r.runtime_ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        }
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, checks.size()))));
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    std::stable_sort(report.checks.begin(), report.checks.end(),
                     [](const CheckResult& x, const CheckResult& y) { return x.name < y.name; });
    return report;
}

std::string to_json(const Report& r, bool include_runtime)
{
    using nlohmann::ordered_json;
    ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    j["suite"] = r.suite;
    j["engine_version"] = kEngineVersion;
    j["notes"] = r.notes;
    std::size_t pass = 0, fail = 0, nonzero = 0, supplementary = 0;
    ordered_json arr = ordered_json::array();
    for (const auto& c : r.checks) {
        ordered_json e;
        e["name"] = c.name;
        e["paper_eq"] = c.paper_eq;
        e["status"] = std::string(to_string(c.status));
        e["supplementary"] = c.supplementary;
        if (c.witness) {
            e["witness"] = *c.witness;
            e["witness_unicode"] = c.witness_unicode.value_or(*c.witness);
        }
        if (!c.detail.empty())
            e["detail"] = c.detail;
        if (include_runtime)
            e["runtime_ms"] = c.runtime_ms;
        arr.push_back(std::move(e));
        if (c.supplementary)
            ++supplementary;
        else if (c.status == CheckStatus::Pass)
            ++pass;
        else if (c.status == CheckStatus::ExpectedNonzero)
            ++nonzero;
        else
            ++fail;
    }
    j["checks"] = std::move(arr);
    j["summary"] = ordered_json{{"total", r.checks.size()},
                                {"passed", pass},
                                {"expected_nonzero", nonzero},
                                {"failed", fail},
                                {"supplementary", supplementary},
                                {"supplementary_failed", r.failures(true) - r.failures(false)}};
    return j.dump(2) + "\n";
}

std::string to_text(const Report& r, bool include_runtime)
{
    std::string out = "suite " + r.suite + " (engine " + kEngineVersion + ")\n";
    for (const auto& n : r.notes)
        out += "note: " + n + "\n";
    for (const auto& c : r.checks) {
        std::string tag;
        switch (c.status) {
        case CheckStatus::Pass:
            tag = "PASS";
            break;
        case CheckStatus::Fail:
            tag = "FAIL";
            break;
        case CheckStatus::ExpectedNonzero:
            tag = "NONZERO";
            break;
        }
        out += tag + std::string(8 - tag.size(), ' ') + c.name + "  [" + c.paper_eq + "]";
        if (c.supplementary)
            out += "  (supplementary)";
        if (include_runtime) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "  %.1f ms", c.runtime_ms);
            out += buf;
        }
        out += "\n";
        if (!c.detail.empty())
            out += "        " + c.detail + "\n";
        if (c.witness)
            out += "        witness: " + c.witness_unicode.value_or(*c.witness) + "\n";
    }
    const std::size_t fails = r.failures();
    out += std::to_string(r.checks.size()) + " checks, " + std::to_string(fails) + " failed";
    if (const auto sup = r.failures(true) - fails)
        out += ", " + std::to_string(sup) + " supplementary failed";
    out += "\n";
    return out;
}

}  // namespace qsg
