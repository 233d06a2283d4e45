#include "doctest.h"
#include "json.hpp"

#include "qsg/presentation_io.hpp"
#include "qsg/presentations.hpp"
#include "qsg/references.hpp"
#include "qsg/suites.hpp"

#include <set>

using namespace qsg;

TEST_CASE("run_checks sorts, catches and separates supplementary")
{
    const auto t = universal_table();
    std::vector<Check> checks = {
        {"b.ok", "x", [t] { return expect_zero(Element::zero(t)); }},
        {"a.throws", "x", []() -> Outcome { throw ValidationError("boom"); }},
        {"c.extra", "x", [t] { return expect_zero(Element::one(t)); }, true},
    };
    const Report r = run_checks("demo", checks, 2);
    REQUIRE(r.checks.size() == 3);
    CHECK(r.checks[0].name == "a.throws");
    CHECK(r.checks[0].status == CheckStatus::Fail);
    CHECK(r.checks[0].detail.find("boom") != std::string::npos);
    CHECK(r.failures() == 1);
    CHECK(r.failures(true) == 2);
    CHECK_FALSE(r.passed());

    const auto j = nlohmann::json::parse(to_json(r, false));
    CHECK(j["schema_version"] == kReportSchemaVersion);
    CHECK(j["suite"] == "demo");
    CHECK(j["summary"]["total"] == 3);
    CHECK(j["summary"]["supplementary_failed"] == 1);
    CHECK(j["checks"][2]["witness"] == "1");
    CHECK_FALSE(j["checks"][1].contains("runtime_ms"));
}

TEST_CASE("expect_nonzero records a witness")
{
    const Outcome o = expect_nonzero(Element::generator(universal_table(), "a"));
    CHECK(o.status == CheckStatus::ExpectedNonzero);
    CHECK(o.witness == std::optional<std::string>("a"));
    CHECK(expect_nonzero(Element::zero(universal_table())).status == CheckStatus::Fail);
}

TEST_CASE("presentation export round trip")
{
    for (const char* p : {"glq", "glh", "gamma", "oneforms", "weyl", "derivs"}) {
        const std::string text = export_presentation(presentation(p));
        const RuleSet loaded = load_presentation(text);
        CHECK_MESSAGE(export_presentation(loaded) == text, p);
    }
}

TEST_CASE("a loaded presentation reduces like the original")
{
    const RuleSet loaded = load_presentation(export_presentation(build_glh()));
    const std::string expr = "gamma*a*d_inv*gamma";
    CHECK(to_string(normalize(parse_in(expr, loaded), loaded)) ==
          to_string(normalize(parse_in(expr, build_glh()), build_glh())));
}

TEST_CASE("presentation loader errors")
{
    CHECK_THROWS_AS(load_presentation(""), ValidationError);
    CHECK_THROWS_WITH_AS(load_presentation("bogus\n"), doctest::Contains("line 1"), ValidationError);
    CHECK_THROWS_AS(load_presentation("qsg-presentation 1\nname x\ngenerator t odd invertible\n"), ValidationError);
    CHECK_THROWS_WITH_AS(load_presentation("qsg-presentation 1\nname x\ngenerator t even\nrule t s -> 0\n"),
                         doctest::Contains("line 4"), ValidationError);
    CHECK_THROWS_AS(load_presentation("qsg-presentation 1\ngenerator t even\n"), ValidationError);
}

TEST_CASE("suites")
{
    std::set<std::string> names;
    const auto all = suite_checks("all");
    for (const auto& c : all) {
        CHECK_MESSAGE(names.insert(c.name).second, c.name);
        CHECK_FALSE(c.paper_eq.empty());
    }
    CHECK(all.size() > 900);
    CHECK_THROWS_AS(suite_checks("nope"), ValidationError);
    for (const auto& s : suite_list())
        CHECK_FALSE(suite_notes(s.name).empty());
}

TEST_CASE("reference keys")
{
    for (const auto& k : paper_ref_keys())
        CHECK_FALSE(paper_ref(k).empty());
    CHECK_THROWS_AS(paper_ref("no.such.family"), ValidationError);
}
