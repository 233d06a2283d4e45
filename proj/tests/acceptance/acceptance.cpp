// Acceptance driver: one verdict line per criterion, failing checks listed
// under it. Exit status 1 when any criterion fails.

#include "qsg/calculus.hpp"
#include "qsg/contraction.hpp"
#include "qsg/hopf.hpp"
#include "qsg/report.hpp"
#include "qsg/rmatrix.hpp"
#include "qsg/suites.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace {

using qsg::Check;
using qsg::CheckStatus;

struct Criterion {
    int id;
    std::string title;
    double budget_s;  // 0: none stated
    std::function<std::vector<Check>()> checks;
    // Extra condition on the report beyond "no counted failures".
    std::function<std::string(const qsg::Report&)> extra;
};

std::vector<Check> concat(std::initializer_list<std::vector<Check>> parts)
{
    std::vector<Check> out;
    for (const auto& p : parts)
        out.insert(out.end(), p.begin(), p.end());
    return out;
}

std::vector<Check> only(std::vector<Check> all, const std::string& needle)
{
    std::vector<Check> out;
    for (auto& c : all)
        if (c.name.find(needle) != std::string::npos)
            out.push_back(std::move(c));
    return out;
}

std::vector<Criterion> criteria()
{
    return {
        {1, "relation suites", 10,
         [] {
             std::vector<Check> out;
             for (const char* cat : {"glq", "glh", "mixed", "forms", "inverse-params", "oneform-params",
                                     "inverse-differentials", "oneform-differentials", "oneforms", "superalgebra",
                                     "vector-on-params", "param-derivatives", "derivatives"}) {
                 auto part = qsg::catalog_checks(cat);
                 out.insert(out.end(), part.begin(), part.end());
             }
             return out;
         },
         nullptr},
        {2, "critical pairs resolve (glq, glh, gamma, oneforms, weyl)", 60,
         [] { return qsg::confluence_checks({"glq", "glh", "gamma", "oneforms", "weyl"}); }, nullptr},
        {3, "centrality of D_h and D-hat", 0, [] { return qsg::centrality_checks(); }, nullptr},
        {4, "Hopf axioms, coactions and hat co-maps", 0,
         [] { return concat({qsg::hopf_axiom_checks(), qsg::coaction_checks()}); }, nullptr},
        {5, "differential structure (d^2 = 0, d of the relations)", 0, [] { return qsg::d_structure_checks(); },
         nullptr},
        {6, "Cartan-Maurer forms, structure equations, superplane", 0,
         [] { return concat({qsg::cartan_checks(), qsg::maurer_equation_checks(), qsg::superplane_checks()}); },
         nullptr},
        {7, "RTT, compact identities, unique leg convention", 0, [] { return qsg::rmatrix_checks(); },
         [](const qsg::Report&) -> std::string {
             return qsg::selected_convention() ? "" : "no unique leg convention";
         }},
        {8, "superalgebra realization in the Weyl presentation", 0, [] { return qsg::superalgebra_checks(); },
         nullptr},
        {9, "contraction from the q-deformed supergroup", 30, [] { return qsg::contraction_checks(); }, nullptr},
        {10, "derivative relations not preserved by the co-maps (witness)", 0,
         [] { return only(qsg::derivative_hopf_checks(), ".not-invariant."); },
         [](const qsg::Report& r) -> std::string {
             for (const auto& c : r.checks)
                 if (c.status == CheckStatus::ExpectedNonzero && c.witness)
                     return "";
             return "no nonzero witness recorded";
         }},
        {11, "classical limit (confluence, 200 random words)", 0, [] { return qsg::classical_checks(200, 20240601); },
         nullptr},
    };
}

}  // namespace

int main()
{
    const unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    int failed = 0;
    for (const auto& c : criteria()) {
        const auto start = std::chrono::steady_clock::now();
        const qsg::Report report = qsg::run_checks("criterion-" + std::to_string(c.id), c.checks(), jobs);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        std::size_t counted = 0;
        for (const auto& r : report.checks)
            counted += r.supplementary ? 0 : 1;
        const std::size_t bad = report.failures();
        std::string why;
        if (counted == 0)
            why = "no checks";
        else if (c.extra)
            why = c.extra(report);
        if (c.budget_s > 0 && secs > c.budget_s)
            why += (why.empty() ? "" : "; ") + std::string("over the time budget");
        const bool ok = bad == 0 && why.empty();
        failed += ok ? 0 : 1;

        std::printf("criterion %2d: %s  %s  (%zu/%zu checks pass, %.2f s", c.id, ok ? "PASS" : "FAIL",
                    c.title.c_str(), counted - bad, counted, secs);
        if (c.budget_s > 0)
            std::printf(", budget %.0f s", c.budget_s);
        std::printf(")\n");
        if (!why.empty())
            std::printf("    %s\n", why.c_str());
        std::size_t shown = 0;
        for (const auto& r : report.checks) {
            if (r.supplementary || r.ok())
                continue;
            if (++shown > 12) {
                std::printf("    ... %zu more\n", bad - 12);
                break;
            }
            std::printf("    failed %s  [%s]\n", r.name.c_str(), r.paper_eq.c_str());
        }
    }
    std::printf("%d of 11 criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
