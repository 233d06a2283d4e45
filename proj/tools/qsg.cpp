// qsg: reduce expressions, run verification suites, inspect presentations.
//
// Exit status: 0 success, 1 a verification suite failed, 2 bad input.

#include "qsg/errors.hpp"
#include "qsg/presentation_io.hpp"
#include "qsg/presentations.hpp"
#include "qsg/report.hpp"
#include "qsg/suites.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <thread>

namespace {

int cmd_reduce(const std::string& expr, const std::string& pres, bool unicode)
{
    const qsg::Element nf = qsg::reduce(expr, qsg::presentation(pres));
    std::cout << qsg::to_string(nf, unicode ? qsg::NameStyle::Unicode : qsg::NameStyle::Ascii) << "\n";
    return 0;
}

int cmd_verify(const std::string& suite, const std::string& format, unsigned jobs, bool runtime,
               const std::string& output)
{
    auto checks = qsg::suite_checks(suite);
    qsg::Report report = qsg::run_checks(suite, checks, jobs);
    report.notes = qsg::suite_notes(suite);
    const std::string text = format == "json" ? qsg::to_json(report, runtime) : qsg::to_text(report, runtime);
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output, std::ios::binary);
        if (!out)
            throw qsg::ValidationError("cannot write '" + output + "'");
        out << text;
    }
    return report.passed() ? 0 : 1;
}

int cmd_presentations_list()
{
    for (const auto& p : qsg::presentation_list()) {
        const qsg::RuleSet& rs = qsg::presentation(p.name);
        std::cout << p.name << " (" << p.paper_eq << "): " << p.summary << "; " << rs.rules().size() << " rules\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact symbolic engine for Z2-graded algebras with an odd nilpotent parameter h"};
    app.require_subcommand(1);

    std::string expr, pres = "glh";
    bool unicode = false;
    auto* reduce = app.add_subcommand("reduce", "Print the normal form of an expression");
    reduce->add_option("expr", expr, "Expression, e.g. \"gamma*beta\"")->required();
    reduce->add_option("-p,--presentation", pres, "Presentation name")->capture_default_str();
    reduce->add_flag("--unicode", unicode, "Print Greek and primed names");

    std::string suite, format = "text", output;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    bool no_runtime = false, list_suites = false;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("-s,--suite", suite, "Suite name (see --list)");
    verify->add_option("-f,--format", format, "Report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    verify->add_option("-j,--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    verify->add_option("-o,--output", output, "Write the report to a file");
    verify->add_flag("--no-runtime", no_runtime, "Omit timings (byte-stable reports)");
    verify->add_flag("--list", list_suites, "List suites and exit");

    std::string action, target;
    auto* presentations = app.add_subcommand("presentations", "List, export or load presentations");
    presentations->add_option("action", action, "list | export | load")
        ->check(CLI::IsMember({"list", "export", "load"}))
        ->required();
    presentations->add_option("target", target, "Presentation name (export) or file (load)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*reduce)
            return cmd_reduce(expr, pres, unicode);
        if (*verify) {
            if (list_suites) {
                for (const auto& s : qsg::suite_list())
                    std::cout << s.name << ": " << s.summary << "\n";
                return 0;
            }
            if (suite.empty())
                throw qsg::ValidationError("--suite is required (see --list)");
            return cmd_verify(suite, format, jobs, !no_runtime, output);
        }
        if (action == "list")
            return cmd_presentations_list();
        if (target.empty())
            throw qsg::ValidationError("'" + action + "' needs a " + (action == "export" ? "presentation name" : "file"));
        if (action == "export") {
            std::cout << qsg::export_presentation(qsg::presentation(target));
            return 0;
        }
        const qsg::RuleSet rs = qsg::load_presentation_file(target);
        std::cout << "loaded " << rs.name() << ": " << rs.scope_letters().size() << " generators, " << rs.rules().size()
                  << " rules\n";
        return 0;
    } catch (const qsg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
