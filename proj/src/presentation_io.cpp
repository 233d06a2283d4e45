#include "qsg/presentation_io.hpp"

#include "qsg/errors.hpp"
#include "qsg/expr.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace qsg {

namespace {

std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_ws(const std::string& s)
{
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string tok; in >> tok;)
        out.push_back(tok);
    return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg)
{
    throw ValidationError("line " + std::to_string(line) + ": " + msg);
}

}  // namespace

std::string export_presentation(const RuleSet& rs)
{
    const GeneratorTable& t = *rs.table();
    std::ostringstream out;
    out << "qsg-presentation " << kPresentationFormatVersion << "\n";
    out << "name " << rs.name() << "\n";
    std::set<Letter> base;
    for (Letter l : rs.scope_letters())
        base.insert(t[l].inverse_of ? *t[l].inverse_of : l);
    for (Letter l : base) {
        const Generator& g = t[l];
        out << "generator " << g.name << " " << (is_odd(g.parity) ? "odd" : "even");
        if (g.invertible)
            out << " invertible";
        if (g.display != g.name)
            out << " display " << g.display;
        out << "\n";
    }
    if (!rs.localized().empty()) {
        out << "localized";
        for (Letter l : rs.localized())
            out << " " << t[l].name;
        out << "\n";
    }
    for (const auto& r : rs.rules()) {
        out << "rule " << t[r.first].name << " " << t[r.second].name << " -> " << to_string(r.rhs);
        if (!r.origin.empty())
            out << " # " << r.origin;
        out << "\n";
    }
    return out.str();
}

RuleSet load_presentation(std::string_view text)
{
    auto table = std::make_shared<GeneratorTable>();
    std::string name;
    std::vector<std::string> localized;
    struct PendingRule {
        std::size_t line;
        std::string first, second, rhs, origin;
    };
    std::vector<PendingRule> rules;
    bool header = false;

    std::istringstream in{std::string(text)};
    std::size_t lineno = 0;
    for (std::string raw; std::getline(in, raw);) {
        ++lineno;
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#')
            continue;
        if (!header) {
            if (line != "qsg-presentation " + std::to_string(kPresentationFormatVersion))
                fail(lineno, "expected header 'qsg-presentation " + std::to_string(kPresentationFormatVersion) + "'");
            header = true;
            continue;
        }
        const auto sp = line.find(' ');
        const std::string key = line.substr(0, sp);
        const std::string rest = sp == std::string::npos ? std::string() : trim(line.substr(sp + 1));
        if (key == "name") {
            if (rest.empty())
                fail(lineno, "empty presentation name");
            name = rest;
        } else if (key == "generator") {
            if (!rules.empty())
                fail(lineno, "generators must be declared before rules");
            const auto toks = split_ws(rest);
            if (toks.size() < 2)
                fail(lineno, "expected 'generator <name> even|odd [invertible] [display <text>]'");
            Parity p;
            if (toks[1] == "even")
                p = Parity::Even;
            else if (toks[1] == "odd")
                p = Parity::Odd;
            else
                fail(lineno, "unknown parity '" + toks[1] + "'");
            bool invertible = false;
            std::string display = toks[0];
            for (std::size_t k = 2; k < toks.size(); ++k) {
                if (toks[k] == "invertible")
                    invertible = true;
                else if (toks[k] == "display" && k + 1 < toks.size())
                    display = toks[++k];
                else
                    fail(lineno, "unexpected '" + toks[k] + "'");
            }
            try {
                table->add(toks[0], display, p, invertible);
            } catch (const ValidationError& e) {
                fail(lineno, e.what());
            }
        } else if (key == "localized") {
            for (auto& tok : split_ws(rest))
                localized.push_back(tok);
        } else if (key == "rule") {
            PendingRule r{lineno, {}, {}, {}, {}};
            std::string body = rest;
            if (const auto hash = body.find(" # "); hash != std::string::npos) {
                r.origin = trim(body.substr(hash + 3));
                body = body.substr(0, hash);
            }
            const auto arrow = body.find("->");
            if (arrow == std::string::npos)
                fail(lineno, "expected 'rule <x> <y> -> <rhs>'");
            const auto lhs = split_ws(body.substr(0, arrow));
            if (lhs.size() != 2)
                fail(lineno, "a rule's left side is two generator names");
            r.first = lhs[0];
            r.second = lhs[1];
            r.rhs = trim(body.substr(arrow + 2));
            rules.push_back(std::move(r));
        } else {
            fail(lineno, "unknown directive '" + key + "'");
        }
    }
    if (!header)
        throw ValidationError("empty presentation file");
    if (name.empty())
        throw ValidationError("presentation file has no 'name' line");

    const TablePtr frozen = table;
    RuleSetBuilder b(name, frozen);
    for (Letter l = 0; l < frozen->size(); ++l)
        if (!(*frozen)[l].inverse_of)
            b.include(l);
    for (const auto& g : localized) {
        const auto l = frozen->find(g);
        if (!l)
            throw ValidationError("localized generator '" + g + "' is not declared");
        b.mark_localized(*l);
    }
    const SymbolResolver resolver = generator_resolver(frozen);
    for (const auto& r : rules) {
        const auto x = frozen->find(r.first);
        const auto y = frozen->find(r.second);
        if (!x || !y)
            fail(r.line, "unknown generator '" + (!x ? r.first : r.second) + "'");
        Element rhs;
        try {
            rhs = evaluate(parse_expression(r.rhs), resolver);
        } catch (const Error& e) {
            fail(r.line, e.what());
        }
        b.add_rule(*x, *y, std::move(rhs), r.origin);
    }
    try {
        return b.build();
    } catch (const ValidationError& e) {
        throw ValidationError("presentation '" + name + "': " + e.what());
    }
}

RuleSet load_presentation_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ValidationError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_presentation(buf.str());
}

}  // namespace qsg
