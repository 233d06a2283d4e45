#include "qsg/expr.hpp"

#include <algorithm>
#include <cctype>

namespace qsg {

namespace {

struct Token {
    enum class Type { Number, Ident, Op, End } type = Type::End;
    std::string text;
    std::size_t position = 0;  // 1-based
};

std::vector<Token> lex(std::string_view input)
{
    std::vector<Token> out;
    std::size_t i = 0;
    auto is_ident_start = [](char ch) { return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_'; };
    auto is_ident_char = [](char ch) {
        return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '\'';
    };
    while (i < input.size()) {
        const char ch = input[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            while (i < input.size() && std::isdigit(static_cast<unsigned char>(input[i])))
                ++i;
            out.push_back({Token::Type::Number, std::string(input.substr(start, i - start)), start + 1});
            continue;
        }
        if (is_ident_start(ch)) {
            while (i < input.size() && is_ident_char(input[i]))
                ++i;
            out.push_back({Token::Type::Ident, std::string(input.substr(start, i - start)), start + 1});
            continue;
        }
        if (std::string_view("+-*/^()").find(ch) != std::string_view::npos) {
            out.push_back({Token::Type::Op, std::string(1, ch), start + 1});
            ++i;
            continue;
        }
        throw ParseError(std::string("unexpected character '") + ch + "'", start + 1);
    }
    out.push_back({Token::Type::End, "", input.size() + 1});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    Expr parse_all()
    {
        Expr e = parse_sum();
        if (peek().type != Token::Type::End)
            throw ParseError("unexpected '" + peek().text + "'", peek().position);
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() { return tokens_[pos_++]; }
    bool at_op(char op) const { return peek().type == Token::Type::Op && peek().text[0] == op; }

    bool starts_primary() const
    {
        const auto& t = peek();
        return t.type == Token::Type::Number || t.type == Token::Type::Ident ||
               (t.type == Token::Type::Op && t.text[0] == '(');
    }

    Expr parse_sum()
    {
        Expr first = parse_term();
        if (!at_op('+') && !at_op('-'))
            return first;
        Expr sum;
        sum.kind = Expr::Kind::Sum;
        sum.position = first.position;
        sum.children.push_back(std::move(first));
        sum.subtract.push_back(false);
        while (at_op('+') || at_op('-')) {
            const bool minus = next().text[0] == '-';
            sum.children.push_back(parse_term());
            sum.subtract.push_back(minus);
        }
        return sum;
    }

    Expr parse_term()
    {
        Expr acc = parse_unary();
        while (true) {
            if (at_op('/')) {
                next();
                Expr q;
                q.kind = Expr::Kind::Quotient;
                q.position = acc.position;
                q.children.push_back(std::move(acc));
                q.children.push_back(parse_unary());
                acc = std::move(q);
                continue;
            }
            const bool explicit_star = at_op('*');
            if (!explicit_star && !starts_primary())
                break;
            if (explicit_star)
                next();
            Expr rhs = parse_unary();
            if (acc.kind == Expr::Kind::Product) {
                acc.children.push_back(std::move(rhs));
            } else {
                Expr p;
                p.kind = Expr::Kind::Product;
                p.position = acc.position;
                p.children.push_back(std::move(acc));
                p.children.push_back(std::move(rhs));
                acc = std::move(p);
            }
        }
        return acc;
    }

    Expr parse_unary()
    {
        if (at_op('-')) {
            const auto position = next().position;
            Expr n;
            n.kind = Expr::Kind::Negate;
            n.position = position;
            n.children.push_back(parse_unary());
            return n;
        }
        return parse_power();
    }

    Expr parse_power()
    {
        Expr base = parse_primary();
        if (!at_op('^'))
            return base;
        next();
        const Token& t = next();
        if (t.type != Token::Type::Number)
            throw ParseError("expected a nonnegative integer exponent", t.position);
        Expr p;
        p.kind = Expr::Kind::Power;
        p.position = base.position;
        p.exponent = static_cast<unsigned>(std::stoul(t.text));
        p.children.push_back(std::move(base));
        return p;
    }

    Expr parse_primary()
    {
        const Token& t = next();
        Expr e;
        e.position = t.position;
        switch (t.type) {
        case Token::Type::Number:
            e.kind = Expr::Kind::Number;
            e.text = t.text;
            return e;
        case Token::Type::Ident:
            e.kind = Expr::Kind::Symbol;
            e.text = t.text;
            return e;
        case Token::Type::Op:
            if (t.text[0] == '(') {
                e.kind = Expr::Kind::Group;
                e.children.push_back(parse_sum());
                if (!at_op(')'))
                    throw ParseError("expected ')'", peek().position);
                next();
                return e;
            }
            throw ParseError("unexpected '" + t.text + "'", t.position);
        case Token::Type::End:
            throw ParseError("unexpected end of input", t.position);
        }
        throw ParseError("unexpected token", t.position);
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

std::size_t edit_distance(std::string_view a, std::string_view b)
{
    std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j)
        prev[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j)
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

}  // namespace

Expr parse_expression(std::string_view input)
{
    return Parser(lex(input)).parse_all();
}

std::string print(const Expr& e)
{
    switch (e.kind) {
    case Expr::Kind::Number:
    case Expr::Kind::Symbol:
        return e.text;
    case Expr::Kind::Negate:
        return "-" + print(e.children.front());
    case Expr::Kind::Group:
        return "(" + print(e.children.front()) + ")";
    case Expr::Kind::Power:
        return print(e.children.front()) + "^" + std::to_string(e.exponent);
    case Expr::Kind::Quotient:
        return print(e.children[0]) + "/" + print(e.children[1]);
    case Expr::Kind::Product: {
        std::string out;
        for (std::size_t i = 0; i < e.children.size(); ++i)
            out += (i ? "*" : "") + print(e.children[i]);
        return out;
    }
    case Expr::Kind::Sum: {
        std::string out = print(e.children.front());
        for (std::size_t i = 1; i < e.children.size(); ++i)
            out += (e.subtract[i] ? " - " : " + ") + print(e.children[i]);
        return out;
    }
    }
    return {};
}

Element evaluate(const Expr& e, const SymbolResolver& resolver)
{
    const TablePtr& table = resolver.table;
    switch (e.kind) {
    case Expr::Kind::Number:
        return Element::scalar(table, Scalar(mpq_class(e.text)));
    case Expr::Kind::Symbol: {
        if (auto value = resolver.lookup(e.text))
            return *value;
        std::string message = "unknown symbol '" + e.text + "'";
        const std::string* best = nullptr;
        std::size_t best_distance = 0;
        for (const auto& name : resolver.known) {
            const std::size_t dist = edit_distance(e.text, name);
            if (!best || dist < best_distance) {
                best = &name;
                best_distance = dist;
            }
        }
        if (best && best_distance <= std::max<std::size_t>(2, e.text.size() / 2))
            message += " (did you mean '" + *best + "'?)";
        throw ParseError(message, e.position);
    }
    case Expr::Kind::Negate:
        return -evaluate(e.children.front(), resolver);
    case Expr::Kind::Group:
        return evaluate(e.children.front(), resolver);
    case Expr::Kind::Power: {
        const Element base = evaluate(e.children.front(), resolver);
        Element acc = Element::one(table);
        for (unsigned i = 0; i < e.exponent; ++i)
            acc = mul(acc, base);
        return acc;
    }
    case Expr::Kind::Quotient: {
        const Element num = evaluate(e.children[0], resolver);
        const Element den = evaluate(e.children[1], resolver);
        const auto& terms = den.terms();
        if (terms.size() != 1 || !terms.begin()->first.empty() || terms.begin()->first.hdeg != 0)
            throw ParseError("division by a non-scalar", e.children[1].position);
        return num * terms.begin()->second.inverse();
    }
    case Expr::Kind::Product: {
        Element acc = evaluate(e.children.front(), resolver);
        for (std::size_t i = 1; i < e.children.size(); ++i)
            acc = mul(acc, evaluate(e.children[i], resolver));
        return acc;
    }
    case Expr::Kind::Sum: {
        Element acc = evaluate(e.children.front(), resolver);
        for (std::size_t i = 1; i < e.children.size(); ++i) {
            if (e.subtract[i])
                acc -= evaluate(e.children[i], resolver);
            else
                acc += evaluate(e.children[i], resolver);
        }
        return acc;
    }
    }
    return Element::zero(table);
}

Element evaluate_relation(std::string_view text, const SymbolResolver& resolver)
{
    const auto eq = text.find('=');
    if (eq == std::string_view::npos)
        return evaluate(parse_expression(text), resolver);
    if (text.find('=', eq + 1) != std::string_view::npos)
        throw ParseError("more than one '=' in relation", text.find('=', eq + 1) + 1);
    const Element lhs = evaluate(parse_expression(text.substr(0, eq)), resolver);
    Element rhs(resolver.table);
    try {
        rhs = evaluate(parse_expression(text.substr(eq + 1)), resolver);
    } catch (const ParseError& err) {
        // Re-anchor the column to the full relation text.
        throw ParseError(std::string(err.what()).substr(0, std::string(err.what()).rfind(" at position")),
                         err.position() + eq + 1);
    }
    return lhs - rhs;
}

SymbolResolver generator_resolver(TablePtr table)
{
    SymbolResolver r;
    r.table = table;
    for (const auto& g : table->generators())
        r.known.push_back(g.name);
    r.known.emplace_back("h");
    r.known.emplace_back("q");
    r.lookup = [table](std::string_view name) -> std::optional<Element> {
        if (name == "h")
            return Element::h(table);
        if (name == "q")
            return Element::scalar(table, Scalar::q());
        if (auto l = table->find(name))
            return Element::generator(table, *l);
        return std::nullopt;
    };
    return r;
}

}  // namespace qsg
