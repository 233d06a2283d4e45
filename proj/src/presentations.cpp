#include "qsg/presentations.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <cstdio>

namespace qsg {

namespace {

struct GenSpec {
    const char* name;
    const char* display;
    Parity parity;
    bool invertible;
};

constexpr Parity E = Parity::Even;
constexpr Parity O = Parity::Odd;

const GenSpec kGenerators[] = {
    {"a", "a", E, true},          {"beta", "β", O, false},      {"gamma", "γ", O, false},
    {"d", "d", E, true},          {"alpha", "α", O, false},     {"b", "b", E, false},
    {"c", "c", E, true},          {"delta", "δ", O, false},     {"w1", "w₁", O, false},
    {"u", "u", E, false},         {"v", "v", E, false},         {"w2", "w₂", O, false},
    {"Da", "∂_a", E, true},       {"Dbeta", "∂_β", O, false},   {"Dgamma", "∂_γ", O, false},
    {"Dd", "∂_d", E, true},       {"a'", "a′", E, true},        {"beta'", "β′", O, false},
    {"gamma'", "γ′", O, false},   {"d'", "d′", E, true},        {"alpha'", "α′", O, false},
    {"b'", "b′", E, false},       {"c'", "c′", E, false},       {"delta'", "δ′", O, false},
};

// ---------------------------------------------------------------------------
// Relation displays, transcribed line by line.

const std::vector<std::string> kGlq = {
    "a'*beta' = q*beta'*a'",
    "d'*beta' = q*beta'*d'",
    "a'*gamma' = q*gamma'*a'",
    "d'*gamma' = q*gamma'*d'",
    "beta'*gamma' + gamma'*beta' = 0",
    "beta'^2 = 0",
    "gamma'^2 = 0",
    "a'*d' = d'*a' + (q - 1/q)*gamma'*beta'",
};

// The eight algebra relations; the catalog adds the three h lines.
const std::vector<std::string> kGlhRules = {
    "a*beta = beta*a",
    "a*gamma = gamma*a + h*a^2*(1 - D_h_inv)",
    "d*beta = beta*d",
    "d*gamma = gamma*d + h*d^2*(D_h - 1)",
    "beta^2 = 0",
    "gamma^2 = h*gamma*d*(1 - D_h)",
    "beta*gamma = -gamma*beta + h*beta*d*(1 - D_h)",
    "a*d = d*a + h*beta*d*(D_h - 1)",
};

const std::vector<std::string> kGlhExtra = {
    "h^2 = 0",
    "beta*h = -h*beta",
    "gamma*h = -h*gamma",
};

const std::vector<std::string> kMixed = {
    "a*alpha = alpha*a + h*(alpha*beta - b*a)",
    "a*b = b*a - h*b*beta",
    "a*c = c*a + h*(alpha*a - c*beta + delta*a)",
    "a*delta = delta*a + h*(b*a + delta*beta)",
    "beta*alpha = -alpha*beta + h*b*beta",
    "beta*b = b*beta",
    "beta*c = c*beta + h*(alpha + delta)*beta",
    "beta*delta = -delta*beta - h*b*beta",
    "gamma*alpha = -alpha*gamma + h*(alpha*a + alpha*d + b*gamma)",
    "gamma*b = b*gamma + h*b*(a + d)",
    "gamma*c = c*gamma + h*(alpha*gamma + c*a + c*d + delta*gamma)",
    "gamma*delta = -delta*gamma + h*(delta*a + delta*d - b*gamma)",
    "d*alpha = alpha*d - h*(alpha*beta + b*d)",
    "d*b = b*d + h*b*beta",
    "d*c = c*d + h*(alpha*d + c*beta + delta*d)",
    "d*delta = delta*d + h*(b*d - delta*beta)",
};

const std::vector<std::string> kForms = {
    "alpha*b = b*alpha + h*b^2",
    "alpha*c = c*alpha + h*(c*b + delta*alpha)",
    "delta*b = b*delta - h*b^2",
    "delta*c = c*delta - h*(c*b - alpha*delta)",
    "alpha^2 = h*alpha*b",
    "alpha*delta = -delta*alpha + h*(delta - alpha)*b",
    "delta^2 = -h*delta*b",
    "b*c = c*b + h*(delta + alpha)*b",
};

const std::vector<std::string> kInverseParams = {
    "a*A = A*a + h*(A - D)*beta",
    "a*B = B*a",
    "a*C = C*a + h*(1 - D_h)",
    "a*D = D*a",
    "beta*A = A*beta",
    "beta*B = -B*beta",
    "beta*C = -C*beta + h*(D - A)*beta",
    "beta*D = D*beta",
    "gamma*A = A*gamma + h*(1 - D_h_inv)",
    "gamma*B = -B*gamma + h*(A - D)*beta",
    "gamma*C = -C*gamma",
    "gamma*D = D*gamma + h*(D_h - 1)",
    "d*A = A*d",
    "d*C = C*d + h*(D_h_inv - 1)",
    "d*B = B*d",
    "d*D = D*d + h*(D - A)*beta",
};

const std::vector<std::string> kOneformParams = {
    "a*w1 = w1*a - h*u*a",
    "a*u = u*a",
    "a*v = v*a + h*(w1 + w2)*a",
    "a*w2 = w2*a + h*u*a",
    "beta*w1 = -w1*beta + h*u*beta",
    "beta*u = u*beta",
    "beta*v = v*beta + h*(w1 + w2)*beta",
    "beta*w2 = -w2*beta - h*u*beta",
    "gamma*w1 = -w1*gamma + h*(2*w1*a + u*gamma)",
    "gamma*u = u*gamma + 2*h*u*a",
    "gamma*v = v*gamma + h*(w1*gamma + 2*v*a + w2*gamma)",
    "gamma*w2 = -w2*gamma + h*(2*w2*a - u*gamma)",
    "d*w1 = w1*d - h*(2*w1*beta + u*d)",
    "d*u = u*d + 2*h*u*beta",
    "d*v = v*d + h*(w1*d + 2*v*beta + w2*d)",
    "d*w2 = w2*d + h*(u*d - 2*w2*beta)",
};

const std::vector<std::string> kInverseDifferentials = {
    "A*alpha = alpha*A + h*(b*A - alpha*B)",
    "A*b = b*A + h*b*B",
    "A*c = c*A - h*(alpha*A + delta*A - c*B)",
    "A*delta = delta*A - h*(b*A + delta*B)",
    "B*alpha = -alpha*B - h*b*B",
    "B*b = b*B",
    "B*c = c*B - h*(alpha + delta)*B",
    "B*delta = -delta*B + h*b*B",
    "C*alpha = -alpha*C - h*(alpha*A + alpha*D + b*C)",
    "C*b = b*C - h*b*(A + D)",
    "C*c = c*C - h*(alpha*C + c*A + c*D + delta*C)",
    "C*delta = -delta*C + h*(b*C - delta*A - delta*D)",
    "D*alpha = alpha*D + h*(alpha*B + b*D)",
    "D*b = b*D - h*b*B",
    "D*c = c*D - h*(alpha*D + c*B + delta*D)",
    "D*delta = delta*D + h*(delta*B - b*D)",
};

const std::vector<std::string> kOneformDifferentials = {
    "w1*alpha = -alpha*w1 - h*alpha*u",
    "w1*b = b*w1 - h*b*u",
    "w1*c = c*w1 - h*c*u",
    "w1*delta = -delta*w1 - h*delta*u",
    "u*alpha = alpha*u",
    "u*b = b*u",
    "u*c = c*u",
    "u*delta = delta*u",
    "v*alpha = alpha*v + h*alpha*(w1 - w2)",
    "v*b = b*v - h*b*(w1 - w2)",
    "v*c = c*v - h*c*(w1 - w2)",
    "v*delta = delta*v + h*delta*(w1 - w2)",
    "w2*alpha = -alpha*w2 - h*alpha*u",
    "w2*b = b*w2 - h*b*u",
    "w2*c = c*w2 - h*c*u",
    "w2*delta = -delta*w2 - h*delta*u",
};

const std::vector<std::string> kOneforms = {
    "w1*u = u*w1 - 2*h*u^2",
    "w2*u = u*w2",
    "w1*v = v*w1 + 2*h*(w1*w2 - u*v)",
    "w2*v = v*w2",
    "w1*w2 = -w2*w1 - 2*h*u*w2",
    "w1^2 = -2*h*u*w1",
    "w2^2 = 0",
    "u*v = v*u - 2*h*u*w2",
};

const std::vector<std::string> kCartan = {
    "alpha = w1*a + u*gamma",
    "b = w1*beta + u*d",
    "c = w2*d + v*beta",
    "delta = w2*gamma + v*a",
};

const std::vector<std::string> kSuperalgebra = {
    "T1*T2 - T2*T1 = 2*h*nablaM*T1",
    "T1*nablaP - nablaP*T1 = -nablaP + 2*h*(T1^2 - T1)",
    "T2*nablaP - nablaP*T2 = nablaP - 2*h*(T2*T1 + T2 - nablaP*nablaM)",
    "T1*nablaM - nablaM*T1 = nablaM",
    "T2*nablaM - nablaM*T2 = -nablaM",
    "nablaP^2 = -2*h*T1*nablaP",
    "nablaM^2 = 0",
    "nablaM*nablaP + nablaP*nablaM = T1 + T2 - 2*h*nablaM*T1",
};

const std::vector<std::string> kVectorOnParams = {
    "T1*a = a + a*T1 - h*a*nablaM",
    "T1*beta = beta + beta*T1 + h*beta*nablaM",
    "T1*gamma = gamma*T1 + h*(2*a*T1 + gamma*nablaM)",
    "T1*d = d*T1 + h*(2*beta*T1 - d*nablaM)",
    "T2*a = a*T2 - h*a*nablaM",
    "T2*beta = beta*T2 + h*beta*nablaM",
    "T2*gamma = gamma + gamma*T2 + h*(2*a*T2 + gamma*nablaM)",
    "T2*d = d + d*T2 + h*(2*beta*T2 - d*nablaM)",
    "nablaP*a = gamma + a*nablaP - h*a*(T1 - T2)",
    "nablaP*beta = d - beta*nablaP - h*beta*(T1 - T2)",
    "nablaP*gamma = -gamma*nablaP - h*(2*a*nablaM + gamma*T1 - gamma*T2)",
    "nablaP*d = d*nablaP + h*(2*beta*nablaP - d*T1 + d*T2)",
    "nablaM*a = a*nablaM",
    "nablaM*beta = -beta*nablaM",
    "nablaM*gamma = a - gamma*nablaM - 2*h*a*nablaM",
    "nablaM*d = beta + d*nablaM + 2*h*beta*nablaM",
};

const std::vector<std::string> kParamDerivs = {
    "Da*a = 1 + a*Da - h*(beta*Da + a*Dgamma)",
    "Da*beta = beta*Da + h*beta*Dgamma",
    "Da*gamma = gamma*Da + h*(a*Da + d*Da + gamma*Dgamma)",
    "Da*d = d*Da + h*(beta*Da - d*Dgamma)",
    "Dbeta*a = a*Dbeta - h*(a*Da - a*Dd + beta*Dbeta)",
    "Dbeta*beta = 1 - beta*Dbeta - h*beta*(Da - Dd)",
    "Dbeta*gamma = -gamma*Dbeta - h*(a*Dbeta + gamma*Da - gamma*Dd + d*Dbeta)",
    "Dbeta*d = d*Dbeta + h*(beta*Dbeta - d*Da + d*Dd)",
    "Dgamma*a = a*Dgamma - h*beta*Dgamma",
    "Dgamma*beta = -beta*Dgamma",
    "Dgamma*gamma = 1 - gamma*Dgamma - h*(a*Dgamma + d*Dgamma)",
    "Dgamma*d = d*Dgamma + h*beta*Dgamma",
    "Dd*a = a*Dd - h*(a*Dgamma + beta*Dd)",
    "Dd*beta = beta*Dd + h*beta*Dgamma",
    "Dd*gamma = gamma*Dd + h*(a*Dd + gamma*Dgamma + d*Dd)",
    "Dd*d = 1 + d*Dd + h*(beta*Dd - d*Dgamma)",
};

const std::vector<std::string> kDerivatives = {
    "Da*Dbeta = Dbeta*Da + h*(Dd*Da - Dbeta*Dgamma - Da^2)",
    "Dd*Dbeta = Dbeta*Dd - h*(Da*Dd + Dbeta*Dgamma - Dd^2)",
    "Da*Dgamma = Dgamma*Da",
    "Dd*Dgamma = Dgamma*Dd",
    "Dbeta*Dgamma = -Dgamma*Dbeta + h*Dgamma*(Da - Dd)",
    "Dbeta^2 = h*Dbeta*(Da - Dd)",
    "Dgamma^2 = 0",
    "Da*Dd = Dd*Da + h*Dgamma*(Dd - Da)",
};

const std::vector<std::string> kSuperplane = {
    "x*theta = theta*x + h*x^2",
    "theta^2 = -h*x*theta",
};

// Repaired versions of printed lines that do not reduce to zero, keyed by
// the printed line they replace.
struct CorrectionSpec {
    const char* catalog;
    std::size_t line;  // 1-based
    const char* text;
};

const CorrectionSpec kCorrections[] = {
    {"cartan", 3, "c = v*a + w2*gamma"},
    {"cartan", 4, "delta = v*beta + w2*d"},
    {"superalgebra", 3, "T2*nablaP - nablaP*T2 = nablaP - 2*h*(-T2*T1 + T2 - nablaP*nablaM)"},
    {"vector-on-params", 11, "nablaP*gamma = -gamma*nablaP - h*(2*a*nablaP + gamma*T1 - gamma*T2)"},
};

struct CatalogSpec {
    const char* name;
    const char* paper_eq;
    const char* presentation;
    std::vector<std::string> lines;
};

const std::vector<CatalogSpec>& catalog_specs()
{
    static const std::vector<CatalogSpec> specs = [] {
        std::vector<std::string> glh = kGlhRules;
        glh.insert(glh.end(), kGlhExtra.begin(), kGlhExtra.end());
        return std::vector<CatalogSpec>{
            {"glq", "Eq. 1", "glq", kGlq},
            {"glh", "Eq. 4", "glh", glh},
            {"mixed", "Eq. 15", "gamma", kMixed},
            {"forms", "Eq. 16", "gamma", kForms},
            {"inverse-params", "Eq. 38", "gamma", kInverseParams},
            {"oneform-params", "Eq. 39", "gamma", kOneformParams},
            {"inverse-differentials", "Eq. 40", "gamma", kInverseDifferentials},
            {"oneform-differentials", "Eq. 41", "gamma", kOneformDifferentials},
            {"oneforms", "Eq. 42", "gamma", kOneforms},
            {"cartan", "Eq. 43", "gamma", kCartan},
            {"superalgebra", "Eq. 48", "weyl", kSuperalgebra},
            {"vector-on-params", "Eq. 50", "weyl", kVectorOnParams},
            {"param-derivatives", "Eq. 52", "weyl", kParamDerivs},
            {"derivatives", "Eq. 53", "weyl", kDerivatives},
            {"superplane", "Sec. V", "oneforms", kSuperplane},
        };
    }();
    return specs;
}

// Rule origin: the catalog's reference tag.
std::string origin_of(std::string_view catalog)
{
    for (const auto& c : catalog_specs())
        if (catalog == c.name)
            return c.paper_eq;
    throw ValidationError("unknown relation catalog '" + std::string(catalog) + "'");
}

// ---------------------------------------------------------------------------
// Composites

struct CompositeSpec {
    const char* name;
    const char* formula;
    const char* home;
};

// D_h_inv is the unnormalized output of invert_perturbed with x = a d⁻¹,
// x_inv = d a⁻¹, n = -β d⁻¹ γ d⁻¹; composite() recomputes and checks it.
const CompositeSpec kComposites[] = {
    {"D_h", "a*d_inv - beta*d_inv*gamma*d_inv", "glh"},
    {"D_h_inv", "d*a_inv + d*a_inv*beta*d_inv*gamma*d_inv*d*a_inv", "glh"},
    {"A", "a_inv + a_inv*beta*d_inv*gamma*a_inv", "glh"},
    {"B", "-a_inv*beta*d_inv", "glh"},
    {"C", "-d_inv*gamma*a_inv", "glh"},
    {"D", "d_inv + d_inv*gamma*a_inv*beta*d_inv", "glh"},
    {"Dhat", "b*c_inv - alpha*c_inv*delta*c_inv", "gamma"},
    {"w1", "alpha*A + b*C", "gamma"},
    {"u", "alpha*B + b*D", "gamma"},
    {"v", "c*A + delta*C", "gamma"},
    {"w2", "delta*D + c*B", "gamma"},
    {"T1", "a*Da + beta*Dbeta", "weyl"},
    {"nablaP", "gamma*Da + d*Dbeta", "weyl"},
    {"T2", "d*Dd + gamma*Dgamma", "weyl"},
    {"nablaM", "a*Dgamma + beta*Dd", "weyl"},
    {"x", "2*u", "oneforms"},
    {"theta", "w1", "oneforms"},
};

const std::map<std::string, std::string, std::less<>>& composite_aliases()
{
    static const std::map<std::string, std::string, std::less<>> aliases = {
        {"𝒟_h", "D_h"},      {"D_h^-1", "D_h_inv"}, {"D̂", "Dhat"},      {"S(a)", "A"},
        {"S(beta)", "B"},    {"S(β)", "B"},         {"S(gamma)", "C"},  {"S(γ)", "C"},
        {"S(d)", "D"},       {"w₁", "w1"},          {"w₂", "w2"},       {"T₁", "T1"},
        {"T₂", "T2"},        {"∇₊", "nablaP"},      {"∇₋", "nablaM"},   {"θ", "theta"},
        {"nabla+", "nablaP"}, {"nabla-", "nablaM"},
    };
    return aliases;
}

const CompositeSpec* find_composite(std::string_view name)
{
    const auto& aliases = composite_aliases();
    if (auto it = aliases.find(name); it != aliases.end())
        name = it->second;
    for (const auto& c : kComposites)
        if (name == c.name)
            return &c;
    return nullptr;
}

// Expands composites recursively in the free algebra. `prefer` tells whether
// an in-scope generator shadows a composite of the same name.
SymbolResolver make_resolver(TablePtr table, std::function<bool(Letter)> prefer)
{
    SymbolResolver r;
    r.table = table;
    for (const auto& g : table->generators())
        r.known.push_back(g.name);
    for (const auto& c : kComposites)
        r.known.emplace_back(c.name);
    r.known.emplace_back("h");
    r.known.emplace_back("q");
    r.lookup = [table, prefer](std::string_view name) -> std::optional<Element> {
        if (name == "h")
            return Element::h(table);
        if (name == "q")
            return Element::scalar(table, Scalar::q());
        const auto letter = table->find(name);
        if (letter && prefer(*letter))
            return Element::generator(table, *letter);
        if (const CompositeSpec* c = find_composite(name))
            return evaluate(parse_expression(c->formula), make_resolver(table, prefer));
        if (letter)
            return Element::generator(table, *letter);
        return std::nullopt;
    };
    return r;
}

// Rule construction reads generator names first (a builder's scope grows as
// rules are added).
SymbolResolver builder_resolver(TablePtr table)
{
    return make_resolver(std::move(table), [](Letter) { return true; });
}

void add_lines(RuleSetBuilder& b, const SymbolResolver& r, const std::vector<std::string>& lines,
               const std::string& origin)
{
    for (const auto& line : lines)
        b.add_relation(evaluate_relation(line, r), origin);
}

void include_all(RuleSetBuilder& b, std::initializer_list<const char*> names)
{
    for (const char* n : names)
        b.include(n);
}

RuleSet make_glq()
{
    const TablePtr t = universal_table();
    RuleSetBuilder b("glq", t);
    include_all(b, {"a'", "beta'", "gamma'", "d'"});
    add_lines(b, builder_resolver(t), kGlq, origin_of("glq"));
    b.localize(t->at("a'")).localize(t->at("d'"));
    return b.build();
}

void add_glh(RuleSetBuilder& b)
{
    include_all(b, {"a", "beta", "gamma", "d"});
    add_lines(b, builder_resolver(b.table()), kGlhRules, origin_of("glh"));
}

RuleSet make_glh()
{
    const TablePtr t = universal_table();
    RuleSetBuilder b("glh", t);
    add_glh(b);
    b.localize(t->at("a")).localize(t->at("d"));
    return b.build();
}

void add_gamma(RuleSetBuilder& b)
{
    add_glh(b);
    include_all(b, {"alpha", "b", "c", "delta"});
    const auto r = builder_resolver(b.table());
    add_lines(b, r, kMixed, origin_of("mixed"));
    add_lines(b, r, kForms, origin_of("forms"));
}

RuleSet make_gamma()
{
    const TablePtr t = universal_table();
    RuleSetBuilder b("gamma", t);
    add_gamma(b);
    b.localize(t->at("a")).localize(t->at("d")).localize(t->at("c"));
    return b.build();
}

RuleSet make_oneforms()
{
    const TablePtr t = universal_table();
    RuleSetBuilder b("oneforms", t);
    add_gamma(b);
    include_all(b, {"w1", "u", "v", "w2"});
    const auto r = builder_resolver(t);
    add_lines(b, r, kOneformParams, origin_of("oneform-params"));
    add_lines(b, r, kOneformDifferentials, origin_of("oneform-differentials"));
    add_lines(b, r, kOneforms, origin_of("oneforms"));
    b.localize(t->at("a")).localize(t->at("d")).localize(t->at("c"));
    return b.build();
}

RuleSet make_weyl()
{
    const TablePtr t = universal_table();
    RuleSetBuilder b("weyl", t);
    add_glh(b);
    include_all(b, {"Da", "Dbeta", "Dgamma", "Dd"});
    const auto r = builder_resolver(t);
    add_lines(b, r, kParamDerivs, origin_of("param-derivatives"));
    add_lines(b, r, kDerivatives, origin_of("derivatives"));
    b.localize(t->at("a")).localize(t->at("d"));
    return b.build();
}

RuleSet make_derivs()
{
    const TablePtr t = universal_table();
    RuleSetBuilder b("derivs", t);
    include_all(b, {"Da", "Dbeta", "Dgamma", "Dd"});
    add_lines(b, builder_resolver(t), kDerivatives, origin_of("derivatives"));
    b.localize(t->at("Da")).localize(t->at("Dd"));
    return b.build();
}

}  // namespace

TablePtr universal_table()
{
    static const TablePtr table = [] {
        auto t = std::make_shared<GeneratorTable>();
        for (const auto& g : kGenerators)
            t->add(g.name, g.display, g.parity, g.invertible);
        return TablePtr(t);
    }();
    return table;
}

const std::vector<PresentationInfo>& presentation_list()
{
    static const std::vector<PresentationInfo> list = {
        {"glq", "Eq. 1", "q-deformed matrix entries a', beta', gamma', d' (localized at a', d')"},
        {"glh", "Eq. 4", "h-deformed matrix entries a, beta, gamma, d (localized at a, d)"},
        {"gamma", "Eqs. 15-16", "entries and differentials alpha, b, c, delta (localized at a, d, c)"},
        {"oneforms", "Eqs. 39/41/42", "gamma plus right one-forms w1, u, v, w2 as generators"},
        {"weyl", "Eqs. 52-53", "entries and partial derivatives Da, Dbeta, Dgamma, Dd (localized at a, d)"},
        {"derivs", "Eq. 53", "partial derivatives alone (localized at Da, Dd)"},
    };
    return list;
}

const RuleSet& presentation(std::string_view name)
{
    if (name == "glq") {
        static const RuleSet rs = make_glq();
        return rs;
    }
    if (name == "glh") {
        static const RuleSet rs = make_glh();
        return rs;
    }
    if (name == "gamma") {
        static const RuleSet rs = make_gamma();
        return rs;
    }
    if (name == "oneforms") {
        static const RuleSet rs = make_oneforms();
        return rs;
    }
    if (name == "weyl") {
        static const RuleSet rs = make_weyl();
        return rs;
    }
    if (name == "derivs") {
        static const RuleSet rs = make_derivs();
        return rs;
    }
    throw ValidationError("unknown presentation '" + std::string(name) + "'");
}

SymbolResolver presentation_resolver(const RuleSet& rs)
{
    std::vector<bool> scope(rs.table()->size(), false);
    for (Letter l : rs.scope_letters())
        scope[l] = true;
    return make_resolver(rs.table(), [scope](Letter l) { return l < scope.size() && scope[l]; });
}

Element parse_in(std::string_view text, const RuleSet& rs)
{
    return evaluate_relation(text, presentation_resolver(rs));
}

Element reduce(std::string_view text, const RuleSet& rs)
{
    return normalize(parse_in(text, rs), rs);
}

const RuleSet& composite_home(std::string_view name)
{
    const CompositeSpec* c = find_composite(name);
    if (!c)
        throw ValidationError("unknown composite '" + std::string(name) + "'");
    return presentation(c->home);
}

Element composite(std::string_view name)
{
    const CompositeSpec* c = find_composite(name);
    if (!c)
        throw ValidationError("unknown composite '" + std::string(name) + "'");
    const RuleSet& home = presentation(c->home);
    if (std::string_view(c->name) == "D_h_inv") {
        const Element x = parse_in("a*d_inv", home);
        const Element x_inv = parse_in("d*a_inv", home);
        const Element n = parse_in("-beta*d_inv*gamma*d_inv", home);
        return invert_perturbed(x, x_inv, n, home);
    }
    return normalize(parse_in(c->name, home), home);
}

std::vector<std::string> composite_names()
{
    std::vector<std::string> out;
    for (const auto& c : kComposites)
        out.emplace_back(c.name);
    return out;
}

const std::vector<CatalogInfo>& catalog_list()
{
    static const std::vector<CatalogInfo> list = [] {
        std::vector<CatalogInfo> out;
        for (const auto& s : catalog_specs())
            out.push_back({s.name, s.paper_eq, s.presentation, s.lines.size()});
        return out;
    }();
    return list;
}

std::vector<std::string> catalog_texts(std::string_view catalog)
{
    for (const auto& s : catalog_specs())
        if (catalog == s.name)
            return s.lines;
    throw ValidationError("unknown relation catalog '" + std::string(catalog) + "'");
}

std::vector<NamedRelation> relation_catalog(std::string_view catalog)
{
    for (const auto& s : catalog_specs()) {
        if (catalog != s.name)
            continue;
        const RuleSet& rs = presentation(s.presentation);
        const SymbolResolver r = presentation_resolver(rs);
        std::vector<NamedRelation> out;
        for (std::size_t i = 0; i < s.lines.size(); ++i) {
            char index[8];
            std::snprintf(index, sizeof index, "%02zu", i + 1);
            out.push_back({std::string(s.name) + "." + index, s.paper_eq, s.lines[i], s.presentation,
                           evaluate_relation(s.lines[i], r)});
        }
        return out;
    }
    throw ValidationError("unknown relation catalog '" + std::string(catalog) + "'");
}

std::vector<NamedRelation> corrected_relations()
{
    std::vector<NamedRelation> out;
    for (const auto& c : kCorrections) {
        const auto& spec = *std::find_if(catalog_specs().begin(), catalog_specs().end(),
                                         [&](const CatalogSpec& s) { return c.catalog == std::string_view(s.name); });
        char index[8];
        std::snprintf(index, sizeof index, "%02zu", c.line);
        const RuleSet& rs = presentation(spec.presentation);
        out.push_back({std::string(spec.name) + "." + index, spec.paper_eq, c.text, spec.presentation,
                       evaluate_relation(c.text, presentation_resolver(rs))});
    }
    return out;
}

}  // namespace qsg
