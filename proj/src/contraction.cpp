#include "qsg/contraction.hpp"

#include "qsg/calculus.hpp"
#include "qsg/errors.hpp"
#include "qsg/presentations.hpp"
#include "qsg/references.hpp"
#include "qsg/rmatrix.hpp"

namespace qsg {

namespace {

Element gen(std::string_view name)
{
    return Element::generator(universal_table(), name);
}

Letter letter(std::string_view name)
{
    return universal_table()->at(name);
}

AlgebraMatrix g_matrix(const Element& lambda)
{
    const auto t = universal_table();
    return AlgebraMatrix::from_rows({{Element::one(t), Element::zero(t)}, {lambda, Element::one(t)}});
}

const char* const kEntryNames[] = {"a", "beta", "gamma", "d"};

}  // namespace

Element contraction_lambda()
{
    return parse_in("h/(q - 1)", build_glq());
}

std::array<Element, 4> conjugate_entries()
{
    const Element lambda = contraction_lambda();
    const AlgebraMatrix tp =
        AlgebraMatrix::from_rows({{gen("a'"), gen("beta'")}, {gen("gamma'"), gen("d'")}});
    // g is unipotent with λ² = 0, so g⁻¹ = (1 0; -λ 1).
    const AlgebraMatrix m = normalize(g_matrix(-lambda) * tp * g_matrix(lambda), build_glq());
    return {m.at(0, 0), m.at(0, 1), m.at(1, 0), m.at(1, 1)};
}

Element substitute(const Element& x, const std::map<Letter, Element>& images)
{
    const auto& table = *x.table();
    Element out(x.table());
    for (const auto& [w, c] : x.terms()) {
        Element term = Element::word(x.table(), Word(w.hdeg, {}), c);
        for (Letter l : w.letters) {
            auto it = images.find(l);
            if (it == images.end())
                throw ValidationError("no substitution for generator '" + table[l].name + "'");
            term = term * it->second;
        }
        out += term;
    }
    return out;
}

std::map<Letter, Element> contraction_images()
{
    const auto e = conjugate_entries();
    const RuleSet& glq = build_glq();
    std::map<Letter, Element> m;
    for (std::size_t k = 0; k < 4; ++k)
        m[letter(kEntryNames[k])] = e[k];
    // image of a is a' + n with n nilpotent, likewise d.
    m[letter("a_inv")] = invert_perturbed(gen("a'"), gen("a'_inv"), e[0] - gen("a'"), glq);
    m[letter("d_inv")] = invert_perturbed(gen("d'"), gen("d'_inv"), e[3] - gen("d'"), glq);
    return m;
}

std::array<Element, 4> map_differentials()
{
    const RuleSet& gamma = build_gamma();
    return {parse_in("alpha - h/(q - 1)*b", gamma), parse_in("b", gamma),
            parse_in("c + h/(q - 1)*(delta - alpha)", gamma), parse_in("delta - h/(q - 1)*b", gamma)};
}

std::array<Element, 4> unmap_differentials()
{
    const Element lambda = contraction_lambda();
    const Element a = gen("alpha'"), b = gen("b'"), c = gen("c'"), d = gen("delta'");
    return {a + lambda * b, b, c - lambda * (d - a), d + lambda * b};
}

Element limit_q_to_one(const Element& x)
{
    Element out(x.table());
    for (const auto& [w, c] : x.terms()) {
        const mpq_class den = c.denominator().evaluate(1);
        if (den == 0)
            throw DivisionByZero("coefficient " + c.to_string() + " of " + to_string(*x.table(), w) +
                                 " has a pole at q = 1");
        out.add_term(w, Scalar(mpq_class(c.numerator().evaluate(1) / den)));
    }
    return out;
}

std::vector<Check> contraction_checks()
{
    std::vector<Check> out;
    const char* expected[] = {"a' - h/(q - 1)*beta'", "beta'", "gamma' - h/(q - 1)*(a' - d')",
                              "d' - h/(q - 1)*beta'"};
    const char* primed[] = {"a'", "beta'", "gamma'", "d'"};
    for (std::size_t k = 0; k < 4; ++k) {
        const std::string want = expected[k];
        const std::string p = primed[k];
        out.push_back({"contraction.entries." + std::string(kEntryNames[k]), paper_ref("contraction.entries"),
                       [k, want] {
                           const RuleSet& glq = build_glq();
                           return zero_under(conjugate_entries()[k] - parse_in(want, glq), glq);
                       }});
        out.push_back({"contraction.entries.classical." + std::string(kEntryNames[k]), paper_ref("contraction.entries"),
                       [k, p] { return expect_zero(conjugate_entries()[k].h_part(0) - gen(p)); }});
    }
    for (const auto& rel : relation_catalog("glh")) {
        const Element e = rel.element;
        out.push_back({"contraction.relation." + rel.name, paper_ref("contraction.relation"), [e] {
                           const Element image = substitute(e, contraction_images());
                           const Element nf = normalize(image, build_glq());
                           Outcome o = expect_zero(nf);
                           o.detail = std::string("image ") + (image.depends_on_q() ? "depends" : "does not depend") +
                                      " on q; normal form " + (nf.depends_on_q() ? "depends on q" : "is q-free");
                           return o;
                       }});
    }
    // The usual direction: T' = g T g⁻¹ into the q-relations, reduced with the
    // h-relations, then q -> 1 at fixed h.
    for (const auto& rel : relation_catalog("glq")) {
        const Element e = rel.element;
        out.push_back({"contraction.limit." + rel.name, paper_ref("contraction.limit"),
                       [e] {
                           const Element lambda = contraction_lambda();
                           const AlgebraMatrix tp = g_matrix(lambda) * t_matrix() * g_matrix(-lambda);
                           std::map<Letter, Element> images;
                           const char* names[] = {"a'", "beta'", "gamma'", "d'"};
                           for (std::size_t k = 0; k < 4; ++k)
                               images[letter(names[k])] = tp.at(k / 2, k % 2);
                           const Element nf = normalize(substitute(e, images), build_glh());
                           Outcome o = expect_zero(limit_q_to_one(nf));
                           o.detail = nf.is_zero() ? "vanishes for every q" : "residual before the limit: " + to_string(nf);
                           return o;
                       },
                       true});
    }
    out.push_back({"contraction.superdeterminant", paper_ref("contraction.superdeterminant"), [] {
                       // g has unit Berezinian, so the image of D_h is the q-side superdeterminant.
                       const RuleSet& glq = build_glq();
                       const Element image = substitute(parse_in("D_h", build_glh()), contraction_images());
                       return zero_under(image - parse_in("a'*d'_inv - beta'*d'_inv*gamma'*d'_inv", glq), glq);
                   }});
    const char* diffs[] = {"alpha", "b", "c", "delta"};
    for (std::size_t k = 0; k < 4; ++k) {
        const std::string name = diffs[k];
        out.push_back({"contraction.differentials." + name, paper_ref("contraction.differentials"), [k] {
                           // T' = g T g⁻¹ in unprimed entries, then differentiate.
                           const Element lambda = contraction_lambda();
                           const AlgebraMatrix tp = g_matrix(lambda) * t_matrix() * g_matrix(-lambda);
                           const Element dtp = differentiate_free(tp.at(k / 2, k % 2));
                           return zero_under(dtp - map_differentials()[k], build_gamma());
                       }});
        out.push_back({"contraction.differentials.roundtrip." + name, paper_ref("contraction.differentials"), [k] {
                           std::map<Letter, Element> back;
                           const auto un = unmap_differentials();
                           const char* names[] = {"alpha", "b", "c", "delta"};
                           for (std::size_t j = 0; j < 4; ++j)
                               back[letter(names[j])] = un[j];
                           const char* primed_names[] = {"alpha'", "b'", "c'", "delta'"};
                           return expect_zero(substitute(map_differentials()[k], back) - gen(primed_names[k]));
                       }});
    }
    return out;
}

}  // namespace qsg
