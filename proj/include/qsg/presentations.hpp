#pragma once

#include "qsg/expr.hpp"
#include "qsg/rewrite.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace qsg {

/// The single generator alphabet shared by every built-in presentation.
/// Rank order: a, a⁻¹, β, γ, d, d⁻¹, α, b, c, c⁻¹, δ, w₁, u, v, w₂,
/// ∂_a, ∂_a⁻¹, ∂_β, ∂_γ, ∂_d, ∂_d⁻¹, then the primed q-side letters.
TablePtr universal_table();

struct PresentationInfo {
    std::string name;
    std::string paper_eq;
    std::string summary;
};

/// glq, glh, gamma, oneforms, weyl, derivs.
const std::vector<PresentationInfo>& presentation_list();

/// Cached, thread-safe. Throws ValidationError for an unknown name.
const RuleSet& presentation(std::string_view name);

inline const RuleSet& build_glq() { return presentation("glq"); }
inline const RuleSet& build_glh() { return presentation("glh"); }
inline const RuleSet& build_gamma() { return presentation("gamma"); }
inline const RuleSet& build_oneforms() { return presentation("oneforms"); }
inline const RuleSet& build_weyl() { return presentation("weyl"); }

/// Resolves in-scope generators first, then composite names (D_h, D_h_inv,
/// Dhat, A, B, C, D, w1, u, v, w2, T1, T2, nablaP, nablaM, x, theta), then
/// h and q. Composites expand in the free algebra.
SymbolResolver presentation_resolver(const RuleSet& rs);

/// Parses and evaluates an expression (or "lhs = rhs") for rs, unnormalized.
Element parse_in(std::string_view text, const RuleSet& rs);

/// Parses, evaluates and normalizes.
Element reduce(std::string_view text, const RuleSet& rs);

/// Named composite in normal form under its home presentation. Accepts ASCII
/// names, "S(beta)"-style antipode images and the usual Unicode spellings.
Element composite(std::string_view name);
std::vector<std::string> composite_names();

/// The rule set a composite lives in ("glh" for D_h, "weyl" for T1, ...).
const RuleSet& composite_home(std::string_view name);

struct NamedRelation {
    std::string name;       // "<catalog>.<nn>"
    std::string paper_eq;
    std::string text;       // ASCII "lhs = rhs"
    std::string presentation;
    Element element;        // lhs - rhs, unnormalized
};

struct CatalogInfo {
    std::string name;
    std::string paper_eq;
    std::string presentation;
    std::size_t lines = 0;
};

const std::vector<CatalogInfo>& catalog_list();

/// Every displayed line of the named catalog. Throws ValidationError for an
/// unknown name.
std::vector<NamedRelation> relation_catalog(std::string_view catalog);

/// Repaired forms of the printed lines that fail, named after the line they
/// replace ("cartan.03", ...).
std::vector<NamedRelation> corrected_relations();

/// Raw line texts without evaluation.
std::vector<std::string> catalog_texts(std::string_view catalog);

}  // namespace qsg
