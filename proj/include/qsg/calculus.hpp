#pragma once

#include "qsg/report.hpp"
#include "qsg/rewrite.hpp"

#include <array>
#include <string>
#include <vector>

namespace qsg {

/// Exterior differential on the free algebra: d(a) = α, d(β) = b, d(γ) = c,
/// d(d) = δ, d of a differential is 0, d(x⁻¹) = -x⁻¹ d(x) x⁻¹, graded
/// Leibniz on words and d(h w) = -h d(w). No normalization. Throws
/// ValidationError for a letter without an image (one-forms, derivatives).
Element differentiate_free(const Element& x);

/// differentiate_free followed by normalization in gamma.
Element differentiate(const Element& x);

/// Right Cartan-Maurer forms w1, u, v, w2 as normalized gamma elements.
std::array<Element, 4> maurer_forms();

/// Operator action on functions of the parameters: normal-orders in weyl and
/// drops every word that contains a derivative letter.
Element act(const Element& op, const Element& f);

/// All words over {a, beta, gamma, d} of length <= max_len (unnormalized).
std::vector<Element> parameter_words(std::size_t max_len);

std::vector<Check> d_structure_checks();
std::vector<Check> leibniz_checks();
std::vector<Check> oneform_checks();  // catalog lines of the one-form relations
std::vector<Check> cartan_checks();
std::vector<Check> maurer_equation_checks();
std::vector<Check> superalgebra_checks();
std::vector<Check> action_checks();
std::vector<Check> d_expansion_checks();
std::vector<Check> superplane_checks();
std::vector<Check> centrality_checks();

/// Parameter letters a, beta, gamma, d.
std::array<Letter, 4> parameter_letters();

}  // namespace qsg
