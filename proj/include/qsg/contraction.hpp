#pragma once

#include "qsg/report.hpp"
#include "qsg/rewrite.hpp"

#include <array>
#include <map>
#include <vector>

namespace qsg {

/// λ = h/(q-1) as an element (odd, λ² = 0).
Element contraction_lambda();

/// Entries a, beta, gamma, d of g⁻¹ T' g with g = (1 0; λ 1), normalized in
/// glq. Row-major.
std::array<Element, 4> conjugate_entries();

/// Letter substitution extended multiplicatively (h passes through).
Element substitute(const Element& x, const std::map<Letter, Element>& images);

/// Images of a, a_inv, beta, gamma, d, d_inv in the localized q-algebra;
/// the inverses come from invert_perturbed.
std::map<Letter, Element> contraction_images();

/// Primed differentials in terms of unprimed ones, rows (alpha', b', c',
/// delta'), as displayed for dT'.
std::array<Element, 4> map_differentials();

/// The inverse reading: unprimed differentials in terms of primed ones.
std::array<Element, 4> unmap_differentials();

/// Coefficientwise value at q = 1; throws DivisionByZero on a pole.
Element limit_q_to_one(const Element& x);

std::vector<Check> contraction_checks();

}  // namespace qsg
