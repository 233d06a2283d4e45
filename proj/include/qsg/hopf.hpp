#pragma once

#include "qsg/report.hpp"
#include "qsg/tensor.hpp"

#include <map>
#include <string>
#include <vector>

namespace qsg {

enum class MapMode { Homomorphism, AntiHomomorphism };

/// Linear map from the free algebra to an n-fold tensor power, fixed by its
/// values on generators. Homomorphisms extend multiplicatively; antihomo-
/// morphisms by S(xy) = (-1)^{p(x)p(y)} S(y) S(x). h maps to h_sign * h.
class LetterMap {
public:
    LetterMap(std::string name, TablePtr table, std::size_t arity, MapMode mode, int h_sign = 1);

    const std::string& name() const { return name_; }
    std::size_t arity() const { return arity_; }
    MapMode mode() const { return mode_; }
    int h_sign() const { return h_sign_; }

    void set(Letter l, Tensor image);
    void set(std::string_view generator, Tensor image);
    bool defines(Letter l) const { return images_.count(l) != 0; }
    const Tensor& image(Letter l) const;

    /// Throws ValidationError naming the first generator without an image.
    Tensor apply(const Element& x) const;
    Tensor apply_word(const std::vector<Letter>& letters) const;
    WordMap word_map() const;

private:
    std::string name_;
    TablePtr table_;
    std::size_t arity_;
    MapMode mode_;
    int h_sign_;
    std::map<Letter, Tensor> images_;
};

/// Δ, ε, S on the matrix entries (with a⁻¹, d⁻¹).
const LetterMap& coproduct();
const LetterMap& counit();
const LetterMap& antipode();

/// Coactions and the extended structure maps on gamma.
const LetterMap& right_coaction();  // Δ_R : Γ → Γ ⊗ A
const LetterMap& left_coaction();   // Δ_L : Γ → A ⊗ Γ
const LetterMap& hat_coproduct();   // Δ̂  : Γ → Γ ⊗ Γ
const LetterMap& hat_counit();      // ε̂
const LetterMap& hat_antipode();    // Ŝ
const LetterMap& grade_involution();  // τ(u) = (-1)^{p(u)} u

/// Co-maps on the partial derivatives, with Δ, ε, S on the parameters so
/// they can be applied to mixed relations.
const LetterMap& derivative_coproduct();
const LetterMap& derivative_counit();
const LetterMap& derivative_antipode();

/// Applies a map to one slot of a tensor.
Tensor apply_slot(const Tensor& t, std::size_t slot, const LetterMap& map);

/// Slot-rule shorthands.
SlotRules slots(std::initializer_list<const char*> presentations);

std::vector<Check> hopf_axiom_checks();
std::vector<Check> coaction_checks();
std::vector<Check> derivative_hopf_checks();

}  // namespace qsg
