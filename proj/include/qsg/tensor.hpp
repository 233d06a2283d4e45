#pragma once

#include "qsg/rewrite.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace qsg {

/// h^hdeg (w_0 ⊗ w_1 ⊗ ... ⊗ w_{n-1}); h is shared and kept in front.
struct TensorWord {
    std::uint8_t hdeg = 0;
    std::vector<std::vector<Letter>> slots;

    friend bool operator==(const TensorWord&, const TensorWord&) = default;
    friend std::strong_ordering operator<=>(const TensorWord& x, const TensorWord& y);
};

/// Element of the n-fold graded tensor power of the free algebra. Arity 0 is
/// the scalar line (constants and h times constants).
///
/// Product: (A ⊗ B)(C ⊗ D) = (-1)^{p(B)p(C)} AC ⊗ BD, extended to n slots; an
/// h in the right factor moves to the front past every slot of the left one.
class Tensor {
public:
    using TermMap = std::map<TensorWord, Scalar>;

    Tensor() = default;
    Tensor(TablePtr table, std::size_t arity) : table_(std::move(table)), arity_(arity) {}

    static Tensor one(TablePtr table, std::size_t arity);
    /// 1 ⊗ ... ⊗ x ⊗ ... ⊗ 1 with x in `slot`.
    static Tensor embed(const Element& x, std::size_t slot, std::size_t arity);
    /// x_0 ⊗ x_1 ⊗ ... (graded product of the slot embeddings).
    static Tensor pure(const std::vector<Element>& factors);
    static Tensor from_element(const Element& x) { return embed(x, 0, 1); }

    const TablePtr& table() const { return table_; }
    std::size_t arity() const { return arity_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const TensorWord& w, const Scalar& c);

    Tensor operator-() const;
    Tensor& operator+=(const Tensor& other);
    Tensor& operator-=(const Tensor& other);
    Tensor& operator*=(const Scalar& c);
    friend Tensor operator+(Tensor x, const Tensor& y) { return x += y; }
    friend Tensor operator-(Tensor x, const Tensor& y) { return x -= y; }
    friend Tensor operator*(Tensor x, const Scalar& c) { return x *= c; }
    friend Tensor operator*(const Tensor& x, const Tensor& y);
    friend bool operator==(const Tensor& x, const Tensor& y);

    /// Arity-1 tensor back to an element; arity 0 gives a constant element.
    Element to_element() const;

private:
    void check_compatible(const Tensor& other) const;
    TablePtr table_;
    std::size_t arity_ = 0;
    TermMap terms_;
};

Parity parity_of(const GeneratorTable& table, const TensorWord& w);

/// One rule set per slot.
using SlotRules = std::vector<const RuleSet*>;

/// Normalizes each slot under its rule set.
Tensor normalize(const Tensor& t, const SlotRules& rules);

/// Image of an h-free word under a slot map. The result arity is the map's
/// output arity.
using WordMap = std::function<Tensor(const std::vector<Letter>&)>;

/// Applies a linear map to one slot. An odd map picks up the Koszul sign of
/// everything to its left (front h included). An even map multiplies terms
/// carrying h by `h_sign`; -1 gives τ(h) = -h, or an odd map written without
/// its Koszul sign whose only remaining sign is the one from passing h.
Tensor apply_slot(const Tensor& t, std::size_t slot, std::size_t out_arity, const WordMap& map, bool odd = false,
                  int h_sign = 1);

/// Multiplies slots `slot` and `slot + 1` together: m on that pair.
Tensor contract(const Tensor& t, std::size_t slot);

/// Inverse of x + n given x_inv, by the finite series x_inv Σ (-n x_inv)^k.
/// Both one-sided products are checked against 1; throws NotInvertible.
Tensor series_inverse(const Tensor& x, const Tensor& x_inv, const Tensor& n, const SlotRules& rules);

std::string to_string(const Tensor& t, NameStyle style = NameStyle::Ascii);

}  // namespace qsg
