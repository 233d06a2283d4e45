#pragma once

#include "qsg/errors.hpp"
#include "qsg/scalar.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qsg {

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

constexpr Parity operator+(Parity x, Parity y)
{
    return static_cast<Parity>(static_cast<std::uint8_t>(x) ^ static_cast<std::uint8_t>(y));
}

constexpr Parity& operator+=(Parity& x, Parity y)
{
    return x = x + y;
}

constexpr bool is_odd(Parity p)
{
    return p == Parity::Odd;
}

/// (-1)^(x*y) as an integer.
constexpr int koszul_sign(Parity x, Parity y)
{
    return is_odd(x) && is_odd(y) ? -1 : 1;
}

/// Result of a parity query on a general element.
enum class ParityClass { Even, Odd, Mixed };

std::string_view to_string(Parity p);
std::string_view to_string(ParityClass p);

using Letter = std::uint16_t;

struct Generator {
    std::string name;     // ASCII, e.g. "beta", "a_inv", "Dgamma"
    std::string display;  // Unicode, e.g. "β", "a⁻¹", "∂_γ"
    Parity parity = Parity::Even;
    bool invertible = false;
    std::optional<Letter> inverse;     // letter of g⁻¹ when invertible
    std::optional<Letter> inverse_of;  // set on the g⁻¹ entry itself
};

/// Ordered generator alphabet. A generator's rank is its index; declaring an
/// invertible generator inserts its formal inverse immediately after it.
class GeneratorTable {
public:
    /// Appends a generator; returns its letter. Throws ValidationError on a
    /// duplicate name or an odd generator flagged invertible.
    Letter add(std::string name, std::string display, Parity parity, bool invertible = false);

    std::size_t size() const { return gens_.size(); }
    const Generator& operator[](Letter l) const { return gens_.at(l); }
    std::optional<Letter> find(std::string_view name) const;
    Letter at(std::string_view name) const;  // throws UnknownGenerator
    const std::vector<Generator>& generators() const { return gens_; }

private:
    std::vector<Generator> gens_;
};

using TablePtr = std::shared_ptr<const GeneratorTable>;

/// A monomial h^hdeg * letters, with the odd parameter h kept leftmost.
struct Word {
    std::uint8_t hdeg = 0;
    std::vector<Letter> letters;

    Word() = default;
    Word(std::uint8_t h, std::vector<Letter> ls) : hdeg(h), letters(std::move(ls)) {}

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }

    friend bool operator==(const Word&, const Word&) = default;
    /// Term order used for storage and printing: h-free before h, then
    /// shorter first, then lexicographic by rank.
    friend std::strong_ordering operator<=>(const Word& x, const Word& y);
};

Parity parity_of(const GeneratorTable& table, const Word& w);
Parity parity_of_letters(const GeneratorTable& table, const std::vector<Letter>& letters);
/// Number of pairs i<j with rank(letters[i]) > rank(letters[j]).
std::size_t inversions(const std::vector<Letter>& letters);

/// Finite formal sum of scalar-weighted words. Canonical: no zero
/// coefficients, one entry per word.
class Element {
public:
    using TermMap = std::map<Word, Scalar>;

    Element() = default;
    explicit Element(TablePtr table) : table_(std::move(table)) {}
    Element(TablePtr table, TermMap terms);

    static Element zero(TablePtr table) { return Element(std::move(table)); }
    static Element scalar(TablePtr table, Scalar c);
    static Element one(TablePtr table) { return scalar(std::move(table), Scalar(1)); }
    /// h * 1
    static Element h(TablePtr table);
    static Element generator(TablePtr table, Letter l);
    static Element generator(TablePtr table, std::string_view name);
    static Element word(TablePtr table, Word w, Scalar c = Scalar(1));

    const TablePtr& table() const { return table_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Scalar coefficient(const Word& w) const;

    /// Adds c * w, dropping the entry when it cancels.
    void add_term(const Word& w, const Scalar& c);
    void add_term(Word&& w, Scalar&& c);

    Element operator-() const;
    Element& operator+=(const Element& other);
    Element& operator-=(const Element& other);
    Element& operator*=(const Scalar& c);
    friend Element operator+(Element x, const Element& y) { return x += y; }
    friend Element operator-(Element x, const Element& y) { return x -= y; }
    friend Element operator*(Element x, const Scalar& c) { return x *= c; }
    friend Element operator*(const Scalar& c, Element x) { return x *= c; }
    /// Free graded product; see mul().
    friend Element operator*(const Element& x, const Element& y);

    friend bool operator==(const Element& x, const Element& y);

    /// Part of the element with the given h-degree.
    Element h_part(std::uint8_t hdeg) const;
    /// Every letter occurring in the element.
    std::vector<Letter> letters_used() const;
    bool depends_on_q() const;

private:
    void check_same_table(const Element& other) const;
    TablePtr table_;
    TermMap terms_;
};

/// Product in the free graded algebra with h^2 = 0: words concatenate, an
/// h carried by the right factor moves to the front past the left word,
/// picking up (-1)^parity(left word).
Element mul(const Element& x, const Element& y);

ParityClass parity_of(const Element& x);

enum class NameStyle { Ascii, Unicode };

std::string to_string(const GeneratorTable& table, const Word& w, NameStyle style = NameStyle::Ascii);
/// Canonical print, terms in Word order; "0" for zero.
std::string to_string(const Element& x, NameStyle style = NameStyle::Ascii);

}  // namespace qsg
