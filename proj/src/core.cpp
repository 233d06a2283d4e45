#include "qsg/core.hpp"

#include <algorithm>
#include <set>

namespace qsg {

std::string_view to_string(Parity p)
{
    return is_odd(p) ? "odd" : "even";
}

std::string_view to_string(ParityClass p)
{
    switch (p) {
    case ParityClass::Even:
        return "even";
    case ParityClass::Odd:
        return "odd";
    case ParityClass::Mixed:
        return "mixed";
    }
    return "mixed";
}

Letter GeneratorTable::add(std::string name, std::string display, Parity parity, bool invertible)
{
    if (find(name))
        throw ValidationError("duplicate generator name '" + name + "'");
    if (invertible && is_odd(parity))
        throw ValidationError("odd generator '" + name + "' cannot be invertible");
    const auto letter = static_cast<Letter>(gens_.size());
    Generator g{name, display, parity, invertible, std::nullopt, std::nullopt};
    gens_.push_back(g);
    if (invertible) {
        std::string inv_name = name + "_inv";
        if (find(inv_name))
            throw ValidationError("duplicate generator name '" + inv_name + "'");
        const auto inv = static_cast<Letter>(gens_.size());
        gens_[letter].inverse = inv;
        gens_.push_back(Generator{inv_name, display + "⁻¹", parity, false, std::nullopt, letter});
    }
    return letter;
}

std::optional<Letter> GeneratorTable::find(std::string_view name) const
{
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name)
            return static_cast<Letter>(i);
    return std::nullopt;
}

Letter GeneratorTable::at(std::string_view name) const
{
    if (auto l = find(name))
        return *l;
    throw UnknownGenerator("unknown generator '" + std::string(name) + "'");
}

std::strong_ordering operator<=>(const Word& x, const Word& y)
{
    if (auto c = x.hdeg <=> y.hdeg; c != 0)
        return c;
    if (auto c = x.letters.size() <=> y.letters.size(); c != 0)
        return c;
    return x.letters <=> y.letters;
}

Parity parity_of_letters(const GeneratorTable& table, const std::vector<Letter>& letters)
{
    Parity p = Parity::Even;
    for (Letter l : letters)
        p += table[l].parity;
    return p;
}

Parity parity_of(const GeneratorTable& table, const Word& w)
{
    Parity p = parity_of_letters(table, w.letters);
    if (w.hdeg % 2 == 1)
        p += Parity::Odd;
    return p;
}

std::size_t inversions(const std::vector<Letter>& letters)
{
    std::size_t count = 0;
    for (std::size_t i = 0; i < letters.size(); ++i)
        for (std::size_t j = i + 1; j < letters.size(); ++j)
            count += letters[i] > letters[j] ? 1 : 0;
    return count;
}

Element::Element(TablePtr table, TermMap terms) : table_(std::move(table)), terms_(std::move(terms))
{
    std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero() || kv.first.hdeg > 1; });
}

Element Element::scalar(TablePtr table, Scalar c)
{
    Element e(std::move(table));
    e.add_term(Word{}, c);
    return e;
}

Element Element::h(TablePtr table)
{
    Element e(std::move(table));
    e.add_term(Word{1, {}}, Scalar(1));
    return e;
}

Element Element::generator(TablePtr table, Letter l)
{
    if (l >= table->size())
        throw UnknownGenerator("letter out of range");
    Element e(std::move(table));
    e.add_term(Word{0, {l}}, Scalar(1));
    return e;
}

Element Element::generator(TablePtr table, std::string_view name)
{
    const Letter l = table->at(name);
    return generator(std::move(table), l);
}

Element Element::word(TablePtr table, Word w, Scalar c)
{
    Element e(std::move(table));
    e.add_term(w, c);
    return e;
}

Scalar Element::coefficient(const Word& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar() : it->second;
}

void Element::add_term(const Word& w, const Scalar& c)
{
    if (c.is_zero() || w.hdeg > 1)
        return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void Element::add_term(Word&& w, Scalar&& c)
{
    if (c.is_zero() || w.hdeg > 1)
        return;
    auto [it, inserted] = terms_.try_emplace(std::move(w), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void Element::check_same_table(const Element& other) const
{
    if (table_ != other.table_)
        throw TableMismatch();
}

Element Element::operator-() const
{
    Element r = *this;
    for (auto& [w, c] : r.terms_)
        c = -c;
    return r;
}

Element& Element::operator+=(const Element& other)
{
    check_same_table(other);
    for (const auto& [w, c] : other.terms_)
        add_term(w, c);
    return *this;
}

Element& Element::operator-=(const Element& other)
{
    check_same_table(other);
    for (const auto& [w, c] : other.terms_)
        add_term(w, -c);
    return *this;
}

Element& Element::operator*=(const Scalar& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, coeff] : terms_)
        coeff *= c;
    return *this;
}

Element operator*(const Element& x, const Element& y)
{
    return mul(x, y);
}

bool operator==(const Element& x, const Element& y)
{
    return x.table_ == y.table_ && x.terms_ == y.terms_;
}

Element Element::h_part(std::uint8_t hdeg) const
{
    Element r(table_);
    for (const auto& [w, c] : terms_)
        if (w.hdeg == hdeg)
            r.terms_.emplace(w, c);
    return r;
}

std::vector<Letter> Element::letters_used() const
{
    std::set<Letter> seen;
    for (const auto& [w, c] : terms_)
        seen.insert(w.letters.begin(), w.letters.end());
    return {seen.begin(), seen.end()};
}

bool Element::depends_on_q() const
{
    return std::any_of(terms_.begin(), terms_.end(), [](const auto& kv) { return !kv.second.is_constant(); });
}

Element mul(const Element& x, const Element& y)
{
    if (x.table() != y.table())
        throw TableMismatch();
    const GeneratorTable& table = *x.table();
    Element out(x.table());
    for (const auto& [xw, xc] : x.terms()) {
        const bool left_odd = is_odd(parity_of_letters(table, xw.letters));
        for (const auto& [yw, yc] : y.terms()) {
            const int hdeg = xw.hdeg + yw.hdeg;
            if (hdeg > 1)
                continue;
            Word w;
            w.hdeg = static_cast<std::uint8_t>(hdeg);
            w.letters.reserve(xw.size() + yw.size());
            w.letters.insert(w.letters.end(), xw.letters.begin(), xw.letters.end());
            w.letters.insert(w.letters.end(), yw.letters.begin(), yw.letters.end());
            Scalar c = xc * yc;
            if (yw.hdeg == 1 && left_odd)
                c = -c;
            out.add_term(std::move(w), std::move(c));
        }
    }
    return out;
}

ParityClass parity_of(const Element& x)
{
    std::optional<Parity> seen;
    for (const auto& [w, c] : x.terms()) {
        const Parity p = parity_of(*x.table(), w);
        if (seen && *seen != p)
            return ParityClass::Mixed;
        seen = p;
    }
    return seen && is_odd(*seen) ? ParityClass::Odd : ParityClass::Even;
}

std::string to_string(const GeneratorTable& table, const Word& w, NameStyle style)
{
    std::string out;
    const char* sep = style == NameStyle::Ascii ? "*" : "·";
    if (w.hdeg == 1)
        out += "h";
    for (Letter l : w.letters) {
        if (!out.empty())
            out += sep;
        out += style == NameStyle::Ascii ? table[l].name : table[l].display;
    }
    return out.empty() ? "1" : out;
}

std::string to_string(const Element& x, NameStyle style)
{
    if (x.is_zero())
        return "0";
    const char* sep = style == NameStyle::Ascii ? "*" : "·";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : x.terms()) {
        Scalar coeff = c;
        bool negative = false;
        if (coeff.is_atomic() && coeff.numerator().leading() < 0) {
            negative = true;
            coeff = -coeff;
        }
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        const bool bare_word = !w.empty() || w.hdeg == 1;
        if (coeff.is_one() && bare_word) {
            out += to_string(*x.table(), w, style);
            continue;
        }
        std::string cs = coeff.to_string();
        if (!coeff.is_atomic() && coeff.denominator().is_constant())
            cs = "(" + cs + ")";
        out += cs;
        if (bare_word)
            out += sep + to_string(*x.table(), w, style);
    }
    return out;
}

}  // namespace qsg
