#include "qsg/tensor.hpp"

namespace qsg {

std::strong_ordering operator<=>(const TensorWord& x, const TensorWord& y)
{
    if (auto c = x.hdeg <=> y.hdeg; c != 0)
        return c;
    return x.slots <=> y.slots;
}

Parity parity_of(const GeneratorTable& table, const TensorWord& w)
{
    Parity p = w.hdeg ? Parity::Odd : Parity::Even;
    for (const auto& s : w.slots)
        p += parity_of_letters(table, s);
    return p;
}

Tensor Tensor::one(TablePtr table, std::size_t arity)
{
    Tensor t(std::move(table), arity);
    t.add_term(TensorWord{0, std::vector<std::vector<Letter>>(arity)}, Scalar(1));
    return t;
}

Tensor Tensor::embed(const Element& x, std::size_t slot, std::size_t arity)
{
    if (slot >= arity)
        throw ValidationError("tensor slot " + std::to_string(slot) + " out of range");
    Tensor t(x.table(), arity);
    for (const auto& [w, c] : x.terms()) {
        TensorWord tw{w.hdeg, std::vector<std::vector<Letter>>(arity)};
        tw.slots[slot] = w.letters;
        t.add_term(tw, c);
    }
    return t;
}

Tensor Tensor::pure(const std::vector<Element>& factors)
{
    if (factors.empty())
        throw ValidationError("empty tensor product");
    const std::size_t n = factors.size();
    Tensor acc = one(factors.front().table(), n);
    for (std::size_t i = 0; i < n; ++i)
        acc = acc * embed(factors[i], i, n);
    return acc;
}

void Tensor::add_term(const TensorWord& w, const Scalar& c)
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

void Tensor::check_compatible(const Tensor& other) const
{
    if (table_ != other.table_ && table_ && other.table_)
        throw TableMismatch();
    if (arity_ != other.arity_)
        throw ValidationError("tensor arity mismatch: " + std::to_string(arity_) + " vs " +
                              std::to_string(other.arity_));
}

Tensor Tensor::operator-() const
{
    Tensor out = *this;
    for (auto& [w, c] : out.terms_)
        c = -c;
    return out;
}

Tensor& Tensor::operator+=(const Tensor& other)
{
    check_compatible(other);
    if (!table_)
        table_ = other.table_;
    for (const auto& [w, c] : other.terms_)
        add_term(w, c);
    return *this;
}

Tensor& Tensor::operator-=(const Tensor& other)
{
    check_compatible(other);
    if (!table_)
        table_ = other.table_;
    for (const auto& [w, c] : other.terms_)
        add_term(w, -c);
    return *this;
}

Tensor& Tensor::operator*=(const Scalar& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_)
        v *= c;
    return *this;
}

Tensor operator*(const Tensor& x, const Tensor& y)
{
    x.check_compatible(y);
    Tensor out(x.table_ ? x.table_ : y.table_, x.arity_);
    const auto& table = *out.table_;
    const std::size_t n = x.arity_;
    for (const auto& [xw, xc] : x.terms_) {
        std::vector<Parity> xp(n);
        Parity total = Parity::Even;
        for (std::size_t i = 0; i < n; ++i) {
            xp[i] = parity_of_letters(table, xw.slots[i]);
            total += xp[i];
        }
        for (const auto& [yw, yc] : y.terms_) {
            if (xw.hdeg + yw.hdeg > 1)
                continue;
            int sign = (yw.hdeg && is_odd(total)) ? -1 : 1;
            // Slot j of y crosses slots j+1.. of x.
            Parity after = Parity::Even;
            for (std::size_t j = n; j-- > 0;) {
                if (is_odd(after) && is_odd(parity_of_letters(table, yw.slots[j])))
                    sign = -sign;
                after += xp[j];
            }
            TensorWord w{static_cast<std::uint8_t>(xw.hdeg + yw.hdeg), xw.slots};
            for (std::size_t j = 0; j < n; ++j)
                w.slots[j].insert(w.slots[j].end(), yw.slots[j].begin(), yw.slots[j].end());
            Scalar c = xc * yc;
            if (sign < 0)
                c = -c;
            out.add_term(w, c);
        }
    }
    return out;
}

bool operator==(const Tensor& x, const Tensor& y)
{
    return x.arity_ == y.arity_ && x.terms_ == y.terms_;
}

Element Tensor::to_element() const
{
    if (arity_ > 1)
        throw ValidationError("tensor of arity " + std::to_string(arity_) + " is not an element");
    Element out(table_);
    for (const auto& [w, c] : terms_)
        out.add_term(Word(w.hdeg, arity_ ? w.slots[0] : std::vector<Letter>{}), c);
    return out;
}

Tensor normalize(const Tensor& t, const SlotRules& rules)
{
    if (rules.size() != t.arity())
        throw ValidationError("one rule set per tensor slot is required");
    Tensor out(t.table(), t.arity());
    for (const auto& [w, c] : t.terms()) {
        Tensor term = Tensor::one(t.table(), t.arity());
        if (w.hdeg)
            term = Tensor::embed(Element::h(t.table()), 0, t.arity());
        for (std::size_t i = 0; i < t.arity(); ++i) {
            if (w.slots[i].empty())
                continue;
            const Element slot = normalize(Element::word(t.table(), Word(0, w.slots[i])), *rules[i]);
            term = term * Tensor::embed(slot, i, t.arity());
            if (term.is_zero())
                break;
        }
        out += term * c;
    }
    return out;
}

Tensor apply_slot(const Tensor& t, std::size_t slot, std::size_t out_arity, const WordMap& map, bool odd,
                  int h_sign)
{
    if (slot >= t.arity())
        throw ValidationError("tensor slot " + std::to_string(slot) + " out of range");
    const std::size_t n = t.arity() - 1 + out_arity;
    const auto& table = *t.table();
    Tensor out(t.table(), n);
    for (const auto& [w, c] : t.terms()) {
        const Tensor image = map(w.slots[slot]);
        if (image.is_zero())
            continue;
        int sign = 1;
        if (odd) {
            Parity left = w.hdeg ? Parity::Odd : Parity::Even;
            for (std::size_t i = 0; i < slot; ++i)
                left += parity_of_letters(table, w.slots[i]);
            if (is_odd(left))
                sign = -sign;
        }
        if (!odd && w.hdeg && h_sign < 0)
            sign = -sign;
        // Left slots, then the image, then right slots; the image's own h
        // crosses the left slots.
        Tensor term = Tensor::one(t.table(), n);
        if (w.hdeg)
            term = Tensor::embed(Element::h(t.table()), 0, n);
        std::size_t pos = 0;
        for (std::size_t i = 0; i < slot; ++i, ++pos)
            term = term * Tensor::embed(Element::word(t.table(), Word(0, w.slots[i])), pos, n);
        Tensor widened(t.table(), n);
        for (const auto& [iw, ic] : image.terms()) {
            TensorWord tw{iw.hdeg, std::vector<std::vector<Letter>>(n)};
            for (std::size_t k = 0; k < out_arity; ++k)
                tw.slots[pos + k] = iw.slots[k];
            widened.add_term(tw, ic);
        }
        term = term * widened;
        pos += out_arity;
        for (std::size_t i = slot + 1; i < t.arity(); ++i, ++pos)
            term = term * Tensor::embed(Element::word(t.table(), Word(0, w.slots[i])), pos, n);
        out += term * Scalar(sign) * c;
    }
    return out;
}

Tensor contract(const Tensor& t, std::size_t slot)
{
    if (slot + 1 >= t.arity())
        throw ValidationError("cannot multiply tensor slots " + std::to_string(slot) + " and " +
                              std::to_string(slot + 1));
    Tensor out(t.table(), t.arity() - 1);
    for (const auto& [w, c] : t.terms()) {
        TensorWord tw{w.hdeg, {}};
        for (std::size_t i = 0; i < t.arity(); ++i) {
            if (i == slot + 1) {
                tw.slots.back().insert(tw.slots.back().end(), w.slots[i].begin(), w.slots[i].end());
                continue;
            }
            tw.slots.push_back(w.slots[i]);
        }
        out.add_term(tw, c);
    }
    return out;
}

Tensor series_inverse(const Tensor& x, const Tensor& x_inv, const Tensor& n, const SlotRules& rules)
{
    const Tensor step = normalize(-(n * x_inv), rules);
    Tensor power = Tensor::one(x.table(), x.arity());
    Tensor sum = power;
    for (int k = 1; k <= 16; ++k) {
        power = normalize(power * step, rules);
        if (power.is_zero())
            break;
        if (k == 16)
            throw NotInvertible("perturbation is not nilpotent within 16 steps", to_string(power));
        sum += power;
    }
    Tensor inv = normalize(x_inv * sum, rules);
    const Tensor one = Tensor::one(x.table(), x.arity());
    const Tensor left = normalize((x + n) * inv, rules) - one;
    if (!left.is_zero())
        throw NotInvertible("right inverse check failed", to_string(left));
    const Tensor right = normalize(inv * (x + n), rules) - one;
    if (!right.is_zero())
        throw NotInvertible("left inverse check failed", to_string(right));
    return inv;
}

std::string to_string(const Tensor& t, NameStyle style)
{
    if (t.is_zero())
        return "0";
    const char* sep = style == NameStyle::Ascii ? "*" : "·";
    const char* otimes = style == NameStyle::Ascii ? " (x) " : " ⊗ ";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : t.terms()) {
        Scalar coeff = c;
        bool negative = false;
        if (coeff.is_atomic() && coeff.numerator().leading() < 0) {
            negative = true;
            coeff = -coeff;
        }
        out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
        first = false;
        std::string body;
        for (std::size_t i = 0; i < w.slots.size(); ++i) {
            if (i)
                body += otimes;
            body += w.slots[i].empty() ? "1" : to_string(*t.table(), Word(0, w.slots[i]), style);
        }
        if (w.slots.size() > 1)
            body = "(" + body + ")";
        std::string prefix;
        if (!coeff.is_one()) {
            prefix = coeff.to_string();
            if (!coeff.is_atomic() && coeff.denominator().is_constant())
                prefix = "(" + prefix + ")";
            prefix += sep;
        }
        if (w.hdeg)
            prefix += std::string("h") + sep;
        if (body.empty())
            body = "1";
        if (w.slots.empty() && !prefix.empty()) {
            // scalar line: drop the trailing "*1"
            out += prefix.substr(0, prefix.size() - std::string(sep).size());
            continue;
        }
        out += prefix + body;
    }
    return out;
}

}  // namespace qsg
