#include "qsg/rmatrix.hpp"

#include "qsg/calculus.hpp"
#include "qsg/errors.hpp"
#include "qsg/presentations.hpp"
#include "qsg/references.hpp"

namespace qsg {

AlgebraMatrix::AlgebraMatrix(std::size_t rows, std::size_t cols, TablePtr table)
    : rows_(rows), cols_(cols), table_(std::move(table)), entries_(rows * cols, Element::zero(table_))
{
}

AlgebraMatrix AlgebraMatrix::identity(std::size_t n, TablePtr table)
{
    AlgebraMatrix m(n, n, table);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = Element::one(table);
    return m;
}

AlgebraMatrix AlgebraMatrix::from_rows(std::vector<std::vector<Element>> rows)
{
    if (rows.empty() || rows.front().empty())
        throw ValidationError("matrix needs at least one entry");
    AlgebraMatrix m(rows.size(), rows.front().size(), rows.front().front().table());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_)
            throw ValidationError("ragged matrix rows");
        for (std::size_t j = 0; j < m.cols_; ++j)
            m.at(i, j) = std::move(rows[i][j]);
    }
    return m;
}

AlgebraMatrix AlgebraMatrix::map(const std::function<Element(const Element&)>& f) const
{
    AlgebraMatrix out(rows_, cols_, table_);
    for (std::size_t k = 0; k < entries_.size(); ++k)
        out.entries_[k] = f(entries_[k]);
    return out;
}

bool AlgebraMatrix::is_zero() const
{
    for (const auto& e : entries_)
        if (!e.is_zero())
            return false;
    return true;
}

namespace {

void check_shape(const AlgebraMatrix& x, const AlgebraMatrix& y)
{
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw ValidationError("matrix shape mismatch");
}

}  // namespace

AlgebraMatrix operator+(const AlgebraMatrix& x, const AlgebraMatrix& y)
{
    check_shape(x, y);
    AlgebraMatrix out = x;
    for (std::size_t k = 0; k < out.entries_.size(); ++k)
        out.entries_[k] += y.entries_[k];
    return out;
}

AlgebraMatrix operator-(const AlgebraMatrix& x, const AlgebraMatrix& y)
{
    check_shape(x, y);
    AlgebraMatrix out = x;
    for (std::size_t k = 0; k < out.entries_.size(); ++k)
        out.entries_[k] -= y.entries_[k];
    return out;
}

AlgebraMatrix operator*(const AlgebraMatrix& x, const Scalar& c)
{
    return x.map([&](const Element& e) { return e * c; });
}

AlgebraMatrix operator*(const AlgebraMatrix& x, const AlgebraMatrix& y)
{
    if (x.cols() != y.rows())
        throw ValidationError("matrix shapes do not conform");
    AlgebraMatrix out(x.rows(), y.cols(), x.table());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < y.cols(); ++j)
            for (std::size_t k = 0; k < x.cols(); ++k) {
                const Element& l = x.at(i, k);
                const Element& r = y.at(k, j);
                if (!l.is_zero() && !r.is_zero())
                    out.at(i, j) += l * r;
            }
    return out;
}

AlgebraMatrix normalize(const AlgebraMatrix& x, const RuleSet& rs)
{
    return x.map([&](const Element& e) { return normalize(e, rs); });
}

Parity index_parity(std::size_t index)
{
    return __builtin_popcountll(index) % 2 ? Parity::Odd : Parity::Even;
}

namespace {

// Parity of a nonzero homogeneous entry.
Parity entry_parity(const Element& e)
{
    switch (parity_of(e)) {
    case ParityClass::Even:
        return Parity::Even;
    case ParityClass::Odd:
        return Parity::Odd;
    case ParityClass::Mixed:
        break;
    }
    throw ValidationError("matrix entry '" + to_string(e) + "' is not homogeneous");
}

std::size_t log2_exact(std::size_t n)
{
    std::size_t w = 0;
    while ((std::size_t{1} << w) < n)
        ++w;
    if ((std::size_t{1} << w) != n)
        throw ValidationError("matrix dimension " + std::to_string(n) + " is not a power of two");
    return w;
}

Element gen(std::string_view name)
{
    return Element::generator(universal_table(), name);
}

AlgebraMatrix square(std::initializer_list<const char*> names)
{
    std::vector<const char*> n(names);
    return AlgebraMatrix::from_rows({{gen(n[0]), gen(n[1])}, {gen(n[2]), gen(n[3])}});
}

}  // namespace

void validate_grading(const AlgebraMatrix& x, Parity degree)
{
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) {
            const Element& e = x.at(i, j);
            if (e.is_zero())
                continue;
            if (entry_parity(e) != index_parity(i) + index_parity(j) + degree)
                throw ValidationError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " +
                                      to_string(e) + " has the wrong parity");
        }
}

AlgebraMatrix prime(const AlgebraMatrix& x)
{
    return x.map([](const Element& e) {
        if (e.is_zero() || !is_odd(entry_parity(e)))
            return e;
        return -e;
    });
}

std::string_view to_string(LegConvention c)
{
    switch (c) {
    case LegConvention::Plain:
        return "plain";
    case LegConvention::LeftEntry:
        return "koszul-left/entry";
    case LegConvention::LeftIndex:
        return "koszul-left/index";
    case LegConvention::RightEntry:
        return "koszul-right/entry";
    case LegConvention::RightIndex:
        return "koszul-right/index";
    case LegConvention::BothEntry:
        return "koszul-both/entry";
    case LegConvention::BothIndex:
        return "koszul-both/index";
    }
    return "plain";
}

const std::vector<LegConvention>& leg_conventions()
{
    using C = LegConvention;
    static const std::vector<C> all = {C::Plain,      C::LeftEntry, C::LeftIndex, C::RightEntry,
                                       C::RightIndex, C::BothEntry, C::BothIndex};
    return all;
}

AlgebraMatrix embed(const AlgebraMatrix& x, std::size_t slot, std::size_t total_slots, LegConvention c)
{
    using C = LegConvention;
    if (x.rows() != x.cols())
        throw ValidationError("only square matrices can be placed on tensor legs");
    const std::size_t width = log2_exact(x.rows());
    if (slot + width > total_slots)
        throw ValidationError("leg does not fit in the tensor space");
    const std::size_t dim = std::size_t{1} << total_slots;
    const std::size_t low = total_slots - slot - width;  // bits to the right of the window
    const std::size_t mask = ((std::size_t{1} << width) - 1) << low;
    const bool left_sign = c == C::LeftEntry || c == C::LeftIndex || c == C::BothEntry || c == C::BothIndex;
    const bool right_sign = c == C::RightEntry || c == C::RightIndex || c == C::BothEntry || c == C::BothIndex;
    const bool by_index = c == C::LeftIndex || c == C::RightIndex || c == C::BothIndex;
    AlgebraMatrix out(dim, dim, x.table());
    for (std::size_t I = 0; I < dim; ++I)
        for (std::size_t J = 0; J < dim; ++J) {
            if ((I & ~mask) != (J & ~mask))
                continue;
            const std::size_t i = (I & mask) >> low, j = (J & mask) >> low;
            const Element& e = x.at(i, j);
            if (e.is_zero())
                continue;
            Parity outer = Parity::Even;
            if (left_sign)
                outer += index_parity(I >> (low + width));
            if (right_sign)
                outer += index_parity(I & ((std::size_t{1} << low) - 1));
            const Parity p = by_index ? index_parity(i) + index_parity(j) : entry_parity(e);
            out.at(I, J) = is_odd(p) && is_odd(outer) ? -e : e;
        }
    return out;
}

AlgebraMatrix t_matrix()
{
    return square({"a", "beta", "gamma", "d"});
}

AlgebraMatrix dt_matrix()
{
    return square({"alpha", "b", "c", "delta"});
}

AlgebraMatrix omega_matrix()
{
    return square({"w1", "u", "v", "w2"});
}

AlgebraMatrix r_matrix()
{
    const auto t = universal_table();
    const Element one = Element::one(t);
    const Element h = Element::h(t);
    const Element z = Element::zero(t);
    return AlgebraMatrix::from_rows({
        {one, z, z, z},
        {-h, one, z, z},
        {h, z, one, z},
        {z, h, h, one},
    });
}

namespace {

AlgebraMatrix unipotent_inverse(const AlgebraMatrix& r)
{
    const AlgebraMatrix id = AlgebraMatrix::identity(r.rows(), r.table());
    AlgebraMatrix inv = id * Scalar(2) - r;
    if (!(r * inv - id).is_zero() || !(inv * r - id).is_zero())
        throw NotInvertible("2I - R is not an inverse of R", "(R - I)^2 != 0");
    return inv;
}

AlgebraMatrix d_entries(const AlgebraMatrix& x)
{
    return x.map([](const Element& e) { return differentiate_free(e); });
}

}  // namespace

AlgebraMatrix r_inverse()
{
    return unipotent_inverse(r_matrix());
}

const std::vector<MatrixIdentity>& matrix_identities()
{
    using C = LegConvention;
    static const std::vector<MatrixIdentity> ids = {
        {"rtt", "glh",
         [](C c, const AlgebraMatrix& r) {
             const AlgebraMatrix t1 = leg1(t_matrix(), c), t2 = leg2(t_matrix(), c);
             return r * t1 * t2 - t2 * t1 * r;
         }},
        {"compact1", "gamma",
         [](C c, const AlgebraMatrix& r) {
             const AlgebraMatrix t1 = leg1(t_matrix(), c);
             const AlgebraMatrix dt2 = d_entries(leg2(t_matrix(), c));
             return prime(t1) * dt2 - unipotent_inverse(r) * dt2 * t1 * r;
         }},
        {"compact2", "gamma",
         [](C c, const AlgebraMatrix& r) {
             const AlgebraMatrix dt1 = d_entries(leg1(t_matrix(), c));
             const AlgebraMatrix dt1p = d_entries(prime(leg1(t_matrix(), c)));
             const AlgebraMatrix dt2 = d_entries(leg2(t_matrix(), c));
             return dt1p * dt2 - r * prime(dt2) * dt1 * r;
         }},
        {"compact3", "oneforms",
         [](C c, const AlgebraMatrix& r) {
             const AlgebraMatrix t1 = leg1(t_matrix(), c);
             const AlgebraMatrix o2 = leg2(omega_matrix(), c);
             return prime(t1) * o2 - unipotent_inverse(r) * o2 * r * t1;
         }},
        {"compact4", "oneforms",
         [](C c, const AlgebraMatrix& r) {
             const AlgebraMatrix dt1 = d_entries(leg1(t_matrix(), c));
             const AlgebraMatrix dt1p = d_entries(prime(leg1(t_matrix(), c)));
             const AlgebraMatrix o2 = leg2(omega_matrix(), c);
             return dt1p * o2 - r * prime(o2) * r * dt1;
         }},
        {"compact5", "oneforms",
         [](C c, const AlgebraMatrix& r) {
             const AlgebraMatrix o1 = leg1(omega_matrix(), c);
             const AlgebraMatrix o2 = leg2(omega_matrix(), c);
             return prime(o1) * unipotent_inverse(r) * o2 * r + r * prime(o2) * r * o1;
         }},
    };
    return ids;
}

namespace {

std::size_t nonzero_entries(const AlgebraMatrix& m)
{
    std::size_t n = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            n += m.at(i, j).is_zero() ? 0 : 1;
    return n;
}

}  // namespace

const std::vector<ConventionResult>& convention_survey()
{
    static const std::vector<ConventionResult> survey = [] {
        std::vector<ConventionResult> out;
        const AlgebraMatrix r = r_matrix();
        for (LegConvention c : leg_conventions()) {
            ConventionResult res{c, 0, {}};
            for (const auto& id : matrix_identities()) {
                const std::size_t bad = nonzero_entries(normalize(id.residual(c, r), presentation(id.presentation)));
                res.failing_entries += bad;
                if (bad)
                    res.failing_identities.push_back(id.name);
            }
            out.push_back(std::move(res));
        }
        return out;
    }();
    return survey;
}

std::optional<LegConvention> selected_convention()
{
    std::optional<LegConvention> found;
    for (const auto& r : convention_survey())
        if (r.failing_entries == 0) {
            if (found)
                return std::nullopt;
            found = r.convention;
        }
    return found;
}

namespace {

std::string entry_label(std::size_t i, std::size_t j)
{
    return std::to_string(i + 1) + std::to_string(j + 1);
}

// Convention used for the entrywise checks: the unique passing one, or the
// standard Koszul rule when the survey is not decisive.
LegConvention working_convention()
{
    return selected_convention().value_or(LegConvention::LeftEntry);
}

std::string survey_text()
{
    std::string s;
    for (const auto& r : convention_survey()) {
        if (!s.empty())
            s += "; ";
        s += std::string(to_string(r.convention)) + ": " + std::to_string(r.failing_entries) + " failing entries";
        if (!r.failing_identities.empty()) {
            s += " (";
            for (std::size_t k = 0; k < r.failing_identities.size(); ++k)
                s += (k ? ", " : "") + r.failing_identities[k];
            s += ")";
        }
    }
    return s;
}

// Matches an unnormalized RTT entry against the glh lines modulo the
// classical (h-free) rules.
std::string match_glh_line(const Element& entry)
{
    const RuleSet classical = build_glh().classical();
    if (normalize(entry, classical).is_zero())
        return "trivial";
    static const Scalar kFactors[] = {Scalar(1), Scalar(-1), Scalar(2), Scalar(-2), Scalar::rational(1, 2),
                                      Scalar::rational(-1, 2)};
    for (const auto& rel : relation_catalog("glh"))
        for (const Scalar& c : kFactors)
            if (normalize(entry - rel.element * c, classical).is_zero())
                return rel.name;
    return {};
}

// Yang-Baxter equation on three legs under the given convention.
AlgebraMatrix ybe_residual(LegConvention c)
{
    const auto t = universal_table();
    const AlgebraMatrix r = r_matrix();
    AlgebraMatrix flip(4, 4, t);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t k = 0; k < 2; ++k)
            flip.at(2 * i + k, 2 * k + i) =
                Element::one(t) * Scalar(is_odd(index_parity(i)) && is_odd(index_parity(k)) ? -1 : 1);
    const AlgebraMatrix r12 = embed(r, 0, 3, c);
    const AlgebraMatrix r23 = embed(r, 1, 3, c);
    const AlgebraMatrix p23 = embed(flip, 1, 3, c);
    const AlgebraMatrix r13 = p23 * r12 * p23;
    return r12 * r13 * r23 - r23 * r13 * r12;
}

}  // namespace

std::vector<Check> rmatrix_checks()
{
    std::vector<Check> out;
    const auto t = universal_table();
    out.push_back({"rmatrix.unipotent", paper_ref("rmatrix.unipotent"), [] {
                       const AlgebraMatrix n = r_matrix() - AlgebraMatrix::identity(4, universal_table());
                       const AlgebraMatrix sq = n * n;
                       return expect_true(sq.is_zero(), "(R - I)^2 computed over scalars with h");
                   }});
    out.push_back({"rmatrix.inverse", paper_ref("rmatrix.inverse"), [] {
                       const AlgebraMatrix id = AlgebraMatrix::identity(4, universal_table());
                       const AlgebraMatrix inv = AlgebraMatrix::identity(4, universal_table()) * Scalar(2) - r_matrix();
                       const bool ok = (r_matrix() * inv - id).is_zero() && (inv * r_matrix() - id).is_zero();
                       return expect_true(ok, "R (2I - R) = (2I - R) R = I");
                   }});
    out.push_back({"rmatrix.parity", paper_ref("rmatrix.parity"), [] {
                       validate_grading(r_matrix(), Parity::Even);
                       validate_grading(t_matrix(), Parity::Even);
                       validate_grading(dt_matrix(), Parity::Odd);
                       validate_grading(omega_matrix(), Parity::Odd);
                       return expect_true(true, "R, T even; dT, Omega odd");
                   }});
    out.push_back({"rmatrix.convention", paper_ref("rmatrix.convention"), [] {
                       const auto sel = selected_convention();
                       std::string detail = survey_text();
                       if (sel)
                           detail = "selected " + std::string(to_string(*sel)) + "; " + detail;
                       else
                           detail = "no unique convention; " + detail;
                       return expect_true(sel.has_value(), detail);
                   }});

    for (const auto& id : matrix_identities()) {
        const std::string family = id.name == "rtt" ? "rmatrix.rtt" : "rmatrix.compact";
        const std::string prefix = id.name == "rtt" ? "rmatrix.rtt." : "rmatrix." + id.name + ".";
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                const MatrixIdentity* idp = &id;
                out.push_back({prefix + entry_label(i, j), paper_ref(family), [idp, i, j] {
                                   const AlgebraMatrix res = idp->residual(working_convention(), r_matrix());
                                   Outcome o = zero_under(res.at(i, j), presentation(idp->presentation));
                                   o.detail = "convention " + std::string(to_string(working_convention()));
                                   return o;
                               }});
            }
    }

    out.push_back({"rmatrix.rtt-mutation", paper_ref("rmatrix.rtt-mutation"), [t] {
                       AlgebraMatrix r = r_matrix();
                       r.at(3, 1) = Element::zero(t);
                       const AlgebraMatrix res =
                           normalize(matrix_identities().front().residual(working_convention(), r), build_glh());
                       for (std::size_t i = 0; i < 4; ++i)
                           for (std::size_t j = 0; j < 4; ++j)
                               if (!res.at(i, j).is_zero()) {
                                   Outcome o = expect_nonzero(res.at(i, j));
                                   o.detail = "R(4,2) set to 0; entry (" + std::to_string(i + 1) + "," +
                                              std::to_string(j + 1) + ") no longer vanishes";
                                   return o;
                               }
                       return expect_nonzero(Element::zero(universal_table()));
                   }});

    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            out.push_back({"rmatrix.rtt-span." + entry_label(i, j), paper_ref("rmatrix.rtt-span"),
                           [i, j] {
                               const AlgebraMatrix res =
                                   matrix_identities().front().residual(working_convention(), r_matrix());
                               const std::string m = match_glh_line(res.at(i, j));
                               if (m.empty())
                                   return expect_true(false, "no relation line matches this entry",
                                                      to_string(normalize(res.at(i, j), build_glh().classical())));
                               return expect_true(true, m == "trivial" ? "vanishes classically" : "matches " + m);
                           },
                           true});

    out.push_back({"rmatrix.ybe", paper_ref("rmatrix.ybe"),
                   [] {
                       const AlgebraMatrix m = ybe_residual(working_convention());
                       Element first = Element::zero(universal_table());
                       for (std::size_t i = 0; i < m.rows() && first.is_zero(); ++i)
                           for (std::size_t j = 0; j < m.cols() && first.is_zero(); ++j)
                               first = m.at(i, j);
                       Outcome o = expect_zero(first);
                       o.detail = "graded YBE on three legs, convention " + std::string(to_string(working_convention()));
                       return o;
                   },
                   true});
    return out;
}

}  // namespace qsg
