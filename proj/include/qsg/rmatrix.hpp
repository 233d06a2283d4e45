#pragma once

#include "qsg/report.hpp"
#include "qsg/rewrite.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qsg {

/// Dense matrix with algebra entries. Index parities follow the (1|1)
/// grading: index 0 even, index 1 odd; a 2^n-dimensional index is read as n
/// binary digits and its parity is their sum.
class AlgebraMatrix {
public:
    AlgebraMatrix(std::size_t rows, std::size_t cols, TablePtr table);

    static AlgebraMatrix identity(std::size_t n, TablePtr table);
    /// Throws ValidationError on ragged rows or an empty list.
    static AlgebraMatrix from_rows(std::vector<std::vector<Element>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const TablePtr& table() const { return table_; }
    Element& at(std::size_t i, std::size_t j) { return entries_.at(i * cols_ + j); }
    const Element& at(std::size_t i, std::size_t j) const { return entries_.at(i * cols_ + j); }

    AlgebraMatrix map(const std::function<Element(const Element&)>& f) const;
    bool is_zero() const;

    friend AlgebraMatrix operator+(const AlgebraMatrix& x, const AlgebraMatrix& y);
    friend AlgebraMatrix operator-(const AlgebraMatrix& x, const AlgebraMatrix& y);
    friend AlgebraMatrix operator*(const AlgebraMatrix& x, const Scalar& c);
    /// Entrywise free products; no signs are inserted (they live in the
    /// leg embeddings).
    friend AlgebraMatrix operator*(const AlgebraMatrix& x, const AlgebraMatrix& y);

private:
    std::size_t rows_;
    std::size_t cols_;
    TablePtr table_;
    std::vector<Element> entries_;
};

AlgebraMatrix normalize(const AlgebraMatrix& x, const RuleSet& rs);

Parity index_parity(std::size_t index);

/// Throws ValidationError unless every nonzero entry (i,j) is homogeneous of
/// parity p(i) + p(j) + degree.
void validate_grading(const AlgebraMatrix& x, Parity degree);

/// Entrywise (X')_{ij} = (-1)^{p(X_ij)} X_ij.
AlgebraMatrix prime(const AlgebraMatrix& x);

/// Candidate sign rules for placing a matrix on one tensor leg. An entry
/// picks up (-1)^{p * p(index)} for the basis indices on its left, on its
/// right, both, or neither (Plain). p is either the entry's own parity or
/// the parity p(row) + p(col) of its position in the matrix; the two agree
/// for even matrices (T, R) and differ by a sign pattern for dT and Omega.
enum class LegConvention { Plain, LeftEntry, LeftIndex, RightEntry, RightIndex, BothEntry, BothIndex };

std::string_view to_string(LegConvention c);
const std::vector<LegConvention>& leg_conventions();

/// Places a 2^width matrix on slots [slot, slot + width) of a 2^slots space.
AlgebraMatrix embed(const AlgebraMatrix& x, std::size_t slot, std::size_t total_slots, LegConvention c);
inline AlgebraMatrix leg1(const AlgebraMatrix& x, LegConvention c) { return embed(x, 0, 2, c); }
inline AlgebraMatrix leg2(const AlgebraMatrix& x, LegConvention c) { return embed(x, 1, 2, c); }

AlgebraMatrix t_matrix();      // (a beta; gamma d)
AlgebraMatrix dt_matrix();     // (alpha b; c delta)
AlgebraMatrix omega_matrix();  // (w1 u; v w2), one-form generators
AlgebraMatrix r_matrix();
/// 2I - R, verified against R on both sides; throws NotInvertible otherwise.
AlgebraMatrix r_inverse();

/// The six matrix identities as residual matrices (lhs - rhs, unnormalized)
/// with the presentation each is reduced in.
struct MatrixIdentity {
    std::string name;  // "rtt", "compact1" ... "compact5"
    std::string presentation;
    std::function<AlgebraMatrix(LegConvention, const AlgebraMatrix& r)> residual;
};
const std::vector<MatrixIdentity>& matrix_identities();

struct ConventionResult {
    LegConvention convention = LegConvention::Plain;
    std::size_t failing_entries = 0;
    std::vector<std::string> failing_identities;
};

/// Every candidate against all six identities. Cached.
const std::vector<ConventionResult>& convention_survey();

/// The unique candidate passing everything, if there is exactly one.
std::optional<LegConvention> selected_convention();

std::vector<Check> rmatrix_checks();

}  // namespace qsg
