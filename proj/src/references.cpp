#include "qsg/references.hpp"

#include "qsg/errors.hpp"

#include <map>

namespace qsg {

namespace {

const std::map<std::string, std::string, std::less<>>& table()
{
    static const std::map<std::string, std::string, std::less<>> refs = {
        // Hopf structure of the matrix entries
        {"hopf.coassociativity", "Eq. 9a"},
        {"hopf.counit", "Eq. 9b"},
        {"hopf.antipode", "Eq. 9c"},
        {"hopf.coproduct-preserves", "Eqs. 4, 6"},
        {"hopf.counit-preserves", "Eqs. 4, 7"},
        {"hopf.antipode-preserves", "Eqs. 4, 8"},
        {"hopf.coproduct-grouplike", "Eqs. 5, 6"},
        {"hopf.antipode-inverse", "Eqs. 5, 8"},
        {"hopf.derivatives.coassociativity", "Eq. 54"},
        {"hopf.derivatives.counit", "Eq. 54"},
        {"hopf.derivatives.antipode", "Eq. 54"},
        {"hopf.derivatives.not-invariant", "Eqs. 52, 54"},
        {"hopf.derivatives.coproduct-preserves", "Eqs. 53, 54"},
        // Coactions and the extended maps
        {"coaction.right-coassociative", "Eq. 20"},
        {"coaction.right-counit", "Eq. 20"},
        {"coaction.left-coassociative", "Eq. 22"},
        {"coaction.left-counit", "Eq. 22"},
        {"coaction.bicomodule", "Eq. 26"},
        {"coaction.hat-coproduct-formula", "Eqs. 23, 25"},
        {"coaction.hat-coassociative", "Eq. 25"},
        {"coaction.hat-counit", "Eq. 30"},
        {"coaction.hat-antipode", "Eqs. 25, 35"},
        {"coaction.d-left-comodule", "Eq. 27"},
        {"coaction.d-right-comodule", "Eq. 27"},
        {"coaction.antipode-commutes-with-d", "Eqs. 32, 35"},
        {"coaction.right-preserves", "Eqs. 15, 16, 19"},
        {"coaction.left-preserves", "Eqs. 15, 16, 21"},
        {"coaction.hat-coproduct-preserves", "Eqs. 15, 16, 25"},
        {"coaction.hat-counit-preserves", "Eqs. 15, 16, 31"},
        {"coaction.hat-antipode-preserves", "Eqs. 15, 16, 34"},
        // Presentations
        {"confluence", "Sec. III.A"},
        {"classical.confluence", "Sec. V"},
        {"classical.commutes", "Sec. V"},
        {"centrality.D_h", "Sec. II; Sec. III.A; Sec. III.C"},
        {"centrality.Dhat", "Eq. 17; Sec. III.C"},
        {"centrality.D_h-inverse", "Eq. 5"},
        {"identity.T-inverse", "Eq. 8"},
        {"identity.sl-degeneration", "Sec. II"},
        // Calculus
        {"calculus.d-squared", "Eq. 11a"},
        {"calculus.leibniz", "Eq. 11b"},
        {"calculus.d-h", "Eq. 11c"},
        {"calculus.d-glh", "Eqs. 4, 11, 15"},
        {"calculus.d-mixed", "Eqs. 11, 15, 16"},
        {"calculus.d-expansion", "Eqs. 51, 55"},
        {"maurer.parity", "Eq. 37"},
        {"maurer.cartan", "Eq. 43"},
        {"maurer.cartan-corrected", "Eqs. 36, 43"},
        {"maurer.equation", "Eq. 47"},
        {"maurer.matrix", "Eq. 46"},
        {"maurer.sigma3", "Eq. 46"},
        {"superalgebra.corrected", "Eqs. 48, 56"},
        {"superalgebra.act", "Eqs. 48, 50, 56"},
        {"derivatives.act", "Eqs. 50, 51"},
        // R-matrix
        {"rmatrix.unipotent", "Sec. III.C"},
        {"rmatrix.inverse", "Sec. III.C"},
        {"rmatrix.parity", "Sec. III.C"},
        {"rmatrix.rtt", "Sec. III.C; Eq. 4"},
        {"rmatrix.rtt-span", "Sec. III.C; Eq. 4"},
        {"rmatrix.rtt-mutation", "Sec. III.C"},
        {"rmatrix.compact", "Sec. III.C"},
        {"rmatrix.convention", "Sec. III.C"},
        {"rmatrix.ybe", "Sec. III.C"},
        // Contraction
        {"contraction.entries", "Eq. 2"},
        {"contraction.relation", "Eqs. 1-4"},
        {"contraction.superdeterminant", "Eqs. 2, 5"},
        {"contraction.differentials", "Eq. 14"},
        {"contraction.limit", "Eqs. 1-4"},
        // Superplane
        {"superplane.classical", "Sec. V"},
    };
    return refs;
}

}  // namespace

const std::string& paper_ref(std::string_view key)
{
    const auto& t = table();
    auto it = t.find(key);
    if (it == t.end())
        throw ValidationError("no source reference registered for '" + std::string(key) + "'");
    return it->second;
}

std::vector<std::string> paper_ref_keys()
{
    std::vector<std::string> out;
    for (const auto& [k, v] : table())
        out.push_back(k);
    return out;
}

}  // namespace qsg
