#pragma once

#include <variant>

#include "modlie/families.hpp"

namespace modlie {

// coefficient of the given parameter monomial in the Jacobi cyclic sum of the
// family bracket, restricted to the contributions of nonconstant terms (the
// base-bracket pairings contribute d of the monomial's own term and are the
// unknowns of the prolongation step)
Cochain<FE> mc_obstruction(const DeformationFamily& family, const std::vector<int>& monomial);

struct ObstructionStep {
    std::vector<int> monomial;
    Cochain<FE> obstruction{3, Module::adjoint};
    bool resolved = false;
    Cochain<FE> term{2, Module::adjoint};  // the new family term when resolved
    LinearSystemCertificate certificate;
};

struct McResult {
    bool success = false;
    DeformationFamily family;
    std::vector<ObstructionStep> steps;
    std::string failure;  // human-readable reason when !success
};

// degree-by-degree Maurer-Cartan integration: starts from one cocycle per
// parameter axis and solves d c_mu = -(obstruction at mu) in graded
// lexicographic order, free variables pinned to zero.  Ends with a full
// parametric Jacobi check.
McResult mc_integrate(const LieAlgebra<FE>& g, const std::vector<Cochain<FE>>& cocycles,
                      int max_total_degree);

// all exponent vectors over nvars with the given total degree, graded-lex
// order (t1 before t2 ...)
std::vector<std::vector<int>> monomials_of_degree(int nvars, int degree);

}  // namespace modlie
