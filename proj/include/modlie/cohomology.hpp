#pragma once

#include <memory>
#include <optional>
#include <variant>

#include "modlie/cochain.hpp"
#include "modlie/linalg.hpp"

namespace modlie {

// coordinates on C^q(g; g): pairs (wedge tuple, module index), wedge tuples
// enumerated in lexicographic order
class ComplexBasis {
public:
    ComplexBasis(const LieAlgebra<FE>& g, int q, Module module);

    int dim() const { return int(tuples_.size()) * mod_dim_; }
    int n_tuples() const { return int(tuples_.size()); }
    const std::vector<int>& tuple(int t) const { return tuples_[t]; }
    int tuple_index(const std::vector<int>& w) const;

    std::vector<uint8_t> to_vec(const Cochain<FE>& c) const;
    Cochain<FE> from_vec(const std::vector<uint8_t>& v) const;

    int q() const { return q_; }
    Module module() const { return module_; }

private:
    int q_, mod_dim_;
    Module module_;
    const Field* F_;
    std::vector<std::vector<int>> tuples_;
    std::map<std::vector<int>, int> index_;
};

// matrix of d: C^q -> C^{q+1} in the coordinates above (rows = target)
FMatrix differential_matrix(const LieAlgebra<FE>& g, int q, Module module = Module::adjoint);

// dim H^q(g; g) with adjoint coefficients, by exact elimination
int h_dim(const LieAlgebra<FE>& g, int q, Module module = Module::adjoint);

struct LinearSystemCertificate {
    int rows = 0, cols = 0, rank = 0;
    bool feasible = false;
    std::vector<uint8_t> solution;  // coordinates when feasible
    std::vector<uint8_t> witness;   // left functional when infeasible
};

// reusable solver for d alpha = w against a fixed degree
class CoboundarySolver {
public:
    CoboundarySolver(const LieAlgebra<FE>& g, int q, Module module = Module::adjoint);

    // w must be a (q+1)-cochain; returns alpha with d alpha = w, or the
    // infeasibility certificate (free variables pinned to zero)
    std::variant<Cochain<FE>, LinearSystemCertificate> solve(const Cochain<FE>& w) const;
    const ComplexBasis& domain() const { return dom_; }
    const ComplexBasis& codomain() const { return cod_; }
    const FMatrix& matrix() const { return A_; }
    int rank() const { return ech_->rank(); }

private:
    ComplexBasis dom_, cod_;
    FMatrix A_;
    std::unique_ptr<Echelon> ech_;
};

std::variant<Cochain<FE>, LinearSystemCertificate>
solve_coboundary(const LieAlgebra<FE>& g, const Cochain<FE>& w, Module module = Module::adjoint);

// are the two cocycles in the same class? throws if an input is not closed
bool cohomologous(const LieAlgebra<FE>& g, const Cochain<FE>& c1, const Cochain<FE>& c2);

// rank of a set of cocycles in H^q = Z^q / B^q: joint span with the
// coboundaries minus the coboundary rank
int rank_in_h(const LieAlgebra<FE>& g, const std::vector<Cochain<FE>>& cocycles, int q);

}  // namespace modlie
