#include "modlie/cohomology.hpp"

#include <sstream>

namespace modlie {

ComplexBasis::ComplexBasis(const LieAlgebra<FE>& g, int q, Module module)
    : q_(q), mod_dim_(module == Module::adjoint ? g.dim() : 1), module_(module),
      F_(&g.unit().field()) {
    int n = g.dim();
    if (q == 0) {
        tuples_.push_back({});
    } else if (q <= n) {
        std::vector<int> T(q);
        for (int i = 0; i < q; ++i) T[i] = i;
        while (true) {
            tuples_.push_back(T);
            int pos = q - 1;
            while (pos >= 0 && T[pos] == n - 1 - (q - 1 - pos)) --pos;
            if (pos < 0) break;
            ++T[pos];
            for (int i = pos + 1; i < q; ++i) T[i] = T[i - 1] + 1;
        }
    }
    for (size_t t = 0; t < tuples_.size(); ++t) index_[tuples_[t]] = int(t);
}

int ComplexBasis::tuple_index(const std::vector<int>& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) throw std::invalid_argument("ComplexBasis: unknown tuple");
    return it->second;
}

std::vector<uint8_t> ComplexBasis::to_vec(const Cochain<FE>& c) const {
    if (c.q() != q_ || c.module() != module_)
        throw std::invalid_argument("ComplexBasis::to_vec: shape mismatch");
    std::vector<uint8_t> v(dim(), 0);
    for (auto& [w, comp] : c.terms()) {
        int t = tuple_index(w);
        for (auto& [m, x] : comp) v[size_t(t) * mod_dim_ + m] = uint8_t(x.code());
    }
    return v;
}

Cochain<FE> ComplexBasis::from_vec(const std::vector<uint8_t>& v) const {
    if (int(v.size()) != dim()) throw std::invalid_argument("ComplexBasis::from_vec size");
    Cochain<FE> c(q_, module_);
    for (size_t i = 0; i < v.size(); ++i) {
        if (!v[i]) continue;
        int t = int(i) / mod_dim_, m = int(i) % mod_dim_;
        c.add_term(m, tuples_[t], FE(*F_, v[i]));
    }
    return c;
}

FMatrix differential_matrix(const LieAlgebra<FE>& g, int q, Module module) {
    ComplexBasis dom(g, q, module), cod(g, q + 1, module);
    FMatrix A(g.unit().field(), cod.dim(), dom.dim());
    for (int t = 0; t < dom.n_tuples(); ++t) {
        int mdim = module == Module::adjoint ? g.dim() : 1;
        for (int m = 0; m < mdim; ++m) {
            Cochain<FE> e(q, module);
            e.add_term(m, dom.tuple(t), g.scalar(1));
            Cochain<FE> de = differential(g, e);
            std::vector<uint8_t> col = cod.to_vec(de);
            int j = t * mdim + m;
            for (int r = 0; r < cod.dim(); ++r)
                if (col[r]) A.at(r, j) = col[r];
        }
    }
    return A;
}

int h_dim(const LieAlgebra<FE>& g, int q, Module module) {
    ComplexBasis cq(g, q, module);
    FMatrix dq = differential_matrix(g, q, module);
    int rank_dq = rank(dq);
    int rank_prev = 0;
    if (q >= 1) {
        FMatrix dprev = differential_matrix(g, q - 1, module);
        rank_prev = rank(dprev);
    }
    return cq.dim() - rank_dq - rank_prev;
}

CoboundarySolver::CoboundarySolver(const LieAlgebra<FE>& g, int q, Module module)
    : dom_(g, q, module), cod_(g, q + 1, module), A_(differential_matrix(g, q, module)) {
    ech_ = std::make_unique<Echelon>(A_);
}

std::variant<Cochain<FE>, LinearSystemCertificate>
CoboundarySolver::solve(const Cochain<FE>& w) const {
    std::vector<uint8_t> b = cod_.to_vec(w);
    LinearSystemCertificate cert;
    cert.rows = A_.rows();
    cert.cols = A_.cols();
    cert.rank = ech_->rank();
    std::vector<uint8_t> witness;
    auto x = ech_->solve(b, &witness);
    if (!x) {
        cert.feasible = false;
        cert.witness = std::move(witness);
        return cert;
    }
    return dom_.from_vec(*x);
}

std::variant<Cochain<FE>, LinearSystemCertificate>
solve_coboundary(const LieAlgebra<FE>& g, const Cochain<FE>& w, Module module) {
    CoboundarySolver s(g, w.q() - 1, module);
    return s.solve(w);
}

bool cohomologous(const LieAlgebra<FE>& g, const Cochain<FE>& c1, const Cochain<FE>& c2) {
    if (!is_cocycle(g, c1) || !is_cocycle(g, c2))
        throw std::invalid_argument("cohomologous: inputs must be cocycles");
    auto r = solve_coboundary(g, c1 - c2);
    return std::holds_alternative<Cochain<FE>>(r);
}

int rank_in_h(const LieAlgebra<FE>& g, const std::vector<Cochain<FE>>& cocycles, int q) {
    ComplexBasis cq(g, q, Module::adjoint);
    FMatrix dprev = differential_matrix(g, q - 1, Module::adjoint);
    int nb = dprev.cols();
    FMatrix stacked(g.unit().field(), nb + int(cocycles.size()), cq.dim());
    // rows: images of the (q-1)-basis under d, then the cocycles
    for (int j = 0; j < nb; ++j)
        for (int r = 0; r < cq.dim(); ++r) stacked.at(j, r) = dprev.at(r, j);
    for (size_t i = 0; i < cocycles.size(); ++i) {
        auto v = cq.to_vec(cocycles[i]);
        for (int r = 0; r < cq.dim(); ++r) stacked.at(nb + int(i), r) = v[r];
    }
    return rank(stacked) - rank(dprev);
}

}  // namespace modlie
