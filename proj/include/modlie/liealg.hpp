#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "modlie/field.hpp"
#include "modlie/parampoly.hpp"

namespace modlie {

// sparse vector in the algebra: basis index -> coefficient, zeros never stored
template <class R>
using SparseVec = std::map<int, R>;

template <class R>
void svec_add(SparseVec<R>& v, int k, const R& c) {
    if (c.is_zero()) return;
    auto it = v.find(k);
    if (it == v.end()) {
        v.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) v.erase(it);
    }
}

template <class R>
void svec_add(SparseVec<R>& v, const SparseVec<R>& w) {
    for (auto& [k, c] : w) svec_add(v, k, c);
}

template <class R>
SparseVec<R> svec_scale(const SparseVec<R>& v, const R& c) {
    SparseVec<R> r;
    if (c.is_zero()) return r;
    for (auto& [k, x] : v) svec_add(r, k, x * c);
    return r;
}

// Finite-dimensional Lie algebra given by a structure-constant table over a
// coefficient ring R (a field element or a parameter polynomial).  The table
// is stored for i < j only; the other half follows by antisymmetry, which at
// p = 2 means [x,x] = 0 and a symmetric table.
template <class R>
class LieAlgebra {
public:
    LieAlgebra(int p, std::vector<std::string> basis, R unit)
        : p_(p), basis_(std::move(basis)), unit_(std::move(unit)),
          sc_(size_t(dim()) * dim()) {}

    int p() const { return p_; }
    int dim() const { return int(basis_.size()); }
    const std::vector<std::string>& basis() const { return basis_; }
    int index_of(const std::string& name) const {
        for (int i = 0; i < dim(); ++i)
            if (basis_[i] == name) return i;
        throw std::invalid_argument("no basis vector named " + name);
    }
    const R& unit() const { return unit_; }
    R scalar(long n) const { return unit_.times(n); }

    void set_bracket(int i, int j, SparseVec<R> v) {
        if (i == j) throw std::invalid_argument("set_bracket: equal indices");
        if (i > j) { std::swap(i, j); v = svec_scale(v, scalar(-1)); }
        sc_[size_t(i) * dim() + j] = std::move(v);
    }
    void add_bracket_term(int i, int j, int k, long c) {
        SparseVec<R> v = bracket_raw(i, j);
        svec_add(v, k, scalar(c));
        set_bracket(i, j, std::move(v));
    }

    // [g_i, g_j] with sign handling for any index order
    SparseVec<R> bracket(int i, int j) const {
        if (i == j) return {};
        if (i < j) return sc_[size_t(i) * dim() + j];
        return svec_scale(sc_[size_t(j) * dim() + i], scalar(-1));
    }
    const SparseVec<R>& bracket_raw(int i, int j) const {
        if (i >= j) throw std::logic_error("bracket_raw wants i < j");
        return sc_[size_t(i) * dim() + j];
    }

    SparseVec<R> bracket_vec(const SparseVec<R>& a, const SparseVec<R>& b) const {
        SparseVec<R> r;
        for (auto& [i, ci] : a)
            for (auto& [j, cj] : b)
                svec_add(r, svec_scale(bracket(i, j), ci * cj));
        return r;
    }
    SparseVec<R> bracket_basis_vec(int i, const SparseVec<R>& b) const {
        SparseVec<R> r;
        for (auto& [j, cj] : b) svec_add(r, svec_scale(bracket(i, j), cj));
        return r;
    }

    void set_grading(std::vector<int> g) { grading_ = std::move(g); }
    const std::optional<std::vector<int>>& grading() const { return grading_; }
    void set_weights(std::vector<std::array<int, 2>> w) { weights_ = std::move(w); }
    const std::optional<std::vector<std::array<int, 2>>>& weights() const { return weights_; }

private:
    int p_;
    std::vector<std::string> basis_;
    R unit_;
    std::vector<SparseVec<R>> sc_;
    std::optional<std::vector<int>> grading_;
    std::optional<std::vector<std::array<int, 2>>> weights_;
};

template <class R>
struct JacobiViolation {
    int i, j, k;
    SparseVec<R> residual;
};

// exhaustive Jacobi check on all basis triples; violations are data
template <class R>
std::vector<JacobiViolation<R>> check_jacobi(const LieAlgebra<R>& g) {
    std::vector<JacobiViolation<R>> bad;
    int n = g.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                SparseVec<R> acc;
                svec_add(acc, g.bracket_vec(g.bracket(i, j), {{k, g.scalar(1)}}));
                svec_add(acc, g.bracket_vec(g.bracket(j, k), {{i, g.scalar(1)}}));
                svec_add(acc, g.bracket_vec(g.bracket(k, i), {{j, g.scalar(1)}}));
                if (!acc.empty()) bad.push_back({i, j, k, std::move(acc)});
            }
    return bad;
}

// ---- field-coefficient operations (exact linear algebra over GF(q)) ----

// invertible linear map between algebras of equal dimension; columns are the
// images of the source basis vectors
struct LinearMap {
    std::vector<std::vector<FE>> cols;
};

LieAlgebra<FE> to_field(const LieAlgebra<FE>& g, const Field& F2);

bool is_simple(const LieAlgebra<FE>& g);
std::vector<int> derived_series_dims(const LieAlgebra<FE>& g, int max_steps = 6);
int center_dim(const LieAlgebra<FE>& g);
int killing_rank(const LieAlgebra<FE>& g);

struct Fingerprint {
    int dim = 0;
    std::vector<int> derived_dims;
    int center = 0;
    int killing_rank = 0;
    std::vector<int> ad_nilpotency;     // sorted multiset over basis vectors
    long sandwich_count = -1;           // -1 when enumeration is too large
    bool operator==(const Fingerprint& o) const = default;
};
Fingerprint fingerprint(const LieAlgebra<FE>& g);
std::string to_string(const Fingerprint& f);

// the involution of o(5) at p = 3 swapping the x- and y-generators;
// throws if the verification on all basis pairs fails
LinearMap involution_sigma(const LieAlgebra<FE>& g);

bool verify_isomorphism(const LinearMap& m, const LieAlgebra<FE>& A,
                        const LieAlgebra<FE>& B);

// ---- base algebras (frozen structure-constant tables) ----

LieAlgebra<FE> build_o5_p3();
LieAlgebra<FE> build_o51_p2();
// the full 15-dimensional orthogonal algebra at p = 2 (not simple)
LieAlgebra<FE> build_o5_p2_full();

}  // namespace modlie
