#include "modlie/liealg.hpp"

#include <algorithm>
#include <sstream>

#include "modlie/linalg.hpp"

namespace modlie {

LieAlgebra<FE> to_field(const LieAlgebra<FE>& g, const Field& F2) {
    if (F2.p() != g.p()) throw std::invalid_argument("to_field: characteristic mismatch");
    LieAlgebra<FE> h(g.p(), g.basis(), FE::one(F2));
    for (int i = 0; i < g.dim(); ++i)
        for (int j = i + 1; j < g.dim(); ++j) {
            SparseVec<FE> v;
            for (auto& [k, c] : g.bracket_raw(i, j)) {
                if (c.field().k() != 1)
                    throw std::invalid_argument("to_field: source must be over the prime field");
                svec_add(v, k, FE(F2, F2.from_int(c.code())));
            }
            h.set_bracket(i, j, std::move(v));
        }
    if (g.grading()) h.set_grading(*g.grading());
    if (g.weights()) h.set_weights(*g.weights());
    return h;
}

namespace {

// matrix of ad on the given basis vector combination
FMatrix ad_matrix(const LieAlgebra<FE>& g, const SparseVec<FE>& v, const Field& F) {
    FMatrix M(F, g.dim(), g.dim());
    for (int j = 0; j < g.dim(); ++j) {
        SparseVec<FE> img = g.bracket_vec(v, {{j, g.scalar(1)}});
        for (auto& [k, c] : img) M.at(k, j) = uint8_t(c.code());
    }
    return M;
}

// dimension of the span of a list of sparse vectors
int span_dim(const LieAlgebra<FE>& g, const std::vector<SparseVec<FE>>& vs, const Field& F) {
    if (vs.empty()) return 0;
    FMatrix M(F, int(vs.size()), g.dim());
    for (size_t r = 0; r < vs.size(); ++r)
        for (auto& [k, c] : vs[r]) M.at(int(r), k) = uint8_t(c.code());
    return rank(M);
}

const Field& field_of(const LieAlgebra<FE>& g) { return g.unit().field(); }

// grow a subspace (given by spanning vectors) to the ideal it generates
int ideal_closure_dim(const LieAlgebra<FE>& g, SparseVec<FE> seed) {
    const Field& F = field_of(g);
    int n = g.dim();
    FMatrix M(F, n, n);
    int r = 0;
    std::vector<SparseVec<FE>> frontier{seed};
    auto insert = [&](const SparseVec<FE>& v) -> bool {
        // reduce v against current echelon rows, add if independent
        std::vector<uint8_t> x(n, 0);
        for (auto& [k, c] : v) x[k] = uint8_t(c.code());
        for (int row = 0; row < r; ++row) {
            int lead = -1;
            for (int c2 = 0; c2 < n; ++c2)
                if (M.at(row, c2)) { lead = c2; break; }
            if (lead >= 0 && x[lead]) {
                int f = F.neg(F.mul(x[lead], F.inv(M.at(row, lead))));
                for (int c2 = 0; c2 < n; ++c2)
                    x[c2] = uint8_t(F.add(x[c2], F.mul(f, M.at(row, c2))));
            }
        }
        int lead = -1;
        for (int c2 = 0; c2 < n; ++c2)
            if (x[c2]) { lead = c2; break; }
        if (lead < 0) return false;
        for (int c2 = 0; c2 < n; ++c2) M.at(r, c2) = x[c2];
        ++r;
        return true;
    };
    // keep echelon rows sorted by leading column for the reduction above
    auto resort = [&]() {
        std::vector<std::pair<int, int>> leads;
        for (int row = 0; row < r; ++row) {
            int lead = n;
            for (int c2 = 0; c2 < n; ++c2)
                if (M.at(row, c2)) { lead = c2; break; }
            leads.push_back({lead, row});
        }
        std::sort(leads.begin(), leads.end());
        FMatrix M2(F, n, n);
        for (int row = 0; row < r; ++row)
            for (int c2 = 0; c2 < n; ++c2) M2.at(row, c2) = M.at(leads[row].second, c2);
        M = M2;
    };
    insert(seed);
    resort();
    while (!frontier.empty() && r < n) {
        std::vector<SparseVec<FE>> next;
        for (auto& v : frontier)
            for (int j = 0; j < n; ++j) {
                SparseVec<FE> w = g.bracket_vec(v, {{j, g.scalar(1)}});
                if (w.empty()) continue;
                if (insert(w)) {
                    resort();
                    next.push_back(std::move(w));
                }
            }
        frontier = std::move(next);
    }
    return r;
}

}  // namespace

std::vector<int> derived_series_dims(const LieAlgebra<FE>& g, int max_steps) {
    const Field& F = field_of(g);
    std::vector<int> dims{g.dim()};
    // current term spanned by rows
    std::vector<SparseVec<FE>> cur;
    for (int i = 0; i < g.dim(); ++i) cur.push_back({{i, g.scalar(1)}});
    for (int s = 0; s < max_steps; ++s) {
        std::vector<SparseVec<FE>> nxt;
        for (size_t a = 0; a < cur.size(); ++a)
            for (size_t b = a + 1; b < cur.size(); ++b) {
                auto v = g.bracket_vec(cur[a], cur[b]);
                if (!v.empty()) nxt.push_back(std::move(v));
            }
        int d = span_dim(g, nxt, F);
        dims.push_back(d);
        if (d == dims[dims.size() - 2]) break;
        // compress to an independent spanning set
        FMatrix M(F, int(nxt.size()), g.dim());
        for (size_t r2 = 0; r2 < nxt.size(); ++r2)
            for (auto& [k, c] : nxt[r2]) M.at(int(r2), k) = uint8_t(c.code());
        std::vector<SparseVec<FE>> comp;
        {
            FMatrix B = M;
            // local elimination
            int nr = B.rows(), nc = B.cols(), rk = 0;
            for (int c2 = 0; c2 < nc && rk < nr; ++c2) {
                int pr = -1;
                for (int r3 = rk; r3 < nr; ++r3)
                    if (B.at(r3, c2)) { pr = r3; break; }
                if (pr < 0) continue;
                for (int j = 0; j < nc; ++j) std::swap(B.at(rk, j), B.at(pr, j));
                int s2 = F.inv(B.at(rk, c2));
                for (int j = 0; j < nc; ++j) B.at(rk, j) = uint8_t(F.mul(B.at(rk, j), s2));
                for (int r3 = 0; r3 < nr; ++r3) {
                    if (r3 == rk || !B.at(r3, c2)) continue;
                    int f = F.neg(B.at(r3, c2));
                    for (int j = 0; j < nc; ++j)
                        B.at(r3, j) = uint8_t(F.add(B.at(r3, j), F.mul(f, B.at(rk, j))));
                }
                ++rk;
            }
            for (int r3 = 0; r3 < rk; ++r3) {
                SparseVec<FE> v;
                for (int j = 0; j < nc; ++j)
                    if (B.at(r3, j)) v.emplace(j, FE(F, B.at(r3, j)));
                comp.push_back(std::move(v));
            }
        }
        cur = std::move(comp);
        if (d == 0) break;
    }
    return dims;
}

int center_dim(const LieAlgebra<FE>& g) {
    const Field& F = field_of(g);
    int n = g.dim();
    // stack the ad matrices of all basis vectors: v central iff all kill it
    FMatrix M(F, n * n, n);
    for (int i = 0; i < n; ++i) {
        FMatrix A = ad_matrix(g, {{i, g.scalar(1)}}, F);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) M.at(i * n + r, c) = A.at(r, c);
    }
    return n - rank(M);
}

int killing_rank(const LieAlgebra<FE>& g) {
    const Field& F = field_of(g);
    int n = g.dim();
    std::vector<FMatrix> ads;
    for (int i = 0; i < n; ++i) ads.push_back(ad_matrix(g, {{i, g.scalar(1)}}, F));
    FMatrix K(F, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int tr = 0;
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c)
                    tr = F.add(tr, F.mul(ads[i].at(r, c), ads[j].at(c, r)));
            K.at(i, j) = uint8_t(tr);
        }
    return rank(K);
}

bool is_simple(const LieAlgebra<FE>& g) {
    if (g.dim() <= 1) return false;
    // [L, L] = L
    auto ds = derived_series_dims(g, 1);
    if (ds.size() < 2 || ds[1] != g.dim()) return false;
    // the ideal generated by every basis vector is everything
    for (int i = 0; i < g.dim(); ++i)
        if (ideal_closure_dim(g, {{i, g.scalar(1)}}) != g.dim()) return false;
    return true;
}

Fingerprint fingerprint(const LieAlgebra<FE>& g) {
    const Field& F = field_of(g);
    Fingerprint fp;
    fp.dim = g.dim();
    fp.derived_dims = derived_series_dims(g);
    fp.center = center_dim(g);
    fp.killing_rank = killing_rank(g);
    int n = g.dim();
    for (int i = 0; i < n; ++i) {
        FMatrix A = ad_matrix(g, {{i, g.scalar(1)}}, F);
        // nilpotency index of ad g_i, or n+1 if not nilpotent within n steps
        FMatrix P(F, n, n);
        for (int r = 0; r < n; ++r) P.at(r, r) = uint8_t(F.from_int(1));
        int idx = 0;
        for (; idx <= n; ++idx) {
            bool zero = true;
            for (int r = 0; r < n && zero; ++r)
                for (int c = 0; c < n; ++c)
                    if (P.at(r, c)) { zero = false; break; }
            if (zero) break;
            FMatrix Q(F, n, n);
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) {
                    int acc = 0;
                    for (int m = 0; m < n; ++m)
                        if (P.at(r, m) && A.at(m, c))
                            acc = F.add(acc, F.mul(P.at(r, m), A.at(m, c)));
                    Q.at(r, c) = uint8_t(acc);
                }
            P = Q;
        }
        fp.ad_nilpotency.push_back(idx);
    }
    std::sort(fp.ad_nilpotency.begin(), fp.ad_nilpotency.end());
    // sandwich count over the prime-field span of the basis, skipped when the
    // enumeration would be too large
    double total = 1;
    for (int i = 0; i < n; ++i) total *= g.p();
    if (total <= 1 << 20) {
        std::vector<FMatrix> ads;
        for (int i = 0; i < n; ++i) ads.push_back(ad_matrix(g, {{i, g.scalar(1)}}, F));
        long cnt = 0;
        std::vector<int> digits(n, 0);
        long steps = long(total);
        for (long it = 1; it < steps; ++it) {
            int pos = 0;
            while (true) {
                if (++digits[pos] < g.p()) break;
                digits[pos] = 0;
                ++pos;
            }
            FMatrix A(F, n, n);
            for (int i = 0; i < n; ++i) {
                if (!digits[i]) continue;
                int d = F.from_int(digits[i]);
                for (int r = 0; r < n; ++r)
                    for (int c = 0; c < n; ++c)
                        if (ads[i].at(r, c))
                            A.at(r, c) = uint8_t(F.add(A.at(r, c), F.mul(d, ads[i].at(r, c))));
            }
            bool sq_zero = true;
            for (int r = 0; r < n && sq_zero; ++r)
                for (int c = 0; c < n; ++c) {
                    int acc = 0;
                    for (int m = 0; m < n; ++m)
                        if (A.at(r, m) && A.at(m, c))
                            acc = F.add(acc, F.mul(A.at(r, m), A.at(m, c)));
                    if (acc) { sq_zero = false; break; }
                }
            if (sq_zero) ++cnt;
        }
        fp.sandwich_count = cnt;
    }
    return fp;
}

std::string to_string(const Fingerprint& f) {
    std::ostringstream os;
    os << "dim=" << f.dim << " derived=[";
    for (size_t i = 0; i < f.derived_dims.size(); ++i)
        os << (i ? "," : "") << f.derived_dims[i];
    os << "] center=" << f.center << " killing_rank=" << f.killing_rank << " ad_nilp=[";
    for (size_t i = 0; i < f.ad_nilpotency.size(); ++i)
        os << (i ? "," : "") << f.ad_nilpotency[i];
    os << "] sandwiches=" << f.sandwich_count;
    return os.str();
}

bool verify_isomorphism(const LinearMap& m, const LieAlgebra<FE>& A,
                        const LieAlgebra<FE>& B) {
    int n = A.dim();
    if (B.dim() != n || int(m.cols.size()) != n) return false;
    const Field& F = field_of(B);
    // coefficients of A must live in F or in its prime subfield
    auto into_F = [&](const FE& c) -> FE {
        if (&c.field() == &F) return c;
        if (c.field().k() == 1 && c.field().p() == F.p()) return FE(F, F.from_int(c.code()));
        throw std::invalid_argument("verify_isomorphism: incompatible coefficient fields");
    };
    FMatrix M(F, n, n);
    for (int j = 0; j < n; ++j) {
        if (int(m.cols[j].size()) != n) return false;
        for (int i = 0; i < n; ++i) M.at(i, j) = uint8_t(into_F(m.cols[j][i]).code());
    }
    if (rank(M) != n) return false;
    auto image = [&](const SparseVec<FE>& v) {
        SparseVec<FE> w;
        for (auto& [j, c] : v)
            for (int i = 0; i < n; ++i)
                if (M.at(i, j)) svec_add(w, i, into_F(c) * FE(F, M.at(i, j)));
        return w;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            SparseVec<FE> lhs = image(A.bracket(i, j));
            SparseVec<FE> rhs =
                B.bracket_vec(image({{i, A.scalar(1)}}), image({{j, A.scalar(1)}}));
            if (lhs != rhs) return false;
        }
    return true;
}

LinearMap involution_sigma(const LieAlgebra<FE>& g) {
    const Field& F = field_of(g);
    int n = g.dim();
    LinearMap m;
    m.cols.assign(n, std::vector<FE>(n, FE::zero(F)));
    for (int j = 0; j < n; ++j) {
        const std::string& nm = g.basis()[j];
        if (nm[0] == 'h') {
            m.cols[j][j] = -FE::one(F);
        } else if (nm[0] == 'x') {
            m.cols[j][g.index_of("y" + nm.substr(1))] = FE::one(F);
        } else if (nm[0] == 'y') {
            m.cols[j][g.index_of("x" + nm.substr(1))] = FE::one(F);
        } else {
            throw std::invalid_argument("involution_sigma: unexpected basis name " + nm);
        }
    }
    if (!verify_isomorphism(m, g, g))
        throw std::logic_error("involution_sigma: map fails to be an automorphism");
    return m;
}

}  // namespace modlie
