#include "modlie/liealg.hpp"

namespace modlie {

namespace {

struct ScRow { int i, j, k, c; };

const std::vector<std::string> kBasis10 = {"h1", "h2", "x1", "x2", "x3",
                                           "x4", "y1", "y2", "y3", "y4"};

// o(5) = sp(4) over GF(3) in the Chevalley basis normalized so that
// x3 = [x1,x2], x4 = [x2,x3], [x1,y1] = h1 and the 0-cochain differentials
// of the generators come out in the standard form.  Derived once from the
// 4x4 symplectic matrix realization and frozen; the unit tests re-derive the
// table from matrices and compare.
constexpr ScRow kO5P3[] = {
    {0, 2, 2, 2}, {0, 3, 3, 2}, {0, 4, 4, 1}, {0, 6, 6, 1}, {0, 7, 7, 1},
    {0, 8, 8, 2}, {1, 2, 2, 1}, {1, 3, 3, 2}, {1, 5, 5, 2}, {1, 6, 6, 2},
    {1, 7, 7, 1}, {1, 9, 9, 1}, {2, 3, 4, 1}, {2, 6, 0, 1}, {2, 8, 7, 1},
    {3, 4, 5, 1}, {3, 7, 1, 1}, {3, 8, 6, 1}, {3, 9, 8, 2}, {4, 6, 3, 2},
    {4, 7, 2, 2}, {4, 8, 0, 1}, {4, 8, 1, 2}, {4, 9, 7, 2}, {5, 7, 4, 1},
    {5, 8, 3, 1}, {5, 9, 0, 1}, {5, 9, 1, 1}, {6, 7, 8, 1}, {7, 8, 9, 1},
};

// o^(1)(5) over GF(2): the ten-dimensional derived subalgebra of the
// 15-dimensional orthogonal algebra of a nondegenerate symmetric form on
// k^5, in the weight basis with x3 = [x1,x2], x4 = [x1,x3].  Frozen from the
// 5x5 matrix realization; re-derived in the unit tests.
constexpr ScRow kO51P2[] = {
    {0, 2, 2, 1}, {0, 3, 3, 1}, {0, 5, 5, 1}, {0, 6, 6, 1}, {0, 7, 7, 1},
    {0, 9, 9, 1}, {1, 2, 2, 1}, {1, 4, 4, 1}, {1, 6, 6, 1}, {1, 8, 8, 1},
    {2, 3, 4, 1}, {2, 4, 5, 1}, {2, 6, 0, 1}, {2, 8, 7, 1}, {2, 9, 8, 1},
    {3, 7, 1, 1}, {3, 8, 6, 1}, {4, 6, 3, 1}, {4, 7, 2, 1}, {4, 8, 0, 1},
    {4, 8, 1, 1}, {4, 9, 6, 1}, {5, 6, 4, 1}, {5, 8, 2, 1}, {5, 9, 1, 1},
    {6, 7, 8, 1}, {6, 8, 9, 1},
};

template <size_t N>
LieAlgebra<FE> from_rows(int p, const ScRow (&rows)[N]) {
    const Field& F = Field::GF(p);
    LieAlgebra<FE> g(p, kBasis10, FE::one(F));
    for (auto& r : rows) g.add_bracket_term(r.i, r.j, r.k, r.c);
    return g;
}

}  // namespace

LieAlgebra<FE> build_o5_p3() {
    LieAlgebra<FE> g = from_rows(3, kO5P3);
    g.set_grading({0, 0, 1, 1, 2, 3, -1, -1, -2, -3});
    g.set_weights({{0, 0}, {0, 0}, {2, 1}, {2, 2}, {1, 0},
                   {0, 2}, {1, 2}, {1, 1}, {2, 0}, {0, 1}});
    return g;
}

LieAlgebra<FE> build_o51_p2() {
    LieAlgebra<FE> g = from_rows(2, kO51P2);
    g.set_grading({0, 0, 1, 1, 2, 3, -1, -1, -2, -3});
    g.set_weights({{0, 0}, {0, 0}, {1, 1}, {1, 0}, {0, 1},
                   {1, 0}, {1, 1}, {1, 0}, {0, 1}, {1, 0}});
    return g;
}

LieAlgebra<FE> build_o5_p2_full() {
    // all 5x5 matrices X over GF(2) with X symmetric about the antidiagonal;
    // basis: E(i,j) + E(4-j,4-i) for representative off-pairs, then the five
    // antidiagonal units E(i,4-i)
    const Field& F = Field::GF(2);
    struct Mat { int a[5][5] = {}; };
    std::vector<Mat> basis;
    std::vector<std::string> names;
    bool seen[5][5] = {};
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            if (seen[i][j]) continue;
            int mi = 4 - j, mj = 4 - i;
            Mat M;
            M.a[i][j] = 1;
            seen[i][j] = true;
            if (mi != i || mj != j) {
                M.a[mi][mj] = 1;
                seen[mi][mj] = true;
            }
            basis.push_back(M);
            names.push_back("m" + std::to_string(i) + std::to_string(j));
        }
    int n = int(basis.size());
    LieAlgebra<FE> g(2, names, FE::one(F));
    auto expand = [&](const Mat& M) {
        SparseVec<FE> v;
        // each matrix in the span decomposes uniquely over the basis by
        // reading representative positions
        Mat rem = M;
        for (int b = 0; b < n; ++b) {
            int ri = -1, rj = -1;
            for (int i = 0; i < 5 && ri < 0; ++i)
                for (int j = 0; j < 5; ++j)
                    if (basis[b].a[i][j]) { ri = i; rj = j; break; }
            if (rem.a[ri][rj]) {
                svec_add(v, b, FE::one(F));
                for (int i = 0; i < 5; ++i)
                    for (int j = 0; j < 5; ++j)
                        rem.a[i][j] ^= basis[b].a[i][j];
            }
        }
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j)
                if (rem.a[i][j]) throw std::logic_error("o5_p2_full: not in span");
        return v;
    };
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            Mat C;
            for (int i = 0; i < 5; ++i)
                for (int j = 0; j < 5; ++j) {
                    int acc = 0;
                    for (int k = 0; k < 5; ++k)
                        acc ^= (basis[a].a[i][k] & basis[b].a[k][j]) ^
                               (basis[b].a[i][k] & basis[a].a[k][j]);
                    C.a[i][j] = acc;
                }
            g.set_bracket(a, b, expand(C));
        }
    return g;
}

}  // namespace modlie
