#include "modlie/linalg.hpp"

namespace modlie {

std::vector<uint8_t> FMatrix::apply(const std::vector<uint8_t>& x) const {
    if (int(x.size()) != nc_) throw std::invalid_argument("FMatrix::apply size");
    std::vector<uint8_t> y(nr_, 0);
    for (int r = 0; r < nr_; ++r) {
        int acc = 0;
        const uint8_t* rp = row(r);
        for (int c = 0; c < nc_; ++c)
            if (rp[c] && x[c]) acc = F_->add(acc, F_->mul(rp[c], x[c]));
        y[r] = uint8_t(acc);
    }
    return y;
}

namespace {

// in-place elimination on A, optionally mirroring row ops on T
int eliminate(FMatrix& A, FMatrix* T, std::vector<int>* pivots) {
    const Field& F = A.field();
    int nr = A.rows(), nc = A.cols();
    int rank = 0;
    for (int c = 0; c < nc && rank < nr; ++c) {
        int pr = -1;
        for (int r = rank; r < nr; ++r)
            if (A.at(r, c)) { pr = r; break; }
        if (pr < 0) continue;
        if (pr != rank) {
            for (int j = 0; j < nc; ++j) std::swap(A.at(rank, j), A.at(pr, j));
            if (T)
                for (int j = 0; j < T->cols(); ++j) std::swap(T->at(rank, j), T->at(pr, j));
        }
        int piv = A.at(rank, c);
        if (piv != F.from_int(1)) {
            int s = F.inv(piv);
            for (int j = c; j < nc; ++j) A.at(rank, j) = uint8_t(F.mul(A.at(rank, j), s));
            if (T)
                for (int j = 0; j < T->cols(); ++j) T->at(rank, j) = uint8_t(F.mul(T->at(rank, j), s));
        }
        for (int r = 0; r < nr; ++r) {
            if (r == rank) continue;
            int f = A.at(r, c);
            if (!f) continue;
            int nf = F.neg(f);
            const uint8_t* src = A.row(rank);
            uint8_t* dst = A.row(r);
            for (int j = c; j < nc; ++j)
                if (src[j]) dst[j] = uint8_t(F.add(dst[j], F.mul(nf, src[j])));
            if (T) {
                const uint8_t* ts = T->row(rank);
                uint8_t* td = T->row(r);
                for (int j = 0; j < T->cols(); ++j)
                    if (ts[j]) td[j] = uint8_t(F.add(td[j], F.mul(nf, ts[j])));
            }
        }
        if (pivots) pivots->push_back(c);
        ++rank;
    }
    return rank;
}

}  // namespace

int rank(const FMatrix& A) {
    FMatrix B = A;
    return eliminate(B, nullptr, nullptr);
}

Echelon::Echelon(const FMatrix& A) : R_(A), T_(A.field(), A.rows(), A.rows()) {
    for (int i = 0; i < A.rows(); ++i) T_.at(i, i) = uint8_t(A.field().from_int(1));
    rank_ = eliminate(R_, &T_, &pivot_col_);
}

std::optional<std::vector<uint8_t>> Echelon::solve(const std::vector<uint8_t>& b,
                                                   std::vector<uint8_t>* witness) const {
    const Field& F = R_.field();
    if (int(b.size()) != R_.rows()) throw std::invalid_argument("Echelon::solve size");
    std::vector<uint8_t> c = T_.apply(b);
    for (int r = rank_; r < R_.rows(); ++r) {
        if (c[r]) {
            if (witness) {
                witness->assign(R_.rows(), 0);
                for (int j = 0; j < R_.rows(); ++j) (*witness)[j] = T_.at(r, j);
            }
            return std::nullopt;
        }
    }
    // reduced echelon: pivot rows directly give the bound variables
    std::vector<uint8_t> x(R_.cols(), 0);
    for (int r = 0; r < rank_; ++r) {
        // columns beyond the pivot are free (set to zero), so x[pivot] = c[r]
        x[pivot_col_[r]] = c[r];
    }
    // the elimination is Gauss-Jordan (rows cleared above and below), but a
    // pivot row may still involve later free columns; with free vars at zero
    // the assignment above already satisfies R x = c
    (void)F;
    return x;
}

}  // namespace modlie
