#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "modlie/field.hpp"

namespace modlie {

// dense matrix over a small finite field; entries are element codes
class FMatrix {
public:
    FMatrix(const Field& F, int nr, int nc)
        : F_(&F), nr_(nr), nc_(nc), a_(size_t(nr) * nc, 0) {}

    const Field& field() const { return *F_; }
    int rows() const { return nr_; }
    int cols() const { return nc_; }
    uint8_t& at(int r, int c) { return a_[size_t(r) * nc_ + c]; }
    uint8_t at(int r, int c) const { return a_[size_t(r) * nc_ + c]; }
    const uint8_t* row(int r) const { return a_.data() + size_t(r) * nc_; }
    uint8_t* row(int r) { return a_.data() + size_t(r) * nc_; }

    std::vector<uint8_t> apply(const std::vector<uint8_t>& x) const;

private:
    const Field* F_;
    int nr_, nc_;
    std::vector<uint8_t> a_;
};

int rank(const FMatrix& A);

// echelon factorization with a recorded row transform: T * A = R.
// Pivoting is deterministic: scan columns left to right, take the first row
// with a nonzero entry.  Solutions set all free variables to zero, so output
// is reproducible.
class Echelon {
public:
    explicit Echelon(const FMatrix& A);

    int rank() const { return rank_; }
    // solve A x = b; on failure and if witness != nullptr, stores a row
    // functional u with u A = 0 and u b != 0
    std::optional<std::vector<uint8_t>> solve(const std::vector<uint8_t>& b,
                                              std::vector<uint8_t>* witness = nullptr) const;

private:
    FMatrix R_, T_;
    std::vector<int> pivot_col_;  // per pivot row
    int rank_;
};

}  // namespace modlie
