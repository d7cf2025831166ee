#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace modlie {

// Small finite field GF(p^k), p in {2,3}, q = p^k <= 81.  Elements are
// integer codes in [0, q): the code's base-p digits are the coefficients of
// the residue polynomial, little-endian.  Extension fields are fixed once
// and for all by the lexicographically smallest irreducible monic modulus,
// which gives w^2+w+1 for GF(4) and w^2+1 for GF(9).
class Field {
public:
    static const Field& GF(int q);

    int p() const { return p_; }
    int k() const { return k_; }
    int q() const { return q_; }

    int add(int a, int b) const { return add_[a * q_ + b]; }
    int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
    int neg(int a) const { return neg_[a]; }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int inv(int a) const;
    int pow(int a, long e) const;
    // unique r with r^p = a (the field is perfect)
    int pth_root(int a) const { return root_[a]; }
    // canonical image of an integer in the prime subfield
    int from_int(long n) const;

    std::vector<int> coeffs(int a) const;
    int from_coeffs(const std::vector<int>& c) const;
    const std::vector<int>& modulus() const { return mod_; }
    std::string str(int a) const;

private:
    explicit Field(int q);
    int p_ = 0, k_ = 0, q_ = 0;
    std::vector<int> mod_;   // monic irreducible, little-endian, size k+1
    std::vector<uint8_t> add_, mul_, neg_, inv_, root_;
};

// Field element with value semantics.  Mixed-field arithmetic is a logic
// error and throws.
class FE {
public:
    FE(const Field& f, int code) : F_(&f), v_(code) {
        if (code < 0 || code >= f.q()) throw std::invalid_argument("FE: bad code");
    }
    static FE zero(const Field& f) { return FE(f, 0); }
    static FE one(const Field& f) { return FE(f, f.from_int(1)); }

    const Field& field() const { return *F_; }
    int code() const { return v_; }
    int characteristic() const { return F_->p(); }
    bool is_zero() const { return v_ == 0; }

    FE operator+(const FE& o) const { same(o); return FE(*F_, F_->add(v_, o.v_)); }
    FE operator-(const FE& o) const { same(o); return FE(*F_, F_->sub(v_, o.v_)); }
    FE operator*(const FE& o) const { same(o); return FE(*F_, F_->mul(v_, o.v_)); }
    FE operator/(const FE& o) const { same(o); return FE(*F_, F_->mul(v_, F_->inv(o.v_))); }
    FE operator-() const { return FE(*F_, F_->neg(v_)); }
    FE& operator+=(const FE& o) { *this = *this + o; return *this; }
    FE& operator-=(const FE& o) { *this = *this - o; return *this; }
    FE& operator*=(const FE& o) { *this = *this * o; return *this; }
    bool operator==(const FE& o) const { return F_ == o.F_ && v_ == o.v_; }
    bool operator!=(const FE& o) const { return !(*this == o); }
    bool operator<(const FE& o) const { return v_ < o.v_; }

    // multiplication by an integer scalar (signs in formulas)
    FE times(long n) const { return FE(*F_, F_->mul(v_, F_->from_int(n))); }
    FE inv() const { return FE(*F_, F_->inv(v_)); }
    FE pow(long e) const { return FE(*F_, F_->pow(v_, e)); }
    FE pth_root() const { return FE(*F_, F_->pth_root(v_)); }

private:
    void same(const FE& o) const {
        if (F_ != o.F_) throw std::logic_error("FE: mixed fields");
    }
    const Field* F_;
    int v_;
};

std::ostream& operator<<(std::ostream& os, const FE& x);

// binom(m, n) mod p via Lucas' theorem; n > m gives 0
int lucas_binom_int(long m, long n, int p);
FE lucas_binom(long m, long n, const Field& f);

FE pth_root(const FE& x);

}  // namespace modlie
