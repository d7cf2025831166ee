#pragma once

#include <map>
#include <string>
#include <vector>

#include "modlie/field.hpp"

namespace modlie {

// Sparse multivariate polynomial in deformation parameters with coefficients
// in the prime field GF(p).  Zero coefficients are never stored.
class ParamPoly {
public:
    using Expo = std::vector<int>;

    ParamPoly(int p, int nvars) : p_(p), nvars_(nvars) {}
    static ParamPoly constant(int p, int nvars, long c);
    static ParamPoly var(int p, int nvars, int i, int exp = 1);
    static ParamPoly monomial(int p, Expo e, long c);

    int p() const { return p_; }
    int characteristic() const { return p_; }
    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;
    const std::map<Expo, int>& terms() const { return terms_; }

    void add_term(const Expo& e, long c);

    ParamPoly operator+(const ParamPoly& o) const;
    ParamPoly operator-(const ParamPoly& o) const;
    ParamPoly operator*(const ParamPoly& o) const;
    ParamPoly operator-() const { return times(-1); }
    ParamPoly& operator+=(const ParamPoly& o) { *this = *this + o; return *this; }
    ParamPoly& operator-=(const ParamPoly& o) { *this = *this - o; return *this; }
    ParamPoly& operator*=(const ParamPoly& o) { *this = *this * o; return *this; }
    bool operator==(const ParamPoly& o) const {
        return p_ == o.p_ && nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    bool operator!=(const ParamPoly& o) const { return !(*this == o); }

    ParamPoly times(long n) const;

    // exact evaluation at a parameter tuple over any field of the same
    // characteristic; a ring homomorphism
    FE eval(const std::vector<FE>& t) const;

    std::string str(const std::vector<std::string>& names = {}) const;

private:
    void check(const ParamPoly& o) const {
        if (p_ != o.p_ || nvars_ != o.nvars_)
            throw std::logic_error("ParamPoly: mixed contexts");
    }
    int p_;
    int nvars_;
    std::map<Expo, int> terms_;
};

}  // namespace modlie
