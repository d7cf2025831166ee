#include "modlie/parampoly.hpp"

#include <numeric>
#include <sstream>

namespace modlie {

ParamPoly ParamPoly::constant(int p, int nvars, long c) {
    ParamPoly f(p, nvars);
    f.add_term(Expo(nvars, 0), c);
    return f;
}

ParamPoly ParamPoly::var(int p, int nvars, int i, int exp) {
    if (i < 0 || i >= nvars) throw std::invalid_argument("ParamPoly::var index");
    ParamPoly f(p, nvars);
    Expo e(nvars, 0);
    e[i] = exp;
    f.add_term(e, 1);
    return f;
}

ParamPoly ParamPoly::monomial(int p, Expo e, long c) {
    ParamPoly f(p, int(e.size()));
    f.add_term(e, c);
    return f;
}

void ParamPoly::add_term(const Expo& e, long c) {
    if (int(e.size()) != nvars_) throw std::invalid_argument("ParamPoly: exponent arity");
    long cc = ((c % p_) + p_) % p_;
    if (!cc) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, int(cc));
    } else {
        it->second = int((it->second + cc) % p_);
        if (!it->second) terms_.erase(it);
    }
}

int ParamPoly::total_degree() const {
    int d = 0;
    for (auto& [e, c] : terms_)
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
    check(o);
    ParamPoly r = *this;
    for (auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const {
    check(o);
    ParamPoly r = *this;
    for (auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
    check(o);
    ParamPoly r(p_, nvars_);
    for (auto& [e1, c1] : terms_)
        for (auto& [e2, c2] : o.terms_) {
            Expo e(nvars_);
            for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, long(c1) * c2);
        }
    return r;
}

ParamPoly ParamPoly::times(long n) const {
    ParamPoly r(p_, nvars_);
    for (auto& [e, c] : terms_) r.add_term(e, c * n);
    return r;
}

FE ParamPoly::eval(const std::vector<FE>& t) const {
    if (int(t.size()) != nvars_)
        throw std::invalid_argument("ParamPoly::eval: tuple length mismatch");
    for (auto& x : t)
        if (x.characteristic() != p_)
            throw std::invalid_argument("ParamPoly::eval: characteristic mismatch");
    const Field& F = t.empty() ? Field::GF(p_) : t[0].field();
    FE acc = FE::zero(F);
    for (auto& [e, c] : terms_) {
        FE m(F, F.from_int(c));
        for (int i = 0; i < nvars_; ++i)
            if (e[i]) m = m * t[i].pow(e[i]);
        acc = acc + m;
    }
    return acc;
}

std::string ParamPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        bool printed = false;
        if (c != 1 || std::all_of(e.begin(), e.end(), [](int x) { return !x; })) {
            os << c;
            printed = true;
        }
        for (int i = 0; i < nvars_; ++i) {
            if (!e[i]) continue;
            if (printed) os << "*";
            printed = true;
            if (int(names.size()) == nvars_) os << names[i];
            else os << "t" << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

}  // namespace modlie
