#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "modlie/liealg.hpp"

namespace modlie {

enum class Module { adjoint, trivial };

// sort indices ascending; returns the permutation sign (+1/-1), or 0 when an
// index repeats
inline int sort_wedge(std::vector<int>& w) {
    int sign = 1;
    for (size_t i = 1; i < w.size(); ++i)
        for (size_t j = i; j > 0 && w[j] < w[j - 1]; --j) {
            std::swap(w[j], w[j - 1]);
            sign = -sign;
        }
    for (size_t i = 1; i < w.size(); ++i)
        if (w[i] == w[i - 1]) return 0;
    return sign;
}

// q-cochain, stored as sums of (module vector) (x) (wedge of dual vectors),
// with wedge index tuples kept strictly increasing
template <class R>
class Cochain {
public:
    Cochain(int q, Module m) : q_(q), module_(m) {}

    int q() const { return q_; }
    Module module() const { return module_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, SparseVec<R>>& terms() const { return terms_; }

    // adds coeff * m (x) (wedge of dual indices w), normalizing the order
    void add_term(int m, std::vector<int> w, const R& coeff) {
        if (int(w.size()) != q_) throw std::invalid_argument("Cochain: wedge arity");
        if (coeff.is_zero()) return;
        int sign = sort_wedge(w);
        if (!sign) return;
        R c = sign > 0 ? coeff : coeff.times(-1);
        auto& comp = terms_[w];
        svec_add(comp, m, c);
        if (comp.empty()) terms_.erase(w);
    }
    // accumulate sc * o into this (sc an integer scalar, e.g. +1 / -1)
    void add_scaled(const Cochain& o, long sc = 1) {
        if (o.q_ != q_ || o.module_ != module_)
            throw std::invalid_argument("Cochain::add_scaled: shape mismatch");
        for (auto& [w, comp] : o.terms_)
            for (auto& [m, c] : comp) add_term(m, w, c.times(sc));
    }

    Cochain operator+(const Cochain& o) const {
        Cochain r = *this;
        r.add_scaled(o, 1);
        return r;
    }
    Cochain operator-(const Cochain& o) const {
        Cochain r = *this;
        r.add_scaled(o, -1);
        return r;
    }
    Cochain times(const R& s) const {
        Cochain r(q_, module_);
        for (auto& [w, comp] : terms_)
            for (auto& [m, c] : comp) r.add_term(m, w, c * s);
        return r;
    }
    bool operator==(const Cochain& o) const {
        return q_ == o.q_ && module_ == o.module_ && terms_ == o.terms_;
    }
    bool operator!=(const Cochain& o) const { return !(*this == o); }

    // evaluation on a tuple of basis indices (alternating multilinear)
    SparseVec<R> eval(const std::vector<int>& args) const {
        if (int(args.size()) != q_) throw std::invalid_argument("Cochain::eval arity");
        std::vector<int> w = args;
        int sign = sort_wedge(w);
        if (!sign) return {};
        auto it = terms_.find(w);
        if (it == terms_.end()) return {};
        SparseVec<R> out;
        for (auto& [m, c] : it->second) svec_add(out, m, sign > 0 ? c : c.times(-1));
        return out;
    }
    // first argument a general vector, the rest basis indices
    SparseVec<R> eval_vec_first(const SparseVec<R>& v, const std::vector<int>& rest) const {
        SparseVec<R> out;
        std::vector<int> args(q_);
        std::copy(rest.begin(), rest.end(), args.begin() + 1);
        for (auto& [k, c] : v) {
            args[0] = k;
            svec_add(out, svec_scale(eval(args), c));
        }
        return out;
    }

private:
    int q_;
    Module module_;
    std::map<std::vector<int>, SparseVec<R>> terms_;
};

// the Chevalley-Eilenberg differential, evaluated tuple by tuple:
//   dc(x_1..x_{q+1}) = sum_{i<j} (-1)^{i+j-1} c([x_i,x_j], ..^i..^j..)
//                    + sum_i    (-1)^i       [x_i, c(..^i..)]
// (the sign convention that makes d(a)(g) = [a,g] on 0-cochains and
// d(f*)(u,v) = f*([u,v]) with trivial coefficients)
template <class R>
Cochain<R> differential(const LieAlgebra<R>& g, const Cochain<R>& c) {
    int n = g.dim();
    int q = c.q();
    Cochain<R> out(q + 1, c.module());
    std::vector<int> T(q + 1);
    // iterate over strictly increasing (q+1)-tuples
    for (int i = 0; i <= q; ++i) T[i] = i;
    auto advance = [&]() -> bool {
        int pos = q;
        while (pos >= 0 && T[pos] == n - 1 - (q - pos)) --pos;
        if (pos < 0) return false;
        ++T[pos];
        for (int i = pos + 1; i <= q; ++i) T[i] = T[i - 1] + 1;
        return true;
    };
    if (n < q + 1) return out;
    while (true) {
        SparseVec<R> val;
        // bracket-insertion part
        for (int i = 0; i <= q; ++i)
            for (int j = i + 1; j <= q; ++j) {
                SparseVec<R> br = g.bracket(T[i], T[j]);
                if (br.empty()) continue;
                std::vector<int> rest;
                rest.reserve(q - 1);
                for (int t = 0; t <= q; ++t)
                    if (t != i && t != j) rest.push_back(T[t]);
                // positions are 1-based in the sign rule
                int sgn = ((i + 1) + (j + 1) - 1) % 2 ? -1 : 1;
                SparseVec<R> ev = c.eval_vec_first(br, rest);
                if (sgn < 0) ev = svec_scale(ev, g.scalar(-1));
                svec_add(val, ev);
            }
        // module-action part (adjoint coefficients only)
        if (c.module() == Module::adjoint) {
            for (int i = 0; i <= q; ++i) {
                std::vector<int> rest;
                rest.reserve(q);
                for (int t = 0; t <= q; ++t)
                    if (t != i) rest.push_back(T[t]);
                SparseVec<R> ev = c.eval(rest);
                if (ev.empty()) continue;
                SparseVec<R> act = g.bracket_basis_vec(T[i], ev);
                int sgn = (i + 1) % 2 ? -1 : 1;
                if (sgn < 0) act = svec_scale(act, g.scalar(-1));
                svec_add(val, act);
            }
        }
        for (auto& [m, cc] : val) out.add_term(m, T, cc);
        if (!advance()) break;
    }
    return out;
}

template <class R>
bool is_cocycle(const LieAlgebra<R>& g, const Cochain<R>& c) {
    return differential(g, c).is_zero();
}

// d of a 0-cochain a (adjoint): sum_i [a, g_i] (x) g_i*
template <class R>
Cochain<R> differential0(const LieAlgebra<R>& g, const SparseVec<R>& a) {
    Cochain<R> out(1, Module::adjoint);
    for (int i = 0; i < g.dim(); ++i) {
        SparseVec<R> br = g.bracket_vec(a, {{i, g.scalar(1)}});
        for (auto& [m, c] : br) out.add_term(m, {i}, c);
    }
    return out;
}

// wedge product of a module-valued 1-cochain with a scalar wedge monomial
// (helper for the product-rule route to the differential)
template <class R>
Cochain<R> wedge_extend(const Cochain<R>& one_form, const std::vector<int>& w, int q_out) {
    Cochain<R> out(q_out, one_form.module());
    for (auto& [u, comp] : one_form.terms()) {
        std::vector<int> merged = u;
        merged.insert(merged.end(), w.begin(), w.end());
        for (auto& [m, c] : comp) out.add_term(m, merged, c);
    }
    return out;
}

// product-rule form of the differential on a (x) w: a (x) dw + da ^ w;
// equals `differential` on every input (checked in the tests)
template <class R>
Cochain<R> differential_product_rule(const LieAlgebra<R>& g, const Cochain<R>& c) {
    if (c.module() != Module::adjoint)
        throw std::invalid_argument("differential_product_rule: adjoint coefficients only");
    Cochain<R> out(c.q() + 1, Module::adjoint);
    for (auto& [w, comp] : c.terms()) {
        // dw with trivial coefficients
        Cochain<R> omega(c.q(), Module::trivial);
        omega.add_term(0, w, g.scalar(1));
        Cochain<R> domega = differential(g, omega);
        for (auto& [m, cm] : comp) {
            // a (x) dw
            for (auto& [w2, comp2] : domega.terms()) {
                auto it = comp2.find(0);
                if (it != comp2.end()) out.add_term(m, w2, cm * it->second);
            }
            // da ^ w
            Cochain<R> da = differential0(g, {{m, cm}});
            Cochain<R> ext = wedge_extend(da, w, c.q() + 1);
            out.add_scaled(ext, 1);
        }
    }
    return out;
}

// Massey (Nijenhuis) bracket of two adjoint 2-cochains:
//   [[a,b]](x,y,z) = a(b(x,y),z) + b(a(x,y),z) + cyclic(x,y,z)
// for p = 2 and a = b the single-sum definition a(a(x,y),z) + cyclic is used
template <class R>
Cochain<R> massey(const LieAlgebra<R>& g, const Cochain<R>& a, const Cochain<R>& b) {
    if (a.q() != 2 || b.q() != 2 || a.module() != Module::adjoint ||
        b.module() != Module::adjoint)
        throw std::invalid_argument("massey: adjoint 2-cochains required");
    bool diagonal_p2 = (g.p() == 2) && (a == b);
    int n = g.dim();
    Cochain<R> out(3, Module::adjoint);
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            for (int z = y + 1; z < n; ++z) {
                SparseVec<R> val;
                const int cyc[3][3] = {{x, y, z}, {y, z, x}, {z, x, y}};
                for (auto& t : cyc) {
                    svec_add(val, a.eval_vec_first(b.eval({t[0], t[1]}), {t[2]}));
                    if (!diagonal_p2)
                        svec_add(val, b.eval_vec_first(a.eval({t[0], t[1]}), {t[2]}));
                }
                for (auto& [m, c] : val) out.add_term(m, {x, y, z}, c);
            }
    return out;
}

// push a cochain through a basis-permuting (up to sign) automorphism given
// by images sigma(g_j) = sign_j * g_{perm_j}: (sigma . c)(u..) = sigma(c(sigma u..))
template <class R>
Cochain<R> transport(const Cochain<R>& c, const std::vector<int>& perm,
                     const std::vector<int>& sign, const LieAlgebra<R>& g) {
    Cochain<R> out(c.q(), c.module());
    for (auto& [w, comp] : c.terms()) {
        std::vector<int> w2(w.size());
        long s = 1;
        for (size_t i = 0; i < w.size(); ++i) {
            w2[i] = perm[w[i]];
            s *= sign[w[i]];
        }
        for (auto& [m, cc] : comp) {
            long s2 = s * sign[m];
            out.add_term(perm[m], w2, cc.times(s2));
        }
    }
    (void)g;
    return out;
}

// specialize parametric cochains at a parameter tuple
inline Cochain<FE> specialize(const Cochain<ParamPoly>& c, const std::vector<FE>& t) {
    Cochain<FE> out(c.q(), c.module());
    for (auto& [w, comp] : c.terms())
        for (auto& [m, poly] : comp) out.add_term(m, w, poly.eval(t));
    return out;
}

// lift a prime-field cochain into the polynomial ring (optionally scaled by a
// monomial)
inline Cochain<ParamPoly> lift(const Cochain<FE>& c, int nvars,
                               const ParamPoly::Expo* monomial = nullptr) {
    int p = 0;
    for (auto& [w, comp] : c.terms())
        for (auto& [m, x] : comp) p = x.field().p();
    if (!p) throw std::invalid_argument("lift: zero cochain has no context");
    Cochain<ParamPoly> out(c.q(), c.module());
    for (auto& [w, comp] : c.terms())
        for (auto& [m, x] : comp) {
            if (x.field().k() != 1) throw std::invalid_argument("lift: prime field only");
            ParamPoly coeff = monomial ? ParamPoly::monomial(p, *monomial, x.code())
                                       : ParamPoly::constant(p, nvars, x.code());
            out.add_term(m, w, coeff);
        }
    return out;
}

std::string cochain_str(const Cochain<FE>& c, const std::vector<std::string>& basis);

}  // namespace modlie
