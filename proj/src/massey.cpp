#include "modlie/massey.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace modlie {

namespace {

bool is_zero_expo(const std::vector<int>& e) {
    return std::all_of(e.begin(), e.end(), [](int x) { return !x; });
}

}  // namespace

Cochain<FE> mc_obstruction(const DeformationFamily& family, const std::vector<int>& monomial) {
    const LieAlgebra<FE>& g = family.base;
    int n = g.dim();
    Cochain<FE> out(3, Module::adjoint);
    if (int(monomial.size()) != family.nparams())
        throw std::invalid_argument("mc_obstruction: monomial arity");
    // ordered pairs (mu1, mu2) of nonzero monomials with mu1 + mu2 = monomial
    std::vector<std::pair<const Cochain<FE>*, const Cochain<FE>*>> pairs;
    for (auto& [e1, c1] : family.terms) {
        if (is_zero_expo(e1)) continue;
        std::vector<int> e2(monomial.size());
        bool ok = true;
        for (size_t i = 0; i < e2.size(); ++i) {
            e2[i] = monomial[i] - e1[i];
            if (e2[i] < 0) { ok = false; break; }
        }
        if (!ok || is_zero_expo(e2)) continue;
        auto it = family.terms.find(e2);
        if (it == family.terms.end()) continue;
        pairs.push_back({&c1, &it->second});
    }
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            for (int z = y + 1; z < n; ++z) {
                SparseVec<FE> val;
                const int cyc[3][3] = {{x, y, z}, {y, z, x}, {z, x, y}};
                for (auto& [a, b] : pairs)
                    for (auto& t : cyc)
                        svec_add(val, a->eval_vec_first(b->eval({t[0], t[1]}), {t[2]}));
                for (auto& [m, c] : val) out.add_term(m, {x, y, z}, c);
            }
    return out;
}

std::vector<std::vector<int>> monomials_of_degree(int nvars, int degree) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(nvars, 0);
    // lexicographic descent with t1 largest first gives t1^d, t1^(d-1)t2, ...
    std::function<void(int, int)> rec = [&](int pos, int rem) {
        if (pos == nvars - 1) {
            cur[pos] = rem;
            out.push_back(cur);
            return;
        }
        for (int e = rem; e >= 0; --e) {
            cur[pos] = e;
            rec(pos + 1, rem - e);
        }
    };
    if (nvars > 0) rec(0, degree);
    return out;
}

McResult mc_integrate(const LieAlgebra<FE>& g, const std::vector<Cochain<FE>>& cocycles,
                      int max_total_degree) {
    int nv = int(cocycles.size());
    std::vector<std::string> names;
    for (int i = 0; i < nv; ++i) names.push_back("t" + std::to_string(i + 1));
    McResult res{false, make_family(g, names), {}, {}};
    for (int i = 0; i < nv; ++i) {
        if (!is_cocycle(g, cocycles[i]))
            throw std::invalid_argument("mc_integrate: input " + std::to_string(i) +
                                        " is not closed");
        std::vector<int> e(nv, 0);
        e[i] = 1;
        res.family.terms.emplace(e, cocycles[i]);
    }
    CoboundarySolver solver(g, 2);
    for (int deg = 2; deg <= max_total_degree; ++deg) {
        for (auto& mu : monomials_of_degree(nv, deg)) {
            Cochain<FE> obs = mc_obstruction(res.family, mu);
            if (obs.is_zero()) continue;
            ObstructionStep step;
            step.monomial = mu;
            step.obstruction = obs;
            if (!is_cocycle(g, obs))
                throw std::logic_error("mc_integrate: obstruction fails to be closed");
            Cochain<FE> rhs = obs.times(g.scalar(-1));
            auto sol = solver.solve(rhs);
            if (std::holds_alternative<LinearSystemCertificate>(sol)) {
                step.resolved = false;
                step.certificate = std::get<LinearSystemCertificate>(sol);
                res.steps.push_back(std::move(step));
                res.success = false;
                std::ostringstream os;
                os << "obstruction at monomial (";
                for (size_t i = 0; i < mu.size(); ++i) os << (i ? "," : "") << mu[i];
                os << ") is not a coboundary";
                res.failure = os.str();
                return res;
            }
            step.resolved = true;
            step.term = std::get<Cochain<FE>>(sol);
            if (!step.term.is_zero()) res.family.terms.emplace(mu, step.term);
            res.steps.push_back(std::move(step));
        }
    }
    // final arbiter: the parametric Jacobi identity
    auto viol = check_jacobi(res.family.parametric());
    if (!viol.empty()) {
        res.success = false;
        std::ostringstream os;
        os << "parametric Jacobi residual nonzero on " << viol.size()
           << " basis triples (terms beyond degree " << max_total_degree << " required)";
        res.failure = os.str();
        return res;
    }
    res.success = true;
    return res;
}

}  // namespace modlie
