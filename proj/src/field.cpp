#include "modlie/field.hpp"

#include <map>
#include <mutex>
#include <ostream>
#include <sstream>

namespace modlie {

namespace {

// polynomial helpers over GF(p), little-endian coefficient vectors
std::vector<int> poly_trim(std::vector<int> a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
    if (a.empty() || b.empty()) return {};
    std::vector<int> c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    return poly_trim(c);
}

std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, int p) {
    a = poly_trim(a);
    int dm = int(m.size()) - 1;
    while (int(a.size()) - 1 >= dm) {
        int da = int(a.size()) - 1;
        int lead = a.back();  // m is monic
        for (int i = 0; i <= dm; ++i) {
            int& t = a[da - dm + i];
            t = ((t - lead * m[i]) % p + p) % p;
        }
        a = poly_trim(a);
        if (a.empty()) break;
    }
    return a;
}

bool poly_divides(const std::vector<int>& d, const std::vector<int>& a, int p) {
    return poly_mod(a, d, p).empty();
}

// irreducibility by trial division against all monic divisors of degree <= k/2
bool irreducible(const std::vector<int>& f, int p) {
    int k = int(f.size()) - 1;
    for (int dd = 1; dd <= k / 2; ++dd) {
        long count = 1;
        for (int i = 0; i < dd; ++i) count *= p;
        for (long n = 0; n < count; ++n) {
            std::vector<int> d(dd + 1, 0);
            long t = n;
            for (int i = 0; i < dd; ++i) { d[i] = int(t % p); t /= p; }
            d[dd] = 1;
            if (poly_divides(d, f, p)) return false;
        }
    }
    return true;
}

std::vector<int> find_modulus(int p, int k) {
    long count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (long n = 0; n < count; ++n) {
        std::vector<int> f(k + 1, 0);
        long t = n;
        for (int i = 0; i < k; ++i) { f[i] = int(t % p); t /= p; }
        f[k] = 1;
        if (irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");
}

int factor_p(int q, int& k) {
    for (int p : {2, 3}) {
        int kk = 0, t = q;
        while (t % p == 0) { t /= p; ++kk; }
        if (t == 1 && kk >= 1) { k = kk; return p; }
    }
    throw std::invalid_argument("Field::GF: q must be a power of 2 or 3");
}

}  // namespace

Field::Field(int q) : q_(q) {
    p_ = factor_p(q, k_);
    if (q > 81) throw std::invalid_argument("Field::GF: q too large");
    mod_ = (k_ > 1) ? find_modulus(p_, k_) : std::vector<int>{0, 1};

    auto decode = [&](int a) {
        std::vector<int> c;
        for (int i = 0; i < k_; ++i) { c.push_back(a % p_); a /= p_; }
        return poly_trim(c);
    };
    auto encode = [&](const std::vector<int>& c) {
        int a = 0;
        for (int i = int(c.size()) - 1; i >= 0; --i) a = a * p_ + c[i];
        return a;
    };

    add_.resize(size_t(q) * q);
    mul_.resize(size_t(q) * q);
    neg_.resize(q);
    inv_.assign(q, 0);
    root_.resize(q);
    for (int a = 0; a < q; ++a) {
        auto ca = decode(a);
        std::vector<int> cn(ca.size());
        for (size_t i = 0; i < ca.size(); ++i) cn[i] = (p_ - ca[i]) % p_;
        neg_[a] = uint8_t(encode(poly_trim(cn)));
        for (int b = 0; b < q; ++b) {
            auto cb = decode(b);
            std::vector<int> cs(std::max(ca.size(), cb.size()), 0);
            for (size_t i = 0; i < ca.size(); ++i) cs[i] = ca[i];
            for (size_t i = 0; i < cb.size(); ++i) cs[i] = (cs[i] + cb[i]) % p_;
            add_[size_t(a) * q + b] = uint8_t(encode(poly_trim(cs)));
            mul_[size_t(a) * q + b] =
                uint8_t(encode(k_ > 1 ? poly_mod(poly_mul(ca, cb, p_), mod_, p_)
                                      : poly_mul(ca, cb, p_)));
        }
    }
    for (int a = 1; a < q; ++a)
        for (int b = 1; b < q; ++b)
            if (mul_[size_t(a) * q + b] == 1) { inv_[a] = uint8_t(b); break; }
    // inverse Frobenius: a -> a^(p^(k-1))
    long e = 1;
    for (int i = 0; i < k_ - 1; ++i) e *= p_;
    for (int a = 0; a < q; ++a) root_[a] = uint8_t(pow(a, e));
}

const Field& Field::GF(int q) {
    static std::map<int, Field*> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it == cache.end()) it = cache.emplace(q, new Field(q)).first;
    return *it->second;
}

int Field::inv(int a) const {
    if (a == 0) throw std::domain_error("Field::inv: zero");
    return inv_[a];
}

int Field::pow(int a, long e) const {
    if (e < 0) { a = inv(a); e = -e; }
    int r = from_int(1);
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

int Field::from_int(long n) const {
    long r = n % p_;
    if (r < 0) r += p_;
    return int(r);
}

std::vector<int> Field::coeffs(int a) const {
    std::vector<int> c(k_);
    for (int i = 0; i < k_; ++i) { c[i] = a % p_; a /= p_; }
    return c;
}

int Field::from_coeffs(const std::vector<int>& c) const {
    if (int(c.size()) > k_) throw std::invalid_argument("from_coeffs: too long");
    int a = 0;
    for (int i = int(c.size()) - 1; i >= 0; --i) {
        int d = ((c[i] % p_) + p_) % p_;
        a = a * p_ + d;
    }
    return a;
}

std::string Field::str(int a) const {
    if (k_ == 1) return std::to_string(a);
    auto c = coeffs(a);
    std::ostringstream os;
    bool first = true;
    for (int i = k_ - 1; i >= 0; --i) {
        if (!c[i]) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0 || c[i] != 1) os << c[i];
        if (i >= 1) os << (c[i] != 1 ? "*w" : "w");
        if (i >= 2) os << "^" << i;
    }
    if (first) os << "0";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const FE& x) {
    return os << x.field().str(x.code());
}

int lucas_binom_int(long m, long n, int p) {
    if (n < 0 || m < 0) throw std::invalid_argument("lucas_binom: negative");
    if (n > m) return 0;
    long r = 1;
    while (m > 0 || n > 0) {
        long md = m % p, nd = n % p;
        if (nd > md) return 0;
        // binom(md, nd) for digits < p, exact in long
        long b = 1;
        for (long i = 0; i < nd; ++i) b = b * (md - i) / (i + 1);
        r = (r * (b % p)) % p;
        m /= p;
        n /= p;
    }
    return int(r);
}

FE lucas_binom(long m, long n, const Field& f) {
    return FE(f, f.from_int(lucas_binom_int(m, n, f.p())));
}

FE pth_root(const FE& x) { return x.pth_root(); }

}  // namespace modlie
