#include "modlie/families.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace modlie {

using nlohmann::json;

Cochain<FE> bracket_cochain(const LieAlgebra<FE>& g) {
    Cochain<FE> c(2, Module::adjoint);
    for (int i = 0; i < g.dim(); ++i)
        for (int j = i + 1; j < g.dim(); ++j)
            for (auto& [k, coeff] : g.bracket_raw(i, j)) c.add_term(k, {i, j}, coeff);
    return c;
}

DeformationFamily make_family(const LieAlgebra<FE>& base, std::vector<std::string> params) {
    DeformationFamily f{base, std::move(params), {}};
    f.terms.emplace(std::vector<int>(f.params.size(), 0), bracket_cochain(base));
    return f;
}

LieAlgebra<ParamPoly> DeformationFamily::parametric() const {
    int p = base.p();
    int nv = nparams();
    LieAlgebra<ParamPoly> g(p, base.basis(), ParamPoly::constant(p, nv, 1));
    for (int i = 0; i < base.dim(); ++i)
        for (int j = i + 1; j < base.dim(); ++j) {
            SparseVec<ParamPoly> v;
            for (auto& [e, c] : terms) {
                SparseVec<FE> comp = c.eval({i, j});
                for (auto& [k, x] : comp)
                    svec_add(v, k, ParamPoly::monomial(p, e, x.code()));
            }
            g.set_bracket(i, j, std::move(v));
        }
    return g;
}

LieAlgebra<FE> DeformationFamily::specialize(const std::vector<FE>& t) const {
    if (int(t.size()) != nparams())
        throw std::invalid_argument("specialize: tuple length mismatch");
    const Field& F = t.empty() ? base.unit().field() : t[0].field();
    if (F.p() != base.p())
        throw std::invalid_argument("specialize: characteristic mismatch");
    LieAlgebra<FE> g(base.p(), base.basis(), FE::one(F));
    for (int i = 0; i < base.dim(); ++i)
        for (int j = i + 1; j < base.dim(); ++j) {
            SparseVec<FE> v;
            for (auto& [e, c] : terms) {
                FE mono = FE::one(F);
                for (size_t a = 0; a < e.size(); ++a)
                    if (e[a]) mono = mono * t[a].pow(e[a]);
                if (mono.is_zero()) continue;
                SparseVec<FE> comp = c.eval({i, j});
                for (auto& [k, x] : comp) svec_add(v, k, mono * FE(F, F.from_int(x.code())));
            }
            g.set_bracket(i, j, std::move(v));
        }
    return g;
}

// ---------------------------------------------------------------- data files

namespace {

std::string g_data_override;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

uint64_t fnv1a(const std::string& data) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char b : data) {
        h ^= b;
        h *= 0x100000001b3ull;
    }
    return h;
}

json load_checked(const std::string& rel) {
    static std::map<std::string, std::string> manifest;
    std::string root = data_dir();
    if (manifest.empty()) {
        json m = json::parse(read_file(root + "/manifest.json"));
        for (auto& [k, v] : m.at("files").items()) manifest[k] = v.get<std::string>();
    }
    std::string raw = read_file(root + "/" + rel);
    auto it = manifest.find(rel);
    if (it == manifest.end()) throw DataError("file not in manifest: " + rel);
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", (unsigned long long)fnv1a(raw));
    if (it->second != buf)
        throw DataError("checksum mismatch for " + rel + " (expected " + it->second +
                        ", got " + buf + ")");
    return json::parse(raw);
}

}  // namespace

std::string data_dir() {
    if (!g_data_override.empty()) return g_data_override;
    if (const char* env = std::getenv("MODLIE_DATA")) return env;
#ifdef MODLIE_DATA_DIR
    return MODLIE_DATA_DIR;
#else
    return "data";
#endif
}

void set_data_dir(const std::string& dir) { g_data_override = dir; }

std::string file_checksum(const std::string& path) {
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", (unsigned long long)fnv1a(read_file(path)));
    return buf;
}

Cochain<FE> load_cochain(int p, const std::string& name) {
    json j = load_checked("cochains/p" + std::to_string(p) + "/" + name + ".json");
    const Field& F = Field::GF(p);
    if (j.at("p").get<int>() != p) throw DataError(name + ": characteristic mismatch");
    Cochain<FE> c(j.at("q").get<int>(),
                  j.at("module").get<std::string>() == "adjoint" ? Module::adjoint
                                                                 : Module::trivial);
    for (auto& t : j.at("terms")) {
        int m = t.at(0).get<int>();
        std::vector<int> w = t.at(1).get<std::vector<int>>();
        int coeff = t.at(2).get<int>();
        c.add_term(m, w, FE(F, F.from_int(coeff)));
    }
    return c;
}

std::vector<std::string> list_cochains(int p) {
    json mm = json::parse(read_file(data_dir() + "/manifest.json"));
    std::vector<std::string> out;
    std::string prefix = "cochains/p" + std::to_string(p) + "/";
    for (auto& [k, v] : mm.at("files").items()) {
        if (k.rfind(prefix, 0) == 0) {
            std::string name = k.substr(prefix.size());
            name = name.substr(0, name.size() - 5);  // drop .json
            out.push_back(name);
        }
    }
    return out;
}

DeformationFamily load_family(const std::string& id) {
    json j = load_checked("families/" + id + ".json");
    std::string alg = j.at("algebra").get<std::string>();
    LieAlgebra<FE> base = alg == "o5-p3" ? build_o5_p3()
                        : alg == "o51-p2" ? build_o51_p2()
                        : throw DataError("unknown base algebra " + alg);
    int p = base.p();
    DeformationFamily f = make_family(base, j.at("params").get<std::vector<std::string>>());
    for (auto& t : j.at("terms")) {
        std::vector<int> e = t.at(0).get<std::vector<int>>();
        if (int(e.size()) != f.nparams()) throw DataError(id + ": exponent arity");
        std::string name = t.at(1).get<std::string>();
        long coeff = t.size() > 2 ? t.at(2).get<long>() : 1;
        Cochain<FE> c = load_cochain(p, name);
        auto it = f.terms.find(e);
        if (it == f.terms.end()) {
            f.terms.emplace(e, c.times(base.scalar(coeff)));
        } else {
            it->second.add_scaled(c, coeff);
        }
    }
    return f;
}

DeformationFamily family_thm1() { return load_family("thm1"); }
DeformationFamily family_thm3() { return load_family("thm3"); }
DeformationFamily family_prop1() { return load_family("prop1"); }
DeformationFamily family_prop2() { return load_family("prop2"); }

std::string cochain_str(const Cochain<FE>& c, const std::vector<std::string>& basis) {
    if (c.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [w, comp] : c.terms())
        for (auto& [m, x] : comp) {
            if (!first) os << " + ";
            first = false;
            if (x != FE::one(x.field())) os << x << "*";
            os << basis[m] << "(x)(";
            for (size_t i = 0; i < w.size(); ++i) os << (i ? "^" : "") << basis[w[i]] << "*";
            os << ")";
        }
    return os.str();
}

}  // namespace modlie
