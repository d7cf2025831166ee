#pragma once

#include <map>
#include <string>
#include <vector>

#include "modlie/cochain.hpp"
#include "modlie/cohomology.hpp"

namespace modlie {

// multiparameter deformation: base algebra plus a map from parameter
// monomials to 2-cochains; the zero monomial always carries the base bracket
struct DeformationFamily {
    LieAlgebra<FE> base;
    std::vector<std::string> params;
    // exponent vector (length = params.size()) -> 2-cochain over the prime field
    std::map<std::vector<int>, Cochain<FE>> terms;

    int nparams() const { return int(params.size()); }

    // the bracket as a structure-constant table over the polynomial ring
    LieAlgebra<ParamPoly> parametric() const;

    // concrete algebra at a parameter tuple over any field of the same
    // characteristic
    LieAlgebra<FE> specialize(const std::vector<FE>& t) const;
};

// make the base bracket a 2-cochain (the zero-monomial family term)
Cochain<FE> bracket_cochain(const LieAlgebra<FE>& g);

DeformationFamily make_family(const LieAlgebra<FE>& base, std::vector<std::string> params);

// ---- golden-data loaders ----

// missing or corrupted golden data (distinct from a refuted statement)
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// resolves the data directory: explicit override > MODLIE_DATA env > built-in
std::string data_dir();
void set_data_dir(const std::string& dir);
// FNV-1a 64 checksum of a file, as 16 hex digits (manifest format)
std::string file_checksum(const std::string& path);

// a named 2-cochain from the golden data set ("c0", "alpha_06", ..., p in {2,3})
Cochain<FE> load_cochain(int p, const std::string& name);
std::vector<std::string> list_cochains(int p);

DeformationFamily load_family(const std::string& id);  // thm1 | thm3 | prop1 | prop2

DeformationFamily family_thm1();
DeformationFamily family_thm3();
DeformationFamily family_prop1();
DeformationFamily family_prop2();

}  // namespace modlie
