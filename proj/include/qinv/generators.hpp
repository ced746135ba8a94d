#ifndef QINV_GENERATORS_HPP
#define QINV_GENERATORS_HPP

#include "qinv/quasi.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qinv {

// E_triv-triv = x1^2 x2 + x2^2 x3 + x3^2 x1 over F_2.
PolyFp e_trivtriv_poly();
// E = -x1^2 x2 - x1^2 x3 + x1 x2^2 + x1 x3^2 over F_3.
PolyFp e_poly();
// F = (x1 - x2) x1 x2 over F_3.
PolyFp f_poly();

// The named constants for one characteristic, including Delta = prod (xi-xj).
std::vector<std::pair<std::string, PolyFp>> special_polys(std::uint64_t p);

struct GeneratorEntry {
    PolyFp poly;
    unsigned degree = 0;
    std::string rep; // indecomposable label from classify_module
};

// A generator set for Q_m(3, F_p) together with the expanded module-generator
// list used for rank checks (a 2-dimensional std copy contributes two module
// generators, so the module degree multiset matches the Hilbert numerator).
struct GeneratorSet {
    std::uint64_t p = 0;
    QuasiOrder m;
    std::vector<GeneratorEntry> entries;
    std::vector<PolyFp> module_gens;

    std::vector<unsigned> module_degrees() const {
        std::vector<unsigned> d;
        d.reserve(module_gens.size());
        for (const auto& g : module_gens) d.push_back(g.is_zero() ? 0 : g.degree());
        return d;
    }
};

// {1, E_triv-triv prod^{2m}, (x1-x2)^{2^{a+1}}, (x1-x2)^{2^a} prod^{2m+1-2^a}}
// (base case twice_m = 0: (x1-x2) and (x1-x2)^2).
GeneratorSet char2_generator_set(const QuasiOrder& m);

// {1, K, L, K1, L1, F prod^{2m}}: K and L span the sign-triv generators at
// degrees d and 6m+3-d, K1 and L1 are the s23-invariant solutions of
// (1-s12)T = K resp. L, normalized to zero symmetric component.
GeneratorSet char3_generator_set(const QuasiOrder& m);

struct VerifyDegreeRow {
    unsigned degree = 0;
    unsigned dim = 0;       // oracle dimension of the component
    unsigned rows = 0;      // module products = free-module series coefficient
    unsigned rank = 0;      // rank of the span of those products
};

struct VerifyReport {
    bool ok = true;
    unsigned checked_to = 0;
    unsigned failure_degree = 0;
    std::string failure;
    std::vector<VerifyDegreeRow> per_degree;
};

// Degree-by-degree certification that the module generators freely generate
// the component: at every degree <= max_degree the products generator x
// (symmetric monomial) must be independent (freeness), must span the oracle
// component (spanning), and their count must equal the oracle dimension
// (series equality). Stops at the first failure.
VerifyReport verify_free_generation(const GeneratorSet& gens, unsigned max_degree);

struct Classification {
    unsigned dim = 0;
    unsigned fixed_dim = 0;
    unsigned sign_dim = 0;
    std::string label;
};

// Classifies the cyclic S3-module generated by a homogeneous polynomial via
// the fingerprint (dim of orbit span, fixed subspace, sign-isotypic subspace).
Classification classify_module(const PolyFp& k);

} // namespace qinv

#endif
