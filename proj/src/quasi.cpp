#include "qinv/quasi.hpp"

#include "qinv/binomial.hpp"
#include "qinv/errors.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace qinv {

std::vector<Monomial> monomials_of_degree(unsigned d) {
    std::vector<Monomial> out;
    out.reserve(monomial_count(d));
    for (int a = int(d); a >= 0; --a)
        for (int b = int(d) - a; b >= 0; --b)
            out.push_back(mono(unsigned(a), unsigned(b), d - unsigned(a) - unsigned(b)));
    return out;
}

std::size_t monomial_count(unsigned d) { return std::size_t(d + 1) * (d + 2) / 2; }

std::size_t monomial_index(const Monomial& m) {
    // Position of m among the monomials of its degree, graded-lex descending.
    unsigned d = m.degree();
    unsigned s = d - m.e[0]; // number of larger-a blocks skipped: sizes 1..s
    return std::size_t(s) * (s + 1) / 2 + (s - m.e[1]);
}

std::vector<std::uint16_t> poly_to_vector(const PolyFp& k, unsigned d) {
    std::vector<std::uint16_t> v(monomial_count(d), 0);
    for (const auto& [m, c] : k.terms()) {
        if (m.degree() != d) throw contract_error("poly_to_vector: wrong degree");
        v[monomial_index(m)] = std::uint16_t(c.value());
    }
    return v;
}

PolyFp vector_to_poly(const std::vector<std::uint16_t>& v, unsigned d, std::uint64_t p) {
    PolyFp k;
    auto monos = monomials_of_degree(d);
    if (v.size() != monos.size()) throw contract_error("vector_to_poly: wrong length");
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] % p != 0) k.add_term(monos[i], Fp(v[i], p));
    return k;
}

std::vector<std::array<unsigned, 3>> symmetric_exponents(unsigned d) {
    std::vector<std::array<unsigned, 3>> out;
    for (unsigned c = 0; 3 * c <= d; ++c)
        for (unsigned b = 0; 2 * b + 3 * c <= d; ++b)
            out.push_back({d - 2 * b - 3 * c, b, c});
    return out;
}

unsigned symmetric_dimension(unsigned d) { return unsigned(symmetric_exponents(d).size()); }

PolyFp symmetric_monomial(const std::array<unsigned, 3>& abc, std::uint64_t p) {
    FpRing ring{p};
    PolyFp r = pow(elementary_symmetric(1, ring), abc[0]) *
               pow(elementary_symmetric(2, ring), abc[1]) *
               pow(elementary_symmetric(3, ring), abc[2]);
    return r;
}

namespace {

// Appends the rows forcing the coefficient of u^t (1 <= t <= 2m) to vanish in
// (1 - s_ij)K after the substitution x_j = x_i + u, for all three
// transpositions. For a monomial x1^a x2^b x3^c the substituted difference is
//   s12:  sum_t (C(b,t) - C(a,t)) x1^{a+b-t} u^t x3^c
//   s13:  sum_t (C(c,t) - C(a,t)) x1^{a+c-t} x2^b u^t
//   s23:  sum_t (C(c,t) - C(b,t)) x1^a x2^{b+c-t} u^t
// so each row is indexed by (t, exponent of the untouched variable).
void append_quasi_rows(FpSolver& solver, const QuasiOrder& m, unsigned d,
                       const std::vector<Monomial>& monos) {
    const std::uint64_t p = m.characteristic();
    const unsigned tmax = std::min(m.twice_m(), d);
    if (tmax == 0) return;
    BinomialTableFp binom(d, p);
    const std::size_t n = monos.size();

    auto fill = [&](unsigned fixed_var, unsigned e_first, unsigned e_second) {
        // fixed_var: index whose exponent labels the row; e_first/e_second:
        // the exponents whose binomials enter with signs -1/+1.
        for (unsigned t = 1; t <= tmax; ++t) {
            for (unsigned fixed = 0; fixed + t <= d; ++fixed) {
                std::vector<std::uint16_t> row(n, 0);
                bool nonzero = false;
                for (std::size_t col = 0; col < n; ++col) {
                    const Monomial& mn = monos[col];
                    if (mn.e[fixed_var] != fixed) continue;
                    std::uint64_t plus = binom(mn.e[e_second], t);
                    std::uint64_t minus = binom(mn.e[e_first], t);
                    std::uint64_t entry = (plus + p - minus) % p;
                    if (entry) {
                        row[col] = std::uint16_t(entry);
                        nonzero = true;
                    }
                }
                if (nonzero) solver.add_row(std::move(row));
            }
        }
    };

    fill(2, 0, 1); // s12: rows (t, e3), entries C(b,t) - C(a,t)
    fill(1, 0, 2); // s13: rows (t, e2), entries C(c,t) - C(a,t)
    fill(0, 1, 2); // s23: rows (t, e1), entries C(c,t) - C(b,t)
}

void append_eigen_rows(FpSolver& solver, std::uint64_t p, const Permutation& sigma,
                       int eigenvalue, const std::vector<Monomial>& monos) {
    if (eigenvalue != 1 && eigenvalue != -1)
        throw std::domain_error("eigen_component: eigenvalue must be +1 or -1");
    if (eigenvalue == -1 && p == 2)
        throw std::domain_error("eigen_component: eigenvalue -1 is unsupported for p = 2 "
                                "(-1 = +1 in F_2)");
    const std::size_t n = monos.size();
    for (std::size_t col = 0; col < n; ++col) {
        Monomial image = sigma.apply(monos[col]);
        std::size_t img_col = monomial_index(image);
        if (img_col < col) continue; // each orbit pair once
        std::vector<std::uint16_t> row(n, 0);
        if (img_col == col) {
            if (eigenvalue == 1) continue; // 0 = 0
            row[col] = std::uint16_t(2 % p);
            if (row[col] == 0) continue;
        } else {
            // K - eigenvalue * sigma(K) = 0 reads z_e - eigenvalue z_{sigma e} = 0.
            row[col] = 1;
            row[img_col] = std::uint16_t(eigenvalue == 1 ? p - 1 : 1);
        }
        solver.add_row(std::move(row));
    }
}

struct DimKey {
    std::uint64_t p;
    unsigned twice_m;
    unsigned d;
    auto operator<=>(const DimKey&) const = default;
};

std::map<DimKey, unsigned>& dim_cache() {
    static std::map<DimKey, unsigned> cache;
    return cache;
}
std::mutex& dim_cache_mutex() {
    static std::mutex mu;
    return mu;
}

} // namespace

unsigned dim_component(const QuasiOrder& m, unsigned d) {
    if (m.characteristic() < 2)
        throw std::domain_error("dim_component: oracle requires a prime characteristic");
    DimKey key{m.characteristic(), m.twice_m(), d};
    {
        std::lock_guard<std::mutex> lock(dim_cache_mutex());
        auto it = dim_cache().find(key);
        if (it != dim_cache().end()) return it->second;
    }
    auto monos = monomials_of_degree(d);
    FpSolver solver(m.characteristic(), monos.size());
    append_quasi_rows(solver, m, d, monos);
    unsigned dim = unsigned(monos.size() - solver.rank());
    if (solver.rank() + dim != monos.size())
        throw contract_error("dim_component: rank-nullity mismatch");
    std::lock_guard<std::mutex> lock(dim_cache_mutex());
    dim_cache().emplace(key, dim);
    return dim;
}

std::vector<PolyFp> component_basis(const QuasiOrder& m, unsigned d) {
    if (m.characteristic() < 2)
        throw std::domain_error("component_basis: oracle requires a prime characteristic");
    auto monos = monomials_of_degree(d);
    FpSolver solver(m.characteristic(), monos.size());
    append_quasi_rows(solver, m, d, monos);
    auto kernel = solver.kernel_basis();
    if (solver.rank() + kernel.size() != monos.size())
        throw contract_error("component_basis: rank-nullity mismatch");
    std::vector<PolyFp> basis;
    basis.reserve(kernel.size());
    for (const auto& v : kernel) basis.push_back(vector_to_poly(v, d, m.characteristic()));
    return basis;
}

std::vector<PolyFp> eigen_component(const QuasiOrder& m, unsigned d,
                                    const Permutation& transposition, int eigenvalue) {
    auto monos = monomials_of_degree(d);
    FpSolver solver(m.characteristic(), monos.size());
    append_quasi_rows(solver, m, d, monos);
    append_eigen_rows(solver, m.characteristic(), transposition, eigenvalue, monos);
    auto kernel = solver.kernel_basis();
    std::vector<PolyFp> basis;
    basis.reserve(kernel.size());
    for (const auto& v : kernel) basis.push_back(vector_to_poly(v, d, m.characteristic()));
    return basis;
}

SpanWitness in_module_span(const PolyFp& k, const std::vector<PolyFp>& gens, std::uint64_t p) {
    if (!k.is_zero() && !k.is_homogeneous())
        throw contract_error("in_module_span: K must be homogeneous");
    for (const auto& g : gens)
        if (g.is_zero() || !g.is_homogeneous())
            throw contract_error("in_module_span: generators must be nonzero homogeneous");

    SpanWitness result;
    if (k.is_zero()) {
        result.member = true;
        result.coefficients.assign(gens.size(), PolyFp::zero());
        return result;
    }

    const unsigned target_degree = k.degree();
    struct RowTag {
        std::size_t gen;
        std::array<unsigned, 3> abc;
    };
    std::vector<RowTag> tags;
    std::vector<std::vector<std::uint16_t>> rows;
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        unsigned gd = gens[gi].degree();
        if (gd > target_degree) continue;
        for (const auto& abc : symmetric_exponents(target_degree - gd)) {
            PolyFp product = symmetric_monomial(abc, p) * gens[gi];
            rows.push_back(poly_to_vector(product, target_degree));
            tags.push_back({gi, abc});
        }
    }

    RowSpanSolver span(p, monomial_count(target_degree), rows.size());
    for (auto& r : rows) span.add_row(r);
    auto witness = span.express(poly_to_vector(k, target_degree));
    if (!witness) return result;

    result.member = true;
    result.coefficients.assign(gens.size(), PolyFp::zero());
    for (std::size_t i = 0; i < witness->size(); ++i) {
        if ((*witness)[i] == 0) continue;
        PolyFp term = Fp((*witness)[i], p) * symmetric_monomial(tags[i].abc, p);
        result.coefficients[tags[i].gen] = result.coefficients[tags[i].gen] + term;
    }
    return result;
}

std::optional<Relation> find_relation(const std::vector<PolyFp>& gens, std::uint64_t p,
                                      unsigned max_degree) {
    for (const auto& g : gens)
        if (g.is_zero() || !g.is_homogeneous())
            throw contract_error("find_relation: generators must be nonzero homogeneous");

    for (unsigned degree = 0; degree <= max_degree; ++degree) {
        struct RowTag {
            std::size_t gen;
            std::array<unsigned, 3> abc;
        };
        std::vector<RowTag> tags;
        RowSpanSolver span(p, monomial_count(degree),
                           [&] {
                               std::size_t n = 0;
                               for (const auto& g : gens)
                                   if (g.degree() <= degree)
                                       n += symmetric_exponents(degree - g.degree()).size();
                               return n;
                           }());
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            unsigned gd = gens[gi].degree();
            if (gd > degree) continue;
            for (const auto& abc : symmetric_exponents(degree - gd)) {
                PolyFp product = symmetric_monomial(abc, p) * gens[gi];
                auto dep = span.add_row(poly_to_vector(product, degree));
                tags.push_back({gi, abc});
                if (dep) {
                    Relation rel;
                    rel.degree = degree;
                    rel.coefficients.assign(gens.size(), PolyFp::zero());
                    for (std::size_t i = 0; i < dep->size(); ++i) {
                        if ((*dep)[i] == 0) continue;
                        PolyFp term = Fp((*dep)[i], p) * symmetric_monomial(tags[i].abc, p);
                        rel.coefficients[tags[i].gen] =
                            rel.coefficients[tags[i].gen] + term;
                    }
                    return rel;
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace qinv
