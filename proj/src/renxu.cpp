#include "qinv/renxu.hpp"

#include "qinv/binomial.hpp"
#include "qinv/errors.hpp"
#include "qinv/linalg.hpp"

#include <map>
#include <mutex>

namespace qinv {

bool in_X(unsigned m) {
    while (m > 0) {
        if (m % 3 == 1) return true;
        m /= 3;
    }
    return false;
}

bool in_X_interval(unsigned m) {
    for (unsigned long long pa = 3; pa / 3 <= m; pa *= 3) {
        unsigned long long r = m % pa;
        if (r >= pa / 3 && r <= 2 * (pa / 3) - 1) return true;
    }
    return false;
}

bool conjecture_interval_check(unsigned m) {
    // exists a, k >= 0 with (3m+3) <= 3^a (3k+2) and 3^a (3k+1) <= 3m.
    for (unsigned long long pa = 1; pa <= 3ull * m; pa *= 3) {
        for (unsigned k = 0; pa * (3ull * k + 1) <= 3ull * m; ++k)
            if (3ull * m + 3 <= pa * (3ull * k + 2)) return true;
    }
    return false;
}

namespace {

// Constraint matrix over Z for "degree 3k+1, k-quasi-invariant, s12-eigenvalue
// -1"; columns are the monomials graded-lex descending.
std::vector<std::vector<BigInt>> char0_system(unsigned k) {
    const unsigned d = 3 * k + 1;
    auto monos = monomials_of_degree(d);
    const std::size_t n = monos.size();
    std::vector<std::vector<BigInt>> rows;

    auto add_quasi = [&](unsigned fixed_var, unsigned e_first, unsigned e_second) {
        for (unsigned t = 1; t <= 2 * k && t <= d; ++t) {
            for (unsigned fixed = 0; fixed + t <= d; ++fixed) {
                std::vector<BigInt> row(n, 0);
                bool nonzero = false;
                for (std::size_t col = 0; col < n; ++col) {
                    const Monomial& mn = monos[col];
                    if (mn.e[fixed_var] != fixed) continue;
                    BigInt entry =
                        binomial_exact(mn.e[e_second], t) - binomial_exact(mn.e[e_first], t);
                    if (entry != 0) {
                        row[col] = entry;
                        nonzero = true;
                    }
                }
                if (nonzero) rows.push_back(std::move(row));
            }
        }
    };
    add_quasi(2, 0, 1);
    add_quasi(1, 0, 2);
    add_quasi(0, 1, 2);

    // s12 K = -K: z_e + z_{s12 e} = 0 for every monomial orbit.
    for (std::size_t col = 0; col < n; ++col) {
        Monomial image = Permutation::s12().apply(monos[col]);
        std::size_t img = monomial_index(image);
        if (img < col) continue;
        std::vector<BigInt> row(n, 0);
        if (img == col) {
            row[col] = 2;
        } else {
            row[col] = 1;
            row[img] = 1;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::map<unsigned, PolyZ>& pk_cache() {
    static std::map<unsigned, PolyZ> cache;
    return cache;
}
std::mutex& pk_mutex() {
    static std::mutex mu;
    return mu;
}

} // namespace

PolyZ char0_generator(unsigned k, unsigned budget) {
    if (k > budget)
        throw std::domain_error("char0_generator: k = " + std::to_string(k) +
                                " exceeds the compute budget " + std::to_string(budget));
    {
        std::lock_guard<std::mutex> lock(pk_mutex());
        auto it = pk_cache().find(k);
        if (it != pk_cache().end()) return it->second;
    }

    const unsigned d = 3 * k + 1;
    auto monos = monomials_of_degree(d);
    auto result = integer_kernel(char0_system(k), monos.size());
    if (result.kernel.size() != 1)
        throw contract_error("char0_generator: solution space has dimension " +
                             std::to_string(result.kernel.size()) + ", expected 1");

    // Clear denominators, divide by the content, make the leading coefficient
    // positive (the kernel vector is ordered graded-lex descending already).
    const auto& v = result.kernel.front();
    BigInt lcm = 1;
    for (const auto& c : v)
        if (!c.is_zero()) lcm = boost::multiprecision::lcm(lcm, c.denominator());
    std::vector<BigInt> ints(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        ints[i] = v[i].numerator() * (lcm / v[i].denominator());
    BigInt content = integer_content(ints);
    if (content == 0) throw contract_error("char0_generator: zero kernel vector");
    for (auto& c : ints) c /= content;
    for (const auto& c : ints) {
        if (c == 0) continue;
        if (c < 0)
            for (auto& x : ints) x = -x;
        break;
    }

    PolyZ poly;
    for (std::size_t i = 0; i < ints.size(); ++i)
        if (ints[i] != 0) poly.add_term(monos[i], ints[i]);

    std::lock_guard<std::mutex> lock(pk_mutex());
    pk_cache().emplace(k, poly);
    return poly;
}

PolyFp pk_mod3(unsigned k, unsigned budget) {
    PolyFp r = reduce_mod_p(char0_generator(k, budget), 3);
    if (r.is_zero()) throw contract_error("pk_mod3: reduction vanished");
    return r;
}

PolyFp CounterexampleSpec::polynomial() const {
    FpRing f3{3};
    unsigned power = 1;
    for (unsigned i = 0; i < a; ++i) power *= 3;
    return pow(pk_mod3(k), power) * vandermonde_power(2 * b, f3);
}

std::optional<CounterexampleSpec> minimal_counterexample(unsigned m) {
    if (!in_X(m)) return std::nullopt;

    const unsigned order = 2 * m + 1;
    std::optional<CounterexampleSpec> best;
    // Any candidate with this a has degree at least 3^a, so 3^a < 3m+1 is a
    // complete enumeration bound.
    unsigned long long pa = 3;
    for (unsigned a = 1; pa < 3ull * m + 1; ++a, pa *= 3) {
        for (unsigned k = 0; k <= m; ++k) {
            if (in_X(k)) continue;
            unsigned long long attained = pa * (2ull * k + 1);
            unsigned b = attained >= order
                             ? 0
                             : unsigned((order - attained) / 2); // order - attained is even
            unsigned long long degree = pa * (3ull * k + 1) + 6ull * b;
            if (degree >= 3ull * m + 1) continue;
            CounterexampleSpec cand{a, k, b, unsigned(degree)};
            if (!best || cand.degree < best->degree ||
                (cand.degree == best->degree &&
                 std::pair(cand.a, cand.k) < std::pair(best->a, best->k)))
                best = cand;
        }
    }
    if (!best) throw contract_error("minimal_counterexample: m in X but no candidate found");

    // Desk-scale hygiene: certify the winner's polynomial against the oracle
    // definition whenever its P_k is within budget.
    if (m <= 12) {
        QuasiOrder order_m = QuasiOrder::integral(m, 3);
        if (!is_m_quasi_invariant(best->polynomial(), order_m))
            throw contract_error("minimal_counterexample: candidate fails quasi-invariance");
    }
    return best;
}

unsigned lowest_generator_degree(const QuasiOrder& m) {
    if (m.characteristic() == 3) {
        auto spec = minimal_counterexample(m.m_integer());
        return spec ? spec->degree : 3 * m.m_integer() + 1;
    }
    if (m.characteristic() == 2) {
        auto [lo, hi] = char2_degrees(m);
        return lo < hi ? lo : hi;
    }
    throw std::domain_error("lowest_generator_degree: p must be 2 or 3");
}

std::pair<unsigned, unsigned> char2_degrees(const QuasiOrder& m) {
    if (m.characteristic() != 2)
        throw std::domain_error("char2_degrees: requires characteristic 2");
    const unsigned order = m.required_exponent(); // 2m+1 = twice_m + 1
    if (m.twice_m() == 0) return {1, 2};
    unsigned pa = 1;
    while (pa * 2 < order) pa *= 2; // pa = 2^a, largest with 2^a < 2m+1
    return {2 * pa, pa + 3 * (order - pa)};
}

PolyFp StaircaseInfo::r_m() const {
    FpRing f3{3};
    if (phase == StaircasePhase::flat) return base.polynomial();
    return base.polynomial() * vandermonde_power(2 * (m - t - d), f3);
}

StaircaseInfo staircase_info(unsigned m) {
    if (!in_X(m)) throw contract_error("staircase_info: m is not in X");

    StaircaseInfo info;
    info.m = m;
    unsigned t = m;
    while (t > 0 && in_X(t - 1)) --t;
    if (t == 0) throw contract_error("staircase_info: no non-member below m");
    info.t = t - 1;
    if (info.t % 2 != 0) throw contract_error("staircase_info: t must be even");

    auto base = minimal_counterexample(info.t + 1);
    if (!base || base->b != 0)
        throw contract_error("staircase_info: R_{t+1} must have b = 0");
    info.base = *base;

    unsigned pa = 1;
    for (unsigned i = 0; i < base->a; ++i) pa *= 3;
    info.d = (pa / 3 + 1) / 2; // (3^{a-1} + 1)/2
    // R_{t+1} is quasi-invariant exactly up to order t+d = (3^a(2k+1)-1)/2.
    if (info.t + info.d != (pa * (2 * base->k + 1) - 1) / 2)
        throw contract_error("staircase_info: flat width mismatch");
    if (in_X(info.t + 2 * info.d))
        throw contract_error("staircase_info: staircase fails to close at t+2d");

    if (m <= info.t + info.d) {
        info.phase = StaircasePhase::flat;
        info.degree = base->degree;
    } else if (m < info.t + 2 * info.d) {
        info.phase = StaircasePhase::climbing;
        info.degree = base->degree + 6 * (m - info.t - info.d);
    } else {
        throw contract_error("staircase_info: m beyond the staircase but in X");
    }
    return info;
}

std::optional<RemarkFormula> remark_formula(unsigned m) {
    // "Let a be the greatest natural number such that the a-th term from the
    // right in the base 3 representation of m is 1" -- 1-indexed positions,
    // so the digit examined for position a sits at 3^{a-1}.
    unsigned a_pos = 0;
    {
        unsigned v = m, pos = 1;
        while (v > 0) {
            if (v % 3 == 1) a_pos = pos;
            v /= 3;
            ++pos;
        }
    }
    if (a_pos == 0) return std::nullopt;

    unsigned pa = 1;
    for (unsigned i = 0; i < a_pos; ++i) pa *= 3;
    unsigned ceil_div = (m + pa - 1) / pa;
    unsigned k = (ceil_div - 1 + 1) / 2; // ceil((ceil(m/3^a) - 1)/2)

    RemarkFormula r;
    r.a = a_pos;
    r.k = k;
    unsigned long long attained = static_cast<unsigned long long>(pa) * (2 * k + 1);
    unsigned long long order = 2ull * m + 1;
    r.b = attained >= order ? 0 : unsigned((order - attained) / 2);
    r.degree = unsigned(attained + 6ull * r.b);
    r.complement_degree = unsigned(6ull * m + 3 - r.degree);

    auto search = minimal_counterexample(m);
    r.agrees_with_search = search && search->degree == r.degree;
    return r;
}

} // namespace qinv
