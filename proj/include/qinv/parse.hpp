#ifndef QINV_PARSE_HPP
#define QINV_PARSE_HPP

#include "qinv/errors.hpp"
#include "qinv/poly.hpp"

#include <cctype>
#include <string>
#include <string_view>

namespace qinv {

namespace detail {

inline bool coeff_is_negative(const Fp&) { return false; } // canonical reps in [0, p)
inline bool coeff_is_negative(const BigInt& c) { return c < 0; }
inline bool coeff_is_negative(const BigRat& c) { return c.numerator() < 0; }

inline std::string coeff_abs_str(const Fp& c) { return std::to_string(c.value()); }
inline std::string coeff_abs_str(const BigInt& c) {
    return BigInt(boost::multiprecision::abs(c)).str();
}
inline std::string coeff_abs_str(const BigRat& c) {
    std::string s = BigInt(boost::multiprecision::abs(c.numerator())).str();
    if (!c.is_integer()) s += "/" + c.denominator().str();
    return s;
}

// Coefficient construction hooks for the parser. Only the rational ring
// accepts a '/' in a coefficient.
inline Fp coeff_from_decimal(const FpRing& ring, const std::string& digits) {
    BigInt v(digits);
    return coeff_from_bigint(v, Fp(0, ring.p));
}
inline BigInt coeff_from_decimal(const ZRing&, const std::string& digits) {
    return BigInt(digits);
}
inline BigRat coeff_from_decimal(const QRing&, const std::string& digits) {
    return BigRat(BigInt(digits));
}

template <typename Ring>
constexpr bool ring_accepts_fraction() {
    return std::is_same_v<Ring, QRing>;
}

template <typename Ring>
class PolyParser {
public:
    using C = typename Ring::coeff_type;

    PolyParser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

    Polynomial<C> parse() {
        Polynomial<C> result;
        skip_ws();
        bool negative = accept('-');
        if (at_end()) fail("expected term");
        while (true) {
            parse_term(result, negative);
            skip_ws();
            if (at_end()) break;
            if (accept('+'))
                negative = false;
            else if (accept('-'))
                negative = true;
            else
                fail("expected '+' or '-' between terms");
            skip_ws();
        }
        return result;
    }

private:
    void parse_term(Polynomial<C>& out, bool negative) {
        skip_ws();
        bool have_any = false;
        C coeff = ring_.one();
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_coeff();
            have_any = true;
        }
        Monomial m;
        while (true) {
            skip_ws();
            bool starred = accept('*');
            skip_ws();
            if (!at_end() && peek() == 'x') {
                auto [var, exp] = parse_factor();
                m.e[var - 1] = std::uint16_t(m.e[var - 1] + exp);
                have_any = true;
            } else if (starred) {
                fail("expected variable after '*'");
            } else {
                break;
            }
        }
        if (!have_any) fail("expected coefficient or variable");
        if (negative) coeff = -coeff;
        out.add_term(m, coeff);
    }

    C parse_coeff() {
        std::string digits = parse_digits("coefficient");
        skip_ws();
        if (!at_end() && peek() == '/') {
            if constexpr (ring_accepts_fraction<Ring>()) {
                ++pos_;
                skip_ws();
                std::size_t den_pos = pos_;
                std::string den = parse_digits("denominator");
                BigInt d(den);
                if (d == 0) {
                    pos_ = den_pos;
                    fail("zero denominator");
                }
                return BigRat(BigInt(digits), d);
            } else {
                fail("rational coefficient not representable in this ring");
            }
        }
        return coeff_from_decimal(ring_, digits);
    }

    std::pair<unsigned, unsigned> parse_factor() {
        expect('x');
        if (at_end() || peek() < '1' || peek() > '3')
            fail("expected variable index 1, 2 or 3 after 'x'");
        unsigned var = unsigned(peek() - '0');
        ++pos_;
        unsigned exp = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip_ws();
            std::string digits = parse_digits("exponent");
            if (digits.size() > 4) fail("exponent too large");
            exp = unsigned(std::stoul(digits));
        }
        return {var, exp};
    }

    std::string parse_digits(const char* what) {
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
            fail(std::string("expected ") + what);
        std::string s;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            s.push_back(peek());
            ++pos_;
        }
        return s;
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    bool accept(char c) {
        if (!at_end() && peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos_); }

    std::string_view text_;
    Ring ring_;
    std::size_t pos_ = 0;
};

} // namespace detail

// Parses the polynomial grammar
//   poly   := ['-'] term (('+'|'-') term)*
//   term   := coeff ('*'? factor)* | factor ('*'? factor)*
//   factor := ('x1'|'x2'|'x3') ('^' uint)?
//   coeff  := uint | uint '/' uint     (fractions only over the rationals)
// into canonical sparse form. Whitespace is insignificant.
template <typename Ring>
Polynomial<typename Ring::coeff_type> parse_poly(std::string_view text, const Ring& ring) {
    return detail::PolyParser<Ring>(text, ring).parse();
}

// Deterministic graded-lex descending rendering; round-trips through
// parse_poly on canonical polynomials.
template <typename C>
std::string format_poly(const Polynomial<C>& k) {
    if (k.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : k.terms()) {
        bool neg = detail::coeff_is_negative(c);
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;

        std::string mag = detail::coeff_abs_str(c);
        std::string vars;
        for (unsigned v = 0; v < 3; ++v) {
            if (m.e[v] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += "x" + std::to_string(v + 1);
            if (m.e[v] > 1) vars += "^" + std::to_string(m.e[v]);
        }
        if (vars.empty())
            out += mag;
        else if (mag == "1")
            out += vars;
        else
            out += mag + "*" + vars;
    }
    return out;
}

} // namespace qinv

#endif
