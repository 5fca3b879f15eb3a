#include <cctype>
#include <sstream>

#include "gaussalg/errors.hpp"
#include "gaussalg/polynomial.hpp"

namespace gaussalg {

namespace {

constexpr unsigned kMaxExponent = 1000000;

// Recursive-descent reader over a raw character window.
class PolyReader {
public:
    PolyReader(const std::string& text, RingPtr ring) : text_(text), ring_(std::move(ring)) {}

    Polynomial read() {
        Polynomial p = read_sum();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    Polynomial read_sum() {
        skip_ws();
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = peek() == '-';
            ++pos_;
        }
        Polynomial acc = read_term();
        if (negate) acc = -acc;
        while (true) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            Polynomial t = read_term();
            acc = (c == '+') ? acc + t : acc - t;
        }
        return acc;
    }

    Polynomial read_term() {
        Polynomial acc = read_factor();
        while (true) {
            skip_ws();
            if (peek() != '*') break;
            ++pos_;
            acc = acc * read_factor();
        }
        return acc;
    }

    Polynomial read_factor() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial inner = read_sum();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = read_digits();
            skip_ws();
            if (peek() == '/') {
                ++pos_;
                skip_ws();
                std::size_t den_pos = pos_;
                if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer after '/'");
                std::string den = read_digits();
                Rational d = Rational::from_string(den);
                if (d.is_zero()) throw ParseError("zero denominator", den_pos);
                return Polynomial::constant(ring_, Rational::from_string(num) / d);
            }
            return Polynomial::constant(ring_, Rational::from_string(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t name_pos = pos_;
            std::string name = read_identifier();
            auto index = ring_->index_of(name);
            if (!index) throw UnknownVariableError(name, name_pos);
            unsigned exponent = 1;
            skip_ws();
            if (peek() == '^') {
                ++pos_;
                skip_ws();
                if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer exponent");
                exponent = read_small_int();
            }
            return Polynomial::term(ring_, Monomial::variable(ring_->size(), *index, exponent),
                                    Rational(1));
        }
        fail(c == '\0' ? "unexpected end of input" : "unexpected character");
    }

    std::string read_digits() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return text_.substr(start, pos_ - start);
    }

    unsigned read_small_int() {
        std::size_t start = pos_;
        std::string digits = read_digits();
        if (digits.size() > 7) throw ParseError("exponent too large", start);
        unsigned long v = std::stoul(digits);
        if (v > kMaxExponent) throw ParseError("exponent too large", start);
        return static_cast<unsigned>(v);
    }

    std::string read_identifier() {
        std::size_t start = pos_;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
                ++pos_;
            } else {
                break;
            }
        }
        return text_.substr(start, pos_ - start);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

    const std::string& text_;
    RingPtr ring_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, RingPtr ring) {
    return PolyReader(text, std::move(ring)).read();
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";

    // Descending lex keeps output stable regardless of any runtime order.
    std::vector<const TermMap::value_type*> ordered;
    ordered.reserve(terms_.size());
    for (const auto& t : terms_) ordered.push_back(&t);
    MonomialOrder lex = MonomialOrder::lex();
    std::sort(ordered.begin(), ordered.end(),
              [&lex](const auto* a, const auto* b) { return lex.greater(a->first, b->first); });

    std::ostringstream out;
    bool first = true;
    for (const auto* t : ordered) {
        const auto& [m, c] = *t;
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) out << "-";
            first = false;
        } else {
            out << (c.sign() < 0 ? " - " : " + ");
        }
        bool want_coeff = !mag.is_one() || m.is_one();
        if (want_coeff) out << mag.str();
        bool want_star = want_coeff;
        for (std::size_t i = 0; i < m.nvars(); ++i) {
            unsigned e = m.exponent(i);
            if (e == 0) continue;
            if (want_star) out << "*";
            out << ring_->name(i);
            if (e > 1) out << "^" << e;
            want_star = true;
        }
    }
    return out.str();
}

}  // namespace gaussalg
