#include "goodmap/poly_parse.hpp"

#include <cctype>

namespace goodmap {

namespace {

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& names)
        : text_(text), names_(names) {}

    Poly parse() {
        Poly p = parse_sum();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    Poly parse_sum() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            advance();
        } else if (peek() == '+') {
            advance();
        }
        Poly acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            skip_ws();
            char c = peek();
            if (c == '+' || c == '-') {
                advance();
                Poly t = parse_term();
                acc = (c == '+') ? acc + t : acc - t;
            } else {
                return acc;
            }
        }
    }

    Poly parse_term() {
        Poly acc = parse_factor();
        while (true) {
            skip_ws();
            if (peek() == '*') {
                advance();
                acc = acc * parse_factor();
            } else {
                return acc;
            }
        }
    }

    Poly parse_factor() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            advance();
            Poly p = parse_sum();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            advance();
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_coefficient();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_varpower();
        fail(c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c + "'");
    }

    Poly parse_coefficient() {
        Rational num(parse_integer());
        skip_ws();
        if (peek() == '/') {
            advance();
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
            mpz_class den(parse_integer());
            if (den == 0) fail("zero denominator");
            num /= den;
        }
        return Poly::constant(nvars(), num);
    }

    Poly parse_varpower() {
        auto [line, col] = location();
        std::string name;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
            name += peek();
            advance();
        }
        int index = -1;
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) index = static_cast<int>(i);
        if (index < 0) throw ParseError("unknown variable '" + name + "'", line, col);
        unsigned power = 1;
        skip_ws();
        if (peek() == '^') {
            advance();
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
            mpz_class e(parse_integer());
            if (e < 0 || e > 100000) fail("exponent out of range");
            power = static_cast<unsigned>(e.get_ui());
        }
        if (power == 0) return Poly::constant(nvars(), Rational(1));
        return Poly::variable(nvars(), index, power);
    }

    std::string parse_integer() {
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            digits += peek();
            advance();
        }
        if (digits.empty()) fail("expected integer");
        return digits;
    }

    int nvars() const { return static_cast<int>(names_.size()); }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void advance() { ++pos_; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::pair<int, int> location() const {
        int line = 1, col = 1;
        for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        return {line, col};
    }

    [[noreturn]] void fail(const std::string& message) const {
        auto [line, col] = location();
        throw ParseError(message, line, col);
    }

    const std::string& text_;
    const std::vector<std::string>& names_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& text, const std::vector<std::string>& names) {
    return Parser(text, names).parse();
}

std::vector<Poly> parse_polys(const std::vector<std::string>& texts,
                              const std::vector<std::string>& names) {
    std::vector<Poly> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(parse_poly(t, names));
    return out;
}

}  // namespace goodmap
