#include "darboux3/parse.hpp"

#include <cctype>

namespace dbx {

namespace {

class Parser {
public:
    Parser(const std::string& text, const Bindings& bindings) : text_(text), bindings_(bindings) {}

    Polynomial run() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size()) throw SyntaxError("unexpected character", pos_);
        return p;
    }

private:
    Polynomial expr() {
        Polynomial acc = term();
        for (;;) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                acc += term();
            } else if (peek() == '-') {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Polynomial term() {
        Polynomial acc = factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    Polynomial factor() {
        skip_ws();
        const char c = peek();
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            skip_ws();
            if (peek() != ')') throw SyntaxError("expected ')'", pos_);
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial(rational());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        throw SyntaxError("expected a factor", pos_);
    }

    Polynomial identifier() {
        const std::size_t start = pos_;
        std::string name;
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
                name += c;
                ++pos_;
            } else {
                break;
            }
        }
        Polynomial base;
        if (name == "x") {
            base = Polynomial::variable(0);
        } else if (name == "y") {
            base = Polynomial::variable(1);
        } else if (name == "z") {
            base = Polynomial::variable(2);
        } else {
            auto it = bindings_.find(name);
            if (it == bindings_.end()) throw UnboundIdentifier(name);
            base = Polynomial(it->second);
        }
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                throw SyntaxError("expected digits after '^'", pos_);
            long e = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                e = e * 10 + (text_[pos_] - '0');
                if (e > (1L << 31)) throw SyntaxError("exponent too large", start);
                ++pos_;
            }
            return base.pow(e);
        }
        return base;
    }

    Rational rational() {
        std::string digits = read_digits();
        skip_ws();
        if (peek() == '/') {
            ++pos_;
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                throw SyntaxError("expected digits after '/'", pos_);
            std::string den = read_digits();
            mpz_class d(den);
            if (d == 0) throw ZeroDenominator();
            mpq_class q(mpz_class(digits), d);
            q.canonicalize();
            return Rational(q);
        }
        return Rational(mpq_class(mpz_class(digits)));
    }

    std::string read_digits() {
        std::string out;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            out += text_[pos_++];
        return out;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    const std::string& text_;
    const Bindings& bindings_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const Bindings& bindings) {
    return Parser(text, bindings).run();
}

std::string format_polynomial(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const bool neg = c.sign() < 0;
        const Rational mag = c.abs();
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (m.is_constant()) {
            out += mag.str();
        } else if (mag.is_one()) {
            out += format_monomial(m);
        } else {
            out += mag.str() + "*" + format_monomial(m);
        }
    }
    return out;
}

}  // namespace dbx
