#include "symcurve/expr.hpp"

#include "symcurve/jacobian.hpp"

#include <cctype>
#include <vector>

namespace symcurve {

namespace {

std::size_t code_points(std::string_view s) {
    std::size_t n = 0;
    for (unsigned char c : s)
        if ((c & 0xC0) != 0x80)
            ++n;
    return n;
}

}  // namespace

ParseError::ParseError(const std::string& message, std::string input, std::size_t column)
    : std::invalid_argument(message), input_(std::move(input)), column_(column) {}

std::string ParseError::diagnostic() const {
    return std::string("parse error: ") + what() + "\n  " + input_ + "\n  " + std::string(column_, ' ') + "^";
}

namespace {

constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";

class Parser {
public:
    Parser(std::string_view text, int genus) : text_(text), genus_(genus) {}

    Element parse() {
        Element x = expr();
        skip_space();
        if (pos_ < text_.size())
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return x;
    }

private:
    [[noreturn]] void fail(const std::string& message) const { fail_at(message, pos_); }
    [[noreturn]] void fail_at(const std::string& message, std::size_t pos) const {
        throw ParseError(message, std::string(text_), code_points(text_.substr(0, pos)));
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool at_minus() const {
        return (pos_ < text_.size() && text_[pos_] == '-') || text_.substr(pos_, kUnicodeMinus.size()) == kUnicodeMinus;
    }

    void take_minus() { pos_ += text_[pos_] == '-' ? 1 : kUnicodeMinus.size(); }

    bool take(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Element expr() {
        skip_space();
        bool negate = false;
        if (at_minus()) {
            take_minus();
            negate = true;
        }
        Element x = term();
        if (negate)
            x = -x;
        for (;;) {
            skip_space();
            if (take('+')) {
                x += term();
            } else if (at_minus()) {
                take_minus();
                x -= term();
            } else {
                return x;
            }
        }
    }

    Element term() {
        Element x = factor();
        while (take('*'))
            x = multiply(x, factor());
        return x;
    }

    Element factor() {
        Element x = atom();
        if (take('^')) {
            skip_space();
            unsigned long k = uint_literal("exponent");
            x = x.pow(static_cast<unsigned>(k));
        }
        return x;
    }

    unsigned long uint_literal(const char* what) {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail(std::string("expected ") + what);
        if (pos_ - start > 9)
            fail_at(std::string(what) + " too large", start);
        return std::stoul(std::string(text_.substr(start, pos_ - start)));
    }

    Element atom() {
        skip_space();
        if (pos_ >= text_.size())
            fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Element x = expr();
            if (!take(')'))
                fail("expected ')'");
            return x;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                const std::size_t den = pos_;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    ++pos_;
                if (den == pos_)
                    fail("expected denominator");
            }
            try {
                return Element::constant(genus_, Rational::parse(text_.substr(start, pos_ - start)));
            } catch (const std::invalid_argument& e) {
                fail_at(e.what(), start);
            }
        }
        if (text_.substr(pos_, 5) == "theta") {
            pos_ += 5;
            return build_jacobian(genus_).theta;
        }
        if (c == 'z') {
            ++pos_;
            return Element::z(genus_);
        }
        if (c == 'e') {
            const std::size_t start = pos_;
            ++pos_;
            unsigned long k = uint_literal("generator index");
            if (k < 1 || k > static_cast<unsigned long>(2 * genus_))
                fail_at("generator index e" + std::to_string(k) + " out of range 1.." + std::to_string(2 * genus_) +
                            " for genus " + std::to_string(genus_),
                        start);
            return Element::generator(genus_, static_cast<int>(k));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    int genus_;
    std::size_t pos_ = 0;
};

std::string monomial_text(const Monomial& m) {
    std::string out;
    for (int i : m.indices()) {
        if (!out.empty())
            out += '*';
        out += 'e' + std::to_string(i);
    }
    if (m.z_exponent > 0) {
        if (!out.empty())
            out += '*';
        out += 'z';
        if (m.z_exponent > 1)
            out += '^' + std::to_string(m.z_exponent);
    }
    return out;
}

void append_term(std::string& out, const Rational& coeff, const std::string& mono) {
    const bool negative = coeff.sign() < 0;
    const Rational magnitude = negative ? -coeff : coeff;
    if (out.empty())
        out += negative ? "-" : "";
    else
        out += negative ? " - " : " + ";
    if (mono.empty())
        out += magnitude.to_string();
    else if (magnitude.is_one())
        out += mono;
    else
        out += magnitude.to_string() + "*" + mono;
}

}  // namespace

Element parse_expression(std::string_view text, int genus) {
    if (genus < 0 || genus > kMaxGenus)
        throw std::invalid_argument("genus out of range");
    return Parser(text, genus).parse();
}

std::string render(const Element& x) {
    std::string out;
    const auto& terms = x.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it)
        append_term(out, it->second, monomial_text(it->first));
    return out.empty() ? "0" : out;
}

std::string render_beta(int genus) {
    std::string out;
    for (int i = 0; i <= genus; ++i) {
        Rational coeff = Rational(i % 2 == 0 ? 1 : -1) / factorial(static_cast<unsigned>(i));
        std::string mono;
        if (i > 0)
            mono = i == 1 ? "theta" : "theta^" + std::to_string(i);
        const int p = genus - i;
        if (p > 0) {
            if (!mono.empty())
                mono += '*';
            mono += p == 1 ? "z" : "z^" + std::to_string(p);
        }
        append_term(out, coeff, mono);
    }
    return out;
}

}  // namespace symcurve
