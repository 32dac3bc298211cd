#include <cctype>

#include "hmc/error.hpp"
#include "hmc/poly.hpp"

namespace hmc {

namespace {

std::string rational_text(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Poly parse() {
        skip();
        if (at_end()) fail("empty input");
        std::vector<Poly::Term> terms;
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
            negative = get() == '-';
            skip();
        }
        terms.push_back(term(negative));
        while (true) {
            skip();
            if (at_end()) break;
            const char op = get();
            if (op != '+' && op != '-') fail("expected '+' or '-'");
            skip();
            terms.push_back(term(op == '-'));
        }
        return Poly::from_terms(std::move(terms));
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char get() { return text_[pos_++]; }
    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw Error(ErrorCode::Parse, why + " at offset " + std::to_string(pos_));
    }

    std::string digits() {
        std::string out;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) out += get();
        if (out.empty()) fail("expected digits");
        return out;
    }

    Poly::Term term(bool negative) {
        Rational coeff = negative ? -1 : 1;
        Monomial mono;
        while (true) {
            skip();
            if (at_end()) fail("expected factor");
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                Rational r{mpz_class(digits())};
                if (!at_end() && peek() == '/') {
                    ++pos_;
                    mpz_class den(digits());
                    if (den == 0) fail("zero denominator");
                    r /= den;
                }
                coeff *= r;
            } else if (std::isalpha(static_cast<unsigned char>(peek()))) {
                std::string name;
                while (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) name += get();
                auto var = VarId::parse(name);
                if (!var) fail("unknown variable '" + name + "'");
                int exp = 1;
                skip();
                if (!at_end() && peek() == '^') {
                    ++pos_;
                    skip();
                    bool neg = false;
                    if (!at_end() && peek() == '-') {
                        neg = true;
                        ++pos_;
                    }
                    exp = std::stoi(digits());
                    if (neg) exp = -exp;
                }
                if (exp < 0 && !var->invertible()) fail("negative power of " + name);
                mono = mono * Monomial(*var, exp);
            } else {
                fail(std::string("unexpected character '") + peek() + "'");
            }
            skip();
            if (at_end() || peek() != '*') break;
            ++pos_;
        }
        return {std::move(mono), std::move(coeff)};
    }
};

} // namespace

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        const bool negative = t.coeff < 0;
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const Rational mag = abs(t.coeff);
        if (t.mono.is_one()) {
            out += rational_text(mag);
        } else {
            if (mag != 1) out += rational_text(mag) + "*";
            out += t.mono.to_string();
        }
    }
    return out;
}

Poly Poly::parse(std::string_view text) { return Parser(text).parse(); }

} // namespace hmc
