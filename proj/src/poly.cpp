#include "sgc/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

namespace sgc {

namespace {

BigInt abs_big(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

}  // namespace

IntPolynomial::IntPolynomial(BigInt constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

IntPolynomial IntPolynomial::from_coeffs(std::vector<BigInt> low_to_high) {
    IntPolynomial p;
    p.coeffs_ = std::move(low_to_high);
    p.trim();
    return p;
}

IntPolynomial IntPolynomial::monomial(BigInt coefficient, std::size_t degree) {
    IntPolynomial p;
    if (coefficient != 0) {
        p.coeffs_.assign(degree + 1, BigInt(0));
        p.coeffs_[degree] = std::move(coefficient);
    }
    return p;
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
}

BigInt IntPolynomial::leading_coeff() const {
    return coeffs_.empty() ? BigInt(0) : coeffs_.back();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial();
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPolynomial::from_coeffs(std::move(out));
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) {
    *this = *this * o;
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& s) {
    if (s == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
}

bool IntPolynomial::operator<(const IntPolynomial& o) const {
    if (coeffs_.size() != o.coeffs_.size()) return coeffs_.size() < o.coeffs_.size();
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        if (coeffs_[i] != o.coeffs_[i]) return coeffs_[i] < o.coeffs_[i];
    return false;
}

BigInt IntPolynomial::eval(const BigInt& k) const {
    BigInt acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * k + coeffs_[i];
    return acc;
}

IntPolynomial pow(const IntPolynomial& base, unsigned long exponent) {
    IntPolynomial acc(BigInt(1));
    for (unsigned long i = 0; i < exponent; ++i) acc *= base;
    return acc;
}

std::vector<BigInt> positive_integer_roots(const IntPolynomial& p) {
    if (p.is_zero())
        throw std::domain_error("positive_integer_roots: zero polynomial, every integer is a root");
    BigInt lead = abs_big(p.leading_coeff());
    BigInt max_c(0);
    for (const auto& c : p.coeffs()) max_c = std::max(max_c, abs_big(c));
    BigInt bound = 1 + (max_c + lead - 1) / lead;
    std::vector<BigInt> roots;
    for (BigInt r(1); r <= bound; ++r)
        if (p.eval(r) == 0) roots.push_back(r);
    return roots;
}

PolyParseError::PolyParseError(std::size_t pos, const std::string& msg)
    : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}

std::string format_polynomial(const IntPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        const BigInt& c = p.coeffs()[i];
        if (c == 0) continue;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        BigInt mag = abs_big(c);
        if (mag != 1 || i == 0) out += mag.str();
        if (i > 0) {
            if (mag != 1) out += "*";
            out += "k";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

std::string format_coefficients(const IntPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) out += ",";
        out += p.coeffs()[i].str();
    }
    return out;
}

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    [[noreturn]] void fail(const std::string& msg) const { throw PolyParseError(pos + 1, msg); }

    BigInt read_integer(bool allow_sign) {
        std::size_t start = pos;
        if (allow_sign && pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
        std::size_t digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == digits) {
            pos = start;
            fail("expected integer");
        }
        return BigInt(std::string(text.substr(start, pos - start)));
    }
};

IntPolynomial parse_term_form(std::string_view text) {
    Cursor c{text};
    std::vector<BigInt> coeffs;
    auto add = [&coeffs](std::size_t e, const BigInt& v) {
        if (coeffs.size() <= e) coeffs.resize(e + 1);
        coeffs[e] += v;
    };
    c.skip_ws();
    if (c.done()) c.fail("empty polynomial");
    bool first = true;
    while (true) {
        int sign = 1;
        if (first) {
            if (!c.done() && (c.peek() == '+' || c.peek() == '-')) {
                if (c.peek() == '-') sign = -1;
                ++c.pos;
                c.skip_ws();
            }
        } else {
            if (c.done()) break;
            if (c.peek() == '+' || c.peek() == '-') {
                if (c.peek() == '-') sign = -1;
                ++c.pos;
                c.skip_ws();
            } else {
                c.fail("expected '+' or '-'");
            }
        }
        first = false;
        BigInt coefficient(1);
        bool have_coeff = false;
        if (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
            coefficient = c.read_integer(false);
            have_coeff = true;
            c.skip_ws();
            if (!c.done() && c.peek() == '*') {
                ++c.pos;
                c.skip_ws();
                if (c.done() || c.peek() != 'k') c.fail("expected 'k'");
            }
        }
        if (!c.done() && c.peek() == 'k') {
            ++c.pos;
            std::size_t exponent = 1;
            std::size_t save = c.pos;
            c.skip_ws();
            if (!c.done() && c.peek() == '^') {
                ++c.pos;
                c.skip_ws();
                if (c.done() || !std::isdigit(static_cast<unsigned char>(c.peek())))
                    c.fail("expected exponent");
                BigInt e = c.read_integer(false);
                if (e > 100000) c.fail("exponent too large");
                exponent = static_cast<std::size_t>(e);
            } else {
                c.pos = save;
            }
            add(exponent, sign < 0 ? BigInt(-coefficient) : coefficient);
        } else if (have_coeff) {
            add(0, sign < 0 ? BigInt(-coefficient) : coefficient);
        } else {
            c.fail("expected coefficient or 'k'");
        }
        c.skip_ws();
        if (c.done()) break;
    }
    return IntPolynomial::from_coeffs(std::move(coeffs));
}

IntPolynomial parse_list_form(std::string_view text) {
    Cursor c{text};
    std::vector<BigInt> coeffs;
    c.skip_ws();
    if (c.done()) c.fail("empty polynomial");
    while (true) {
        coeffs.push_back(c.read_integer(true));
        c.skip_ws();
        if (c.done()) break;
        if (c.peek() != ',') c.fail("expected ','");
        ++c.pos;
        c.skip_ws();
    }
    return IntPolynomial::from_coeffs(std::move(coeffs));
}

}  // namespace

IntPolynomial parse_polynomial(std::string_view text) {
    if (text.find('k') != std::string_view::npos) return parse_term_form(text);
    return parse_list_form(text);
}

}  // namespace sgc
