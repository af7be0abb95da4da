#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sgc {

using BigInt = boost::multiprecision::cpp_int;

// Dense univariate polynomial in k with arbitrary-precision integer
// coefficients. Stored low to high; invariant: no trailing zero
// coefficient, so the zero polynomial is the empty vector (degree -1).
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(BigInt constant);

    // Normalizes by dropping trailing zeros.
    static IntPolynomial from_coeffs(std::vector<BigInt> low_to_high);
    static IntPolynomial monomial(BigInt coefficient, std::size_t degree);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    BigInt coeff(std::size_t i) const;  // 0 beyond the stored range
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    BigInt leading_coeff() const;  // 0 for the zero polynomial
    BigInt constant_term() const { return coeff(0); }

    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    IntPolynomial& operator*=(const IntPolynomial& o);
    IntPolynomial& operator*=(const BigInt& s);

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) {
        a += b;
        return a;
    }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) {
        a -= b;
        return a;
    }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(IntPolynomial a, const BigInt& s) {
        a *= s;
        return a;
    }

    bool operator==(const IntPolynomial&) const = default;
    // Total order (degree, then coefficients high to low); used for map keys.
    bool operator<(const IntPolynomial& o) const;

    BigInt eval(const BigInt& k) const;

private:
    std::vector<BigInt> coeffs_;
    void trim();
};

IntPolynomial pow(const IntPolynomial& base, unsigned long exponent);

// All r >= 1 with p(r) == 0, ascending. Scans 1..B for the Cauchy-style
// bound B = 1 + ceil(max|c_i| / |lead|). Throws std::domain_error on the
// zero polynomial (every integer is a root).
std::vector<BigInt> positive_integer_roots(const IntPolynomial& p);

struct PolyParseError : std::runtime_error {
    std::size_t position;  // 1-based offset into the input text
    PolyParseError(std::size_t pos, const std::string& msg);
};

// "8*k^3 - 2*k"; unit coefficients elided ("k^2", "- k"); zero is "0".
std::string format_polynomial(const IntPolynomial& p);
// Comma-separated low-to-high coefficients: "0,-2,0,8"; zero is "0".
std::string format_coefficients(const IntPolynomial& p);
// Accepts both forms above: text with 'k' is parsed as a sum of terms
// (the '*' may be omitted), anything else as a coefficient list.
IntPolynomial parse_polynomial(std::string_view text);

}  // namespace sgc
