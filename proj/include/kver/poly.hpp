#pragma once

#include "kver/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace kver {

/// Univariate polynomial with exact rational coefficients, stored in
/// ascending degree.  The leading coefficient is nonzero unless the
/// polynomial is zero.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs);
    Poly(std::initializer_list<Rat> coeffs);

    static Poly constant(const Rat& c);
    /// Convenience for integer-coefficient literals, ascending degree.
    static Poly from_ints(std::initializer_list<long long> coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }

    /// Coefficient of x^i (zero beyond the degree).
    const Rat& coeff(size_t i) const;
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat eval(const Rat& x) const;

    Poly derivative() const;
    /// Antiderivative with zero constant term.
    Poly antiderivative() const;
    /// Exact definite integral over [lo, hi]; requires lo <= hi.
    Rat definite_integral(const Rat& lo, const Rat& hi) const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& s) const;
    Poly operator/(const Rat& s) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return c_ != o.c_; }

    /// Polynomial division: *this = q * d + r with deg r < deg d.
    static void divmod(const Poly& num, const Poly& den, Poly& quot, Poly& rem);

    /// p(a*x + b): substitution by an affine change of variable.
    Poly compose_affine(const Rat& a, const Rat& b) const;

    std::string to_string(const std::string& var = "u") const;

private:
    std::vector<Rat> c_;
    void trim();
};

/// Exact definite integral of p over [lo, hi] (requires lo <= hi).
inline Rat poly_defint(const Poly& p, const Rat& lo, const Rat& hi) {
    return p.definite_integral(lo, hi);
}

} // namespace kver
