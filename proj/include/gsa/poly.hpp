// Dense univariate and bivariate polynomial arithmetic over F_q, Hasse
// derivatives, locator products and Lagrange interpolation.

#pragma once

#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "gsa/gf.hpp"

namespace gsa {

class Poly {
  public:
    // Degree of the zero polynomial (stands in for minus infinity).
    static constexpr int kNegInfDegree = std::numeric_limits<int>::min();

    explicit Poly(const Field& f) : field_(&f) {}
    Poly(const Field& f, std::vector<uint16_t> coeffs);
    static Poly from_ints(const Field& f, std::initializer_list<long long> ascending);
    static Poly constant(FieldElement c);
    static Poly monomial(const Field& f, int deg, FieldElement c);

    const Field& field() const { return *field_; }
    int degree() const { return coeffs_.empty() ? kNegInfDegree : static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    // Coefficient of x^i (zero beyond the degree).
    FieldElement coeff(int i) const;
    std::span<const uint16_t> coeffs() const { return coeffs_; }

    FieldElement operator()(FieldElement x) const;  // Horner evaluation

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    bool operator==(const Poly& o) const;

    std::string to_string(const std::string& var = "x") const;

  private:
    const Field* field_;
    std::vector<uint16_t> coeffs_;  // ascending, no trailing zeros
    void normalize();
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, FieldElement c);

// Quotient and remainder with b != 0.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

// Exact division: returns q with a = q*b, throws std::domain_error when the
// remainder is nonzero (a violated factorization theorem must surface).
Poly divexact(const Poly& a, const Poly& b);

Poly pow(const Poly& base, int e);

// prod_{i in S} (x - points[i]); 1 for empty S. Throws on duplicate points
// among the selected indices.
Poly locator_product(const std::vector<int>& S, std::span<const FieldElement> points);

// s-th univariate Hasse derivative: sum_mu C(mu, s) P_mu x^{mu-s}.
Poly hasse_derivative(const Poly& P, int s);

// Unique polynomial of degree < xs.size() through (xs[i], ys[i]).
Poly interpolate(std::span<const FieldElement> xs, std::span<const FieldElement> ys);

// Q(x, z) = sum_nu rows[nu](x) z^nu.
struct BivarPoly {
    std::vector<Poly> rows;

    bool is_zero() const;
    int z_degree() const;  // index of last nonzero row, kNegInfDegree when zero
    FieldElement operator()(FieldElement x, FieldElement z) const;
    bool operator==(const BivarPoly& o) const;
};

// (s, t)-th mixed Hasse derivative of Q evaluated at (x0, z0):
// sum_{nu>=t} C(nu,t) z0^{nu-t} sum_{mu>=s} C(mu,s) x0^{mu-s} Q_{nu,mu}.
FieldElement hasse_eval(const BivarPoly& Q, int s, int t, FieldElement x0, FieldElement z0);

// Remainder of Q(x, z) under division by the monic factor (z - w(x)),
// i.e. Q(x, w(x)). Zero iff (z - w(x)) divides Q.
Poly bivar_rem_linear(const BivarPoly& Q, const Poly& w);

}  // namespace gsa
