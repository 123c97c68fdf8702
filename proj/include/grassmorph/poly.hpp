#ifndef GRASSMORPH_POLY_HPP
#define GRASSMORPH_POLY_HPP

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grassmorph/errors.hpp"
#include "grassmorph/rational.hpp"
#include "grassmorph/rng.hpp"
#include "grassmorph/univariate.hpp"

namespace grassmorph {

// Variable indices: X = 0, Y = 1, Z = 2.
inline constexpr int kVarX = 0;
inline constexpr int kVarY = 1;
inline constexpr int kVarZ = 2;

/// Exponent triple (i, j, k) of X^i Y^j Z^k.
using Monomial = std::array<int, 3>;

inline int total_degree(const Monomial& m) { return m[0] + m[1] + m[2]; }

/// Graded-lexicographic order with X > Y > Z, descending (leading term
/// first). This is the fixed monomial order of the whole library.
struct GrlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db;
        if (a[0] != b[0]) return a[0] > b[0];
        if (a[1] != b[1]) return a[1] > b[1];
        return a[2] > b[2];
    }
};

/// All C(d+2,2) exponent triples of degree d in graded-lex order.
std::vector<Monomial> monomials(int d);

/// Point of P^2 over Q, normalized so the last nonzero coordinate is 1.
class ProjPoint {
public:
    ProjPoint(const Rational& x, const Rational& y, const Rational& z);

    const Rational& operator[](std::size_t i) const { return c_[i]; }
    const std::array<Rational, 3>& coords() const { return c_; }

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.c_ == b.c_; }
    friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
    friend bool operator<(const ProjPoint& a, const ProjPoint& b) { return a.c_ < b.c_; }

    std::string str() const;

private:
    std::array<Rational, 3> c_;
};

/// Sparse homogeneous polynomial in X, Y, Z over Q. Every stored exponent
/// triple sums to the declared degree and no zero coefficient is kept; the
/// zero polynomial is an empty term map with a declared degree.
class HomPoly {
public:
    using TermMap = std::map<Monomial, Rational, GrlexDescending>;

    explicit HomPoly(int degree = 0) : degree_(degree) {}

    static HomPoly variable(int var);
    static HomPoly constant(const Rational& v);
    static HomPoly monomial_term(const Monomial& m, const Rational& coeff);

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    /// Adds coeff * monomial, pruning cancellations. The monomial degree
    /// must match the declared degree.
    void add_term(const Monomial& m, const Rational& coeff);

    Rational coeff(const Monomial& m) const;

    const Monomial& leading_monomial() const;
    const Rational& leading_coeff() const;

    /// Value on an arbitrary (not necessarily normalized) representative.
    Rational eval_raw(const Rational& x, const Rational& y, const Rational& z) const;

    /// Value at the normalized representative of p.
    Rational eval(const ProjPoint& p) const { return eval_raw(p[0], p[1], p[2]); }

    int degree_in(int var) const;

    std::string str() const;

    friend bool operator==(const HomPoly& a, const HomPoly& b) {
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const HomPoly& a, const HomPoly& b) { return !(a == b); }

private:
    int degree_;
    TermMap terms_;
};

HomPoly operator+(const HomPoly& a, const HomPoly& b);
HomPoly operator-(const HomPoly& a, const HomPoly& b);
HomPoly operator-(const HomPoly& a);
HomPoly operator*(const HomPoly& a, const HomPoly& b);
HomPoly operator*(const HomPoly& a, const Rational& s);
inline HomPoly operator*(const Rational& s, const HomPoly& a) { return a * s; }

HomPoly pow(const HomPoly& a, int e);

/// Scaled so the leading (graded-lex) coefficient is 1.
HomPoly normalize_monic(const HomPoly& a);

/// Coefficient of var^k, a homogeneous form in the remaining two variables
/// (returned as a ternary polynomial with no var dependence).
HomPoly coeff_of_power(const HomPoly& f, int var, int k);

/// Multiply by the monomial var^k.
HomPoly mul_var_power(const HomPoly& f, int var, int k);

/// Exact quotient f / g, or nullopt when g does not divide f.
std::optional<HomPoly> try_divide(const HomPoly& f, const HomPoly& g);

/// Greatest common divisor of two nonzero homogeneous ternary forms,
/// normalized monic in the fixed monomial order. gcd == 1 exactly when the
/// forms share no common component.
HomPoly gcd(const HomPoly& f, const HomPoly& g);

/// f with variables replaced by the linear forms given by rows of A:
/// X -> A[0][0] X + A[0][1] Y + A[0][2] Z, etc.
HomPoly substitute_linear(const HomPoly& f, const std::array<std::array<Rational, 3>, 3>& a);

/// f(p0(t), p1(t), p2(t)) as a univariate polynomial in t.
UniPoly compose_univariate(const HomPoly& f, const std::array<UniPoly, 3>& p);

/// Univariate fiber polynomial in `var` with the remaining two variables
/// (in index order) fixed at (u, w).
UniPoly fiber_poly(const HomPoly& f, int var, const Rational& u, const Rational& w);

// --- Binary-form bridge -----------------------------------------------------
// A homogeneous form in two of the three variables (u_var < w_var) is
// carried as its dehomogenization b(t) = B(t, 1) plus the total degree; the
// w-power w^(degree - deg b) is implicit.

struct BinaryForm {
    int u_var = 0;
    int w_var = 1;
    int degree = 0;
    UniPoly b;

    bool is_zero() const { return b.is_zero(); }
};

BinaryForm binary_from_hompoly(const HomPoly& f, int u_var, int w_var);
HomPoly hompoly_from_binary(const BinaryForm& bf);

} // namespace grassmorph

#endif
