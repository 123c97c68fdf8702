#ifndef GRASSMORPH_INTERSECT_HPP
#define GRASSMORPH_INTERSECT_HPP

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "grassmorph/poly.hpp"
#include "grassmorph/rng.hpp"
#include "grassmorph/univariate.hpp"

namespace grassmorph {

struct RationalZero {
    ProjPoint point;
    int multiplicity;
};

/// A packet of non-rational common zeros: `factor` is a monic square-free
/// univariate with no rational roots; each of its deg(factor) complex roots
/// t parametrizes one zero A * (t, 1, -s10(t)/psc1(t)), all of the stated
/// multiplicity.
struct ResidualBlock {
    UniPoly factor;
    int multiplicity;
    int count() const { return factor.degree(); }
};

/// Certified zero-dimensional intersection of two coprime forms. The sum of
/// multiplicities over rational zeros and residual blocks is exactly
/// deg(f) * deg(g) (Bezout); the residual parametrization supports exact
/// membership tests of further forms at the non-rational zeros.
struct Intersection {
    std::vector<RationalZero> rational;
    std::vector<ResidualBlock> residual;
    std::array<std::array<Rational, 3>, 3> change; // zeros of transformed = A^-1 zeros; orig = A * local
    UniPoly psc1_t, s10_t;

    long long total() const {
        long long t = 0;
        for (const auto& z : rational) t += z.multiplicity;
        for (const auto& b : residual) t += static_cast<long long>(b.multiplicity) * b.count();
        return t;
    }
    bool empty() const { return rational.empty() && residual.empty(); }
    int max_multiplicity() const {
        int m = 0;
        for (const auto& z : rational) m = std::max(m, z.multiplicity);
        for (const auto& b : residual) m = std::max(m, b.multiplicity);
        return m;
    }
};

/// Common zeros of two coprime forms with intersection multiplicities,
/// computed through a random coordinate change, the Sylvester resultant,
/// square-free factorization and certified fiber analysis. Throws
/// CommonComponent when gcd(f, g) != 1 and RetriesExhausted when no
/// admissible coordinate change is found within the retry bound.
Intersection common_zeros(const HomPoly& f, const HomPoly& g, Rng& rng, int max_retries = 32);

/// Restrict an intersection to the zeros of a further form (exact at both
/// rational zeros and residual blocks).
void filter_by_form(Intersection& ix, const HomPoly& h);

/// Does h vanish at every zero recorded in ix?
bool vanishes_on_all(const Intersection& ix, const HomPoly& h);

struct SystemOptions {
    int degree_cap = 12;  // max form degree admitted to exact elimination
    int max_retries = 32;
};

/// Certified common-zero analysis of a system of forms of equal degree.
struct SystemZeros {
    bool empty = false;
    std::optional<ProjPoint> witness;                      // rational common zero
    std::optional<std::pair<UniPoly, int>> nonrational;    // residual factor + multiplicity
    std::optional<HomPoly> positive_dimensional;           // common factor when V is a curve
    std::optional<Intersection> finite;                    // filtered finite locus
};

SystemZeros system_common_zeros(const std::vector<HomPoly>& forms, Rng& rng,
                                const SystemOptions& opts = {});

} // namespace grassmorph

#endif
