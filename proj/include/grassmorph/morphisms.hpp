#ifndef GRASSMORPH_MORPHISMS_HPP
#define GRASSMORPH_MORPHISMS_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "grassmorph/grassmann.hpp"
#include "grassmorph/intersect.hpp"
#include "grassmorph/poly.hpp"

namespace grassmorph {

/// A bundle surjection C^4 (x) O -> O(a) (+) O(b) presented as a 2x4 matrix
/// of forms, row 0 homogeneous of degree a and row 1 of degree b. It defines
/// a morphism P^2 -> Gr(2, C^4) exactly when the six 2x2 minors have no
/// common projective zero; use is_surjective before treating it as one.
struct SplitSurjection {
    int a = 1;
    int b = 1;
    std::array<std::array<HomPoly, 4>, 2> m;
};

/// The explicit split surjection with columns
/// (X^a, Z^b), (Y^a, X^b), (Z^a, Y^b), (X^a, 0).
SplitSurjection example_split(int a, int b);

/// The six 2x2 minor forms in index order 01 < 02 < 03 < 12 < 13 < 23; each
/// is homogeneous of degree a + b. Evaluating them at a point agrees with
/// pluecker_from_rows of the evaluated matrix.
std::array<HomPoly, 6> pluecker_polys(const SplitSurjection& s);

struct SurjectivityReport {
    bool surjective = false;
    /// Rational common zero of the minors, when one exists.
    std::optional<ProjPoint> witness;
    /// Square-free factor whose roots parametrize non-rational base points.
    std::optional<std::pair<UniPoly, int>> nonrational_witness;
    /// Common factor of the minors when the base locus is a curve.
    std::optional<HomPoly> base_curve;
    /// Primes used for the quick finite-field refutation scan.
    std::vector<std::uint64_t> scanned_primes;
};

/// Decides whether the minors have no common zero over C: a quick
/// exhaustive scan of P^2(F_p) for two primes (refutation when a found zero
/// lifts to Q), then exact elimination with certified residual analysis.
/// Throws Inconclusive past the degree cap.
SurjectivityReport is_surjective(const SplitSurjection& s, std::uint64_t seed = 0, int degree_cap = 12);

/// Image point: Plücker coordinates of the evaluated matrix. Throws
/// RankDeficient at base points (impossible for validated surjections).
PlueckerPoint evaluate(const SplitSurjection& s, const ProjPoint& x);

/// The class component q2 swaps with s2 under the dual morphism.
inline CohomClass dual_class(const CohomClass& c) { return CohomClass{c.s2, c.q2}; }

struct ClassEvidence {
    std::array<Rational, 4> section_vector{};
    Intersection zeros;
    std::array<Rational, 4> dual_functional{};
    /// Distinct F_p points of the dual incidence locus (rank [M(x); xi] <= 2
    /// at rank-2 points of M); a lower-bound cross-check on s2, never a proof.
    std::vector<std::pair<std::uint64_t, long long>> dual_incidence_counts;
};

struct ClassResult {
    CohomClass cls;
    ClassEvidence evidence;
};

/// Cohomology class (c2 of the pulled-back quotient and sub bundles):
/// q2 is the total multiplicity of the zero scheme of the section induced
/// by a seeded generic vector v (the common zeros of row0*v and row1*v);
/// s2 = (a+b)^2 - q2 by the Whitney identity. Requires surjectivity.
ClassResult cohomology_class(const SplitSurjection& s, std::uint64_t seed);

/// Four sections of the tangent bundle, each lifted through the Euler
/// sequence to a triple of linear forms. Sections are considered modulo
/// scalar multiples of the Euler triple (X, Y, Z).
struct TangentSurjection {
    std::array<std::array<HomPoly, 3>, 4> sections;
};

/// True when [L1(x); L2(x); L3(x); L4(x); x] has rank 3 at every x, decided
/// by certified emptiness of the ten 3x3 minor cubics.
bool tangent_is_surjective(const TangentSurjection& t, std::uint64_t seed = 0, int degree_cap = 12);

/// Detailed variant of tangent_is_surjective.
SurjectivityReport tangent_surjectivity_report(const TangentSurjection& t, std::uint64_t seed = 0,
                                               int degree_cap = 12);

/// Rank of the four lifts together with the Euler triple inside the
/// 9-dimensional coefficient space; 5 means the sections are linearly
/// independent in H^0(T) = C^9 / <Euler>.
std::size_t tangent_section_rank(const TangentSurjection& t);

/// Seeded random draw of four small-integer sections, redrawn until they
/// are independent mod Euler and the bundle map is surjective.
TangentSurjection tangent_random(std::uint64_t seed, int max_retries = 64);

struct TangentClassResult {
    CohomClass cls;
    std::array<Rational, 4> section_vector{};
    Intersection zeros;
};

/// Class of the tangent morphism: q2 counts (with multiplicity) the locus
/// where the section induced by a seeded generic v in Q^4 is proportional
/// to the Euler vector — the common zeros of the three 2x2 minors of
/// [A(x) v | x]; s2 = 9 - q2.
TangentClassResult tangent_class(const TangentSurjection& t, std::uint64_t seed);

struct ScanMode {
    bool full = true;
    long long sample_size = 0;
    std::uint64_t seed = 0;
};

struct CollisionReport {
    std::uint64_t prime = 0;
    ScanMode mode;
    bool coprime_warning = false;
    long long points_scanned = 0;
    long long rank2_points = 0;
    long long distinct_images = 0;
    /// fiber size -> number of images with that fiber size
    std::map<long long, long long> fiber_histogram;
    /// up to 8 colliding point pairs (coordinates as canonical F_p reps)
    std::vector<std::pair<std::array<std::uint64_t, 3>, std::array<std::uint64_t, 3>>> sample_collisions;
};

/// Enumerates P^2(F_p) (or a seeded sample), maps every rank-2 point to its
/// normalized Plücker tuple mod p and reports fiber sizes. Finite-field
/// evidence of injectivity, not a proof. Requires a validated surjection
/// and a prime avoiding all coefficient denominators.
CollisionReport collision_scan(const SplitSurjection& s, std::uint64_t p, const ScanMode& mode);

} // namespace grassmorph

#endif
