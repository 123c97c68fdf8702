#ifndef GRASSMORPH_CLASSIFY_HPP
#define GRASSMORPH_CLASSIFY_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "grassmorph/cayley_bacharach.hpp"
#include "grassmorph/grassmann.hpp"

namespace grassmorph {

enum class Status { Realizable, NotRealizable, Unknown };

std::string status_name(Status s);

/// How the points of a CbPoints witness are arranged. OnCurve places the
/// points on a rational irreducible curve of the stated degree (the low-l
/// intervals); StrictThree draws random points with no 3 collinear;
/// GeneralPosition draws random points verified up to degree c - 3.
enum class CbArrangement { OnCurve, StrictThree, GeneralPosition };

/// Construction recipe backing a Realizable verdict. `dual` means the
/// recipe realizes the swapped class and the morphism is composed with the
/// duality.
struct WitnessRecipe {
    enum class Kind { Split, TrivialPlane, ConstantExcluded, FiniteSelfMap, CbPoints };
    Kind kind = Kind::Split;
    bool dual = false;

    // Split
    int a = 0, b = 0;
    // FiniteSelfMap
    int n = 0;
    // CbPoints
    int ell = 0, c = 0, t = 0;
    CbArrangement arrangement = CbArrangement::GeneralPosition;

    std::string str() const;
};

struct ClassVerdict {
    Status status = Status::Unknown;
    std::string reason; // machine-readable citation tag
    std::optional<WitnessRecipe> witness;
};

/// Full decision tree: perfect-square gate, the finite-self-map classes,
/// the split (decomposable) classes, the small-degree classes, then the
/// nonexistence and existence intervals; Unknown for the remaining gap.
ClassVerdict realizability(long long q2, long long s2);

/// Interval logic only (no decomposable-class pass); exposed because the
/// two layers are audited separately.
ClassVerdict realizability_by_intervals(long long q2, long long s2);

/// Classes realized by split surjections of total degree c:
/// { (a*b, c^2 - a*b) : a + b = c, a, b >= 0 }.
std::set<std::pair<long long, long long>> decomposable_classes(int c);

/// The four classes of regularly embedded planes, reported as a
/// classification fact: {(1,0), (0,1), (1,3), (3,1)}.
std::set<std::pair<long long, long long>> embedded_classes();

/// q2 in [1, c-2] or [c^2-c+2, c^2-1] (the nonexistence intervals), c >= 4.
bool in_nonexistence_interval(int c, long long q2);

/// ell lies in an existence interval for degree c >= 5: [t(c-3)+2, t*c] for
/// 1 <= t <= k, or the top interval [(c^2-3c+2)/2 + 1, floor(c^2/2)].
/// Returns the supporting curve degree t, or c - 3 + a GeneralPosition
/// marker via the bool (true = top interval).
std::optional<std::pair<int, bool>> existence_interval_part3(int c, long long ell);

struct TableRow {
    int c = 0;
    std::vector<ClassVerdict> verdicts; // indexed by q2 = 0 .. c^2
    long long count(Status s) const;
    std::vector<long long> with_status(Status s) const;
};

/// Verdicts for every class (q2, c^2 - q2) with c = 1 .. c_max.
std::vector<TableRow> classification_table(int c_max, bool use_decomposable_pass = true);

/// Materializes the point configuration of a CbPoints recipe: points on a
/// line / conic / cuspidal cubic for OnCurve, seeded random draws otherwise;
/// verified against verify_position and, for c >= 4, against cb_check at
/// twist c - 3. Curve degrees above 3 raise CapExceeded.
PointConfig materialize_cb_points(const WitnessRecipe& recipe, std::uint64_t seed,
                                  long long budget = 1000000, int max_retries = 64);

} // namespace grassmorph

#endif
