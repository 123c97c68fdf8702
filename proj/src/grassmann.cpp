#include "grassmorph/grassmann.hpp"

#include <cmath>

#include "grassmorph/errors.hpp"

namespace grassmorph {

PlueckerPoint::PlueckerPoint(const std::array<Rational, 6>& coords) : p_(coords) {
    int last = -1;
    for (int i = 5; i >= 0; --i) {
        if (p_[static_cast<std::size_t>(i)] != 0) { last = i; break; }
    }
    if (last < 0) throw Error("PlueckerPoint: all coordinates zero");
    Rational scale = p_[static_cast<std::size_t>(last)];
    for (auto& v : p_) v /= scale;
}

std::string PlueckerPoint::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < 6; ++i) {
        if (i) s += " : ";
        s += to_string(p_[i]);
    }
    return s + ")";
}

PlueckerPoint pluecker_from_rows(const QMatrix& m) {
    if (m.rows() != 2 || m.cols() != 4) throw Error("pluecker_from_rows: expected a 2x4 matrix");
    std::array<Rational, 6> p;
    std::size_t idx = 0;
    bool any = false;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
            p[idx] = m.at(0, i) * m.at(1, j) - m.at(0, j) * m.at(1, i);
            if (p[idx] != 0) any = true;
            ++idx;
        }
    if (!any) throw RankDeficient("pluecker_from_rows: matrix has rank < 2");
    return PlueckerPoint(p);
}

bool check_relation(const PlueckerPoint& q) {
    return q[0] * q[5] - q[1] * q[4] + q[2] * q[3] == 0;
}

PlueckerPoint hodge_dual(const PlueckerPoint& q) {
    return PlueckerPoint({q[5], -q[4], q[3], q[2], -q[1], q[0]});
}

long long perfect_square_root(long long n) {
    if (n < 0) return -1;
    long long r = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(n))));
    for (long long c = std::max(0LL, r - 2); c <= r + 2; ++c)
        if (c * c == n) return c;
    return -1;
}

long long CohomClass::c() const {
    long long r = perfect_square_root(q2 + s2);
    if (r < 0) throw Error("CohomClass: q2 + s2 is not a perfect square");
    return r;
}

CohomClass make_cohom_class(long long q2, long long s2) {
    if (q2 < 0 || s2 < 0) throw Error("CohomClass: negative component");
    long long r = perfect_square_root(q2 + s2);
    if (r < 1) throw Error("CohomClass: q2 + s2 must be a positive perfect square");
    return CohomClass{q2, s2};
}

} // namespace grassmorph
