#include "grassmorph/resultant.hpp"

#include "grassmorph/matrix.hpp"

namespace grassmorph {

namespace {

// Sample abscissae 0, 1, -1, 2, -2, ...
Rational sample_point(std::size_t i) {
    if (i == 0) return Rational(0);
    long long k = static_cast<long long>((i + 1) / 2);
    return (i % 2 == 1) ? Rational(k) : Rational(-k);
}

// Coefficient vector of f in `var` at (u, w) = (t, 1), zero-padded to the
// formal var-degree `formal` (index = var-exponent).
std::vector<Rational> fiber_coeffs(const HomPoly& f, int var, const Rational& t, int formal) {
    UniPoly p = fiber_poly(f, var, t, Rational(1));
    std::vector<Rational> c(static_cast<std::size_t>(formal) + 1, Rational(0));
    for (std::size_t i = 0; i < p.c.size(); ++i) c[i] = p.c[i];
    return c;
}

Rational sylvester_det(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    const int m = static_cast<int>(a.size()) - 1;
    const int n = static_cast<int>(b.size()) - 1;
    const int size = m + n;
    QMatrix s(static_cast<std::size_t>(size), static_cast<std::size_t>(size), Rational(0));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k)
            s.at(static_cast<std::size_t>(r), static_cast<std::size_t>(r + k)) = a[static_cast<std::size_t>(m - k)];
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k)
            s.at(static_cast<std::size_t>(n + r), static_cast<std::size_t>(r + k)) = b[static_cast<std::size_t>(n - k)];
    return det(s, Rational(0));
}

// Determinants giving the two coefficients of S_1 for scalar coefficient
// vectors a (degree m) and b (degree n): the matrix has n-1 rows of shifted
// a-coefficients and m-1 rows of shifted b-coefficients over the monomial
// basis var^(m+n-2) ... var^0; psc1 is the leading square block, s10 swaps
// in the last column.
std::pair<Rational, Rational> subres1_dets(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    const int m = static_cast<int>(a.size()) - 1;
    const int n = static_cast<int>(b.size()) - 1;
    const int rows = m + n - 2;
    const int cols = m + n - 1;
    QMatrix full(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols), Rational(0));
    for (int r = 0; r < n - 1; ++r)
        for (int k = 0; k <= m; ++k)
            full.at(static_cast<std::size_t>(r), static_cast<std::size_t>(r + k)) = a[static_cast<std::size_t>(m - k)];
    for (int r = 0; r < m - 1; ++r)
        for (int k = 0; k <= n; ++k)
            full.at(static_cast<std::size_t>(n - 1 + r), static_cast<std::size_t>(r + k)) = b[static_cast<std::size_t>(n - k)];

    auto minor_det = [&](bool last_col) {
        QMatrix msub(static_cast<std::size_t>(rows), static_cast<std::size_t>(rows), Rational(0));
        for (int r = 0; r < rows; ++r) {
            for (int c = 0; c < rows - 1; ++c)
                msub.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = full.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
            int src = last_col ? cols - 1 : rows - 1;
            msub.at(static_cast<std::size_t>(r), static_cast<std::size_t>(rows - 1)) = full.at(static_cast<std::size_t>(r), static_cast<std::size_t>(src));
        }
        return det(msub, Rational(0));
    };
    return {minor_det(false), minor_det(true)};
}

std::pair<int, int> remaining_vars(int var) {
    int u = -1, w = -1;
    for (int v = 0; v < 3; ++v) {
        if (v == var) continue;
        if (u < 0) u = v; else w = v;
    }
    return {u, w};
}

} // namespace

UniPoly lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& samples) {
    // W(t) = prod (t - x_i); term i = y_i * (W / (t - x_i)) / W'(x_i)
    UniPoly w = UniPoly::constant(Rational(1));
    for (const auto& [x, y] : samples) w = w * UniPoly({-x, Rational(1)});
    UniPoly acc;
    for (const auto& [x, y] : samples) {
        if (y == 0) continue;
        UniPoly num = divrem(w, UniPoly({-x, Rational(1)})).first;
        Rational den = num.eval(x);
        acc = acc + num * (y / den);
    }
    return acc;
}

HomPoly sylvester_resultant(const HomPoly& f, const HomPoly& g, int var) {
    const int mv = f.degree_in(var);
    const int nv = g.degree_in(var);
    if (mv < 1 || nv < 1) throw Error("sylvester_resultant: inputs must have positive degree in the chosen variable");
    const int m = f.degree();
    const int n = g.degree();
    const int dres = nv * m + mv * n - mv * nv;
    auto [u_var, w_var] = remaining_vars(var);

    std::vector<std::pair<Rational, Rational>> samples;
    samples.reserve(static_cast<std::size_t>(dres) + 1);
    for (std::size_t i = 0; i <= static_cast<std::size_t>(dres); ++i) {
        Rational t = sample_point(i);
        samples.emplace_back(t, sylvester_det(fiber_coeffs(f, var, t, mv), fiber_coeffs(g, var, t, nv)));
    }
    UniPoly r = lagrange_interpolate(samples);

    BinaryForm bf;
    bf.u_var = u_var;
    bf.w_var = w_var;
    bf.degree = dres;
    bf.b = r;
    return hompoly_from_binary(bf);
}

std::pair<UniPoly, UniPoly> first_subresultant_coeffs(const HomPoly& f, const HomPoly& g, int var) {
    const int m = f.degree();
    const int n = g.degree();
    if (f.degree_in(var) != m || g.degree_in(var) != n)
        throw Error("first_subresultant_coeffs: leading var-coefficients must be constants");
    if (m + n < 3) throw Error("first_subresultant_coeffs: total degree too small");

    const int d_psc1 = (m - 1) * (n - 1);
    const int d_s10 = d_psc1 + 1;
    std::vector<std::pair<Rational, Rational>> psc_samples, s10_samples;
    for (std::size_t i = 0; i <= static_cast<std::size_t>(d_s10); ++i) {
        Rational t = sample_point(i);
        auto [pv, sv] = subres1_dets(fiber_coeffs(f, var, t, m), fiber_coeffs(g, var, t, n));
        psc_samples.emplace_back(t, pv);
        s10_samples.emplace_back(t, sv);
    }
    return {lagrange_interpolate(psc_samples), lagrange_interpolate(s10_samples)};
}

} // namespace grassmorph
