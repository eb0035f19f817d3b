#pragma once

// Reference computations used only by the tests. Each one is written from the
// defining formula, without going through the library routine it checks.

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <random>
#include <utility>
#include <vector>

#include "crepant/base_geometry.hpp"
#include "crepant/cyclotomic.hpp"
#include "crepant/rational.hpp"

namespace oracle {

using crepant::CycNum;
using crepant::Rational;

// sum_k c_k exp(2 pi i k / N) in double precision.
inline std::complex<double> numeric(const CycNum& x) {
    std::complex<double> z = 0;
    const int n = x.conductor();
    for (std::size_t k = 0; k < x.coeffs().size(); ++k) {
        const double angle = 2 * std::numbers::pi * static_cast<double>(k) / n;
        z += x.coeffs()[k].to_double() * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return z;
}

inline bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-9) {
    return std::abs(a - b) <= tol * (1 + std::abs(a) + std::abs(b));
}

// Random element of Q(zeta_N): a few small rational multiples of powers of zeta_N.
inline CycNum random_cyc(std::mt19937& rng, int conductor) {
    CycNum x(0);
    const int terms = 1 + static_cast<int>(rng() % 4);
    for (int t = 0; t < terms; ++t) {
        const long num = static_cast<long>(rng() % 11) - 5;
        const long den = 1 + static_cast<long>(rng() % 4);
        x += CycNum(Rational(num, den)) * CycNum::zeta(conductor, static_cast<int>(rng() % conductor));
    }
    return x;
}

// Gauss-Jordan inverse of the A_n Cartan matrix on plain nested vectors.
inline std::vector<std::vector<Rational>> cartan_inverse(int n) {
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, Rational(0)));
    for (int i = 0; i < n; ++i) {
        a[i][i] = Rational(-2);
        if (i > 0) a[i][i - 1] = Rational(1);
        if (i + 1 < n) a[i][i + 1] = Rational(1);
        a[i][n + i] = Rational(1);
    }
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (a[p][c].is_zero()) ++p;
        std::swap(a[p], a[c]);
        const Rational pivot = a[c][c];
        for (auto& v : a[c]) v = v / pivot;
        for (int r = 0; r < n; ++r) {
            if (r == c || a[r][c].is_zero()) continue;
            const Rational f = a[r][c];
            for (int k = 0; k < 2 * n; ++k) a[r][k] = a[r][k] - f * a[c][k];
        }
    }
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
    }
    return inv;
}

// (c_n^{-1})_{ij} with 1-based indices and zero outside 1..n.
inline Rational cinv(const std::vector<std::vector<Rational>>& inv, int i, int j) {
    const int n = static_cast<int>(inv.size());
    if (i < 1 || i > n || j < 1 || j > n) return Rational(0);
    return inv[i - 1][j - 1];
}

// E_l . (beta_i + ... + beta_j) from the rule: each beta_m meets E_m with -2
// and its neighbours with 1.
inline long intersection(int l, int i, int j) {
    long total = 0;
    for (int m = i; m <= j; ++m) {
        if (m == l) total += -2;
        else if (m == l - 1 || m == l + 1) total += 1;
    }
    return total;
}

// R_ijm as {(r, s) -> coefficient}, zero entries dropped.
inline std::map<std::pair<int, int>, long> r_poly(int i, int j, int m, int n) {
    std::map<std::pair<int, int>, long> out;
    for (int r = 1; r <= n; ++r) {
        for (int s = r; s <= n; ++s) {
            const long c = intersection(i, r, s) * intersection(j, r, s) * intersection(m, r, s);
            if (c != 0) out[{r, s}] = c;
        }
    }
    return out;
}

// Classical E_i.E_j coefficient on E_l as (M-coefficient, K-coefficient),
// transcribed from the printed three-case product rule.
inline std::pair<Rational, Rational> exceptional_coefficient(int i, int j, int l, int n) {
    const auto inv = cartan_inverse(n);
    if (i > j) std::swap(i, j);
    if (i == j) {
        const Rational em = cinv(inv, i - 1, l) - cinv(inv, i + 1, l);
        const Rational kap = Rational(-(i - 1)) * cinv(inv, i - 1, l) - Rational(4) * cinv(inv, i, l) +
                             Rational(i + 1) * cinv(inv, i + 1, l);
        return {em, kap};
    }
    if (j == i + 1) {
        // the printed rule is for E_{u-1} E_u with u = j
        const int u = j;
        return {cinv(inv, u, l) - cinv(inv, u - 1, l),
                Rational(u) * cinv(inv, u - 1, l) - Rational(u - 1) * cinv(inv, u, l)};
    }
    return {Rational(0), Rational(0)};
}

}  // namespace oracle
