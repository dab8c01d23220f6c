#pragma once

// Test-only oracles, independent of the library code paths they check.

#include <map>
#include <random>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "kfd/perm.hpp"
#include "kfd/poly.hpp"

namespace kfd::oracle {

inline Perm random_perm(int n, std::mt19937_64& rng) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i + 1;
    for (int i = n - 1; i > 0; --i) {
        std::uniform_int_distribution<int> d(0, i);
        std::swap(img[i], img[d(rng)]);
    }
    return Perm::from_images(img);
}

// Naive product-saturation closure; no stabilizer chain involved.
inline std::set<Perm> naive_closure(int degree, const std::vector<Perm>& gens) {
    std::set<Perm> elems{Perm::identity(degree)};
    std::vector<Perm> frontier{Perm::identity(degree)};
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const Perm& e : frontier)
            for (const Perm& g : gens) {
                Perm p = e * g;
                if (elems.insert(p).second) next.push_back(p);
            }
        frontier = std::move(next);
    }
    return elems;
}

// Generator index straight from the definition's closure form, on the naive
// engine: smallest e with <{g : ind(g) <= e}> the whole group.
inline int naive_generator_index(int degree, const std::vector<Perm>& gens) {
    std::set<Perm> all = naive_closure(degree, gens);
    std::set<int> indices;
    for (const Perm& p : all)
        if (!p.is_identity()) indices.insert(p.index());
    for (int e : indices) {
        std::vector<Perm> sub;
        for (const Perm& p : all)
            if (!p.is_identity() && p.index() <= e) sub.push_back(p);
        if (naive_closure(degree, sub).size() == all.size()) return e;
    }
    return -1;
}

// Sylvester-matrix resultant via exact rational Gaussian elimination.
inline mpq_class sylvester_resultant(const IPoly& f, const IPoly& g) {
    const int m = f.degree(), n = g.degree();
    if (m < 0 || n < 0) throw std::invalid_argument("sylvester of zero poly");
    const int N = m + n;
    if (N == 0) return 1;
    std::vector<std::vector<mpq_class>> a(N, std::vector<mpq_class>(N, mpq_class(0)));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) a[r][r + (m - k)] = mpq_class(f.coeff(k));
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) a[n + r][r + (n - k)] = mpq_class(g.coeff(k));
    mpq_class det = 1;
    for (int col = 0; col < N; ++col) {
        int piv = -1;
        for (int r = col; r < N; ++r)
            if (sgn(a[r][col]) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        mpq_class inv = mpq_class(1) / a[col][col];
        for (int r = col + 1; r < N; ++r) {
            if (sgn(a[r][col]) == 0) continue;
            mpq_class fac = a[r][col] * inv;
            for (int c = col; c < N; ++c) a[r][c] -= fac * a[col][c];
        }
    }
    return det;
}

// Discriminant of the quadratic field Q(sqrt(m0)) for a nonsquare integer
// m (squarefree part extracted by trial division; m small in tests).
inline mpz_class quadratic_field_disc(mpz_class m) {
    if (m == 0 || m == 1) throw std::invalid_argument("not a quadratic field");
    mpz_class core = m < 0 ? -1 : 1;
    mpz_class a = abs_z(m);
    for (mpz_class p = 2; p * p <= a; ++p) {
        while (a % (p * p) == 0) a /= p * p;
        // leave single factors in place
    }
    core *= a;
    mpz_class r = ((core % 4) + 4) % 4;
    return r == 1 ? core : 4 * core;
}

}  // namespace kfd::oracle
