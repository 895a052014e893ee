#pragma once

// Independent oracles shared by the unit tests and the acceptance binary.

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "delpezzo/catalog.hpp"
#include "delpezzo/coxeter.hpp"
#include "delpezzo/diophantine.hpp"
#include "delpezzo/equivariant.hpp"

namespace oracle {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;
using RPoly = std::vector<cpp_rational>;  // constant term first

inline void trim(RPoly &p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline RPoly derivative(const RPoly &p) {
    RPoly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<int>(i));
    trim(d);
    return d;
}

inline RPoly remainder(RPoly a, const RPoly &b, RPoly *quot = nullptr) {
    trim(a);
    RPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    while (a.size() >= b.size() && !a.empty()) {
        cpp_rational c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
        a.pop_back();
        trim(a);
    }
    if (quot) {
        trim(q);
        *quot = q;
    }
    return a;
}

inline RPoly poly_gcd(RPoly a, RPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        RPoly r = remainder(a, b);
        a = b;
        b = r;
    }
    if (!a.empty()) {
        cpp_rational lc = a.back();
        for (auto &c : a) c /= lc;
    }
    return a;
}

inline RPoly sub(const RPoly &a, const RPoly &b) {
    RPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

inline int sign_at_infinity(const RPoly &p, bool negative_side) {
    if (p.empty()) return 0;
    int s = p.back() > 0 ? 1 : -1;
    if (negative_side && (p.size() - 1) % 2 == 1) s = -s;
    return s;
}

// distinct roots of a square-free p in (0, inf), p(0) != 0
inline int sturm_positive_roots(const RPoly &p) {
    std::vector<RPoly> seq{p, derivative(p)};
    while (!seq.back().empty()) {
        RPoly r = remainder(seq[seq.size() - 2], seq.back());
        for (auto &c : r) c = -c;
        if (r.empty()) break;
        seq.push_back(r);
    }
    auto variations = [&](const std::function<int(const RPoly &)> &sign) {
        int v = 0, last = 0;
        for (const auto &q : seq) {
            int s = sign(q);
            if (s == 0) continue;
            if (last != 0 && s != last) ++v;
            last = s;
        }
        return v;
    };
    int at0 = variations([](const RPoly &q) { return q.empty() ? 0 : (q[0] > 0) - (q[0] < 0); });
    int atinf = variations([](const RPoly &q) { return sign_at_infinity(q, false); });
    return at0 - atinf;
}

// Faddeev-LeVerrier characteristic polynomial det(xI - A)
inline RPoly char_poly(const std::vector<std::vector<long long>> &A) {
    const size_t n = A.size();
    using M = std::vector<std::vector<cpp_rational>>;
    M a(n, std::vector<cpp_rational>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) a[i][j] = A[i][j];
    RPoly c(n + 1);
    c[n] = 1;
    M Mk(n, std::vector<cpp_rational>(n, 0));
    for (size_t k = 1; k <= n; ++k) {
        M prod(n, std::vector<cpp_rational>(n, 0));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                cpp_rational s = 0;
                for (size_t l = 0; l < n; ++l) s += a[i][l] * Mk[l][j];
                prod[i][j] = s + (i == j ? c[n - k + 1] : cpp_rational(0));
            }
        Mk = prod;
        cpp_rational tr = 0;
        for (size_t i = 0; i < n; ++i)
            for (size_t l = 0; l < n; ++l) tr += a[i][l] * Mk[l][i];
        c[n - k] = -tr / static_cast<int>(k);
    }
    return c;
}

struct SignCount {
    int plus = 0, minus = 0, zero = 0;
};

// eigenvalue sign counts of a symmetric integer matrix via square-free factorization and Sturm sequences
inline SignCount sturm_inertia(const std::vector<std::vector<long long>> &A) {
    RPoly p = char_poly(A);
    SignCount s;
    while (!p.empty() && p[0] == 0) {
        p.erase(p.begin());
        ++s.zero;
    }
    // Yun's square-free decomposition
    RPoly a = poly_gcd(p, derivative(p));
    RPoly b, c, d;
    remainder(p, a, &b);
    remainder(derivative(p), a, &c);
    d = sub(c, derivative(b));
    for (int mult = 1; !(b.size() == 1); ++mult) {
        RPoly f = poly_gcd(b, d);
        RPoly nb, nc;
        remainder(b, f, &nb);
        remainder(d, f, &nc);
        if (f.size() > 1) {
            s.plus += mult * sturm_positive_roots(f);
            RPoly neg = f;
            for (size_t i = 1; i < neg.size(); i += 2) neg[i] = -neg[i];
            s.minus += mult * sturm_positive_roots(neg);
        }
        b = nb;
        d = sub(nc, derivative(b));
    }
    return s;
}

inline std::vector<std::vector<long long>> random_symmetric(std::mt19937 &rng, int n, int bound) {
    std::uniform_int_distribution<int> u(-bound, bound);
    std::vector<std::vector<long long>> A(n, std::vector<long long>(n));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) A[i][j] = A[j][i] = u(rng);
    return A;
}

inline dp::IMat to_imat(const std::vector<std::vector<long long>> &A) {
    dp::IMat m(A.size(), A.size());
    for (size_t i = 0; i < A.size(); ++i)
        for (size_t j = 0; j < A.size(); ++j) m(i, j) = dp::Integer(A[i][j]);
    return m;
}

// Box search for x^T G x = k (x nonzero when required), |x_i| <= bound
inline bool box_solvable(const std::vector<std::vector<long long>> &G, long long k, bool nonzero, int bound) {
    const int r = static_cast<int>(G.size());
    std::vector<long long> x(r, -bound);
    if (r == 0) return k == 0 && !nonzero;
    while (true) {
        bool zero = true;
        long long q = 0;
        for (int i = 0; i < r; ++i) {
            if (x[i] != 0) zero = false;
            for (int j = 0; j < r; ++j) q += x[i] * G[i][j] * x[j];
        }
        if (q == k && !(nonzero && zero)) return true;
        int i = 0;
        while (i < r && x[i] == bound) x[i++] = -bound;
        if (i == r) return false;
        ++x[i];
    }
}

// block-diagonal involution with t (+1), c (-1), r swap blocks, conjugated by a random unimodular matrix
struct BlockInvolution {
    dp::IMat matrix;
    int t, c, r;
};

inline dp::IMat random_unimodular(std::mt19937 &rng, int n, int steps) {
    dp::IMat U = dp::identity(n);
    std::uniform_int_distribution<int> idx(0, n - 1), coef(-2, 2), flip(0, 5);
    for (int s = 0; s < steps; ++s) {
        int i = idx(rng), j = idx(rng);
        if (i == j) continue;
        if (flip(rng) == 0) {
            U.row(i).swap(U.row(j));
        } else {
            dp::Integer k(coef(rng));
            for (int col = 0; col < n; ++col) U(i, col) += k * U(j, col);
        }
    }
    return U;
}

inline BlockInvolution random_block_involution(std::mt19937 &rng, int max_rank) {
    std::uniform_int_distribution<int> u(0, max_rank);
    while (true) {
        int t = u(rng), c = u(rng), r = u(rng);
        int n = t + c + 2 * r;
        if (n == 0 || n > max_rank || (c == 0 && r == 0)) continue;
        dp::IMat B = dp::zeros(n, n);
        int k = 0;
        for (int i = 0; i < t; ++i, ++k) B(k, k) = 1;
        for (int i = 0; i < c; ++i, ++k) B(k, k) = -1;
        for (int i = 0; i < r; ++i, k += 2) B(k, k + 1) = B(k + 1, k) = 1;
        dp::IMat U = random_unimodular(rng, n, 4 * n);
        dp::IMat M = U * B * dp::inverse_unimodular(U);
        return {M, t, c, r};
    }
}

// order of a finite Coxeter group from its labels, by component type (A_k, B_k, I2(m), products)
inline long long coxeter_order_formula(const std::vector<std::vector<int>> &labels, std::string *type = nullptr) {
    const int k = static_cast<int>(labels.size());
    std::vector<int> comp(k, -1);
    long long order = 1;
    std::string desc;
    for (int s = 0; s < k; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> nodes{s};
        comp[s] = s;
        for (size_t q = 0; q < nodes.size(); ++q)
            for (int v = 0; v < k; ++v)
                if (v != nodes[q] && (labels[nodes[q]][v] >= 3 || labels[nodes[q]][v] == dp::COXETER_INFINITY) && comp[v] < 0) {
                    comp[v] = s;
                    nodes.push_back(v);
                }
        const int size = static_cast<int>(nodes.size());
        int threes = 0, fours = 0, other = 0, inf = 0;
        for (int a : nodes)
            for (int b : nodes)
                if (a < b) {
                    int m = labels[a][b];
                    if (m == 3) ++threes;
                    else if (m == 4) ++fours;
                    else if (m == dp::COXETER_INFINITY) ++inf;
                    else if (m > 2) ++other;
                }
        if (inf) return -1;
        std::string part;
        long long o = 0;
        if (size == 1) {
            o = 2;
            part = "A1";
        } else if (size == 2) {
            int m = labels[nodes[0]][nodes[1]];
            o = 2LL * m;
            part = m == 3 ? "A2" : "I2(" + std::to_string(m) + ")";
        } else if (fours == 0 && other == 0 && threes == size - 1) {
            o = 1;
            for (int i = 2; i <= size + 1; ++i) o *= i;
            part = "A" + std::to_string(size);
        } else if (fours == 1 && other == 0 && threes == size - 2) {
            o = 1LL << size;
            for (int i = 2; i <= size; ++i) o *= i;
            part = "B" + std::to_string(size);
        } else {
            return -1;
        }
        order *= o;
        desc += (desc.empty() ? "" : " x ") + part;
    }
    if (type) *type = desc;
    return order;
}

// All single-entry +1 corruptions of element, piece and tangent matrices of an entry.
// Returns the number of mutations tried and collects any that verify_entry still passes.
inline int mutate_entry(const dp::RealizationEntry &e, std::vector<std::string> &survivors) {
    int tried = 0;
    auto run = [&](const dp::RealizationEntry &m, const std::string &what) {
        ++tried;
        if (dp::verify_entry(m).pass) survivors.push_back(e.name + ": " + what);
    };
    for (size_t k = 0; k < e.elements.size(); ++k)
        for (int i = 0; i < e.elements[k].matrix.rows(); ++i)
            for (int j = 0; j < e.elements[k].matrix.cols(); ++j) {
                dp::RealizationEntry m = e;
                m.elements[k].matrix(i, j) += 1;
                run(m, "element " + e.elements[k].name + " (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
            }
    for (size_t k = 0; k < e.pieces.size(); ++k)
        for (int i = 0; i < e.pieces[k].matrix.rows(); ++i)
            for (int j = 0; j < e.pieces[k].matrix.cols(); ++j) {
                dp::RealizationEntry m = e;
                m.pieces[k].matrix(i, j) += 1;
                run(m, "piece " + e.pieces[k].element + " on " + e.pieces[k].summand);
            }
    for (size_t k = 0; k < e.tangents.size(); ++k)
        for (size_t x = 0; x < e.tangents[k].matrices.size(); ++x)
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) {
                    dp::RealizationEntry m = e;
                    m.tangents[k].matrices[x](i, j) += 1;
                    run(m, "tangent " + e.tangents[k].piece + " " + e.tangents[k].elements[x]);
                }
    return tried;
}

} // namespace oracle
