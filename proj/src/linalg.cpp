#include "delpezzo/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dp {

IMat imat(std::initializer_list<std::initializer_list<long long>> rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
    IMat m(r, c);
    int i = 0;
    for (const auto &row : rows) {
        if (static_cast<int>(row.size()) != c) throw std::invalid_argument("ragged matrix literal");
        int j = 0;
        for (long long x : row) m(i, j++) = Integer(x);
        ++i;
    }
    return m;
}

IVec ivec(std::initializer_list<long long> xs) {
    IVec v(static_cast<int>(xs.size()));
    int i = 0;
    for (long long x : xs) v(i++) = Integer(x);
    return v;
}

IMat zeros(int rows, int cols) {
    IMat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = Integer(0);
    return m;
}

IMat identity(int n) {
    IMat m = zeros(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Integer(1);
    return m;
}

IMat diagonal(const std::vector<long long> &d) {
    int n = static_cast<int>(d.size());
    IMat m = zeros(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Integer(d[i]);
    return m;
}

QMat to_rational(const IMat &m) {
    QMat q(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) q(i, j) = Rational(m(i, j));
    return q;
}

bool equal(const IMat &a, const IMat &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (!(a(i, j) == b(i, j))) return false;
    return true;
}

bool is_zero(const IMat &m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) return false;
    return true;
}

IMat hstack(const IMat &a, const IMat &b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
    IMat m(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        for (int j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

IMat vstack(const IMat &a, const IMat &b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
    IMat m(a.rows() + b.rows(), a.cols());
    for (int j = 0; j < a.cols(); ++j) {
        for (int i = 0; i < a.rows(); ++i) m(i, j) = a(i, j);
        for (int i = 0; i < b.rows(); ++i) m(a.rows() + i, j) = b(i, j);
    }
    return m;
}

namespace {

void swap_rows(IMat &m, int a, int b) {
    if (a == b) return;
    for (int j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

// row k -= q * row r
void sub_row(IMat &m, int k, int r, const Integer &q) {
    if (q.is_zero()) return;
    for (int j = 0; j < m.cols(); ++j) m(k, j) -= q * m(r, j);
}

void negate_row(IMat &m, int r) {
    for (int j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

} // namespace

Echelon row_echelon(const IMat &A) {
    Echelon e;
    e.H = A;
    e.V = identity(static_cast<int>(A.rows()));
    const int m = static_cast<int>(A.rows());
    const int n = static_cast<int>(A.cols());
    int r = 0;
    for (int c = 0; c < n && r < m; ++c) {
        bool pivot = false;
        while (true) {
            int best = -1;
            for (int i = r; i < m; ++i) {
                if (e.H(i, c).is_zero()) continue;
                if (best < 0 || abs(e.H(i, c)) < abs(e.H(best, c))) best = i;
            }
            if (best < 0) break;
            pivot = true;
            swap_rows(e.H, r, best);
            swap_rows(e.V, r, best);
            bool clean = true;
            for (int k = r + 1; k < m; ++k) {
                if (e.H(k, c).is_zero()) continue;
                Integer q = floor_div(e.H(k, c), e.H(r, c));
                sub_row(e.H, k, r, q);
                sub_row(e.V, k, r, q);
                if (!e.H(k, c).is_zero()) clean = false;
            }
            if (clean) break;
        }
        if (!pivot) continue;
        if (e.H(r, c).sign() < 0) {
            negate_row(e.H, r);
            negate_row(e.V, r);
        }
        for (int k = 0; k < r; ++k) {
            Integer q = floor_div(e.H(k, c), e.H(r, c));
            sub_row(e.H, k, r, q);
            sub_row(e.V, k, r, q);
        }
        ++r;
    }
    e.rank = r;
    return e;
}

int rank(const IMat &A) { return row_echelon(A).rank; }

int rank_mod2(const IMat &A) {
    const int m = static_cast<int>(A.rows());
    const int n = static_cast<int>(A.cols());
    std::vector<std::vector<int>> b(m, std::vector<int>(n));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) b[i][j] = mod(A(i, j), Integer(2)).is_zero() ? 0 : 1;
    int r = 0;
    for (int c = 0; c < n && r < m; ++c) {
        int p = -1;
        for (int i = r; i < m; ++i)
            if (b[i][c]) { p = i; break; }
        if (p < 0) continue;
        std::swap(b[p], b[r]);
        for (int i = 0; i < m; ++i)
            if (i != r && b[i][c])
                for (int j = 0; j < n; ++j) b[i][j] ^= b[r][j];
        ++r;
    }
    return r;
}

Integer determinant(const IMat &A) {
    if (A.rows() != A.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const int n = static_cast<int>(A.rows());
    if (n == 0) return Integer(1);
    IMat M = A;
    Integer prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (M(k, k).is_zero()) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (!M(i, k).is_zero()) { p = i; break; }
            if (p < 0) return Integer(0);
            swap_rows(M, k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) M(i, j) = (M(i, j) * M(k, k) - M(i, k) * M(k, j)) / prev;
        prev = M(k, k);
    }
    return sign > 0 ? M(n - 1, n - 1) : -M(n - 1, n - 1);
}

QMat inverse(const QMat &A) {
    const int n = static_cast<int>(A.rows());
    QMat M = A;
    QMat R(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) R(i, j) = Rational(i == j ? 1 : 0);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (!M(i, c).is_zero()) { p = i; break; }
        if (p < 0) throw std::domain_error("singular matrix");
        for (int j = 0; j < n; ++j) {
            std::swap(M(p, j), M(c, j));
            std::swap(R(p, j), R(c, j));
        }
        Rational piv = M(c, c);
        for (int j = 0; j < n; ++j) {
            M(c, j) /= piv;
            R(c, j) /= piv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == c || M(i, c).is_zero()) continue;
            Rational f = M(i, c);
            for (int j = 0; j < n; ++j) {
                M(i, j) -= f * M(c, j);
                R(i, j) -= f * R(c, j);
            }
        }
    }
    return R;
}

IMat inverse_unimodular(const IMat &A) {
    QMat inv = inverse(to_rational(A));
    IMat out(A.rows(), A.cols());
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j) {
            if (!inv(i, j).is_integer()) throw std::domain_error("matrix is not unimodular");
            out(i, j) = inv(i, j).num();
        }
    return out;
}

IMat column_hnf(const IMat &B) {
    Echelon e = row_echelon(B.transpose());
    IMat out(B.rows(), e.rank);
    for (int j = 0; j < e.rank; ++j)
        for (int i = 0; i < B.rows(); ++i) out(i, j) = e.H(j, i);
    return out;
}

IMat integer_kernel(const IMat &A) {
    const int n = static_cast<int>(A.cols());
    Echelon e = row_echelon(A.transpose());
    IMat K(n, n - e.rank);
    for (int j = e.rank; j < n; ++j)
        for (int i = 0; i < n; ++i) K(i, j - e.rank) = e.V(j, i);
    return column_hnf(K);
}

IMat saturate(const IMat &B) {
    const int n = static_cast<int>(B.rows());
    if (B.cols() == 0) return IMat(n, 0);
    IMat perp = integer_kernel(B.transpose());
    if (perp.cols() == 0) return identity(n);
    return integer_kernel(perp.transpose());
}

IMat intersect_spans(const IMat &A, const IMat &B) {
    const int n = static_cast<int>(A.rows());
    if (A.cols() == 0 || B.cols() == 0) return IMat(n, 0);
    IMat K = integer_kernel(hstack(A, -B));
    IMat U = K.topRows(A.cols());
    IMat X = A * U;
    return saturate(X);
}

IMat complete_basis(const IMat &K) {
    Echelon e = row_echelon(K);
    return inverse_unimodular(e.V);
}

Inertia inertia(const IMat &gram) {
    const int n = static_cast<int>(gram.rows());
    QMat G = to_rational(gram);
    Inertia in;
    int k = 0;
    for (; k < n; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (!G(i, i).is_zero()) { p = i; break; }
        if (p < 0) {
            int pi = -1, pj = -1;
            for (int i = k; i < n && pi < 0; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (!G(i, j).is_zero()) { pi = i; pj = j; break; }
            if (pi < 0) break;
            for (int t = 0; t < n; ++t) G(pi, t) += G(pj, t);
            for (int t = 0; t < n; ++t) G(t, pi) += G(t, pj);
            p = pi;
        }
        if (p != k) {
            for (int t = 0; t < n; ++t) std::swap(G(p, t), G(k, t));
            for (int t = 0; t < n; ++t) std::swap(G(t, p), G(t, k));
        }
        const Rational piv = G(k, k);
        for (int l = k + 1; l < n; ++l) {
            if (G(l, k).is_zero()) continue;
            Rational f = G(l, k) / piv;
            for (int t = 0; t < n; ++t) G(l, t) -= f * G(k, t);
            for (int t = 0; t < n; ++t) G(t, l) -= f * G(t, k);
        }
        if (piv.sign() > 0) ++in.plus;
        else ++in.minus;
    }
    in.zero = n - in.plus - in.minus;
    return in;
}

Poly char_poly(const IMat &A) {
    const int n = static_cast<int>(A.rows());
    Poly c(n + 1, Integer(0));
    c[n] = Integer(1);
    IMat M = zeros(n, n);
    const IMat I = identity(n);
    for (int k = 1; k <= n; ++k) {
        M = A * M;
        for (int i = 0; i < n; ++i) M(i, i) += c[n - k + 1];
        IMat AM = A * M;
        Integer tr(0);
        for (int i = 0; i < n; ++i) tr += AM(i, i);
        c[n - k] = -tr / Integer(k);
    }
    return c;
}

namespace {

void trim(Poly &p) {
    while (p.size() > 1 && p.back().is_zero()) p.pop_back();
}

const std::vector<Poly> &cyclotomic_table() {
    static const std::vector<Poly> table = [] {
        const int K = 64;
        std::vector<Poly> t(K + 1);
        for (int k = 1; k <= K; ++k) {
            Poly p(k + 1, Integer(0));
            p[0] = Integer(-1);
            p[k] = Integer(1);
            for (int d = 1; d < k; ++d) {
                if (k % d != 0) continue;
                Poly q;
                if (!poly_divides(t[d], p, q)) throw std::logic_error("cyclotomic construction");
                p = q;
            }
            t[k] = p;
        }
        return t;
    }();
    return table;
}

} // namespace

bool poly_divides(const Poly &d, const Poly &p, Poly &quotient) {
    Poly r = p;
    trim(r);
    Poly dd = d;
    trim(dd);
    const int dn = static_cast<int>(dd.size()) - 1;
    const int pn = static_cast<int>(r.size()) - 1;
    if (dn > pn) {
        quotient = Poly{Integer(0)};
        return r.size() == 1 && r[0].is_zero();
    }
    Poly q(pn - dn + 1, Integer(0));
    const Integer lead = dd.back();
    for (int i = pn; i >= dn; --i) {
        if (r[i].is_zero()) continue;
        if (!(r[i] % lead).is_zero()) return false;
        Integer f = r[i] / lead;
        q[i - dn] = f;
        for (int j = 0; j <= dn; ++j) r[i - dn + j] -= f * dd[j];
    }
    for (const auto &x : r)
        if (!x.is_zero()) return false;
    trim(q);
    quotient = q;
    return true;
}

int euler_phi(int k) {
    int result = k;
    int m = k;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

Poly cyclotomic(int k) {
    const auto &t = cyclotomic_table();
    if (k < 1 || k >= static_cast<int>(t.size())) throw std::out_of_range("cyclotomic index");
    return t[k];
}

bool cyclotomic_factorization(const Poly &p, std::vector<int> &indices) {
    indices.clear();
    Poly r = p;
    trim(r);
    const auto &t = cyclotomic_table();
    for (int k = 1; k < static_cast<int>(t.size()); ++k) {
        const int deg = static_cast<int>(r.size()) - 1;
        if (deg == 0) break;
        if (euler_phi(k) > deg) continue;
        Poly q;
        while (static_cast<int>(r.size()) - 1 >= euler_phi(k) && poly_divides(t[k], r, q)) {
            indices.push_back(k);
            r = q;
        }
    }
    return r.size() == 1 && r[0] == Integer(1);
}

std::string poly_string(const Poly &p) {
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
        if (p[i].is_zero()) continue;
        Integer c = p[i];
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        Integer a = abs(c);
        if (i == 0 || !(a == Integer(1))) os << a;
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

IMat power(const IMat &A, long long e) {
    IMat result = identity(static_cast<int>(A.rows()));
    IMat base = A;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

std::string matrix_string(const IMat &m) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < m.rows(); ++i) {
        if (i) os << "; ";
        for (int j = 0; j < m.cols(); ++j) {
            if (j) os << " ";
            os << m(i, j);
        }
    }
    os << "]";
    return os.str();
}

std::string vector_string(const IVec &v) {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v(i);
    }
    os << ")";
    return os.str();
}

std::vector<long long> matrix_key(const IMat &m) {
    std::vector<long long> k;
    k.reserve(static_cast<size_t>(m.size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (!m(i, j).fits_ll()) throw std::overflow_error("matrix entry too large for key");
            k.push_back(m(i, j).to_ll());
        }
    return k;
}

} // namespace dp
