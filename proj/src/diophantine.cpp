#include "delpezzo/diophantine.hpp"

#include <cmath>
#include <functional>
#include <sstream>

namespace dp {

std::string status_string(Solvability s) {
    switch (s) {
    case Solvability::Solvable: return "Solvable";
    case Solvability::Unsolvable: return "Unsolvable";
    case Solvability::Unknown: return "Unknown";
    }
    return "?";
}

std::string SolvabilityVerdict::reason_string() const {
    switch (reason) {
    case Reason::None: return "";
    case Reason::Sign: return "definiteness bound (sign)";
    case Reason::ZeroClass: return "definiteness bound (zero class only)";
    case Reason::Definite: return "definiteness bound (exhaustive search)";
    case Reason::Modular: return "modular obstruction (mod " + modulus.str() + ")";
    case Reason::Descent: return "descent at " + modulus.str();
    case Reason::Factorization: return "divisor exhaustion";
    case Reason::PellWindow: return "exhausted Pell window";
    }
    return "";
}

std::string SolvabilityVerdict::reason_tag() const {
    switch (reason) {
    case Reason::None: return "";
    case Reason::Sign: return "sign";
    case Reason::ZeroClass: return "zero_class";
    case Reason::Definite: return "definite";
    case Reason::Modular: return "modular";
    case Reason::Descent: return "descent";
    case Reason::Factorization: return "factorization";
    case Reason::PellWindow: return "pell";
    }
    return "";
}

std::string form_string(const IMat &g) {
    static const char *vars[] = {"a", "b", "c", "d", "e", "f"};
    const int r = static_cast<int>(g.rows());
    if (r == 0) return "0";
    std::ostringstream os;
    bool first = true;
    auto term = [&](Integer coef, const std::string &mono) {
        if (coef.is_zero()) return;
        if (first) {
            if (coef.sign() < 0) os << "-";
        } else {
            os << (coef.sign() < 0 ? " - " : " + ");
        }
        Integer a = abs(coef);
        if (a != Integer(1)) os << a;
        os << mono;
        first = false;
    };
    for (int i = 0; i < r; ++i) {
        term(g(i, i), std::string(vars[i]) + "^2");
        for (int j = i + 1; j < r; ++j) term(Integer(2) * g(i, j), std::string(vars[i]) + vars[j]);
    }
    if (first) return "0";
    return os.str();
}

std::string equation_string(const IMat &g, const Integer &k) {
    const int r = static_cast<int>(g.rows());
    int lead = 0;
    for (int i = 0; i < r && lead == 0; ++i) {
        if (!g(i, i).is_zero()) lead = g(i, i).sign();
        for (int j = i + 1; j < r && lead == 0; ++j)
            if (!g(i, j).is_zero()) lead = g(i, j).sign();
    }
    if (lead < 0) return form_string(IMat(-g)) + " = " + (-k).str();
    return form_string(g) + " = " + k.str();
}

namespace {

SolvabilityVerdict unsolvable(Reason r, std::string detail, Integer modulus = Integer(0)) {
    SolvabilityVerdict v;
    v.status = Solvability::Unsolvable;
    v.reason = r;
    v.modulus = modulus;
    v.detail = std::move(detail);
    return v;
}

SolvabilityVerdict solvable(IVec x, std::string detail) {
    SolvabilityVerdict v;
    v.status = Solvability::Solvable;
    v.coefficients = std::move(x);
    v.detail = std::move(detail);
    return v;
}

SolvabilityVerdict unknown(std::string detail) {
    SolvabilityVerdict v;
    v.status = Solvability::Unknown;
    v.detail = std::move(detail);
    return v;
}

Integer value(const IMat &g, const IVec &x) { return Integer(x.transpose() * g * x); }

Integer content(const IMat &g) {
    Integer c(0);
    const int r = static_cast<int>(g.rows());
    for (int i = 0; i < r; ++i) {
        c = gcd(c, g(i, i));
        for (int j = i + 1; j < r; ++j) c = gcd(c, Integer(2) * g(i, j));
    }
    return c;
}

// x with Q(x) = k, |Q| definite positive
std::optional<IVec> definite_search(const IMat &g, const Integer &k) {
    const int r = static_cast<int>(g.rows());
    QMat m = to_rational(g);
    std::vector<Rational> d(r);
    std::vector<std::vector<Rational>> mu(r, std::vector<Rational>(r));
    for (int i = 0; i < r; ++i) {
        d[i] = m(i, i);
        for (int j = i + 1; j < r; ++j) mu[i][j] = m(i, j) / d[i];
        for (int j = i + 1; j < r; ++j)
            for (int l = i + 1; l < r; ++l) m(j, l) -= m(i, j) * m(i, l) / d[i];
    }
    IVec x = IVec::Zero(r);
    std::optional<IVec> found;
    const Rational target(k);
    std::function<void(int, const Rational &)> rec = [&](int i, const Rational &partial) {
        if (found) return;
        if (i < 0) {
            if (partial == target) found = x;
            return;
        }
        Rational c(0);
        for (int j = i + 1; j < r; ++j) c -= mu[i][j] * Rational(x(j));
        Rational rem = (target - partial) / d[i];
        double cd = c.num().to_ll() / static_cast<double>(c.den().to_ll());
        double rd = std::sqrt(std::max(0.0, rem.num().to_ll() / static_cast<double>(rem.den().to_ll())));
        long long lo = static_cast<long long>(std::floor(cd - rd)) - 1;
        long long hi = static_cast<long long>(std::ceil(cd + rd)) + 1;
        for (long long t = lo; t <= hi && !found; ++t) {
            Rational dev = Rational(t) - c;
            Rational add = d[i] * dev * dev;
            if (partial + add > target) continue;
            x(i) = Integer(t);
            rec(i - 1, partial + add);
        }
        x(i) = Integer(0);
    };
    rec(r - 1, Rational(0));
    return found;
}

bool residue_reachable(const IMat &g, long long k, long long m) {
    const int r = static_cast<int>(g.rows());
    std::vector<std::vector<long long>> gm(r, std::vector<long long>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) gm[i][j] = mod(g(i, j), Integer(m)).to_ll();
    long long target = ((k % m) + m) % m;
    std::vector<long long> x(r, 0);
    long long total = 1;
    for (int i = 0; i < r; ++i) total *= m;
    for (long long idx = 0; idx < total; ++idx) {
        long long t = idx;
        for (int i = 0; i < r; ++i) {
            x[i] = t % m;
            t /= m;
        }
        long long v = 0;
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) v = (v + gm[i][j] * x[i] % m * x[j]) % m;
        if (v == target) return true;
    }
    return false;
}

// smallest prime with odd valuation in D > 0 nonsquare
Integer odd_valuation_prime(Integer D) {
    for (Integer p(2);; p += 1) {
        if (p * p > D) return D;  // D is now a prime with valuation 1
        int e = 0;
        while ((D % p).is_zero()) {
            D /= p;
            ++e;
        }
        if (e % 2 == 1) return p;
    }
}

// fundamental solution of x^2 - D y^2 = 1, D > 0 nonsquare
std::pair<Integer, Integer> pell_fundamental(const Integer &D) {
    Integer a0 = isqrt(D);
    Integer m(0), d(1), a = a0;
    Integer h_prev(1), h = a0, k_prev(0), k(1);
    while (h * h - D * k * k != Integer(1)) {
        m = d * a - m;
        d = (D - m * m) / d;
        a = (a0 + m) / d;
        Integer h_next = a * h + h_prev;
        Integer k_next = a * k + k_prev;
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
    }
    return {h, k};
}

SolvabilityVerdict solve_binary_indefinite(IMat g, const Integer &k, bool nonzero) {
    bool swapped = false;
    if (g(0, 0).is_zero() && !g(1, 1).is_zero()) {
        std::swap(g(0, 0), g(1, 1));
        swapped = true;
    }
    auto out = [&](Integer a, Integer b) {
        IVec x(2);
        if (swapped) x << b, a;
        else x << a, b;
        return x;
    };
    const Integer A = g(0, 0), B = g(0, 1), C = g(1, 1);
    const Integer D = B * B - A * C;
    if (A.is_zero()) {
        // Q = 2B ab
        if (k.is_zero()) return solvable(out(Integer(1), Integer(0)), "isotropic coordinate vector");
        Integer twoB = Integer(2) * B;
        if (!(k % twoB).is_zero()) return unsolvable(Reason::Modular, "2B ab = k needs 2B | k", abs(twoB));
        return solvable(out(Integer(1), k / twoB), "direct");
    }
    std::ostringstream ds;
    ds << "A Q = X^2 - " << D << " b^2 with X = A a + B b";
    if (k.is_zero()) {
        if (!nonzero) return solvable(out(Integer(0), Integer(0)), "zero vector");
        if (is_square(D)) {
            Integer s = isqrt(D);
            return solvable(out(s - B, A), ds.str() + ", D square");
        }
        Integer p = odd_valuation_prime(D);
        std::ostringstream os;
        os << ds.str() << "; X^2 = " << D << " b^2 forces X = b = 0 since v_" << p << "(" << D << ") is odd";
        return unsolvable(Reason::Descent, os.str(), p);
    }
    const Integer N = A * k;
    auto try_xb = [&](const Integer &X, const Integer &b) -> std::optional<IVec> {
        Integer num = X - B * b;
        if (!(num % A).is_zero()) return std::nullopt;
        return out(num / A, b);
    };
    if (is_square(D)) {
        Integer s = isqrt(D);
        Integer an = abs(N);
        for (Integer u(1); u * u <= an; u += 1) {
            if (!(an % u).is_zero()) continue;
            for (Integer p1 : {u, an / u})
                for (int sg : {1, -1}) {
                    Integer f1 = Integer(sg) * p1;
                    Integer f2 = N / f1;
                    // X - s b = f1, X + s b = f2
                    Integer sum = f1 + f2, diff = f2 - f1;
                    if (!(sum % Integer(2)).is_zero()) continue;
                    if (s.is_zero()) continue;
                    if (!(diff % (Integer(2) * s)).is_zero()) continue;
                    if (auto x = try_xb(sum / Integer(2), diff / (Integer(2) * s)))
                        return solvable(*x, ds.str() + ", factor pair " + f1.str() + " * " + f2.str());
                }
        }
        return unsolvable(Reason::Factorization, ds.str() + ", D square: all divisor pairs of " + N.str() + " fail");
    }
    auto [x1, y1] = pell_fundamental(D);
    Integer den = Integer(2) * (N.sign() > 0 ? x1 + Integer(1) : x1 - Integer(1));
    Integer window = isqrt(y1 * y1 * abs(N) / den) + Integer(1);
    if (window > Integer(PELL_WINDOW_LIMIT)) return unknown("Pell window " + window.str() + " exceeds limit");
    for (Integer b(0); b <= window; b += 1) {
        Integer rhs = N + D * b * b;
        if (!is_square(rhs)) continue;
        Integer X = isqrt(rhs);
        for (const Integer &bb : {b, -b})
            for (const Integer &XX : {X, -X})
                if (auto x = try_xb(XX, bb)) return solvable(*x, ds.str() + ", Pell window search");
    }
    std::ostringstream os;
    os << ds.str() << "; fundamental unit " << x1 << " + " << y1 << " sqrt(" << D << "), |b| <= " << window
       << " covers every class";
    return unsolvable(Reason::PellWindow, os.str());
}

SolvabilityVerdict solve_nondegenerate(const IMat &g, const Integer &k, bool nonzero) {
    const int r = static_cast<int>(g.rows());
    Integer cont = content(g);
    if (!cont.is_zero() && !(k % cont).is_zero())
        return unsolvable(Reason::Modular, "every value is divisible by " + cont.str(), cont);
    Inertia in = inertia(g);
    if (in.plus == r || in.minus == r) {
        int s = in.plus == r ? 1 : -1;
        if (k.is_zero()) {
            if (!nonzero) return solvable(IVec::Zero(r), "zero vector");
            return unsolvable(Reason::ZeroClass, "definite form vanishes only at 0");
        }
        if (k.sign() != s) return unsolvable(Reason::Sign, std::string("form is ") + (s > 0 ? "positive" : "negative") + " definite");
        IMat gp = g * Integer(s);
        if (auto x = definite_search(gp, k * Integer(s))) return solvable(*x, "definite enumeration");
        return unsolvable(Reason::Definite, "exhaustive enumeration of the ellipsoid Q <= " + abs(k).str());
    }
    if (!k.is_zero()) {
        for (long long m : {2, 3, 4, 5, 8, 9, 16})
            if (!residue_reachable(g, k.to_ll() % m, m))
                return unsolvable(Reason::Modular, "no residue class attains " + k.str() + " mod " + std::to_string(m), Integer(m));
    } else if (!nonzero) {
        return solvable(IVec::Zero(r), "zero vector");
    }
    if (r == 2) return solve_binary_indefinite(g, k, nonzero);
    // ternary indefinite: bounded search only
    IVec x = IVec::Zero(r);
    const long long B = TERNARY_BOX;
    for (long long a = -B; a <= B; ++a)
        for (long long b = -B; b <= B; ++b)
            for (long long c = -B; c <= B; ++c) {
                if (a == 0 && b == 0 && c == 0) continue;
                x << Integer(a), Integer(b), Integer(c);
                if (value(g, x) == k) return solvable(x, "box search");
            }
    return unknown("indefinite ternary form, no solution in box |x| <= " + std::to_string(B));
}

} // namespace

SolvabilityVerdict solve_form(const IMat &g, const Integer &k, bool nonzero) {
    const int r = static_cast<int>(g.rows());
    if (r > 3) throw InputError("norm equations of rank > 3 are unsupported");
    if (r == 0) {
        if (k.is_zero() && !nonzero) return solvable(IVec(0), "zero vector");
        if (k.is_zero()) return unsolvable(Reason::ZeroClass, "zero sublattice");
        return unsolvable(Reason::Definite, "zero sublattice takes only the value 0");
    }
    IMat K = integer_kernel(g);
    const int s = static_cast<int>(K.cols());
    SolvabilityVerdict v;
    if (s == 0) {
        v = solve_nondegenerate(g, k, nonzero);
    } else {
        if (k.is_zero()) {
            if (nonzero) return solvable(IVec(K.col(0)), "radical vector");
            return solvable(IVec::Zero(r), "zero vector");
        }
        IMat U = complete_basis(K);
        IMat gu = U.transpose() * g * U;
        IMat sub = gu.bottomRightCorner(r - s, r - s);
        v = solve_form(sub, k, nonzero);
        if (v.status == Solvability::Solvable) {
            IVec full = IVec::Zero(r);
            full.tail(r - s) = v.coefficients;
            v.coefficients = U * full;
        }
        v.detail = "radical of rank " + std::to_string(s) + " split off; " + v.detail;
    }
    if (v.status == Solvability::Solvable) {
        if (value(g, v.coefficients) != k || (nonzero && v.coefficients.isZero()))
            throw std::logic_error("norm equation witness fails verification");
    }
    return v;
}

Sublattice solution_sublattice(const NormEquation &e) {
    if (e.extra_membership) return intersect_sublattices(e.sublattice, *e.extra_membership);
    return e.sublattice;
}

IMat restricted_gram(const NormEquation &e) { return restricted_gram(solution_sublattice(e)); }

SolvabilityVerdict solve_norm_equation(const NormEquation &e) {
    Sublattice s = solution_sublattice(e);
    if (s.rank() > 3) throw InputError("norm equations of rank > 3 are unsupported");
    IMat g = restricted_gram(s);
    SolvabilityVerdict v = solve_form(g, e.target, e.require_nonzero);
    if (v.status == Solvability::Solvable) {
        IVec w = s.rank() ? IVec(s.presentation() * v.coefficients) : IVec(IVec::Zero(s.ambient().rank()));
        v.witness = LatticeElement{w, "std"};
    }
    return v;
}

} // namespace dp
