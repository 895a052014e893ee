#include "delpezzo/isometry.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace dp {

std::optional<std::string> isometry_violation(const LorentzianLattice &L, const IMat &m) {
    if (m.rows() != L.rank() || m.cols() != L.rank()) {
        std::ostringstream os;
        os << "matrix is " << m.rows() << "x" << m.cols() << ", lattice " << L.name() << " has rank " << L.rank();
        return os.str();
    }
    IMat d = m.transpose() * L.gram() * m - L.gram();
    for (int i = 0; i < d.rows(); ++i)
        for (int j = 0; j < d.cols(); ++j)
            if (!d(i, j).is_zero()) {
                std::ostringstream os;
                os << "form not preserved: (M^T Q M - Q) has entry " << d(i, j) << " at row " << i + 1 << ", col "
                   << j + 1;
                return os.str();
            }
    return std::nullopt;
}

Isometry::Isometry(const LorentzianLattice &L, const IMat &m, const std::string &basis_id) : lattice_(&L) {
    if (m.rows() != L.rank() || m.cols() != L.rank()) throw InputError(*isometry_violation(L, m));
    m_ = L.matrix_from_basis(m, basis_id);
    if (auto err = isometry_violation(L, m_)) throw InputError(*err);
}

Isometry Isometry::identity(const LorentzianLattice &L) { return Isometry(L, dp::identity(L.rank()), true); }

Isometry Isometry::minus_identity(const LorentzianLattice &L) { return Isometry(L, -dp::identity(L.rank()), true); }

Isometry Isometry::reflection(const LorentzianLattice &L, const IVec &v) {
    return Isometry(L, reflection_matrix(L, v), true);
}

Isometry Isometry::reflection(const LorentzianLattice &L, const std::string &expr) {
    return reflection(L, L.parse(expr));
}

int Isometry::determinant_sign() const { return determinant(m_).sign(); }

Isometry Isometry::operator*(const Isometry &o) const {
    if (lattice_ != o.lattice_) throw InputError("isometries of different lattices");
    return Isometry(*lattice_, IMat(m_ * o.m_), true);
}

Isometry Isometry::operator-() const { return Isometry(*lattice_, IMat(-m_), true); }

Isometry Isometry::inverse() const {
    // Q-orthogonal: m^{-1} = Q^{-1} m^T Q
    return Isometry(*lattice_, inverse_unimodular(m_), true);
}

bool Isometry::is_identity() const { return equal(m_, dp::identity(lattice_->rank())); }

bool operator==(const Isometry &a, const Isometry &b) { return a.lattice_ == b.lattice_ && equal(a.m_, b.m_); }

ElementOrder element_order(const Isometry &m) {
    ElementOrder r;
    r.char_poly = char_poly(m.matrix());
    const int n = m.lattice().rank();
    const IMat I = dp::identity(n);

    int cap_hit = 0;
    IMat p = I;
    for (int k = 1; k <= ORDER_CAP; ++k) {
        p = p * m.matrix();
        if (equal(p, I)) { cap_hit = k; break; }
    }

    std::vector<int> idx;
    if (!cyclotomic_factorization(r.char_poly, idx)) {
        r.finite = false;
        r.order = 0;
        r.certificate = "characteristic polynomial " + poly_string(r.char_poly) + " has a non-cyclotomic factor";
    } else {
        r.cyclotomic_indices = idx;
        long long L = 1;
        for (int k : idx) L = std::lcm(L, static_cast<long long>(k));
        if (!equal(power(m.matrix(), L), I)) {
            r.finite = false;
            r.order = 0;
            std::ostringstream os;
            os << "characteristic polynomial " << poly_string(r.char_poly) << " is cyclotomic but m^" << L
               << " != I (nontrivial unipotent part)";
            r.certificate = os.str();
        } else {
            long long best = L;
            for (long long d = 1; d <= L; ++d)
                if (L % d == 0 && equal(power(m.matrix(), d), I)) { best = d; break; }
            r.order = static_cast<int>(best);
            r.certificate = "m^" + std::to_string(best) + " = I";
        }
    }
    if (r.finite && r.order <= ORDER_CAP && cap_hit != r.order)
        throw std::logic_error("element_order: power search disagrees with cyclotomic analysis");
    if (cap_hit && (!r.finite || cap_hit != r.order))
        throw std::logic_error("element_order: power search disagrees with cyclotomic analysis");
    if (!r.finite && n <= 4 && cap_hit)
        throw std::logic_error("element_order: finite power found for infinite element");
    return r;
}

Sublattice eigenlattice(const Isometry &m, int sign) { return eigenlattice(m.lattice(), m.matrix(), sign); }

int GroupTable::index_of(const Isometry &g) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), g);
    if (it == elements.end() || !(*it == g)) return -1;
    return static_cast<int>(it - elements.begin());
}

MatrixGroup::MatrixGroup(const LorentzianLattice &L, std::vector<Isometry> generators)
    : gens_(std::move(generators)), lattice_(&L) {
    for (const auto &g : gens_)
        if (&g.lattice() != lattice_) throw InputError("generators from different lattices");
}

MatrixGroup::MatrixGroup(const LorentzianLattice &L, std::vector<Isometry> generators, std::vector<Isometry> elements)
    : gens_(std::move(generators)), lattice_(&L) {
    std::sort(elements.begin(), elements.end());
    elements_ = std::move(elements);
}

const std::vector<Isometry> &MatrixGroup::elements() const {
    if (!elements_) throw InputError("group is not closed");
    return *elements_;
}

bool MatrixGroup::contains(const Isometry &g) const {
    const auto &el = elements();
    auto it = std::lower_bound(el.begin(), el.end(), g);
    return it != el.end() && *it == g;
}

bool MatrixGroup::is_subgroup_of(const MatrixGroup &g) const {
    for (const auto &x : elements())
        if (!g.contains(x)) return false;
    return true;
}

bool MatrixGroup::same_elements(const MatrixGroup &o) const {
    const auto &a = elements();
    const auto &b = o.elements();
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

const GroupTable &MatrixGroup::table() const {
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (table_) return *table_;
    auto t = std::make_shared<GroupTable>();
    t->elements = elements();
    const int n = t->order();
    t->mul.assign(n, std::vector<int>(n, -1));
    t->inv.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        if (t->elements[i].is_identity()) t->identity = i;
        for (int j = 0; j < n; ++j) {
            int k = t->index_of(t->elements[i] * t->elements[j]);
            if (k < 0) throw InputError("element set is not closed under products");
            t->mul[i][j] = k;
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (t->mul[i][j] == t->identity) t->inv[i] = j;
    table_ = t;
    return *table_;
}

namespace {

// breadth-first closure of plain integer matrices under right multiplication by generators
bool close_matrices(const std::vector<IMat> &gens, int dim, size_t cap, std::vector<IMat> &out) {
    std::map<std::vector<long long>, int> seen;
    std::deque<IMat> queue;
    IMat I = identity(dim);
    seen[matrix_key(I)] = 0;
    out.assign(1, I);
    queue.push_back(I);
    while (!queue.empty()) {
        IMat x = queue.front();
        queue.pop_front();
        for (const auto &g : gens) {
            IMat y = x * g;
            auto key = matrix_key(y);
            if (seen.count(key)) continue;
            seen[key] = static_cast<int>(out.size());
            out.push_back(y);
            if (out.size() > cap) return false;
            queue.push_back(y);
        }
    }
    return true;
}

} // namespace

Closure close_group(const MatrixGroup &g, int cap) {
    Closure c;
    const auto &L = g.lattice();
    std::vector<IMat> gens;
    for (const auto &x : g.generators()) gens.push_back(x.matrix());
    std::vector<IMat> els;
    if (close_matrices(gens, L.rank(), static_cast<size_t>(cap), els)) {
        std::vector<Isometry> iso;
        iso.reserve(els.size());
        for (const auto &m : els) iso.emplace_back(L, m);
        c.finite = true;
        c.group = MatrixGroup(L, g.generators(), std::move(iso));
        return c;
    }
    // divergence: look for a short word of infinite order
    const auto &gs = g.generators();
    std::vector<std::pair<Isometry, std::string>> words;
    for (size_t i = 0; i < gs.size(); ++i) words.emplace_back(gs[i], "g" + std::to_string(i + 1));
    std::vector<std::pair<Isometry, std::string>> frontier = words;
    for (int len = 1; len <= 4 && !c.infinite_witness; ++len) {
        for (const auto &w : frontier) {
            if (!element_order(w.first).finite) {
                c.infinite_witness = w.first;
                c.witness_word = w.second;
                break;
            }
        }
        std::vector<std::pair<Isometry, std::string>> next;
        for (const auto &w : frontier)
            for (size_t i = 0; i < gs.size(); ++i) next.emplace_back(w.first * gs[i], w.second + "*g" + std::to_string(i + 1));
        frontier = std::move(next);
    }
    return c;
}

MatrixGroup closed(const LorentzianLattice &L, const std::vector<Isometry> &generators, int cap) {
    Closure c = close_group(MatrixGroup(L, generators), cap);
    if (!c.finite) throw InputError("group did not close within " + std::to_string(cap) + " elements");
    return *c.group;
}

namespace {

struct Cayley {
    std::vector<std::vector<int>> mul;
    std::vector<int> inv;
    int e = 0;
    int order() const { return static_cast<int>(mul.size()); }
};

Cayley cayley_from(const GroupTable &t) { return Cayley{t.mul, t.inv, t.identity}; }

Cayley cayley_from_matrices(const std::vector<IMat> &els) {
    std::map<std::vector<long long>, int> idx;
    for (size_t i = 0; i < els.size(); ++i) idx[matrix_key(els[i])] = static_cast<int>(i);
    Cayley c;
    const int n = static_cast<int>(els.size());
    c.mul.assign(n, std::vector<int>(n));
    c.inv.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        if (equal(els[i], identity(static_cast<int>(els[i].rows())))) c.e = i;
        for (int j = 0; j < n; ++j) c.mul[i][j] = idx.at(matrix_key(IMat(els[i] * els[j])));
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (c.mul[i][j] == c.e) c.inv[i] = j;
    return c;
}

std::vector<int> closure_indices(const Cayley &c, const std::vector<int> &gens) {
    std::vector<char> in(c.order(), 0);
    std::vector<int> out{c.e};
    in[c.e] = 1;
    for (size_t q = 0; q < out.size(); ++q)
        for (int g : gens) {
            int y = c.mul[out[q]][g];
            if (!in[y]) {
                in[y] = 1;
                out.push_back(y);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

int element_order_in(const Cayley &c, int x) {
    int k = 1;
    int y = x;
    while (y != c.e) {
        y = c.mul[y][x];
        ++k;
    }
    return k;
}

std::vector<int> prime_factors(int n) {
    std::vector<int> ps;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) ps.push_back(n);
    return ps;
}

// invariant factors of a finite abelian group from its element orders
std::vector<int> invariants_from_orders(const std::vector<int> &orders) {
    int n = static_cast<int>(orders.size());
    std::vector<std::vector<int>> primary;  // per prime, exponents
    std::vector<int> primes = prime_factors(n);
    for (int p : primes) {
        std::vector<int> s{0};
        for (int k = 1;; ++k) {
            int pk = 1;
            for (int i = 0; i < k; ++i) pk *= p;
            int cnt = 0;
            for (int o : orders)
                if (pk % o == 0) ++cnt;
            int lg = 0;
            while (cnt > 1) {
                cnt /= p;
                ++lg;
            }
            s.push_back(lg);
            if (s[k] == s[k - 1]) break;
        }
        std::vector<int> exps;
        const int K = static_cast<int>(s.size()) - 1;
        for (int k = 1; k <= K; ++k) {
            int ge_k = s[k] - s[k - 1];
            int ge_k1 = k + 1 <= K ? s[k + 1] - s[k] : 0;
            for (int i = 0; i < ge_k - ge_k1; ++i) exps.push_back(k);
        }
        std::sort(exps.rbegin(), exps.rend());
        std::vector<int> pw;
        for (int e : exps) {
            int v = 1;
            for (int i = 0; i < e; ++i) v *= p;
            pw.push_back(v);
        }
        primary.push_back(pw);
    }
    std::vector<int> inv;
    for (size_t i = 0;; ++i) {
        int d = 1;
        bool any = false;
        for (const auto &pw : primary)
            if (i < pw.size()) {
                d *= pw[i];
                any = true;
            }
        if (!any) break;
        inv.push_back(d);
    }
    return inv;
}

struct Signature {
    int order;
    bool abelian;
    std::vector<std::pair<int, int>> hist;
    int center;
    std::vector<int> ab;
    int derived;
};

Signature signature_of(const Cayley &c) {
    Signature s;
    const int n = c.order();
    s.order = n;
    std::map<int, int> h;
    std::vector<int> orders(n);
    for (int i = 0; i < n; ++i) {
        orders[i] = element_order_in(c, i);
        h[orders[i]]++;
    }
    s.hist.assign(h.begin(), h.end());
    int center = 0;
    for (int i = 0; i < n; ++i) {
        bool central = true;
        for (int j = 0; j < n && central; ++j)
            if (c.mul[i][j] != c.mul[j][i]) central = false;
        if (central) ++center;
    }
    s.center = center;
    s.abelian = center == n;
    std::set<int> comms;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) comms.insert(c.mul[c.mul[c.inv[i]][c.inv[j]]][c.mul[i][j]]);
    std::vector<int> derived = closure_indices(c, std::vector<int>(comms.begin(), comms.end()));
    s.derived = static_cast<int>(derived.size());
    std::vector<char> inD(n, 0);
    for (int d : derived) inD[d] = 1;
    // orders of cosets gG' in the abelianization, one representative per coset
    std::vector<int> coset_of(n, -1);
    std::vector<int> coset_orders;
    for (int i = 0; i < n; ++i) {
        if (coset_of[i] >= 0) continue;
        int id = static_cast<int>(coset_orders.size());
        for (int d : derived) coset_of[c.mul[i][d]] = id;
        int k = 1;
        int y = i;
        while (!inD[y]) {
            y = c.mul[y][i];
            ++k;
        }
        coset_orders.push_back(k);
    }
    s.ab = invariants_from_orders(coset_orders);
    return s;
}

bool same_signature(const Signature &a, const Signature &b) {
    return a.order == b.order && a.hist == b.hist && a.center == b.center && a.ab == b.ab && a.derived == b.derived;
}

IMat block_sum(const IMat &a, const IMat &b) {
    IMat m = zeros(static_cast<int>(a.rows() + b.rows()), static_cast<int>(a.cols() + b.cols()));
    m.topLeftCorner(a.rows(), a.cols()) = a;
    m.bottomRightCorner(b.rows(), b.cols()) = b;
    return m;
}

// generators of a direct product of matrix groups
std::vector<IMat> product_gens(const std::vector<std::vector<IMat>> &factors) {
    std::vector<int> dims;
    for (const auto &f : factors) dims.push_back(static_cast<int>(f.front().rows()));
    std::vector<IMat> out;
    for (size_t i = 0; i < factors.size(); ++i)
        for (const auto &g : factors[i]) {
            IMat m(0, 0);
            for (size_t j = 0; j < factors.size(); ++j) m = block_sum(m, j == i ? g : identity(dims[j]));
            out.push_back(m);
        }
    return out;
}

struct Reference {
    std::string label;
    Signature sig;
};

const std::vector<Reference> &reference_groups() {
    static const std::vector<Reference> refs = [] {
        const std::vector<IMat> z2{imat({{-1}})};
        const std::vector<IMat> d4{imat({{0, 1}, {1, 0}}), imat({{-1, 0}, {0, 1}})};
        const std::vector<IMat> s3{imat({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}), imat({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}})};
        const std::vector<IMat> q8{imat({{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}}),
                                   imat({{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}})};
        const std::vector<IMat> b3{imat({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}), imat({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}),
                                   imat({{1, 0, 0}, {0, 1, 0}, {0, 0, -1}})};
        const std::vector<IMat> s4{imat({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}),
                                   imat({{0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}})};
        std::vector<std::pair<std::string, std::vector<IMat>>> defs{
            {"S3", s3},
            {"D4", d4},
            {"Q8", q8},
            {"Z/2 x S3", product_gens({s3, z2})},
            {"D4 x Z/2", product_gens({d4, z2})},
            {"Z/2 x S3 x Z/2", product_gens({s3, z2, z2})},
            {"S4", s4},
            {"D4 x (Z/2)^2", product_gens({d4, z2, z2})},
            {"W(B3)", b3},
            {"W(B3) x Z/2", product_gens({b3, z2})},
        };
        std::vector<Reference> out;
        for (const auto &d : defs) {
            std::vector<IMat> els;
            close_matrices(d.second, static_cast<int>(d.second.front().rows()), 1000, els);
            out.push_back(Reference{d.first, signature_of(cayley_from_matrices(els))});
        }
        return out;
    }();
    return refs;
}

} // namespace

std::string abelian_label(const std::vector<int> &inv) {
    if (inv.empty()) return "1";
    std::vector<int> d = inv;
    std::sort(d.rbegin(), d.rend());
    std::ostringstream os;
    for (size_t i = 0; i < d.size();) {
        size_t j = i;
        while (j < d.size() && d[j] == d[i]) ++j;
        if (i) os << " x ";
        if (j - i == 1) os << "Z/" << d[i];
        else os << "(Z/" << d[i] << ")^" << (j - i);
        i = j;
    }
    return os.str();
}

Fingerprint isomorphism_fingerprint(const MatrixGroup &g) {
    if (g.order() > 200) throw InputError("fingerprint supports groups of order <= 200");
    Signature s = signature_of(cayley_from(g.table()));
    Fingerprint f;
    f.order = s.order;
    f.abelian = s.abelian;
    f.order_histogram = s.hist;
    f.center_order = s.center;
    f.abelianization = s.ab;
    f.derived_order = s.derived;
    if (s.abelian) {
        f.label = abelian_label(s.ab);
    } else {
        f.label = "nonabelian group of order " + std::to_string(s.order);
        for (const auto &r : reference_groups())
            if (same_signature(r.sig, s)) {
                f.label = r.label;
                break;
            }
    }
    return f;
}

std::vector<MatrixGroup> enumerate_subgroups(const MatrixGroup &g) {
    if (!g.closed()) throw InputError("enumerate_subgroups requires a closed group");
    if (g.order() > 200) throw InputError("enumerate_subgroups supports groups of order <= 200");
    const GroupTable &t = g.table();
    Cayley c = cayley_from(t);
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> order;
    std::vector<int> triv{c.e};
    seen.insert(triv);
    order.push_back(triv);
    for (size_t q = 0; q < order.size(); ++q) {
        std::vector<int> h = order[q];
        std::vector<char> in(c.order(), 0);
        for (int x : h) in[x] = 1;
        for (int x = 0; x < c.order(); ++x) {
            if (in[x]) continue;
            std::vector<int> gens = h;
            gens.push_back(x);
            std::vector<int> k = closure_indices(c, gens);
            if (seen.insert(k).second) order.push_back(k);
        }
    }
    std::vector<std::vector<int>> subs(seen.begin(), seen.end());
    std::sort(subs.begin(), subs.end(), [](const auto &a, const auto &b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    std::vector<MatrixGroup> out;
    for (const auto &s : subs) {
        std::vector<int> gens;
        std::vector<int> cur{c.e};
        for (int x : s) {
            if (std::binary_search(cur.begin(), cur.end(), x)) continue;
            gens.push_back(x);
            cur = closure_indices(c, gens);
        }
        std::vector<Isometry> gi, el;
        for (int x : gens) gi.push_back(t.elements[x]);
        for (int x : s) el.push_back(t.elements[x]);
        out.emplace_back(g.lattice(), gi, el);
    }
    return out;
}

MatrixGroup conjugate(const MatrixGroup &g, const Isometry &by) {
    Isometry inv = by.inverse();
    std::vector<Isometry> gens;
    for (const auto &x : g.generators()) gens.push_back(by * x * inv);
    if (!g.closed()) return MatrixGroup(g.lattice(), gens);
    std::vector<Isometry> els;
    for (const auto &x : g.elements()) els.push_back(by * x * inv);
    return MatrixGroup(g.lattice(), gens, els);
}

std::vector<Isometry> centralizer(const MatrixGroup &g, const Isometry &x) {
    std::vector<Isometry> out;
    for (const auto &y : g.elements())
        if (y.commutes_with(x)) out.push_back(y);
    return out;
}

} // namespace dp
