#include "delpezzo/lattice.hpp"

#include <array>
#include <cctype>
#include <memory>
#include <sstream>

namespace dp {

LorentzianLattice::LorentzianLattice(std::string name, IMat gram, std::vector<std::string> labels)
    : name_(std::move(name)), gram_(std::move(gram)), labels_(std::move(labels)) {
    if (gram_.rows() != gram_.cols()) throw InputError("gram matrix is not square");
    if (!equal(gram_, gram_.transpose())) throw InputError("gram matrix is not symmetric");
    if (static_cast<int>(labels_.size()) != rank()) throw InputError("label count does not match rank");
    bases_["std"] = Basis{identity(rank()), identity(rank()), labels_};
}

namespace {

std::unique_ptr<LorentzianLattice> build_M(int n) {
    std::vector<long long> d(n + 1, -1);
    d[0] = 1;
    std::vector<std::string> labels{"H"};
    for (int i = 1; i <= n; ++i) labels.push_back("E" + std::to_string(i));
    auto L = std::make_unique<LorentzianLattice>("M" + std::to_string(n), diagonal(d), labels);
    if (n >= 2) {
        // S1 = H-E1, S2 = H-E2, Sigma = H-E1-E2, remaining Ek unchanged
        IMat P = identity(n + 1);
        P(0, 0) = 1; P(1, 0) = -1; P(2, 0) = 0;
        P(0, 1) = 1; P(1, 1) = 0;  P(2, 1) = -1;
        P(0, 2) = 1; P(1, 2) = -1; P(2, 2) = -1;
        std::vector<std::string> sl{"S1", "S2", "Sigma"};
        for (int i = 3; i <= n; ++i) sl.push_back("E" + std::to_string(i));
        L->register_basis("S", P, sl);
        if (n == 2) L->set_preferred_basis("S");

        IMat G = P.transpose() * L->gram() * P;
        IMat expect = identity(n + 1);
        for (int i = 0; i <= n; ++i) expect(i, i) = Integer(-1);
        expect(0, 0) = 0; expect(1, 1) = 0; expect(0, 1) = 1; expect(1, 0) = 1;
        if (!equal(G, expect)) throw std::logic_error("S-basis gram self-check failed");
        if (n == 2) {
            IMat A = L->matrix_to_basis(reflection_matrix(*L, ivec({0, 1, -1})), "S");
            IMat B = L->matrix_to_basis(reflection_matrix(*L, ivec({1, -1, -1})), "S");
            if (!equal(A, imat({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}})) || !equal(B, diagonal({1, 1, -1})))
                throw std::logic_error("S-basis reflection self-check failed");
        }
    }
    return L;
}

} // namespace

const LorentzianLattice &LorentzianLattice::M(int n) {
    static const std::array<std::unique_ptr<LorentzianLattice>, 10> lattices = [] {
        std::array<std::unique_ptr<LorentzianLattice>, 10> a;
        for (int i = 0; i < 10; ++i) a[i] = build_M(i);
        return a;
    }();
    if (n < 0 || n > 9) throw InputError("M_n requires 0 <= n <= 9");
    return *lattices[n];
}

const LorentzianLattice &LorentzianLattice::Mstar() {
    static const LorentzianLattice L("Mstar", imat({{0, 1}, {1, 0}}), {"S1", "S2"});
    return L;
}

void LorentzianLattice::register_basis(const std::string &id, const IMat &change, std::vector<std::string> labels) {
    if (change.rows() != rank() || change.cols() != rank()) throw InputError("basis change has wrong shape");
    Integer d = determinant(change);
    if (!(abs(d) == Integer(1))) throw InputError("basis change is not unimodular");
    if (static_cast<int>(labels.size()) != rank()) throw InputError("basis label count mismatch");
    bases_[id] = Basis{change, inverse_unimodular(change), std::move(labels)};
}

bool LorentzianLattice::has_basis(const std::string &id) const { return bases_.count(id) > 0; }

const IMat &LorentzianLattice::basis_matrix(const std::string &id) const {
    auto it = bases_.find(id);
    if (it == bases_.end()) throw InputError("unknown basis '" + id + "' for " + name_);
    return it->second.change;
}

const std::vector<std::string> &LorentzianLattice::basis_labels(const std::string &id) const {
    auto it = bases_.find(id);
    if (it == bases_.end()) throw InputError("unknown basis '" + id + "' for " + name_);
    return it->second.labels;
}

std::vector<std::string> LorentzianLattice::basis_ids() const {
    std::vector<std::string> ids;
    for (const auto &kv : bases_) ids.push_back(kv.first);
    return ids;
}

IVec LorentzianLattice::to_canonical(const LatticeElement &v) const {
    if (v.coords.size() != rank())
        throw InputError("element has " + std::to_string(v.coords.size()) + " coordinates, lattice rank is " +
                         std::to_string(rank()));
    return basis_matrix(v.basis_id) * v.coords;
}

LatticeElement LorentzianLattice::in_basis(const IVec &canonical, const std::string &id) const {
    basis_matrix(id);
    return LatticeElement{bases_.at(id).inverse * canonical, id};
}

IMat LorentzianLattice::matrix_to_basis(const IMat &m, const std::string &id) const {
    const IMat &P = basis_matrix(id);
    return bases_.at(id).inverse * m * P;
}

IMat LorentzianLattice::matrix_from_basis(const IMat &m, const std::string &id) const {
    const IMat &P = basis_matrix(id);
    return P * m * bases_.at(id).inverse;
}

IVec LorentzianLattice::parse(const std::string &expr) const {
    IVec out = zeros(rank(), 1);
    size_t i = 0;
    auto skip = [&] {
        while (i < expr.size() && std::isspace(static_cast<unsigned char>(expr[i]))) ++i;
    };
    skip();
    if (expr.substr(i) == "0") return out;
    bool any = false;
    while (i < expr.size()) {
        skip();
        int sign = 1;
        if (i < expr.size() && (expr[i] == '+' || expr[i] == '-')) {
            sign = expr[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (any) {
            throw InputError("expected + or - in '" + expr + "'");
        }
        long long coef = 1;
        size_t start = i;
        while (i < expr.size() && std::isdigit(static_cast<unsigned char>(expr[i]))) ++i;
        if (i > start) coef = std::stoll(expr.substr(start, i - start));
        skip();
        if (i < expr.size() && expr[i] == '*') {
            if (i == start) throw InputError("'*' without a coefficient in '" + expr + "'");
            ++i;
            skip();
        }
        start = i;
        while (i < expr.size() && std::isalnum(static_cast<unsigned char>(expr[i]))) ++i;
        std::string label = expr.substr(start, i - start);
        if (label.empty()) throw InputError("missing basis label in '" + expr + "'");
        bool found = false;
        for (const auto &kv : bases_) {
            const auto &ls = kv.second.labels;
            for (size_t k = 0; k < ls.size(); ++k) {
                if (ls[k] != label) continue;
                IVec col = kv.second.change.col(static_cast<int>(k));
                for (int r = 0; r < rank(); ++r) out(r) += Integer(sign * coef) * col(r);
                found = true;
                break;
            }
            if (found) break;
        }
        if (!found) throw InputError("unknown label '" + label + "' for " + name_);
        any = true;
        skip();
    }
    if (!any) throw InputError("empty vector expression");
    return out;
}

namespace {

std::string format_coords(const IVec &c, const std::vector<std::string> &labels) {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < c.size(); ++i) {
        if (c(i).is_zero()) continue;
        Integer a = abs(c(i));
        if (c(i).sign() < 0) os << (first ? "-" : "-");
        else if (!first) os << "+";
        if (!(a == Integer(1))) os << a;
        os << labels[i];
        first = false;
    }
    if (first) return "0";
    return os.str();
}

} // namespace

std::string LorentzianLattice::format(const IVec &canonical) const { return format_coords(canonical, labels_); }

std::string LorentzianLattice::format_in(const IVec &canonical, const std::string &id) const {
    LatticeElement e = in_basis(canonical, id);
    return format_coords(e.coords, bases_.at(id).labels);
}

std::vector<std::string> LorentzianLattice::convention_notes() const {
    std::vector<std::string> notes;
    std::ostringstream os;
    os << name_ << ": canonical basis (";
    for (size_t i = 0; i < labels_.size(); ++i) os << (i ? "," : "") << labels_[i];
    os << "), gram " << matrix_string(gram_);
    notes.push_back(os.str());
    if (has_basis("S")) {
        const IMat &P = basis_matrix("S");
        const auto &ls = basis_labels("S");
        std::ostringstream s;
        s << "S-basis convention:";
        for (int j = 0; j < 3; ++j) s << " " << ls[j] << "=" << format(P.col(j));
        notes.push_back(s.str());
    }
    return notes;
}

Sublattice::Sublattice(const LorentzianLattice &ambient, const IMat &generators) : ambient_(&ambient) {
    if (generators.rows() != ambient.rank()) throw InputError("sublattice generators have wrong length");
    basis_ = saturate(generators);
    presentation_ = basis_;
    if (generators.cols() == basis_.cols() && equal(column_hnf(generators), basis_)) presentation_ = generators;
}

Sublattice Sublattice::presented_in(const std::string &basis_id) const {
    if (rank() == 0 || basis_id == "std") return *this;
    const IMat &P = ambient_->basis_matrix(basis_id);
    IMat coords = inverse_unimodular(P) * basis_;
    return Sublattice(*ambient_, IMat(P * column_hnf(coords)));
}

std::string Sublattice::format_in(const std::string &basis_id) const {
    std::ostringstream os;
    os << "Z{";
    for (int j = 0; j < rank(); ++j) os << (j ? ", " : "") << ambient_->format_in(presentation_.col(j), basis_id);
    os << "}";
    return os.str();
}

Sublattice Sublattice::zero(const LorentzianLattice &ambient) { return Sublattice(ambient, IMat(ambient.rank(), 0)); }

Sublattice Sublattice::full(const LorentzianLattice &ambient) { return Sublattice(ambient, identity(ambient.rank())); }

Sublattice Sublattice::span(const LorentzianLattice &ambient, const std::vector<IVec> &vectors) {
    IMat g(ambient.rank(), static_cast<int>(vectors.size()));
    for (size_t j = 0; j < vectors.size(); ++j) {
        if (vectors[j].size() != ambient.rank()) throw InputError("vector length mismatch");
        g.col(static_cast<int>(j)) = vectors[j];
    }
    return Sublattice(ambient, g);
}

bool Sublattice::contains(const IVec &v) const {
    if (rank() == 0) return is_zero(v);
    IMat aug = hstack(basis_, v);
    if (dp::rank(aug) != rank()) return false;
    // saturated: rational membership implies integral membership
    return true;
}

std::string Sublattice::format() const {
    std::ostringstream os;
    os << "Z{";
    for (int j = 0; j < rank(); ++j) os << (j ? ", " : "") << ambient_->format(presentation_.col(j));
    os << "}";
    return os.str();
}

bool operator==(const Sublattice &a, const Sublattice &b) {
    return a.ambient_ == b.ambient_ && equal(a.basis_, b.basis_);
}

Integer form(const LorentzianLattice &L, const IVec &v, const IVec &w) {
    if (v.size() != L.rank() || w.size() != L.rank()) throw InputError("vector length does not match lattice rank");
    return (v.transpose() * L.gram() * w)(0, 0);
}

Integer evaluate_form(const LorentzianLattice &L, const LatticeElement &v, const LatticeElement &w) {
    return form(L, L.to_canonical(v), L.to_canonical(w));
}

namespace {

Integer reflection_norm(const LorentzianLattice &L, const IVec &v) {
    Integer q = form(L, v, v);
    long long a = q.fits_ll() ? q.to_ll() : 0;
    if (a != 1 && a != -1 && a != 2 && a != -2)
        throw InputError("unsupported reflection norm Q(v,v) = " + q.str());
    return q;
}

} // namespace

LatticeElement reflect(const LorentzianLattice &L, const LatticeElement &v, const LatticeElement &w) {
    IVec vc = L.to_canonical(v);
    IVec wc = L.to_canonical(w);
    Integer q = reflection_norm(L, vc);
    Integer c = Integer(2) * form(L, vc, wc) / q;
    IVec r = wc - c * vc;
    return L.in_basis(r, w.basis_id);
}

IMat reflection_matrix(const LorentzianLattice &L, const IVec &v) {
    Integer q = reflection_norm(L, v);
    IMat m = identity(L.rank());
    IVec gv = L.gram() * v;
    for (int i = 0; i < L.rank(); ++i)
        for (int j = 0; j < L.rank(); ++j) m(i, j) -= Integer(2) * v(i) * gv(j) / q;
    return m;
}

IMat reflection_matrix(const LorentzianLattice &L, const LatticeElement &v, const std::string &basis_id) {
    return L.matrix_to_basis(reflection_matrix(L, L.to_canonical(v)), basis_id);
}

Sublattice eigenlattice(const LorentzianLattice &L, const IMat &m, int sign) {
    if (sign != 1 && sign != -1) throw InputError("eigen sign must be +1 or -1");
    if (m.rows() != L.rank() || m.cols() != L.rank()) throw InputError("matrix size does not match lattice");
    IMat a = m - Integer(sign) * identity(L.rank());
    return Sublattice(L, integer_kernel(a));
}

Sublattice intersect_sublattices(const Sublattice &a, const Sublattice &b) {
    if (&a.ambient() != &b.ambient()) throw InputError("sublattices live in different lattices");
    return Sublattice(a.ambient(), intersect_spans(a.basis(), b.basis()));
}

Sublattice image(const Sublattice &s, const IMat &m) { return Sublattice(s.ambient(), m * s.basis()); }

IMat restricted_gram(const Sublattice &s) {
    return s.presentation().transpose() * s.ambient().gram() * s.presentation();
}

Inertia restricted_signature(const LorentzianLattice &L, const Sublattice &s) {
    if (&s.ambient() != &L) throw InputError("sublattice belongs to a different lattice");
    return inertia(restricted_gram(s));
}

} // namespace dp
