#include "delpezzo/coxeter.hpp"

#include <cctype>
#include <sstream>

namespace dp {

std::string label_string(int m) { return m == COXETER_INFINITY ? "inf" : std::to_string(m); }

CoxeterSystem coxeter_system(int n) {
    CoxeterSystem c;
    c.n = n;
    const auto &L = LorentzianLattice::M(n);
    if (n == 2) c.root_names = {"H-E1-E2", "E1-E2", "E2"};
    else if (n == 3) c.root_names = {"H-E1-E2-E3", "E1-E2", "E2-E3", "E3"};
    else throw InputError("Coxeter systems are provided for n = 2, 3");
    for (const auto &r : c.root_names) c.simple_roots.push_back(L.parse(r));
    c.labels = pair_order_table(c);
    return c;
}

std::vector<std::vector<int>> pair_order_table(const CoxeterSystem &c) {
    const int k = static_cast<int>(c.simple_roots.size());
    std::vector<std::vector<int>> t(k, std::vector<int>(k, 1));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            ElementOrder o = element_order(c.reflection(i) * c.reflection(j));
            t[i][j] = t[j][i] = o.finite ? o.order : COXETER_INFINITY;
        }
    return t;
}

GramCheck gram_consistency_check(const CoxeterSystem &c) {
    GramCheck g;
    const auto &L = c.lattice();
    const int k = static_cast<int>(c.simple_roots.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            // R = -Q
            Integer rvw = -form(L, c.simple_roots[i], c.simple_roots[j]);
            Integer rvv = -form(L, c.simple_roots[i], c.simple_roots[i]);
            Integer rww = -form(L, c.simple_roots[j], c.simple_roots[j]);
            int m = c.labels[i][j];
            Rational cos2;
            switch (m) {
            case COXETER_INFINITY: cos2 = Rational(1); break;
            case 2: cos2 = Rational(0); break;
            case 3: cos2 = Rational(Integer(1), Integer(4)); break;
            case 4: cos2 = Rational(Integer(1), Integer(2)); break;
            case 6: cos2 = Rational(Integer(3), Integer(4)); break;
            default: cos2 = Rational(-1); break;
            }
            Rational lhs = Rational(Integer(4) * rvw * rvw);
            Rational rhs = Rational(4) * cos2 * Rational(rvv * rww);
            bool ok = cos2.sign() >= 0 && lhs == rhs && rvw.sign() <= 0;
            std::ostringstream os;
            os << "(" << c.root_names[i] << ", " << c.root_names[j] << "): m=" << label_string(m) << ", R(v,w)=" << rvw
               << ", 4R(v,w)^2=" << lhs << ", 4cos^2(pi/m)R(v,v)R(w,w)=" << rhs << (ok ? " ok" : " FAIL");
            g.lines.push_back(os.str());
            if (!ok) {
                g.pass = false;
                g.failures.push_back(c.root_names[i] + ", " + c.root_names[j]);
            }
        }
    return g;
}

Parabolic parabolic_subgroup(const CoxeterSystem &c, int omit) {
    const auto &L = c.lattice();
    if (omit < 0 || omit >= static_cast<int>(c.simple_roots.size())) throw InputError("omitted root out of range");
    std::vector<Isometry> gens;
    for (int i = 0; i < static_cast<int>(c.simple_roots.size()); ++i)
        if (i != omit) gens.push_back(c.reflection(i));
    Closure cl = close_group(MatrixGroup(L, gens));
    Parabolic p{omit, c.root_names[omit], cl.finite ? *cl.group : MatrixGroup(L, gens), cl.finite, {}, {}, {}};
    if (!cl.finite && cl.infinite_witness) {
        p.infinite_witness = cl.infinite_witness;
        std::string w = cl.witness_word;
        // rename generator placeholders g1.. to root reflections
        std::string named;
        for (size_t i = 0; i < w.size(); ++i) {
            if (w[i] == 'g') {
                size_t j = i + 1;
                while (j < w.size() && std::isdigit(static_cast<unsigned char>(w[j]))) ++j;
                int idx = std::stoi(w.substr(i + 1, j - i - 1)) - 1;
                int root = idx >= omit ? idx + 1 : idx;
                named += "Ref(" + c.root_names[root] + ")";
                i = j - 1;
            } else {
                named += w[i];
            }
        }
        p.witness_word = named;
        p.witness_certificate = element_order(*cl.infinite_witness).certificate;
    }
    return p;
}

Parabolic parabolic_subgroup(const CoxeterSystem &c, const std::string &omit_root) {
    for (size_t i = 0; i < c.root_names.size(); ++i)
        if (c.root_names[i] == omit_root) return parabolic_subgroup(c, static_cast<int>(i));
    throw InputError("unknown simple root " + omit_root);
}

std::vector<Candidate> maximal_finite_candidates(const CoxeterSystem &c, bool include_minus_identity) {
    const auto &L = c.lattice();
    std::vector<Candidate> out;
    for (int i = 0; i < static_cast<int>(c.simple_roots.size()); ++i) {
        if (c.root_names[i] == "E1-E2") continue;
        std::vector<Isometry> gens;
        for (int j = 0; j < static_cast<int>(c.simple_roots.size()); ++j)
            if (j != i) gens.push_back(c.reflection(j));
        if (include_minus_identity) gens.push_back(Isometry::minus_identity(L));
        out.push_back(Candidate{c.root_names[i], closed(L, gens)});
    }
    return out;
}

} // namespace dp
