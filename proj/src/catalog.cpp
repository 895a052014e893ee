#include "delpezzo/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace dp {

std::string construction_name(ConstructionKind k) {
    switch (k) {
    case ConstructionKind::Section: return "section";
    case ConstructionKind::Glue: return "glue";
    case ConstructionKind::EquivariantSum: return "equivariant_sum";
    case ConstructionKind::BlowupAutomorphism: return "blowup_automorphism";
    }
    return "?";
}

const ElementDef *RealizationEntry::element(const std::string &n) const {
    for (const auto &e : elements)
        if (e.name == n) return &e;
    return nullptr;
}

bool RealizationEntry::has_flag(const std::string &flag, const std::string &el) const {
    return std::any_of(flags.begin(), flags.end(),
                       [&](const EntryFlag &f) { return f.flag == flag && (el.empty() || f.element == el); });
}

std::vector<std::string> EntryReport::failures() const {
    std::vector<std::string> out;
    for (const auto &c : checks)
        if (!c.pass) out.push_back(c.name + ": " + c.detail);
    return out;
}

namespace {

ConstructionKind parse_kind(const std::string &s) {
    if (s == "section") return ConstructionKind::Section;
    if (s == "glue") return ConstructionKind::Glue;
    if (s == "equivariant_sum") return ConstructionKind::EquivariantSum;
    if (s == "blowup_automorphism") return ConstructionKind::BlowupAutomorphism;
    throw InputError("unknown construction '" + s + "'");
}

std::string join(const std::vector<std::string> &t, size_t from) {
    std::string out;
    for (size_t i = from; i < t.size(); ++i) out += (i > from ? " " : "") + t[i];
    return out;
}

int parse_sign(const std::string &s) {
    if (s == "+") return 1;
    if (s == "-") return -1;
    throw InputError("expected + or -, got '" + s + "'");
}

std::vector<int> parse_int_list(const std::string &s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok == "+") out.push_back(1);
        else if (tok == "-") out.push_back(-1);
        else out.push_back(std::stoi(tok));
    }
    return out;
}

std::vector<IVec> parse_vectors(const LorentzianLattice &L, const std::string &text) {
    if (text.rfind("Z{", 0) != 0 || text.back() != '}') throw InputError("expected Z{..}");
    std::vector<IVec> out;
    std::stringstream ss(text.substr(2, text.size() - 3));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(std::remove(tok.begin(), tok.end(), ' '), tok.end());
        if (!tok.empty()) out.push_back(L.parse(tok));
    }
    if (out.empty()) throw InputError("empty summand");
    return out;
}

ComponentKind parse_kind_token(const std::string &s) {
    FixedSetProfile p = parse_profile(s);
    if (p.size() != 1) throw InputError("expected a single component, got " + s);
    return p.components[0];
}

IMat basis_of(const std::vector<IVec> &vs) {
    IMat B(vs[0].size(), static_cast<int>(vs.size()));
    for (size_t j = 0; j < vs.size(); ++j) B.col(static_cast<int>(j)) = vs[j];
    return B;
}

bool is_signed_permutation(const IMat &m) {
    if (m.rows() != m.cols()) return false;
    for (int i = 0; i < m.rows(); ++i) {
        int nz = 0;
        for (int j = 0; j < m.cols(); ++j) {
            if (m(i, j).is_zero()) continue;
            if (abs(m(i, j)) != Integer(1)) return false;
            ++nz;
        }
        if (nz != 1) return false;
    }
    return rank(m) == m.rows();
}

// closure of matrices under multiplication; empty when it exceeds cap
std::vector<IMat> close_matrices(const std::vector<IMat> &gens, size_t cap = 512) {
    std::vector<IMat> out{identity(static_cast<int>(gens[0].rows()))};
    std::set<std::vector<long long>> seen{matrix_key(out[0])};
    for (size_t i = 0; i < out.size(); ++i)
        for (const auto &g : gens) {
            IMat p = out[i] * g;
            if (seen.insert(matrix_key(p)).second) {
                out.push_back(p);
                if (out.size() > cap) return {};
            }
        }
    return out;
}

} // namespace

RealizationEntry parse_entry(const TextDoc &doc) {
    RealizationEntry e;
    e.source = doc.source;
    if (doc.value("schema") != "1") throw DocError(doc.source, doc.find("schema")->number, "unsupported schema");
    if (doc.value("kind") != "realization") throw DocError(doc.source, doc.find("kind")->number, "not a realization entry");
    e.name = doc.value("name");
    e.manifold = doc.value("manifold");
    const LorentzianLattice *L = nullptr;
    std::map<std::string, Isometry> env;
    for (const auto &l : doc.lines) {
        const auto &t = l.tokens;
        const std::string &k = t[0];
        try {
            auto need = [&](size_t n) {
                if (t.size() < n) throw InputError("'" + k + "' needs " + std::to_string(n - 1) + " arguments");
            };
            if (k == "schema" || k == "kind" || k == "name") continue;
            if (k == "manifold") {
                L = &lattice_by_name(e.manifold);
                continue;
            }
            if (!L) throw InputError("'manifold' must come first");
            if (k == "construction") {
                need(2);
                e.kind = parse_kind(t[1]);
            } else if (k == "fingerprint") {
                need(2);
                e.claimed_fingerprint = join(t, 1);
            } else if (k == "order") {
                need(2);
                e.claimed_order = std::stoi(t[1]);
            } else if (k == "element") {
                if (t.size() != 4 || t[2] != "=") throw InputError("usage: element X = expr");
                if (e.element(t[1])) throw InputError("element '" + t[1] + "' defined twice");
                IMat m;
                const std::string &x = t[3];
                auto c = x.find(":[");
                if (x[0] == '[') {
                    m = parse_matrix_literal(x);
                } else if (c != std::string::npos) {
                    IMat raw = parse_matrix_literal(x.substr(c + 1));
                    if (raw.rows() != L->rank() || raw.cols() != L->rank()) throw InputError("matrix has wrong size");
                    m = L->matrix_from_basis(raw, x.substr(0, c));
                } else {
                    m = parse_isometry_expr(*L, x, env).matrix();
                }
                if (m.rows() != L->rank() || m.cols() != L->rank()) throw InputError("matrix has wrong size");
                e.elements.push_back(ElementDef{t[1], m});
                if (!isometry_violation(*L, m)) env.emplace(t[1], Isometry(*L, m));
            } else if (k == "group") {
                need(2);
                e.generators.assign(t.begin() + 1, t.end());
            } else if (k == "relation") {
                if (t.size() != 4 || t[2] != "=") throw InputError("usage: relation X = expr");
                e.relations.emplace_back(t[1], t[3]);
            } else if (k == "order_of") {
                need(3);
                e.element_orders.emplace_back(t[1], std::stoi(t[2]));
            } else if (k == "summand") {
                need(3);
                e.summands.emplace_back(t[1], parse_vectors(*L, t[2]));
            } else if (k == "piece") {
                need(4);
                e.pieces.push_back(PieceAction{t[1], t[2], parse_matrix_literal(t[3])});
            } else if (k == "descriptor") {
                need(5);
                e.descriptors.push_back(BlowupDescriptor{t[1], parse_sign(t[2]), parse_int_list(t[3]), parse_int_list(t[4])});
            } else if (k == "fixed") {
                need(3);
                FixedClaim f;
                f.element = t[1];
                if (t[2][0] == '[') {
                    f.profile = parse_profile(t[2]);
                } else {
                    f.piece = t[2];
                    need(4);
                    if (t[3] == "partial") {
                        need(5);
                        f.partial = true;
                        f.glue_component = parse_kind_token(t[4]);
                    } else {
                        f.profile = parse_profile(t[3]);
                        if (t.size() != 6 || t[4] != "at") throw InputError("usage: fixed X piece [profile] at kind");
                        f.glue_component = parse_kind_token(t[5]);
                    }
                }
                e.fixed.push_back(f);
            } else if (k == "tangent") {
                need(5);
                int o = parse_sign(t[2]);
                auto it = std::find_if(e.tangents.begin(), e.tangents.end(),
                                       [&](const TangentialRep &r) { return r.piece == t[1]; });
                if (it == e.tangents.end()) {
                    e.tangents.push_back(TangentialRep{t[1], o, {}, {}});
                    it = e.tangents.end() - 1;
                } else if (it->orientation != o) {
                    throw InputError("chart orientation of " + t[1] + " changed");
                }
                it->elements.push_back(t[3]);
                it->matrices.push_back(parse_matrix_literal(t[4]));
            } else if (k == "stabilizer") {
                need(3);
                e.stabilizer = std::make_pair(t[1], std::vector<std::string>(t.begin() + 2, t.end()));
            } else if (k == "flag") {
                need(2);
                e.flags.push_back(EntryFlag{t[1], t.size() > 2 ? t[2] : ""});
            } else if (k == "note") {
                e.note += (e.note.empty() ? "" : " ") + join(t, 1);
            } else {
                throw InputError("unknown key '" + k + "'");
            }
        } catch (const DocError &) {
            throw;
        } catch (const std::exception &ex) {
            throw DocError(doc.source, l.number, ex.what());
        }
    }
    if (e.generators.empty()) throw DocError(doc.source, 0, "missing 'group'");
    return e;
}

std::optional<Isometry> entry_element(const RealizationEntry &e, const std::string &name) {
    const ElementDef *d = e.element(name);
    if (!d) return std::nullopt;
    const auto &L = e.lattice();
    if (d->matrix.rows() != L.rank() || d->matrix.cols() != L.rank() || isometry_violation(L, d->matrix))
        return std::nullopt;
    return Isometry(L, d->matrix);
}

std::optional<MatrixGroup> entry_group(const RealizationEntry &e) {
    std::vector<Isometry> gens;
    for (const auto &g : e.generators) {
        auto x = entry_element(e, g);
        if (!x) return std::nullopt;
        gens.push_back(*x);
    }
    Closure c = close_group(MatrixGroup(e.lattice(), gens));
    if (!c.finite) return std::nullopt;
    return *c.group;
}

FormAction glue_action(const FormAction &a, const FormAction &b) {
    for (const auto *x : {&a, &b})
        if (!equal(IMat(x->matrix.transpose() * x->gram * x->matrix), x->gram))
            throw InputError("block does not preserve its form");
    const int n = static_cast<int>(a.gram.rows()), m = static_cast<int>(b.gram.rows());
    FormAction out{zeros(n + m, n + m), zeros(n + m, n + m)};
    out.gram.block(0, 0, n, n) = a.gram;
    out.gram.block(n, n, m, m) = b.gram;
    out.matrix.block(0, 0, n, n) = a.matrix;
    out.matrix.block(n, n, m, m) = b.matrix;
    return out;
}

ComponentKind connected_sum(const ComponentKind &a, const ComponentKind &b) {
    if (!a.is_surface() || !b.is_surface()) throw InputError("connected sum needs two surfaces");
    if (a.type == ComponentType::Orientable && b.type == ComponentType::Orientable)
        return ComponentKind::orientable(a.complexity + b.complexity);
    // a torus summand contributes two crosscaps
    int k = (a.type == ComponentType::Orientable ? 2 : 1) * a.complexity +
            (b.type == ComponentType::Orientable ? 2 : 1) * b.complexity;
    return ComponentKind::nonorientable(k);
}

GlueCheck glue_compatibility(const TangentialRep &r1, const TangentialRep &r2, bool forbid_minus_identity) {
    GlueCheck g;
    if (r1.elements.size() != r2.elements.size()) {
        g.detail = "representations list different elements";
        return g;
    }
    std::vector<std::pair<IMat, IMat>> pairs;
    for (size_t i = 0; i < r1.elements.size(); ++i) {
        auto it = std::find(r2.elements.begin(), r2.elements.end(), r1.elements[i]);
        if (it == r2.elements.end()) {
            g.detail = "element " + r1.elements[i] + " missing on " + r2.piece;
            return g;
        }
        pairs.emplace_back(r1.matrices[i], r2.matrices[it - r2.elements.begin()]);
    }
    if (forbid_minus_identity) {
        IMat mI = IMat(-identity(4));
        for (const auto *r : {&r1, &r2}) {
            auto img = close_matrices(r->matrices);
            for (const auto &x : img)
                if (equal(x, mI)) {
                    g.detail = "-I4 lies in the image on " + r->piece;
                    return g;
                }
        }
    }
    std::vector<int> perm{0, 1, 2, 3};
    int found_wrong_orientation = 0;
    do {
        for (int s = 0; s < 16; ++s) {
            IMat P = zeros(4, 4);
            for (int i = 0; i < 4; ++i) P(perm[i], i) = Integer((s >> i & 1) ? -1 : 1);
            bool ok = true;
            for (const auto &[a, b] : pairs)
                if (!equal(IMat(P * a), IMat(b * P))) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            if (determinant(P).sign() * r1.orientation * r2.orientation < 0) {
                g.pass = true;
                g.conjugator = P;
                g.detail = "conjugator " + matrix_string(P);
                return g;
            }
            ++found_wrong_orientation;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    g.detail = found_wrong_orientation ? "only orientation-preserving equivalences exist" : "representations are not equivalent";
    return g;
}

namespace {

void run_entry_checks(const RealizationEntry &e, EntryReport &rep) {
    auto add = [&](const std::string &name, bool pass, const std::string &detail = "") {
        rep.checks.push_back(CheckResult{name, pass, detail});
        rep.pass = rep.pass && pass;
    };
    const LorentzianLattice *Lp = nullptr;
    try {
        Lp = &e.lattice();
    } catch (const InputError &ex) {
        add("manifold", false, ex.what());
        return;
    }
    const auto &L = *Lp;

    std::map<std::string, Isometry> env;
    for (const auto &d : e.elements) {
        auto v = (d.matrix.rows() == L.rank() && d.matrix.cols() == L.rank()) ? isometry_violation(L, d.matrix)
                                                                               : std::optional<std::string>("wrong size");
        add("isometry " + d.name, !v, v ? *v : "");
        if (!v) env.emplace(d.name, Isometry(L, d.matrix));
    }
    for (const auto &[x, expr] : e.relations) {
        auto it = env.find(x);
        if (it == env.end()) {
            add("relation " + x, false, "element unavailable");
            continue;
        }
        try {
            bool ok = it->second == parse_isometry_expr(L, expr, {});
            add("relation " + x, ok, ok ? "" : "matrix differs from " + expr);
        } catch (const InputError &ex) {
            add("relation " + x, false, ex.what());
        }
    }
    for (const auto &[x, k] : e.element_orders) {
        auto it = env.find(x);
        if (it == env.end()) {
            add("order_of " + x, false, "element unavailable");
            continue;
        }
        ElementOrder o = element_order(it->second);
        add("order_of " + x, o.finite && o.order == k,
            o.finite ? "order " + std::to_string(o.order) + ", claimed " + std::to_string(k) : "infinite order");
    }

    std::optional<MatrixGroup> G;
    {
        std::vector<Isometry> gens;
        bool ok = true;
        for (const auto &g : e.generators) {
            auto it = env.find(g);
            if (it == env.end()) ok = false;
            else gens.push_back(it->second);
        }
        if (!ok) add("group", false, "a generator is missing or invalid");
        else {
            Closure c = close_group(MatrixGroup(L, gens));
            add("group", c.finite, c.finite ? "" : "generated group is not finite");
            if (c.finite) G = *c.group;
        }
    }
    if (G) {
        add("order", G->order() == e.claimed_order,
            "order " + std::to_string(G->order()) + ", claimed " + std::to_string(e.claimed_order));
        Fingerprint f = isomorphism_fingerprint(*G);
        add("fingerprint", f.label == e.claimed_fingerprint, f.label + ", claimed " + e.claimed_fingerprint);
    }

    // connected-sum homology splitting
    std::vector<Sublattice> summands;
    if (!e.summands.empty()) {
        std::vector<IVec> all;
        for (const auto &[n, vs] : e.summands) {
            summands.push_back(Sublattice(L, basis_of(vs)));
            all.insert(all.end(), vs.begin(), vs.end());
        }
        IMat B = basis_of(all);
        bool unimodular = B.rows() == B.cols() && abs(determinant(B)) == Integer(1);
        bool orthogonal = true;
        for (size_t i = 0; i < e.summands.size(); ++i)
            for (size_t j = i + 1; j < e.summands.size(); ++j)
                for (const auto &v : e.summands[i].second)
                    for (const auto &w : e.summands[j].second) orthogonal = orthogonal && form(L, v, w).is_zero();
        add("summands", unimodular && orthogonal,
            !unimodular ? "summands do not span the lattice" : (!orthogonal ? "summands are not orthogonal" : ""));
        for (const auto &[x, m] : env) {
            bool ok = true;
            std::string detail;
            for (size_t i = 0; i < summands.size(); ++i) {
                Sublattice img = image(summands[i], m.matrix());
                bool same = img == summands[i];
                bool some = std::any_of(summands.begin(), summands.end(), [&](const Sublattice &s) { return s == img; });
                if (e.kind == ConstructionKind::Glue ? !same : !some) {
                    ok = false;
                    detail = "image of " + e.summands[i].first + " is not a summand";
                }
            }
            add("block " + x, ok, detail);
        }
    }
    for (const auto &p : e.pieces) {
        std::string nm = "piece " + p.element + "@" + p.summand;
        auto it = env.find(p.element);
        auto s = std::find_if(e.summands.begin(), e.summands.end(), [&](const auto &q) { return q.first == p.summand; });
        if (it == env.end() || s == e.summands.end()) {
            add(nm, false, "element or summand unavailable");
            continue;
        }
        IMat B = basis_of(s->second);
        bool ok = p.matrix.rows() == B.cols() && p.matrix.cols() == B.cols() && equal(IMat(it->second.matrix() * B), IMat(B * p.matrix));
        add(nm, ok, ok ? "" : "restriction differs from " + matrix_string(p.matrix));
    }
    for (const auto &d : e.descriptors) {
        std::string nm = "descriptor " + d.element;
        auto it = env.find(d.element);
        const int n = L.rank() - 1;
        if (it == env.end() || L.name()[0] != 'M' || L.name() == "Mstar" || static_cast<int>(d.perm.size()) != n ||
            static_cast<int>(d.signs.size()) != n) {
            add(nm, false, "descriptor does not fit the element");
            continue;
        }
        IMat m = zeros(n + 1, n + 1);
        m(0, 0) = Integer(d.h_sign);
        bool perm_ok = true;
        std::vector<int> seen;
        for (int i = 0; i < n; ++i) {
            if (d.perm[i] < 1 || d.perm[i] > n) perm_ok = false;
            else m(d.perm[i], i + 1) = Integer(d.signs[i]);
            seen.push_back(d.perm[i]);
        }
        std::sort(seen.begin(), seen.end());
        perm_ok = perm_ok && std::adjacent_find(seen.begin(), seen.end()) == seen.end();
        bool ok = perm_ok && equal(m, it->second.matrix());
        add(nm, ok, ok ? "" : "descriptor gives " + matrix_string(m));
    }

    // fixed-set metadata against the Betti equations
    std::map<std::string, std::vector<const FixedClaim *>> by_element;
    for (const auto &f : e.fixed) by_element[f.element].push_back(&f);
    for (const auto &[x, claims] : by_element) {
        std::string nm = "betti " + x;
        auto it = env.find(x);
        if (it == env.end()) {
            add(nm, false, "element unavailable");
            continue;
        }
        InvolutionDecomposition d;
        try {
            d = decompose_involution(it->second);
        } catch (const InputError &ex) {
            add(nm, false, ex.what());
            continue;
        }
        auto admissible = enumerate_profiles(d, d.t + 2, std::max(d.c, 1));
        auto in_admissible = [&](const FixedSetProfile &p) {
            return std::find(admissible.begin(), admissible.end(), p) != admissible.end();
        };
        if (claims.size() == 1 && claims[0]->piece.empty()) {
            bool ok = in_admissible(claims[0]->profile);
            add(nm, ok, claims[0]->profile.name() + (ok ? "" : " violates the Betti equations"));
            continue;
        }
        if (claims.size() != 2 || claims[0]->piece.empty() || claims[1]->piece.empty()) {
            add(nm, false, "expected one whole-manifold claim or one claim per glued piece");
            continue;
        }
        ComponentKind sum;
        try {
            sum = connected_sum(*claims[0]->glue_component, *claims[1]->glue_component);
        } catch (const InputError &ex) {
            add(nm, false, ex.what());
            continue;
        }
        if (claims[0]->partial || claims[1]->partial) {
            bool ok = std::any_of(admissible.begin(), admissible.end(), [&](const FixedSetProfile &p) {
                return std::any_of(p.components.begin(), p.components.end(),
                                   [&](const ComponentKind &c) { return c.type == sum.type; });
            });
            add(nm, ok, "glued component " + sum.name() + " (rest of the fixed set not recorded)");
            continue;
        }
        FixedSetProfile glued;
        bool ok = true;
        for (const auto *c : claims) {
            auto comps = c->profile.components;
            auto at = std::find(comps.begin(), comps.end(), *c->glue_component);
            if (at == comps.end()) ok = false;
            else comps.erase(at);
            glued.components.insert(glued.components.end(), comps.begin(), comps.end());
        }
        glued.components.push_back(sum);
        glued.canonicalize();
        ok = ok && in_admissible(glued);
        add(nm, ok, "glued " + glued.name() + (ok ? "" : " violates the Betti equations"));
    }

    if (e.stabilizer && G) {
        const auto &[sname, names] = *e.stabilizer;
        std::string nm = "stabilizer " + sname;
        auto s = std::find_if(e.summands.begin(), e.summands.end(), [&](const auto &q) { return q.first == sname; });
        std::vector<Isometry> gens;
        bool ok = s != e.summands.end();
        for (const auto &n : names) {
            auto it = env.find(n);
            if (it == env.end()) ok = false;
            else gens.push_back(it->second);
        }
        if (!ok) add(nm, false, "summand or element unavailable");
        else {
            Sublattice S(L, basis_of(s->second));
            std::vector<Isometry> stab;
            for (const auto &g : G->elements())
                if (image(S, g.matrix()) == S) stab.push_back(g);
            MatrixGroup H = closed(L, gens);
            bool same = MatrixGroup(L, stab, stab).same_elements(H);
            add(nm, same, "stabilizer order " + std::to_string(stab.size()) + ", listed group order " + std::to_string(H.order()));
        }
    }

    for (const auto &r : e.tangents) {
        std::string nm = "tangent " + r.piece;
        bool ok = true;
        std::string detail;
        std::vector<Isometry> lat;
        for (size_t i = 0; i < r.matrices.size(); ++i) {
            const IMat &m = r.matrices[i];
            if (m.rows() != 4 || !is_signed_permutation(m) || determinant(m) != Integer(1)) {
                ok = false;
                detail = r.elements[i] + " is not an oriented signed permutation";
            }
            auto it = env.find(r.elements[i]);
            if (it == env.end()) {
                ok = false;
                detail = "element " + r.elements[i] + " unavailable";
            } else {
                lat.push_back(it->second);
            }
        }
        if (ok) {
            // graph of the representation: a homomorphism iff the lattice coordinate determines the local one
            std::vector<std::pair<Isometry, IMat>> graph{{Isometry::identity(L), identity(4)}};
            std::set<std::pair<std::vector<long long>, std::vector<long long>>> seen{
                {graph[0].first.key(), matrix_key(graph[0].second)}};
            for (size_t i = 0; i < graph.size() && graph.size() <= 1024; ++i)
                for (size_t j = 0; j < lat.size(); ++j) {
                    std::pair<Isometry, IMat> p{graph[i].first * lat[j], IMat(graph[i].second * r.matrices[j])};
                    if (seen.insert({p.first.key(), matrix_key(p.second)}).second) graph.push_back(p);
                }
            std::map<std::vector<long long>, std::set<std::vector<long long>>> fwd, back;
            for (const auto &[a, b] : graph) {
                fwd[a.key()].insert(matrix_key(b));
                back[matrix_key(b)].insert(a.key());
            }
            bool hom = std::all_of(fwd.begin(), fwd.end(), [](const auto &kv) { return kv.second.size() == 1; });
            bool faithful = std::all_of(back.begin(), back.end(), [](const auto &kv) { return kv.second.size() == 1; });
            ok = hom && faithful;
            detail = !hom ? "not a homomorphism" : (!faithful ? "not faithful" : "");
        }
        add(nm, ok, detail);
    }
    if (e.tangents.size() == 2) {
        GlueCheck g = glue_compatibility(e.tangents[0], e.tangents[1], e.kind == ConstructionKind::Glue);
        add("glue_compatibility", g.pass, g.detail);
    } else if (!e.tangents.empty()) {
        add("glue_compatibility", false, "expected tangential data for two glued pieces");
    }
}

} // namespace

EntryReport verify_entry(const RealizationEntry &e) {
    EntryReport rep;
    rep.entry = e.name;
    try {
        run_entry_checks(e, rep);
    } catch (const std::exception &ex) {
        // corrupted data can drive closures past the exact-key range
        rep.checks.push_back(CheckResult{"evaluation", false, ex.what()});
        rep.pass = false;
    }
    return rep;
}

RealizationEntry parametric_entry_Mn(int n) {
    if (n < 1 || n > 8) throw InputError("parametric entry needs 1 <= n <= 8");
    RealizationEntry e;
    const auto &L = LorentzianLattice::M(n);
    std::string c_expr = "Ref(H)";
    for (int k = 1; k < n; ++k) c_expr += "*Ref(E" + std::to_string(k) + ")";
    e.name = "M" + std::to_string(n) + " c = " + c_expr + " via " + (n == 1 ? std::string("CP2") : "M" + std::to_string(n - 1)) +
             " # CP2bar glue";
    e.source = "parametric";
    e.manifold = "M" + std::to_string(n);
    e.kind = ConstructionKind::Glue;
    e.claimed_fingerprint = "Z/2";
    e.claimed_order = 2;
    std::vector<long long> diag(n + 1, -1);
    diag[n] = 1;
    e.elements.push_back(ElementDef{"c", diagonal(diag)});
    e.generators = {"c"};
    e.relations.emplace_back("c", c_expr);
    e.element_orders.emplace_back("c", 2);
    std::vector<IVec> p1, p2;
    for (int i = 0; i < n; ++i) p1.push_back(L.parse(L.labels()[i]));
    p2.push_back(L.parse(L.labels()[n]));
    e.summands = {{"P1", p1}, {"P2", p2}};
    e.pieces.push_back(PieceAction{"c", "P1", IMat(-identity(n))});
    e.pieces.push_back(PieceAction{"c", "P2", identity(1)});
    BlowupDescriptor d{"c", -1, {}, {}};
    for (int i = 1; i <= n; ++i) {
        d.perm.push_back(i);
        d.signs.push_back(i == n ? 1 : -1);
    }
    e.descriptors.push_back(d);
    FixedClaim f1{"c", "P1", {}, ComponentKind::nonorientable(1), n > 1};
    if (n == 1) f1.profile = parse_profile("[RP^2]");
    e.fixed.push_back(f1);
    e.fixed.push_back(FixedClaim{"c", "P2", parse_profile("[S^2, pt]"), ComponentKind::orientable(0), false});
    IMat loc = diagonal({-1, -1, 1, 1});
    e.tangents.push_back(TangentialRep{"P1", 1, {"c"}, {loc}});
    e.tangents.push_back(TangentialRep{"P2", 1, {"c"}, {loc}});
    if (n == 2) {
        e.flags.push_back(EntryFlag{"not_designated", "c"});
        e.note = "the designated class on M2 is Ref(E1)*Ref(E2), realized in the M2 classification";
    }
    return e;
}

void Catalog::add(RealizationEntry e) {
    groups_.push_back(entry_group(e));
    entries_.push_back(std::move(e));
}

Catalog Catalog::load(const std::filesystem::path &dir) {
    if (!std::filesystem::is_directory(dir)) throw InputError("catalog directory not found: " + dir.string());
    std::vector<std::filesystem::path> files;
    for (const auto &f : std::filesystem::directory_iterator(dir))
        if (f.path().extension() == ".entry") files.push_back(f.path());
    std::sort(files.begin(), files.end());
    Catalog c;
    for (const auto &f : files) c.add(parse_entry(load_textdoc(f)));
    for (int n = 1; n <= 8; ++n) c.add(parametric_entry_Mn(n));
    return c;
}

const RealizationEntry *Catalog::find(const std::string &name) const {
    for (const auto &e : entries_)
        if (e.name == name) return &e;
    return nullptr;
}

const RealizationEntry *Catalog::realizing_entry(const MatrixGroup &g) const {
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (!groups_[i] || &groups_[i]->lattice() != &g.lattice()) continue;
        const auto &els = g.elements();
        if (std::all_of(els.begin(), els.end(), [&](const Isometry &x) { return groups_[i]->contains(x); }))
            return &entries_[i];
    }
    return nullptr;
}

} // namespace dp
