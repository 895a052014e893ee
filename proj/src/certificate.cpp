#include "delpezzo/certificate.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace dp {

void CertificateLibrary::add(TextDoc doc) {
    std::string name = doc.value("name");
    docs_.insert_or_assign(name, std::move(doc));
}

void CertificateLibrary::load_directory(const std::filesystem::path &dir) {
    if (!std::filesystem::is_directory(dir)) throw InputError("certificate directory not found: " + dir.string());
    std::vector<std::filesystem::path> files;
    for (const auto &e : std::filesystem::directory_iterator(dir))
        if (e.path().extension() == ".cert") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto &f : files) add(load_textdoc(f));
}

const TextDoc *CertificateLibrary::find(const std::string &name) const {
    auto it = docs_.find(name);
    return it == docs_.end() ? nullptr : &it->second;
}

std::vector<std::string> CertificateLibrary::names() const {
    std::vector<std::string> out;
    for (const auto &[k, v] : docs_) out.push_back(k);
    return out;
}

namespace {

using Key = std::vector<long long>;

struct Reject {
    int line;
    std::string msg;
};

struct SurfaceRec {
    Isometry owner;
    std::optional<ComponentKind> kind;
    Sublattice membership;
    bool nonzero = false;
    std::string point;
    std::vector<Isometry> preserved_by;
    std::string image_of;  // [this] = +-image_by [image_of]
    std::optional<Isometry> image_by;
};

struct PointRec {
    Isometry isolated_for;
    std::vector<Isometry> stabilizer;
    bool minus_identity = false;
    std::optional<LocalModel> model;
};

struct BudgetRec {
    Isometry owner;
    std::vector<std::string> surfaces;
    Integer target;
};

struct State {
    std::map<Key, std::vector<FixedSetProfile>> profiles;
    std::map<std::string, SurfaceRec> surfaces;
    std::map<std::string, PointRec> points;
    std::vector<BudgetRec> budgets;
};

struct Step {
    const DocLine *line;
    std::vector<std::pair<const DocLine *, std::vector<Step>>> cases;
};

const std::set<std::string> HEADER_KEYS = {"schema", "kind", "name", "lattice", "claim", "element", "group"};

std::vector<Step> parse_block(const std::vector<DocLine> &lines, size_t &i, bool in_case, const std::string &src) {
    std::vector<Step> out;
    while (i < lines.size()) {
        const DocLine &l = lines[i];
        const std::string &k = l.tokens[0];
        if (k == "end") {
            if (!in_case) throw DocError(src, l.number, "'end' without 'case'");
            ++i;
            return out;
        }
        if (k == "case") throw DocError(src, l.number, "'case' must follow split_profile or branch");
        if (HEADER_KEYS.count(k)) throw DocError(src, l.number, "'" + k + "' belongs in the header");
        Step s{&l, {}};
        ++i;
        if (k == "split_profile" || k == "branch") {
            while (i < lines.size() && lines[i].tokens[0] == "case") {
                const DocLine *cl = &lines[i];
                ++i;
                auto body = parse_block(lines, i, true, src);
                s.cases.emplace_back(cl, std::move(body));
            }
            if (s.cases.empty()) throw DocError(src, l.number, "branching step without cases");
            out.push_back(std::move(s));
            if (i < lines.size()) {
                if (in_case && lines[i].tokens[0] == "end") {
                    ++i;
                    return out;
                }
                throw DocError(src, lines[i].number, "steps after a branching step");
            }
            if (in_case) throw DocError(src, l.number, "missing 'end'");
            return out;
        }
        out.push_back(std::move(s));
    }
    if (in_case) throw DocError(src, lines.empty() ? 0 : lines.back().number, "missing 'end'");
    return out;
}

Sublattice parse_span(const LorentzianLattice &L, const std::string &text) {
    if (text == "0") return Sublattice::zero(L);
    if (text.size() < 3 || text.rfind("Z{", 0) != 0 || text.back() != '}') throw InputError("expected Z{..}, got " + text);
    std::string body = text.substr(2, text.size() - 3);
    std::vector<IVec> vs;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(std::remove(tok.begin(), tok.end(), ' '), tok.end());
        if (!tok.empty()) vs.push_back(L.parse(tok));
    }
    if (vs.empty()) return Sublattice::zero(L);
    return Sublattice::span(L, vs);
}

class Checker {
public:
    Checker(const LorentzianLattice &L, MatrixGroup G, std::map<std::string, Isometry> env, const CertificateLibrary &lib,
            const SearchOptions &opt, CertificateResult &res)
        : L_(L), G_(std::move(G)), env_(std::move(env)), lib_(lib), opt_(opt), res_(res) {}

    void run(const std::vector<Step> &steps, State st, int depth);
    int current_line = 0;

private:
    const LorentzianLattice &L_;
    MatrixGroup G_;
    std::map<std::string, Isometry> env_;
    const CertificateLibrary &lib_;
    SearchOptions opt_;
    CertificateResult &res_;

    [[noreturn]] void reject(const DocLine &l, const std::string &msg) const { throw Reject{l.number, msg}; }
    void note(int depth, const DocLine &l, const std::string &detail) {
        res_.trace.push_back(std::string(2 * depth, ' ') + "line " + std::to_string(l.number) + ": " + l.text +
                             (detail.empty() ? "" : "  -> " + detail));
    }

    void arity(const DocLine &l, size_t n) const {
        if (l.tokens.size() != n) reject(l, "expected " + std::to_string(n - 1) + " arguments");
    }

    Isometry elem(const DocLine &l, const std::string &name) const {
        auto it = env_.find(name);
        if (it == env_.end()) reject(l, "unknown element '" + name + "'");
        if (!G_.contains(it->second)) reject(l, "'" + name + "' is not in the group");
        return it->second;
    }

    Isometry involution(const DocLine &l, const std::string &name) const {
        Isometry g = elem(l, name);
        if (g.is_identity() || !(g * g).is_identity()) reject(l, "'" + name + "' is not an involution");
        return g;
    }

    std::string name_of(const Isometry &g) const {
        for (const auto &[k, v] : env_)
            if (v == g) return k;
        return "?";
    }

    std::string fmt(const Sublattice &s) const {
        return s.presented_in(L_.preferred_basis()).format_in(L_.preferred_basis());
    }

    std::vector<FixedSetProfile> &profiles(State &st, const Isometry &g) {
        auto it = st.profiles.find(g.key());
        if (it != st.profiles.end()) return it->second;
        InvolutionDecomposition d = decompose_involution(g);
        SignatureBudget b = defect_budget(L_, g);
        std::vector<FixedSetProfile> keep;
        for (const auto &p : admissible_profiles(d, opt_))
            if (parity_prune(b, p) == PruneVerdict::Keep) keep.push_back(p);
        return st.profiles.emplace(g.key(), keep).first->second;
    }

    static std::string profile_list(const std::vector<FixedSetProfile> &ps) {
        std::string s;
        for (size_t i = 0; i < ps.size(); ++i) s += (i ? " " : "") + ps[i].name();
        return s.empty() ? "(none)" : s;
    }

    SurfaceRec &surface(State &st, const DocLine &l, const std::string &name) const {
        auto it = st.surfaces.find(name);
        if (it == st.surfaces.end()) reject(l, "unknown surface '" + name + "'");
        return it->second;
    }

    void fresh_name(const State &st, const DocLine &l, const std::string &name) const {
        if (st.surfaces.count(name) || st.points.count(name) || env_.count(name))
            reject(l, "name '" + name + "' already bound");
    }

    std::vector<std::string> surfaces_of(const State &st, const Isometry &g) const {
        std::vector<std::string> out;
        for (const auto &[k, s] : st.surfaces)
            if (s.owner == g) out.push_back(k);
        return out;
    }

    LocalModel::Facts facts(State &st, const PointRec &p) {
        LocalModel::Facts f;
        const LocalModel &m = *p.model;
        for (int x = 1; x < m.size(); ++x) {
            Isometry g = m.element(x);
            if (p.minus_identity && g == p.isolated_for) {
                f.minus_identity.push_back(x);
                continue;
            }
            const auto &ps = profiles(st, g);
            if (std::all_of(ps.begin(), ps.end(), [](const auto &q) { return q.surfaces() == 0; }))
                f.minus_identity.push_back(x);
            else if (std::all_of(ps.begin(), ps.end(), [](const auto &q) { return q.points() == 0; }))
                f.not_isolated.push_back(x);
        }
        return f;
    }

    struct Root {
        std::string root;
        Isometry map;  // [surface] = +-map [root]
    };
    Root root_of(const State &st, const std::string &name) const {
        const SurfaceRec &s = st.surfaces.at(name);
        if (s.image_of.empty()) return {name, Isometry::identity(L_)};
        Root r = root_of(st, s.image_of);
        return {r.root, *s.image_by * r.map};
    }
    Sublattice root_lattice(const State &st, const std::string &root) const {
        Sublattice lat = st.surfaces.at(root).membership;
        for (const auto &[k, s] : st.surfaces) {
            Root r = root_of(st, k);
            if (r.root != root || k == root) continue;
            lat = intersect_sublattices(lat, image(s.membership, r.map.inverse().matrix()));
        }
        return lat;
    }

    // closure tag -> explanation, for everything that currently closes the branch
    std::map<std::string, std::string> closures(State &st) {
        std::map<std::string, std::string> out;
        for (auto &[pname, p] : st.points)
            if (p.model && p.model->consistent(facts(st, p)).empty())
                out.emplace("tangent", "no tangent representation at " + pname + " is consistent");
        for (const auto &[k, s] : st.surfaces) {
            if (!s.nonzero) continue;
            Root r = root_of(st, k);
            if (root_lattice(st, r.root).rank() == 0)
                out.emplace("zero_class", "[" + k + "] must be nonzero but lies in the zero lattice");
        }
        for (const auto &b : st.budgets) {
            std::map<std::string, int> mult;
            bool nonzero = false;
            for (const auto &s : b.surfaces) {
                ++mult[root_of(st, s).root];
                nonzero = nonzero || st.surfaces.at(s).nonzero;
            }
            std::vector<IMat> blocks;
            std::string lats;
            int n = 0;
            for (const auto &[r, m] : mult) {
                Sublattice lat = root_lattice(st, r).presented_in(L_.preferred_basis());
                lats += (lats.empty() ? "" : ", ") + r + " in " + fmt(lat) + (m > 1 ? " (x" + std::to_string(m) + ")" : "");
                if (lat.rank() == 0) continue;
                blocks.push_back(IMat(restricted_gram(lat) * Integer(m)));
                n += lat.rank();
            }
            if (n == 0) continue;
            IMat gram(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) gram(i, j) = Integer(0);
            int off = 0;
            for (const auto &bl : blocks) {
                for (int i = 0; i < bl.rows(); ++i)
                    for (int j = 0; j < bl.cols(); ++j) gram(off + i, off + j) = bl(i, j);
                off += static_cast<int>(bl.rows());
            }
            SolvabilityVerdict v;
            try {
                v = solve_form(gram, b.target, nonzero);
            } catch (const InputError &) {
                continue;
            }
            if (v.status == Solvability::Unsolvable)
                out.emplace(v.reason_tag(), lats + ": " + equation_string(gram, b.target) + (nonzero ? ", nonzero" : "") +
                                                " -> " + v.reason_string());
        }
        return out;
    }

    void step(const DocLine &l, State &st, int depth);
    void enter_case(const DocLine &branch, const DocLine &c, State &st, int depth, std::vector<std::string> &seen);
};

void Checker::step(const DocLine &l, State &st, int depth) {
    const auto &t = l.tokens;
    const std::string &k = t[0];
    if (k == "import") {
        arity(l, 2);
        const TextDoc *doc = lib_.find(t[1]);
        if (!doc) reject(l, "no certificate named '" + t[1] + "'");
        CertificateResult sub = check_certificate(*doc, lib_, opt_);
        if (!sub.accepted) reject(l, "imported certificate rejected at line " + std::to_string(sub.rejected_line));
        if (sub.claim != "lemma" || !sub.concluded_element) reject(l, "imported certificate is not a lemma");
        if (&sub.group->lattice() != &L_) reject(l, "imported lemma lives on another lattice");
        for (const auto &g : sub.group->elements())
            if (!G_.contains(g)) reject(l, "lemma group is not a subgroup");
        auto &ps = profiles(st, *sub.concluded_element);
        std::vector<FixedSetProfile> kept;
        for (const auto &p : ps)
            if (std::find(sub.concluded_profiles.begin(), sub.concluded_profiles.end(), p) != sub.concluded_profiles.end())
                kept.push_back(p);
        ps = kept;
        note(depth, l, name_of(*sub.concluded_element) + " has profile in {" + profile_list(ps) + "}");
    } else if (k == "decompose") {
        if (t.size() < 2 || (t.size() > 2 && t[2] != "expect")) reject(l, "usage: decompose g [expect profiles..]");
        Isometry g = involution(l, t[1]);
        auto d = decompose_involution(g);
        auto b = defect_budget(L_, g);
        auto &ps = profiles(st, g);
        if (t.size() > 2) {
            std::vector<FixedSetProfile> want;
            for (size_t i = 3; i < t.size(); ++i) want.push_back(parse_profile(t[i]));
            bool same = want.size() == ps.size() &&
                        std::all_of(want.begin(), want.end(),
                                    [&](const auto &p) { return std::find(ps.begin(), ps.end(), p) != ps.end(); });
            if (!same) reject(l, "admissible profiles are " + profile_list(ps));
        }
        std::ostringstream os;
        os << "(t,c,r)=(" << d.t << "," << d.c << "," << d.r << "), budget " << b.budget << ", profiles " << profile_list(ps);
        note(depth, l, os.str());
    } else if (k == "isolated_point") {
        if (t.size() != 4 || t[2] != "of") reject(l, "usage: isolated_point p of g");
        Isometry g = involution(l, t[3]);
        fresh_name(st, l, t[1]);
        const auto &ps = profiles(st, g);
        if (ps.empty() || !std::all_of(ps.begin(), ps.end(), [](const auto &p) { return p.points() == 1; }))
            reject(l, t[3] + " does not have a unique isolated fixed point in every profile");
        st.points.emplace(t[1], PointRec{g, centralizer(G_, g), false, std::nullopt});
        note(depth, l, "stabilizer order " + std::to_string(st.points.at(t[1]).stabilizer.size()));
    } else if (k == "minus_identity_tangent") {
        arity(l, 3);
        auto it = st.points.find(t[1]);
        if (it == st.points.end()) reject(l, "unknown point '" + t[1] + "'");
        Isometry g = involution(l, t[2]);
        if (!(it->second.isolated_for == g)) reject(l, t[1] + " is not the isolated point of " + t[2]);
        if (it->second.minus_identity) reject(l, "tangent action at " + t[1] + " already assigned");
        it->second.minus_identity = true;
        note(depth, l, "d" + t[2] + " = -I on the tangent space");
    } else if (k == "local_model") {
        if (t.size() < 4 || t[2] != "using") reject(l, "usage: local_model p using h1 h2 ..");
        auto it = st.points.find(t[1]);
        if (it == st.points.end()) reject(l, "unknown point '" + t[1] + "'");
        PointRec &p = it->second;
        if (!p.minus_identity) reject(l, "minus_identity_tangent must precede local_model");
        std::vector<Isometry> gens;
        for (size_t i = 3; i < t.size(); ++i) {
            Isometry h = involution(l, t[i]);
            if (std::find(p.stabilizer.begin(), p.stabilizer.end(), h) == p.stabilizer.end())
                reject(l, t[i] + " does not fix " + t[1]);
            gens.push_back(h);
        }
        try {
            p.model.emplace(gens);
        } catch (const InputError &e) {
            reject(l, e.what());
        }
        if (p.model->index_of(p.isolated_for) < 0) reject(l, "model does not contain " + name_of(p.isolated_for));
        auto as = p.model->consistent(facts(st, p));
        std::string detail = std::to_string(as.size()) + " consistent representation(s)";
        for (const auto &a : as) detail += " " + p.model->describe(a);
        note(depth, l, detail);
    } else if (k == "on_surface") {
        arity(l, 4);
        auto it = st.points.find(t[1]);
        if (it == st.points.end() || !it->second.model) reject(l, "point '" + t[1] + "' has no local model");
        PointRec &p = it->second;
        Isometry g = involution(l, t[2]);
        int gx = p.model->index_of(g);
        if (gx < 0) reject(l, t[2] + " is not in the local model");
        auto as = p.model->consistent(facts(st, p));
        if (as.empty()) reject(l, "no consistent tangent representation; close the branch instead");
        for (const auto &a : as)
            if (LocalModel::minus_count(a, gx) != 2) reject(l, t[2] + " is not locally a surface at " + t[1]);
        fresh_name(st, l, t[3]);
        auto &ps = profiles(st, g);
        ps.erase(std::remove_if(ps.begin(), ps.end(), [](const auto &q) { return q.surfaces() == 0; }), ps.end());
        if (ps.empty()) reject(l, "no admissible profile of " + t[2] + " has a surface");
        if (!surfaces_of(st, g).empty()) reject(l, "surfaces of " + t[2] + " are already named");
        std::set<ComponentKind> kinds;
        for (const auto &q : ps)
            for (const auto &c : q.components)
                if (c.is_surface()) kinds.insert(c);
        std::optional<ComponentKind> kind;
        if (kinds.size() == 1) kind = *kinds.begin();
        st.surfaces.emplace(t[3], SurfaceRec{g, kind, eigenlattice(g, 1), false, t[1], {}, "", std::nullopt});
        note(depth, l, "[" + t[3] + "] in " + fmt(eigenlattice(g, 1)) + (kind ? ", " + kind->name() : ""));
    } else if (k == "other") {
        if (t.size() != 4 || t[2] != "of") reject(l, "usage: other F of g");
        Isometry g = involution(l, t[3]);
        fresh_name(st, l, t[1]);
        const auto &ps = profiles(st, g);
        if (ps.size() != 1) reject(l, "profile of " + t[3] + " is not determined");
        std::vector<ComponentKind> left;
        for (const auto &c : ps[0].components)
            if (c.is_surface()) left.push_back(c);
        for (const auto &n : surfaces_of(st, g)) {
            const auto &s = st.surfaces.at(n);
            if (!s.kind) reject(l, "kind of " + n + " is unknown");
            left.erase(std::find(left.begin(), left.end(), *s.kind));
        }
        if (left.size() != 1) reject(l, std::to_string(left.size()) + " unnamed surfaces remain");
        st.surfaces.emplace(t[1], SurfaceRec{g, left[0], eigenlattice(g, 1), false, "", {}, "", std::nullopt});
        note(depth, l, "[" + t[1] + "] in " + fmt(eigenlattice(g, 1)) + ", " + left[0].name());
    } else if (k == "commute_action") {
        arity(l, 4);
        Isometry h = involution(l, t[1]);
        SurfaceRec &s = surface(st, l, t[2]);
        if (t[3] != "+" && t[3] != "-") reject(l, "sign must be + or -");
        if (!h.commutes_with(s.owner)) reject(l, t[1] + " does not commute with " + name_of(s.owner));
        if (s.point.empty()) reject(l, t[2] + " carries no point; use branch");
        PointRec &p = st.points.at(s.point);
        int hx = p.model ? p.model->index_of(h) : -1;
        int gx = p.model ? p.model->index_of(s.owner) : -1;
        if (hx < 0 || gx < 0) reject(l, "local model at " + s.point + " does not contain " + t[1]);
        auto as = p.model->consistent(facts(st, p));
        std::set<int> signs;
        for (const auto &a : as) signs.insert(LocalModel::plane_sign(a, gx, hx));
        if (signs.size() != 1 || *signs.begin() == 0) reject(l, "sign of " + t[1] + " on " + t[2] + " is not determined");
        int sign = *signs.begin();
        if ((sign > 0) != (t[3] == "+")) reject(l, "computed sign is " + std::string(sign > 0 ? "+" : "-"));
        s.membership = intersect_sublattices(s.membership, eigenlattice(h, sign));
        s.preserved_by.push_back(h);
        note(depth, l, "[" + t[2] + "] in " + fmt(s.membership));
    } else if (k == "budget" || k == "split_budget") {
        std::optional<Isometry> owner;
        std::vector<std::string> names;
        if (k == "budget") {
            arity(l, 2);
            owner = involution(l, t[1]);
            names = surfaces_of(st, *owner);
        } else {
            if (t.size() < 2) reject(l, "usage: split_budget F1 F2 ..");
            for (size_t i = 1; i < t.size(); ++i) {
                const SurfaceRec &s = surface(st, l, t[i]);
                if (owner && !(s.owner == *owner)) reject(l, "surfaces belong to different involutions");
                owner = s.owner;
                names.push_back(t[i]);
            }
            auto all = surfaces_of(st, *owner);
            std::sort(names.begin(), names.end());
            if (names != all) reject(l, "split_budget must list every named surface of " + name_of(*owner));
        }
        const auto &ps = profiles(st, *owner);
        if (ps.size() != 1) reject(l, "profile of " + name_of(*owner) + " is not determined");
        if (!ps[0].all_orientable()) reject(l, "budget applies to orientable fixed sets");
        if (static_cast<int>(names.size()) != ps[0].surfaces()) reject(l, "not every surface is named");
        Integer target(defect_budget(L_, *owner).budget);
        st.budgets.push_back(BudgetRec{*owner, names, target});
        std::string lhs;
        for (const auto &n : names) lhs += (lhs.empty() ? "" : " + ") + std::string("[") + n + "]^2";
        std::ostringstream os;
        os << lhs << " = " << target;
        note(depth, l, os.str());
    } else if (k == "nonzero") {
        arity(l, 2);
        SurfaceRec &s = surface(st, l, t[1]);
        if (!s.kind || s.kind->type != ComponentType::Orientable) reject(l, t[1] + " is not known to be orientable");
        const auto &ps = profiles(st, s.owner);
        for (const auto &p : ps) {
            int idx = static_cast<int>(std::find(p.components.begin(), p.components.end(), *s.kind) - p.components.begin());
            if (idx >= p.size() || nonzero_class_rule(p, idx) != NonzeroObligation::Obligatory)
                reject(l, "profile " + p.name() + " does not force a nonzero class");
        }
        s.nonzero = true;
        note(depth, l, "");
    } else if (k == "intersect") {
        if (t.size() != 4 || t[2] != "=") reject(l, "usage: intersect F = Z{..}");
        const SurfaceRec &s = surface(st, l, t[1]);
        Sublattice want = [&] {
            try {
                return parse_span(L_, t[3]);
            } catch (const InputError &e) {
                reject(l, e.what());
            }
        }();
        if (!(want == s.membership)) reject(l, "[" + t[1] + "] lies in " + fmt(s.membership));
        note(depth, l, "");
    } else {
        reject(l, "unknown step '" + k + "'");
    }
}

void Checker::enter_case(const DocLine &branch, const DocLine &c, State &st, int depth, std::vector<std::string> &seen) {
    const auto &t = c.tokens;
    if (branch.tokens[0] == "split_profile") {
        Isometry g = involution(branch, branch.tokens[1]);
        if (t.size() < 2) reject(c, "usage: case profile [as names..]");
        FixedSetProfile p;
        try {
            p = parse_profile(t[1]);
        } catch (const InputError &e) {
            reject(c, e.what());
        }
        auto &ps = profiles(st, g);
        if (std::find(ps.begin(), ps.end(), p) == ps.end()) reject(c, p.name() + " is not admissible");
        seen.push_back(p.name());
        ps = {p};
        std::vector<std::string> names;
        if (t.size() > 2) {
            if (t[2] != "as") reject(c, "expected 'as'");
            names.assign(t.begin() + 3, t.end());
        }
        if (static_cast<int>(names.size()) != (t.size() > 2 ? p.surfaces() : 0) || (t.size() > 2 && names.empty()))
            reject(c, "name every surface of " + p.name());
        int i = 0;
        for (const auto &comp : p.components) {
            if (!comp.is_surface() || names.empty()) continue;
            fresh_name(st, c, names[i]);
            st.surfaces.emplace(names[i++], SurfaceRec{g, comp, eigenlattice(g, 1), false, "", {}, "", std::nullopt});
        }
        note(depth, c, "");
        return;
    }
    // branch h on F
    Isometry h = involution(branch, branch.tokens[1]);
    SurfaceRec &s = surface(st, branch, branch.tokens[3]);
    if (t.size() == 2 && (t[1] == "keep+" || t[1] == "keep-")) {
        int sign = t[1] == "keep+" ? 1 : -1;
        s.membership = intersect_sublattices(s.membership, eigenlattice(h, sign));
        s.preserved_by.push_back(h);
        seen.push_back(t[1]);
        note(depth, c, "[" + branch.tokens[3] + "] in " + fmt(s.membership));
        return;
    }
    if (t.size() == 3 && t[1] == "swap") {
        const std::string &x = t[2];
        if (st.surfaces.count(x)) {
            SurfaceRec &o = st.surfaces.at(x);
            if (!(o.owner == s.owner) || o.kind != s.kind || x == branch.tokens[3]) reject(c, x + " cannot be the image");
            if (!o.image_of.empty()) reject(c, x + " already has an image relation");
        } else {
            fresh_name(st, c, x);
            st.surfaces.emplace(x, SurfaceRec{s.owner, s.kind, eigenlattice(s.owner, 1), s.nonzero, "", {}, "", std::nullopt});
        }
        SurfaceRec &o = st.surfaces.at(x);
        o.image_of = branch.tokens[3];
        o.image_by = h;
        seen.push_back("swap");
        note(depth, c, "[" + x + "] = +-" + branch.tokens[1] + "[" + branch.tokens[3] + "]");
        return;
    }
    reject(c, "case must be keep+, keep- or swap F");
}

void Checker::run(const std::vector<Step> &steps, State st, int depth) {
    for (size_t i = 0; i < steps.size(); ++i) {
        const DocLine &l = *steps[i].line;
        const auto &t = l.tokens;
        current_line = l.number;
        ++res_.steps;
        if (t[0] == "close") {
            arity(l, 2);
            if (i + 1 != steps.size()) reject(*steps[i + 1].line, "steps after close");
            auto found = closures(st);
            auto it = found.find(t[1]);
            if (it == found.end()) {
                std::string have;
                for (const auto &[tag, why] : found) have += " " + tag;
                reject(l, "branch does not close by " + t[1] + (have.empty() ? "" : "; closes by" + have));
            }
            note(depth, l, it->second);
            ++res_.closed_leaves;
            return;
        }
        if (t[0] == "conclude") {
            if (t.size() != 4 || t[1] != "profile") reject(l, "usage: conclude profile g P");
            if (i + 1 != steps.size()) reject(*steps[i + 1].line, "steps after conclude");
            Isometry g = involution(l, t[2]);
            FixedSetProfile p = parse_profile(t[3]);
            const auto &ps = profiles(st, g);
            if (ps.size() != 1 || !(ps[0] == p)) reject(l, "profile of " + t[2] + " is " + profile_list(ps));
            if (res_.concluded_element && !(*res_.concluded_element == g)) reject(l, "lemma concludes about two elements");
            res_.concluded_element = g;
            if (std::find(res_.concluded_profiles.begin(), res_.concluded_profiles.end(), p) == res_.concluded_profiles.end())
                res_.concluded_profiles.push_back(p);
            note(depth, l, "");
            ++res_.concluded_leaves;
            return;
        }
        if (steps[i].cases.empty()) {
            step(l, st, depth);
            continue;
        }
        std::vector<std::string> required;
        if (t[0] == "split_profile") {
            arity(l, 2);
            Isometry g = involution(l, t[1]);
            if (!surfaces_of(st, g).empty()) reject(l, "surfaces of " + t[1] + " are already named");
            for (const auto &p : profiles(st, g)) required.push_back(p.name());
            note(depth, l, "profiles " + profile_list(profiles(st, g)));
        } else {
            if (t.size() != 4 || t[2] != "on") reject(l, "usage: branch h on F");
            Isometry h = involution(l, t[1]);
            SurfaceRec &s = surface(st, l, t[3]);
            if (!h.commutes_with(s.owner)) reject(l, t[1] + " does not commute with " + name_of(s.owner));
            const auto &ps = profiles(st, s.owner);
            std::string why;
            if (!s.point.empty() && std::find(st.points.at(s.point).stabilizer.begin(), st.points.at(s.point).stabilizer.end(),
                                              h) != st.points.at(s.point).stabilizer.end())
                why = t[1] + " fixes " + s.point + " on " + t[3];
            else if (s.kind && std::all_of(ps.begin(), ps.end(), [&](const auto &p) {
                         return std::count(p.components.begin(), p.components.end(), *s.kind) == 1;
                     }))
                why = t[3] + " is the only " + s.kind->name();
            else if (ps.size() == 1) {
                auto named = surfaces_of(st, s.owner);
                bool rest = static_cast<int>(named.size()) == ps[0].surfaces();
                for (const auto &n : named) {
                    if (n == t[3]) continue;
                    const auto &pb = st.surfaces.at(n).preserved_by;
                    rest = rest && std::find(pb.begin(), pb.end(), h) != pb.end();
                }
                if (rest) why = "every other surface is preserved";
            }
            required = {"keep+", "keep-"};
            if (why.empty()) {
                if (ps.size() != 1 || !s.kind ||
                    std::count(ps[0].components.begin(), ps[0].components.end(), *s.kind) != 2)
                    reject(l, "preservation of " + t[3] + " is unknown and the swap target is not unique");
                required.push_back("swap");
            }
            note(depth, l, why.empty() ? "preservation unknown" : why);
        }
        std::vector<std::string> seen;
        for (const auto &[cl, body] : steps[i].cases) {
            State sub = st;
            current_line = cl->number;
            enter_case(l, *cl, sub, depth + 1, seen);
            run(body, std::move(sub), depth + 2);
        }
        auto a = required, b = seen;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) {
            std::string want;
            for (const auto &r : required) want += " " + r;
            reject(l, "cases do not cover exactly:" + want);
        }
        return;
    }
    ++res_.open_leaves;
    if (!steps.empty()) res_.trace.push_back(std::string(2 * depth, ' ') + "(open leaf)");
}

} // namespace

CertificateResult check_certificate(const TextDoc &doc, const CertificateLibrary &library, const SearchOptions &opt) {
    CertificateResult res;
    size_t i = 0;
    try {
        if (doc.value("schema") != "1") throw DocError(doc.source, doc.find("schema")->number, "unsupported schema");
        if (doc.value("kind") != "certificate") throw DocError(doc.source, doc.find("kind")->number, "not a certificate");
        res.name = doc.value("name");
        res.claim = doc.value("claim");
        res.lattice = doc.value("lattice");
        if (res.claim != "obstructed" && res.claim != "lemma")
            throw DocError(doc.source, doc.find("claim")->number, "claim must be obstructed or lemma");
        const LorentzianLattice &L = lattice_by_name(res.lattice);
        std::map<std::string, Isometry> env;
        std::optional<MatrixGroup> G;
        for (; i < doc.lines.size(); ++i) {
            const DocLine &l = doc.lines[i];
            const auto &t = l.tokens;
            if (!HEADER_KEYS.count(t[0])) break;
            try {
                if (t[0] == "element") {
                    if (t.size() != 4 || t[2] != "=") throw InputError("usage: element name = expr");
                    if (env.count(t[1])) throw InputError("element '" + t[1] + "' defined twice");
                    env.emplace(t[1], parse_isometry_expr(L, t[3], env));
                } else if (t[0] == "group") {
                    std::vector<Isometry> gens;
                    for (size_t j = 1; j < t.size(); ++j) gens.push_back(parse_isometry_expr(L, t[j], env));
                    G = closed(L, gens);
                }
            } catch (const DocError &) {
                throw;
            } catch (const InputError &e) {
                throw DocError(doc.source, l.number, e.what());
            }
        }
        if (!G) throw DocError(doc.source, 0, "missing 'group'");
        res.group = G;
        auto steps = parse_block(doc.lines, i, false, doc.source);
        res.trace.push_back("certificate " + res.name + " on " + L.name() + ", |G| = " + std::to_string(G->order()) +
                            ", claim " + res.claim);
        Checker ck(L, *G, env, library, opt, res);
        try {
            ck.run(steps, State{}, 1);
        } catch (const InputError &e) {
            // lattice-level errors inside a step surface as rejections
            throw Reject{ck.current_line, e.what()};
        }
        int last = doc.lines.empty() ? 0 : doc.lines.back().number;
        if (res.claim == "obstructed" && (res.open_leaves || res.concluded_leaves))
            throw Reject{last, "claim obstructed but " + std::to_string(res.open_leaves + res.concluded_leaves) +
                                   " leaf/leaves do not close"};
        if (res.claim == "lemma" && (res.open_leaves || !res.concluded_element))
            throw Reject{last, "lemma has open leaves"};
        res.accepted = true;
        res.status = res.claim == "obstructed" ? VerdictStatus::Obstructed : VerdictStatus::ConsistentConstraints;
        std::ostringstream os;
        os << "accepted: " << res.steps << " steps, " << res.closed_leaves << " closed, " << res.concluded_leaves
           << " concluded, 0 rejected";
        res.trace.push_back(os.str());
    } catch (const Reject &r) {
        res.accepted = false;
        res.rejected_line = r.line;
        res.rejection = r.msg;
        res.status = VerdictStatus::Undetermined;
        res.trace.push_back("rejected at line " + std::to_string(r.line) + ": " + r.msg);
    } catch (const DocError &e) {
        res.accepted = false;
        res.rejected_line = e.line;
        res.rejection = e.what();
        res.status = VerdictStatus::Undetermined;
        res.trace.push_back(std::string("rejected: ") + e.what());
    }
    return res;
}

} // namespace dp
