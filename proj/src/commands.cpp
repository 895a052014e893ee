#include "delpezzo/commands.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "delpezzo/coxeter.hpp"

#ifndef DP_DATA_DIR
#define DP_DATA_DIR "data"
#endif

namespace dp {

using ojson = nlohmann::ordered_json;

EngineConfig EngineConfig::defaults() {
    EngineConfig c;
    c.catalog_dir = std::filesystem::path(DP_DATA_DIR) / "catalog";
    c.certificate_dir = std::filesystem::path(DP_DATA_DIR) / "certificates";
    return c;
}

namespace {

class Table {
public:
    explicit Table(std::vector<std::string> head) : head_(std::move(head)) {}
    void row(std::vector<std::string> r) {
        r.resize(head_.size());
        rows_.push_back(std::move(r));
    }
    std::string render() const {
        std::vector<size_t> w(head_.size());
        for (size_t j = 0; j < head_.size(); ++j) {
            w[j] = head_[j].size();
            for (const auto &r : rows_) w[j] = std::max(w[j], r[j].size());
        }
        std::ostringstream os;
        auto line = [&](const std::vector<std::string> &r) {
            std::string s;
            for (size_t j = 0; j < r.size(); ++j) {
                s += r[j];
                if (j + 1 < r.size()) s += std::string(w[j] - r[j].size() + 2, ' ');
            }
            while (!s.empty() && s.back() == ' ') s.pop_back();
            os << s << "\n";
        };
        line(head_);
        std::vector<std::string> rule;
        for (size_t j = 0; j < head_.size(); ++j) rule.push_back(std::string(w[j], '-'));
        line(rule);
        for (const auto &r : rows_) line(r);
        return os.str();
    }

private:
    std::vector<std::string> head_;
    std::vector<std::vector<std::string>> rows_;
};

std::string read_file(const std::filesystem::path &p) {
    std::ifstream in(p);
    if (!in) throw InputError("cannot read " + p.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ojson header(const std::string &command, const std::vector<const LorentzianLattice *> &lattices, const EngineConfig &cfg) {
    ojson j;
    j["command"] = command;
    j["engine_version"] = ENGINE_VERSION;
    ojson notes = ojson::array();
    for (const auto *L : lattices)
        for (const auto &n : L->convention_notes()) notes.push_back(n);
    notes.push_back("matrices act on column vectors in canonical coordinates; products compose right to left");
    notes.push_back("Ref(v)(x) = x - 2 Q(x,v)/Q(v,v) v");
    j["conventions"] = notes;
    // thread count is omitted: reports do not depend on it
    j["options"] = {{"max_components", cfg.search.max_components},
                    {"max_complexity", cfg.search.max_complexity},
                    {"split_cap", cfg.search.split_cap}};
    return j;
}

ojson verdict_json(const Verdict &v, const LorentzianLattice &L) {
    ojson j;
    j["status"] = status_name(v.status);
    if (!v.catalog_entry.empty()) j["catalog_entry"] = v.catalog_entry;
    if (v.witness) j["witness"] = L.format(L.to_canonical(*v.witness));
    if (!v.note.empty()) j["note"] = v.note;
    j["trace"] = v.trace;
    return j;
}

ojson matrix_json(const IMat &m) {
    ojson rows = ojson::array();
    for (int i = 0; i < m.rows(); ++i) {
        ojson r = ojson::array();
        for (int k = 0; k < m.cols(); ++k) r.push_back(nlohmann::ordered_json::parse(m(i, k).str()));
        rows.push_back(r);
    }
    return rows;
}

void append_trace(std::ostringstream &os, const std::vector<std::string> &trace, const std::string &indent) {
    for (const auto &line : trace) os << indent << line << "\n";
}

// strips comments and blank lines, keeping 1-based line numbers
std::vector<std::pair<int, std::string>> content_lines(const std::string &text) {
    std::vector<std::pair<int, std::string>> out;
    std::stringstream ss(text);
    std::string line;
    int no = 0;
    while (std::getline(ss, line)) {
        ++no;
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos || line[a] == '#') continue;
        size_t b = line.find_last_not_of(" \t\r");
        out.push_back({no, line.substr(a, b - a + 1)});
    }
    return out;
}

std::vector<std::string> words(const std::string &s) {
    std::stringstream ss(s);
    std::vector<std::string> w;
    std::string t;
    while (ss >> t) w.push_back(t);
    return w;
}

bool is_integer_row(const std::string &s) {
    for (const auto &w : words(s)) {
        size_t i = (w[0] == '-' || w[0] == '+') ? 1 : 0;
        if (i == w.size()) return false;
        for (; i < w.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(w[i]))) return false;
    }
    return true;
}

IMat read_rows(const std::vector<std::pair<int, std::string>> &lines, size_t &pos, int rank, const std::string &source) {
    IMat m(rank, rank);
    for (int i = 0; i < rank; ++i, ++pos) {
        if (pos >= lines.size() || !is_integer_row(lines[pos].second)) {
            int at = pos < lines.size() ? lines[pos].first : (lines.empty() ? 0 : lines.back().first);
            throw InputError(source + ":" + std::to_string(at) + ": expected matrix row " + std::to_string(i + 1) +
                             " of " + std::to_string(rank));
        }
        auto w = words(lines[pos].second);
        if (static_cast<int>(w.size()) != rank)
            throw InputError(source + ":" + std::to_string(lines[pos].first) + ": row " + std::to_string(i + 1) +
                             " has " + std::to_string(w.size()) + " entries, expected " + std::to_string(rank));
        for (int k = 0; k < rank; ++k) m(i, k) = Integer(w[k]);
    }
    return m;
}

const LorentzianLattice &lattice_arg(const std::string &name, const std::string &source, int line) {
    try {
        return lattice_by_name(name);
    } catch (const InputError &e) {
        throw InputError(source + ":" + std::to_string(line) + ": " + e.what());
    }
}

void check_basis(const LorentzianLattice &L, const std::string &basis, const std::string &source, int line) {
    if (basis != "std" && !L.has_basis(basis))
        throw InputError(source + ":" + std::to_string(line) + ": lattice " + L.name() + " has no basis '" + basis + "'");
}

std::string basis_word(const std::string &w) { return w == "canonical" ? "std" : w; }

Isometry checked_isometry(const LorentzianLattice &L, const IMat &m, const std::string &basis, const std::string &what) {
    IMat canon = L.matrix_from_basis(m, basis);
    if (auto err = isometry_violation(L, canon)) throw InputError(what + ": " + *err);
    return Isometry(L, canon);
}

int exit_for(VerdictStatus s) { return s == VerdictStatus::Undetermined ? EXIT_UNDETERMINED : EXIT_COMPLETED; }

std::string reference_of(const Verdict &v) {
    if (!v.catalog_entry.empty()) return v.catalog_entry;
    return v.note;
}

} // namespace

MatrixInput parse_matrix_input(const std::string &text, const std::string &source) {
    auto lines = content_lines(text);
    if (lines.empty()) throw InputError(source + ": empty matrix input");
    auto head = words(lines[0].second);
    if (head.size() < 2 || head.size() > 3 || head[0] != "basis")
        throw InputError(source + ":" + std::to_string(lines[0].first) +
                         ": expected header 'basis <lattice> [canonical|S]'");
    MatrixInput in;
    in.lattice = &lattice_arg(head[1], source, lines[0].first);
    if (head.size() == 3) in.basis = basis_word(head[2]);
    check_basis(*in.lattice, in.basis, source, lines[0].first);
    size_t pos = 1;
    in.matrix = read_rows(lines, pos, in.lattice->rank(), source);
    if (pos != lines.size())
        throw InputError(source + ":" + std::to_string(lines[pos].first) + ": unexpected content after the matrix");
    return in;
}

GroupSpec parse_group_spec(const std::string &text, const std::string &source) {
    auto lines = content_lines(text);
    GroupSpec g;
    std::set<std::string> names;
    for (size_t pos = 0; pos < lines.size();) {
        auto w = words(lines[pos].second);
        const int no = lines[pos].first;
        auto where = [&] { return source + ":" + std::to_string(no) + ": "; };
        if (w[0] == "lattice" && w.size() == 2) {
            g.lattice = &lattice_arg(w[1], source, no);
            ++pos;
        } else if (w[0] == "basis" && w.size() == 2) {
            g.basis = basis_word(w[1]);
            ++pos;
        } else if (w[0] == "focus" && w.size() == 2) {
            g.focus = w[1];
            ++pos;
        } else if (w[0] == "witness" && w.size() >= 2) {
            g.witnesses.insert(g.witnesses.end(), w.begin() + 1, w.end());
            ++pos;
        } else if (w[0] == "generator" && w.size() == 2) {
            if (!g.lattice) throw InputError(where() + "generator before the lattice line");
            check_basis(*g.lattice, g.basis, source, no);
            if (!names.insert(w[1]).second) throw InputError(where() + "duplicate generator " + w[1]);
            ++pos;
            IMat m = read_rows(lines, pos, g.lattice->rank(), source);
            IMat canon = g.lattice->matrix_from_basis(m, g.basis);
            if (auto err = isometry_violation(*g.lattice, canon))
                throw InputError(where() + "generator " + w[1] + " is not an isometry: " + *err);
            g.generators.push_back({w[1], Isometry(*g.lattice, canon)});
        } else {
            throw InputError(where() + "unrecognized line '" + lines[pos].second + "'");
        }
    }
    if (!g.lattice) throw InputError(source + ": missing lattice line");
    if (g.generators.empty()) throw InputError(source + ": no generators");
    return g;
}

CommandResult cmd_classify(int n, const EngineConfig &cfg) {
    if (n != 2 && n != 3) throw InputError("classify takes n = 2 or 3");
    Catalog catalog = Catalog::load(cfg.catalog_dir);
    CertificateLibrary lib;
    lib.load_directory(cfg.certificate_dir);
    ClassifyContext ctx{catalog, lib, cfg.search};
    Classification c = classify_all(n, ctx);
    const auto &L = LorentzianLattice::M(n);

    CommandResult res;
    res.report = header("classify " + std::to_string(n), {&L}, cfg);
    res.report["inputs"] = {{"n", n}};
    if (n == 2) {
        res.report["groups"] = {{"G1", "<A,B,-I>, A = Ref(E1-E2), B = Ref(H-E1-E2)"},
                                {"G2", "<Phi,Psi,-I>, Phi = Ref(E2)Ref(E1-E2), Psi = Ref(E1)"}};
    } else {
        res.report["groups"] = {{"psi", "Ref(H-E1-E2-E3)"}, {"s12", "Ref(E1-E2)"}, {"s23", "Ref(E2-E3)"}, {"R3", "Ref(E3)"}};
        ojson certs = ojson::array();
        for (const auto &name : lib.names()) {
            CertificateResult r = check_certificate(*lib.find(name), lib, cfg.search);
            ojson cj{{"name", r.name}, {"claim", r.claim}, {"accepted", r.accepted}, {"status", status_name(r.status)},
                     {"steps", r.steps}, {"closed_leaves", r.closed_leaves}, {"concluded_leaves", r.concluded_leaves},
                     {"rejected_steps", r.accepted ? 0 : 1}};
            if (!r.accepted) cj["rejection"] = "line " + std::to_string(r.rejected_line) + ": " + r.rejection;
            certs.push_back(cj);
        }
        res.report["certificates"] = certs;
    }
    ojson rows = ojson::array();
    Table t({"ambient", "group", "order", "fingerprint", "verdict", "reference"});
    std::map<std::string, int> counts;
    VerdictStatus worst = VerdictStatus::Obstructed;
    for (const auto &r : c.rows) {
        ojson j{{"ambient", r.ambient}, {"group", r.label}, {"order", r.order}, {"fingerprint", r.fingerprint}};
        if (!r.elements.empty()) j["elements"] = r.elements;
        j["verdict"] = verdict_json(r.verdict, L);
        rows.push_back(j);
        t.row({r.ambient, r.label, std::to_string(r.order), r.fingerprint, status_name(r.verdict.status),
               reference_of(r.verdict)});
        counts[r.ambient + " order " + std::to_string(r.order) + " " + status_name(r.verdict.status)]++;
        if (r.verdict.status == VerdictStatus::Undetermined) worst = VerdictStatus::Undetermined;
    }
    res.report["rows"] = rows;
    ojson summary = ojson::object();
    for (const auto &[k, v] : counts) summary[k] = v;
    res.report["summary"] = summary;
    res.table = t.render();
    res.exit_code = exit_for(worst);
    return res;
}

CommandResult cmd_obstruct(const std::filesystem::path &spec_path, const std::string &focus_arg,
                           const std::vector<std::string> &witness_args, const EngineConfig &cfg) {
    GroupSpec spec = parse_group_spec(read_file(spec_path), spec_path.filename().string());
    const auto &L = *spec.lattice;
    std::vector<Isometry> gens;
    for (const auto &[name, g] : spec.generators) gens.push_back(g);
    Closure cl = close_group(MatrixGroup(L, gens));
    if (!cl.finite) throw InputError("generated group is infinite or exceeds the closure cap");
    const MatrixGroup &G = *cl.group;
    ElementNamer namer(G, spec.generators);
    auto lookup = [&](const std::string &name) -> Isometry {
        for (const auto &[n, g] : spec.generators)
            if (n == name) return g;
        throw InputError("unknown generator name '" + name + "'");
    };
    std::string focus = focus_arg.empty() ? spec.focus : focus_arg;
    std::vector<std::string> witnesses = witness_args.empty() ? spec.witnesses : witness_args;

    CommandResult res;
    res.report = header("obstruct " + spec_path.filename().string(), {&L}, cfg);
    ojson gj = ojson::array();
    for (const auto &[n, g] : spec.generators) gj.push_back({{"name", n}, {"matrix", matrix_json(g.matrix())}});
    res.report["inputs"] = {{"spec", spec_path.filename().string()}, {"lattice", L.name()}, {"generators", gj}};
    res.report["group"] = {{"order", G.order()}, {"fingerprint", isomorphism_fingerprint(G).label}};

    Verdict v;
    std::ostringstream os;
    os << "group of order " << G.order() << " (" << isomorphism_fingerprint(G).label << ") on " << L.name() << "\n";
    if (focus.empty()) {
        res.report["mode"] = "every involution as focus";
        v = search_all_foci(G, &namer, cfg.search);
    } else {
        Isometry f = lookup(focus);
        if (f.is_identity() || !(f * f).is_identity())
            throw InputError("focus " + focus + " is not an involution: " + matrix_string(f.matrix()));
        LiftHypothesis h = witnesses.empty() ? make_hypothesis(G, f) : LiftHypothesis{G, f, {}, focus, {}};
        h.focus_name = focus;
        if (witnesses.empty()) {
            for (const auto &w : h.commuting_witnesses) h.witness_names.push_back(namer.name(w));
        } else {
            for (const auto &w : witnesses) {
                h.commuting_witnesses.push_back(lookup(w));
                h.witness_names.push_back(w);
            }
        }
        validate_hypothesis(h);
        res.report["mode"] = "single focus";
        res.report["focus"] = focus;
        res.report["witnesses"] = h.witness_names;
        v = branch_search(h, cfg.search);
    }
    res.report["verdict"] = verdict_json(v, L);
    os << "verdict: " << status_name(v.status) << "\n";
    append_trace(os, v.trace, "  ");
    res.table = os.str();
    res.exit_code = exit_for(v.status);
    return res;
}

Isometry designated_class(const std::string &which) {
    if (which == "star" || which == "*") return Isometry::minus_identity(LorentzianLattice::Mstar());
    int n;
    try {
        size_t used = 0;
        n = std::stoi(which, &used);
        if (used != which.size()) throw InputError("");
    } catch (...) {
        throw InputError("complex-flags takes 0..8 or star, got '" + which + "'");
    }
    if (n < 0 || n > 8) throw InputError("complex-flags takes 0..8 or star, got '" + which + "'");
    const auto &L = LorentzianLattice::M(n);
    if (n == 0) return Isometry::minus_identity(L);
    if (n == 2) return Isometry::reflection(L, "E1") * Isometry::reflection(L, "E2");
    // Ref_H Ref_E1 ... Ref_E(n-1)
    Isometry c = Isometry::reflection(L, "H");
    for (int k = 1; k < n; ++k) c = c * Isometry::reflection(L, "E" + std::to_string(k));
    return c;
}

CommandResult cmd_complex_flags(const std::string &which, const EngineConfig &cfg) {
    Isometry c = designated_class(which);
    const auto &L = c.lattice();
    Order2Report rep = order2_profile_report(L, c, cfg.search);
    Catalog catalog = Catalog::load(cfg.catalog_dir);
    const RealizationEntry *entry = catalog.realizing_entry(closed(L, {c}));

    CommandResult res;
    res.report = header("complex-flags " + which, {&L}, cfg);
    res.report["inputs"] = {{"manifold", L.name()}, {"class", matrix_json(c.matrix())}};
    const auto &d = rep.decomposition;
    res.report["decomposition"] = {{"t", d.t}, {"c", d.c}, {"r", d.r}};
    res.report["budget"] = {{"sigma_M", rep.budget.sigma_M},
                            {"sigma_quotient", rep.budget.sigma_quotient},
                            {"budget", rep.budget.budget}};
    res.report["fixed_lattice"] = rep.fixed_lattice;
    ojson profiles = ojson::array();
    for (const auto &p : rep.profiles) {
        ojson pj{{"profile", p.profile.name()}, {"pruned", p.pruned}, {"closed", p.closed}, {"unknown", p.unknown}};
        if (p.equation) pj["equation"] = p.equation->text();
        if (!p.note.empty()) pj["note"] = p.note;
        profiles.push_back(pj);
    }
    res.report["profiles"] = profiles;
    if (rep.truncated) res.report["truncated"] = true;

    bool bihol_infeasible = !rep.biholomorphic_feasible;
    std::string bihol_source = "lattice analysis: " + rep.biholomorphic_reason;
    const bool flagged = entry && entry->has_flag("bihol_infeasible");
    if (!bihol_infeasible && flagged) {
        bihol_infeasible = true;
        bihol_source = "catalog flag bihol_infeasible (complex-geometric argument, recorded, not mechanized)";
    }
    ojson bj{{"infeasible", bihol_infeasible}, {"lattice_feasible", rep.biholomorphic_feasible}, {"source", bihol_source}};
    ojson aj{{"infeasible", !rep.anti_biholomorphic_feasible}};
    if (!rep.anti_biholomorphic_reason.empty()) aj["reason"] = rep.anti_biholomorphic_reason;
    res.report["biholomorphic"] = bj;
    res.report["anti_biholomorphic"] = aj;
    res.report["closing_equations"] = rep.closing_equations;
    if (rep.orientable_variant) res.report["orientable_variant"] = rep.orientable_variant->text();
    ojson cj;
    if (entry) {
        cj["entry"] = entry->name;
        if (entry->has_flag("not_designated")) cj["flag"] = "not_designated";
    } else {
        cj = nullptr;
    }
    res.report["catalog"] = cj;

    std::ostringstream os;
    os << L.name() << " class " << matrix_string(c.matrix()) << "\n";
    os << "(t,c,r) = (" << d.t << "," << d.c << "," << d.r << "), budget " << rep.budget.budget << " = 2*"
       << rep.budget.sigma_quotient << " - (" << rep.budget.sigma_M << ")\n";
    Table t({"profile", "status", "equation"});
    for (const auto &p : rep.profiles) {
        std::string status = p.pruned ? "pruned" : p.closed ? "closed" : p.unknown ? "unknown" : "open";
        t.row({p.profile.name(), status, p.equation ? p.equation->text() : p.note});
    }
    os << t.render();
    os << "biholomorphic involution: " << (bihol_infeasible ? "infeasible" : "not excluded") << " (" << bihol_source
       << ")\n";
    os << "anti-biholomorphic involution: " << (rep.anti_biholomorphic_feasible ? "not excluded" : "infeasible");
    if (!rep.anti_biholomorphic_reason.empty()) os << " (" << rep.anti_biholomorphic_reason << ")";
    os << "\n";
    for (const auto &e : rep.closing_equations) os << "closing: " << e << "\n";
    if (rep.orientable_variant) os << "orientable branch: " << rep.orientable_variant->text() << "\n";
    os << "catalog: " << (entry ? entry->name : std::string("none")) << "\n";
    res.table = os.str();
    return res;
}

CommandResult cmd_coxeter(int n, const EngineConfig &cfg) {
    CoxeterSystem cs = coxeter_system(n);
    const auto &L = cs.lattice();
    CommandResult res;
    res.report = header("coxeter " + std::to_string(n), {&L}, cfg);
    res.report["inputs"] = {{"n", n}};
    res.report["simple_roots"] = cs.root_names;
    ojson table = ojson::array();
    std::ostringstream os;
    Table pt([&] {
        std::vector<std::string> h{""};
        for (const auto &r : cs.root_names) h.push_back(r);
        return h;
    }());
    for (size_t i = 0; i < cs.root_names.size(); ++i) {
        ojson r = ojson::array();
        std::vector<std::string> row{cs.root_names[i]};
        for (size_t k = 0; k < cs.root_names.size(); ++k) {
            r.push_back(label_string(cs.labels[i][k]));
            row.push_back(i == k ? "-" : label_string(cs.labels[i][k]));
        }
        table.push_back(r);
        pt.row(row);
    }
    res.report["pair_orders"] = table;
    os << "pair orders of simple reflections\n" << pt.render();

    GramCheck g = gram_consistency_check(cs);
    res.report["gram_consistency"] = {{"pass", g.pass}, {"lines", g.lines}};
    os << "\ngram consistency: " << (g.pass ? "pass" : "FAIL") << "\n";
    append_trace(os, g.lines, "  ");

    ojson par = ojson::array();
    Table ptab({"omit", "finite", "order", "fingerprint", "infinite witness"});
    for (size_t i = 0; i < cs.root_names.size(); ++i) {
        Parabolic p = parabolic_subgroup(cs, static_cast<int>(i));
        ojson j{{"omit", p.omitted_name}, {"finite", p.finite}};
        if (p.finite) {
            std::string fp = isomorphism_fingerprint(p.group).label;
            j["order"] = p.group.order();
            j["fingerprint"] = fp;
            ptab.row({p.omitted_name, "yes", std::to_string(p.group.order()), fp, ""});
        } else {
            j["witness_word"] = p.witness_word;
            j["witness_certificate"] = p.witness_certificate;
            ptab.row({p.omitted_name, "no", "inf", "", p.witness_word + ": " + p.witness_certificate});
        }
        par.push_back(j);
    }
    res.report["parabolics"] = par;
    os << "\nparabolic subgroups G_v\n" << ptab.render();

    ojson cands = ojson::object();
    for (bool mI : {false, true}) {
        ojson arr = ojson::array();
        Table ct({"omit", "order", "fingerprint"});
        for (const auto &c : maximal_finite_candidates(cs, mI)) {
            std::string fp = isomorphism_fingerprint(c.group).label;
            arr.push_back({{"omit", c.omitted_name}, {"order", c.group.order()}, {"fingerprint", fp}});
            ct.row({c.omitted_name, std::to_string(c.group.order()), fp});
        }
        cands[mI ? "with_minus_identity" : "without_minus_identity"] = arr;
        os << "\nmaximal finite candidates" << (mI ? " with -I" : "") << "\n" << ct.render();
    }
    res.report["candidates"] = cands;
    res.table = os.str();
    return res;
}

CommandResult cmd_catalog_list(const EngineConfig &cfg) {
    Catalog catalog = Catalog::load(cfg.catalog_dir);
    CommandResult res;
    res.report = header("catalog list", {}, cfg);
    ojson arr = ojson::array();
    Table t({"name", "manifold", "construction", "order", "fingerprint", "flags"});
    for (const auto &e : catalog.entries()) {
        std::string flags;
        for (const auto &f : e.flags) flags += (flags.empty() ? "" : ", ") + f.flag + (f.element.empty() ? "" : " " + f.element);
        arr.push_back({{"name", e.name},
                       {"source", e.source},
                       {"manifold", e.manifold},
                       {"construction", construction_name(e.kind)},
                       {"order", e.claimed_order},
                       {"fingerprint", e.claimed_fingerprint},
                       {"flags", flags}});
        t.row({e.name, e.manifold, construction_name(e.kind), std::to_string(e.claimed_order), e.claimed_fingerprint, flags});
    }
    res.report["entries"] = arr;
    res.table = t.render();
    return res;
}

CommandResult cmd_catalog_verify(const EngineConfig &cfg) {
    Catalog catalog = Catalog::load(cfg.catalog_dir);
    CommandResult res;
    res.report = header("catalog verify", {}, cfg);
    ojson arr = ojson::array();
    std::ostringstream os;
    bool all = true;
    for (const auto &e : catalog.entries()) {
        EntryReport r = verify_entry(e);
        ojson checks = ojson::array();
        for (const auto &c : r.checks) checks.push_back({{"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        arr.push_back({{"name", e.name}, {"pass", r.pass}, {"checks", checks}});
        os << (r.pass ? "PASS " : "FAIL ") << e.name << " (" << r.checks.size() << " checks)\n";
        for (const auto &f : r.failures()) os << "  " << f << "\n";
        all = all && r.pass;
    }
    res.report["entries"] = arr;
    res.report["pass"] = all;
    res.table = os.str();
    res.exit_code = all ? EXIT_COMPLETED : EXIT_REJECTED_INPUT;
    return res;
}

CommandResult cmd_decompose(const std::filesystem::path &file, const EngineConfig &cfg) {
    MatrixInput in = parse_matrix_input(read_file(file), file.filename().string());
    const auto &L = *in.lattice;
    Isometry m = checked_isometry(L, in.matrix, in.basis, file.filename().string());
    if (m.is_identity() || !(m * m).is_identity())
        throw InputError(file.filename().string() + ": matrix is not an involution (M^2 != I or M = I)");
    InvolutionDecomposition d = decompose_involution(m);
    SignatureBudget b = defect_budget(L, m);
    int comps = cfg.search.max_components > 0 ? cfg.search.max_components : DEFAULT_MAX_COMPONENTS;
    int cx = cfg.search.max_complexity > 0 ? cfg.search.max_complexity : DEFAULT_MAX_COMPLEXITY;
    auto profiles = enumerate_profiles(d, comps, cx);

    CommandResult res;
    res.report = header("decompose " + file.filename().string(), {&L}, cfg);
    res.report["inputs"] = {{"lattice", L.name()}, {"basis", in.basis}, {"matrix", matrix_json(m.matrix())}};
    res.report["decomposition"] = {{"t", d.t}, {"c", d.c}, {"r", d.r}, {"beta1", d.beta1()}, {"beta0_plus_beta2", d.beta02()}};
    res.report["budget"] = {{"sigma_M", b.sigma_M}, {"sigma_quotient", b.sigma_quotient}, {"budget", b.budget}};
    ojson arr = ojson::array();
    Table t({"profile", "parity"});
    for (const auto &p : profiles) {
        bool keep = parity_prune(b, p) == PruneVerdict::Keep;
        arr.push_back({{"profile", p.name()}, {"parity", keep ? "keep" : "discard"}});
        t.row({p.name(), keep ? "keep" : "discard"});
    }
    res.report["profiles"] = arr;
    res.report["caps"] = {{"max_components", comps}, {"max_complexity", cx}};
    std::ostringstream os;
    os << L.name() << " " << matrix_string(m.matrix()) << "\n";
    os << "(t,c,r) = (" << d.t << "," << d.c << "," << d.r << "), beta1 = " << d.beta1()
       << ", beta0+beta2 = " << d.beta02() << "\n";
    os << "signature budget " << b.budget << " = 2*" << b.sigma_quotient << " - (" << b.sigma_M << ")\n";
    os << t.render();
    res.table = os.str();
    return res;
}

CommandResult cmd_certificate(const std::filesystem::path &file, const EngineConfig &cfg) {
    CertificateLibrary lib;
    if (std::filesystem::is_directory(cfg.certificate_dir)) lib.load_directory(cfg.certificate_dir);
    TextDoc doc = load_textdoc(file);
    lib.add(doc);
    CertificateResult r = check_certificate(doc, lib, cfg.search);
    CommandResult res;
    res.report = header("certificate " + file.filename().string(), {}, cfg);
    res.report["inputs"] = {{"certificate", file.filename().string()}};
    ojson j{{"name", r.name}, {"claim", r.claim}, {"lattice", r.lattice}, {"accepted", r.accepted},
            {"status", status_name(r.status)}, {"steps", r.steps}, {"closed_leaves", r.closed_leaves},
            {"concluded_leaves", r.concluded_leaves}, {"open_leaves", r.open_leaves}};
    if (r.group) j["group_order"] = r.group->order();
    if (!r.accepted) {
        j["rejected_line"] = r.rejected_line;
        j["rejection"] = r.rejection;
    }
    j["trace"] = r.trace;
    res.report["certificate"] = j;
    std::ostringstream os;
    os << r.name << ": " << (r.accepted ? "accepted" : "REJECTED") << ", " << r.steps << " steps, " << r.closed_leaves
       << " closed, " << r.concluded_leaves << " concluded, " << r.open_leaves << " open\n";
    if (!r.accepted) os << "rejected at line " << r.rejected_line << ": " << r.rejection << "\n";
    else os << "status: " << status_name(r.status) << "\n";
    append_trace(os, r.trace, "  ");
    res.table = os.str();
    res.exit_code = !r.accepted ? EXIT_REJECTED_INPUT : exit_for(r.status);
    return res;
}

} // namespace dp
