#include "delpezzo/classify.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

#include "delpezzo/coxeter.hpp"
#include "delpezzo/parallel.hpp"

namespace dp {

ElementNamer::ElementNamer(const MatrixGroup &group, std::vector<std::pair<std::string, Isometry>> generators) {
    const auto &L = group.lattice();
    bool terse = std::all_of(generators.begin(), generators.end(), [](const auto &g) { return g.first.size() == 1; });
    struct Word {
        std::vector<std::pair<int, int>> letters;  // generator, exponent
        std::string text(const std::vector<std::pair<std::string, Isometry>> &gens, bool terse) const {
            if (letters.empty()) return "I";
            std::string s;
            for (size_t i = 0; i < letters.size(); ++i) {
                if (i && !terse) s += "*";
                s += gens[letters[i].first].first;
                if (letters[i].second > 1) s += "^" + std::to_string(letters[i].second);
            }
            return s;
        }
    };
    std::map<Isometry, size_t> seen;
    std::vector<Word> words;
    std::deque<size_t> queue;
    auto push = [&](const Isometry &g, Word w) {
        if (seen.count(g) || !group.contains(g)) return;
        seen.emplace(g, order_.size());
        order_.push_back(g);
        words.push_back(std::move(w));
        queue.push_back(order_.size() - 1);
    };
    push(Isometry::identity(L), Word{});
    while (!queue.empty()) {
        size_t i = queue.front();
        queue.pop_front();
        for (size_t k = 0; k < generators.size(); ++k) {
            Word w = words[i];
            if (!w.letters.empty() && w.letters.back().first == static_cast<int>(k)) ++w.letters.back().second;
            else w.letters.push_back({static_cast<int>(k), 1});
            push(order_[i] * generators[k].second, w);
        }
    }
    for (size_t i = 0; i < order_.size(); ++i) names_.push_back(words[i].text(generators, terse));
    // -I and its multiples come after the words they negate
    const size_t base = order_.size();
    Isometry mI = Isometry::minus_identity(L);
    if (group.contains(mI))
        for (size_t i = 0; i < base; ++i) {
            Isometry g = -order_[i];
            if (seen.count(g)) continue;
            seen.emplace(g, order_.size());
            order_.push_back(g);
            names_.push_back(i == 0 ? "-I" : "-" + names_[i]);
        }
    if (static_cast<int>(order_.size()) != group.order()) throw InputError("generators do not generate the group");
}

int ElementNamer::rank(const Isometry &g) const {
    auto it = std::find(order_.begin(), order_.end(), g);
    if (it == order_.end()) throw InputError("element outside the named group");
    return static_cast<int>(it - order_.begin());
}

std::string ElementNamer::name(const Isometry &g) const { return names_[rank(g)]; }

std::vector<Isometry> ElementNamer::generating_set(const MatrixGroup &sub) const {
    std::vector<Isometry> pool;
    for (const auto &g : order_)
        if (!g.is_identity() && sub.contains(g)) pool.push_back(g);
    if (pool.empty()) return {};
    const auto &L = sub.lattice();
    std::vector<Isometry> chosen;
    std::function<bool(size_t, int)> rec = [&](size_t from, int left) {
        if (left == 0) return closed(L, chosen).order() == sub.order();
        for (size_t i = from; i < pool.size(); ++i) {
            chosen.push_back(pool[i]);
            if (rec(i + 1, left - 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    for (int size = 1; size <= static_cast<int>(pool.size()); ++size)
        if (rec(0, size)) return chosen;
    throw std::logic_error("no generating set found");
}

std::string ElementNamer::label(const MatrixGroup &sub) const {
    auto gens = generating_set(sub);
    if (gens.empty()) return "<I>";
    std::string s = "<";
    for (size_t i = 0; i < gens.size(); ++i) s += (i ? "," : "") + name(gens[i]);
    return s + ">";
}

namespace {

const LorentzianLattice &M2() { return LorentzianLattice::M(2); }

Isometry iso_A() { return Isometry::reflection(M2(), "E1-E2"); }
Isometry iso_B() { return Isometry::reflection(M2(), "H-E1-E2"); }
Isometry iso_Phi() { return Isometry::reflection(M2(), "E2") * Isometry::reflection(M2(), "E1-E2"); }
Isometry iso_Psi() { return Isometry::reflection(M2(), "E1"); }

std::vector<Isometry> involutions(const MatrixGroup &g) {
    std::vector<Isometry> out;
    for (const auto &x : g.elements())
        if (!x.is_identity() && (x * x).is_identity()) out.push_back(x);
    return out;
}

std::optional<Verdict> catalog_verdict(const MatrixGroup &g, const Catalog &catalog) {
    const RealizationEntry *e = catalog.realizing_entry(g);
    if (!e) return std::nullopt;
    Verdict v;
    v.status = VerdictStatus::RealizedByCatalog;
    v.catalog_entry = e->name;
    v.trace.push_back("contained in the group of catalog entry \"" + e->name + "\"");
    return v;
}

std::optional<Verdict> certificate_verdict(const MatrixGroup &g, const CertificateLibrary &lib, const SearchOptions &opt) {
    for (const auto &name : lib.names()) {
        CertificateResult r = check_certificate(*lib.find(name), lib, opt);
        if (!r.accepted || r.status != VerdictStatus::Obstructed || !r.group) continue;
        if (&r.group->lattice() != &g.lattice() || !r.group->is_subgroup_of(g)) continue;
        Verdict v;
        v.status = VerdictStatus::Obstructed;
        v.trace.push_back("contains the group of certificate " + r.name + " (order " +
                          std::to_string(r.group->order()) + "), which has no lift");
        v.trace.push_back("certificate " + r.name + " replayed: " + std::to_string(r.steps) + " steps, " +
                          std::to_string(r.closed_leaves) + " closed leaves, 0 rejected");
        for (const auto &line : r.trace) v.trace.push_back("  " + line);
        v.note = "certificate " + r.name;
        return v;
    }
    return std::nullopt;
}

std::vector<Candidate> m3_candidates() { return maximal_finite_candidates(coxeter_system(3), true); }

std::string m3_root_label(const std::string &root) {
    if (root == "H-E1-E2-E3") return "psi";
    if (root == "E1-E2") return "s12";
    if (root == "E2-E3") return "s23";
    if (root == "E3") return "R3";
    return "Ref(" + root + ")";
}

} // namespace

Verdict search_all_foci(const MatrixGroup &g, const ElementNamer *namer, const SearchOptions &opt) {
    Verdict v;
    bool any_open = false, any_unknown = false;
    std::vector<std::string> summary;
    auto foci = involutions(g);
    if (namer) std::sort(foci.begin(), foci.end(), [&](const auto &a, const auto &b) { return namer->rank(a) < namer->rank(b); });
    for (const auto &f : foci) {
        LiftHypothesis h = make_hypothesis(g, f);
        if (namer) {
            h.focus_name = namer->name(f);
            for (const auto &w : h.commuting_witnesses) h.witness_names.push_back(namer->name(w));
        }
        Verdict r = branch_search(h, opt);
        std::string fname = namer ? h.focus_name : "involution " + std::to_string(summary.size() + 1);
        summary.push_back("focus " + fname + ": " + status_name(r.status));
        if (r.status == VerdictStatus::Obstructed) {
            v.status = VerdictStatus::Obstructed;
            v.trace = summary;
            for (auto &line : r.trace) v.trace.push_back("  " + line);
            return v;
        }
        if (r.status == VerdictStatus::ConsistentConstraints) {
            if (!any_open) v.witness = r.witness;
            any_open = true;
        } else {
            any_unknown = true;
        }
    }
    v.trace = summary;
    if (foci.empty()) {
        v.trace.push_back("no involutions: no fixed-set constraints apply");
        v.status = VerdictStatus::ConsistentConstraints;
    } else if (any_unknown) {
        v.status = VerdictStatus::Undetermined;
    } else {
        v.status = VerdictStatus::ConsistentConstraints;
    }
    return v;
}

MatrixGroup group_G1() {
    return closed(M2(), {iso_A(), iso_B(), Isometry::minus_identity(M2())});
}

MatrixGroup group_G2() {
    return closed(M2(), {iso_Phi(), iso_Psi(), Isometry::minus_identity(M2())});
}

ElementNamer namer_G1() { return ElementNamer(group_G1(), {{"A", iso_A()}, {"B", iso_B()}}); }
ElementNamer namer_G2() { return ElementNamer(group_G2(), {{"Phi", iso_Phi()}, {"Psi", iso_Psi()}}); }

Verdict classify_finite_subgroup(const MatrixGroup &g, int n, const ClassifyContext &ctx) {
    if (n != 2 && n != 3) throw InputError("classification is provided for n = 2, 3");
    if (&g.lattice() != &LorentzianLattice::M(n)) throw InputError("group does not act on M" + std::to_string(n));
    if (n == 2) {
        MatrixGroup G1 = group_G1(), G2 = group_G2();
        bool in1 = g.is_subgroup_of(G1), in2 = g.is_subgroup_of(G2);
        if (!in1 && !in2) {
            Verdict v;
            v.trace.push_back("not a subgroup of G1 or G2 by element matching; conjugacy is not searched");
            return v;
        }
        if (auto v = catalog_verdict(g, ctx.catalog)) return *v;
        ElementNamer namer = in1 ? namer_G1() : namer_G2();
        return search_all_foci(g, &namer, ctx.options);
    }
    const MatrixGroup *ambient = nullptr;
    auto cands = m3_candidates();
    for (const auto &c : cands)
        if (g.is_subgroup_of(c.group)) {
            ambient = &c.group;
            break;
        }
    if (!ambient) {
        Verdict v;
        v.trace.push_back("not a subgroup of a maximal finite candidate by element matching");
        return v;
    }
    if (auto v = catalog_verdict(g, ctx.catalog)) return *v;
    if (auto v = certificate_verdict(g, ctx.certificates, ctx.options)) return *v;
    return search_all_foci(g, nullptr, ctx.options);
}

Classification classify_all(int n, const ClassifyContext &ctx) {
    if (n != 2 && n != 3) throw InputError("classification is provided for n = 2, 3");
    Classification out;
    out.n = n;
    std::vector<std::pair<std::string, MatrixGroup>> groups;
    std::vector<std::string> labels;
    std::vector<std::vector<std::string>> element_names;
    if (n == 2) {
        MatrixGroup G1 = group_G1(), G2 = group_G2();
        ElementNamer n1 = namer_G1(), n2 = namer_G2();
        // preferred generators for the order-4 subgroups of G1
        const std::vector<std::pair<std::string, std::vector<Isometry>>> preferred = {
            {"<A,-B>", {iso_A(), -iso_B()}},
            {"<A,B>", {iso_A(), iso_B()}},
            {"<-AB,-A>", {-(iso_A() * iso_B()), -iso_A()}},
            {"<A,-I>", {iso_A(), Isometry::minus_identity(M2())}},
            {"<B,-B>", {iso_B(), -iso_B()}},
            {"<AB,-I>", {iso_A() * iso_B(), Isometry::minus_identity(M2())}},
            {"<AB,-B>", {iso_A() * iso_B(), -iso_B()}},
            {"<A,B,-I>", {iso_A(), iso_B(), Isometry::minus_identity(M2())}},
            {"<Phi,Psi,-I>", {iso_Phi(), iso_Psi(), Isometry::minus_identity(M2())}},
        };
        auto label_of = [&](const MatrixGroup &s, const ElementNamer &nm) {
            for (const auto &[lab, gens] : preferred)
                if (closed(M2(), gens).same_elements(s)) return lab;
            return nm.label(s);
        };
        auto names_of = [](const MatrixGroup &s, const ElementNamer &nm) {
            std::vector<Isometry> els = s.elements();
            std::sort(els.begin(), els.end(), [&](const auto &a, const auto &b) { return nm.rank(a) < nm.rank(b); });
            std::vector<std::string> out;
            for (const auto &x : els) out.push_back(nm.name(x));
            return out;
        };
        auto by_order = [](std::vector<MatrixGroup> v, const ElementNamer &nm) {
            std::stable_sort(v.begin(), v.end(), [&](const MatrixGroup &a, const MatrixGroup &b) {
                if (a.order() != b.order()) return a.order() < b.order();
                std::vector<int> ra, rb;
                for (const auto &x : a.elements()) ra.push_back(nm.rank(x));
                for (const auto &x : b.elements()) rb.push_back(nm.rank(x));
                std::sort(ra.begin(), ra.end());
                std::sort(rb.begin(), rb.end());
                return ra < rb;
            });
            return v;
        };
        for (const auto &s : by_order(enumerate_subgroups(G1), n1)) {
            if (s.order() == 1) continue;
            groups.push_back({"G1", s});
            labels.push_back(label_of(s, n1));
            element_names.push_back(names_of(s, n1));
        }
        for (const auto &s : by_order(enumerate_subgroups(G2), n2)) {
            if (s.order() == 1 || s.is_subgroup_of(G1)) continue;
            groups.push_back({"G2", s});
            labels.push_back(label_of(s, n2));
            element_names.push_back(names_of(s, n2));
        }
    } else {
        for (const auto &c : m3_candidates()) {
            const auto &cs = coxeter_system(3);
            std::string lab = "<";
            bool first = true;
            for (const auto &r : cs.root_names) {
                if (r == c.omitted_name) continue;
                lab += (first ? "" : ",") + m3_root_label(r);
                first = false;
            }
            lab += ",-I>";
            groups.push_back({"omit " + c.omitted_name, c.group});
            labels.push_back(lab);
            element_names.push_back({});
        }
    }
    ClassifyContext inner = ctx;
    inner.options.threads = 1;
    std::vector<std::optional<Verdict>> verdicts(groups.size());
    parallel_for(groups.size(), ctx.options.threads,
                 [&](size_t i) { verdicts[i] = classify_finite_subgroup(groups[i].second, n, inner); });
    for (size_t i = 0; i < groups.size(); ++i) {
        const auto &g = groups[i].second;
        out.rows.push_back(ClassifiedGroup{groups[i].first, labels[i], g.order(), isomorphism_fingerprint(g).label,
                                           element_names[i], g, *verdicts[i]});
    }
    return out;
}

} // namespace dp
