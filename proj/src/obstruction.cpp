#include "delpezzo/obstruction.hpp"

#include "delpezzo/parallel.hpp"

#include <map>
#include <sstream>

namespace dp {

std::string status_name(VerdictStatus s) {
    switch (s) {
    case VerdictStatus::Obstructed: return "Obstructed";
    case VerdictStatus::ConsistentConstraints: return "ConsistentConstraints";
    case VerdictStatus::RealizedByCatalog: return "RealizedByCatalog";
    case VerdictStatus::Undetermined: return "Undetermined";
    }
    return "?";
}

LiftHypothesis make_hypothesis(const MatrixGroup &group, const Isometry &focus) {
    if (focus.is_identity() || !(focus * focus).is_identity()) throw InputError("focus is not an involution");
    std::vector<Isometry> cent = centralizer(group, focus);
    // greedy generating set of the centralizer modulo focus
    std::vector<Isometry> gens{focus};
    std::vector<Isometry> witnesses;
    const auto &L = group.lattice();
    int reached = closed(L, gens).order();
    for (const auto &x : cent) {
        if (x.is_identity() || x == focus) continue;
        std::vector<Isometry> trial = gens;
        trial.push_back(x);
        int ord = closed(L, trial).order();
        if (ord > reached) {
            gens = trial;
            witnesses.push_back(x);
            reached = ord;
        }
    }
    return LiftHypothesis{group, focus, witnesses};
}

void validate_hypothesis(const LiftHypothesis &h) {
    if (&h.focus.lattice() != &h.group.lattice()) throw InputError("focus lives in a different lattice");
    if (h.focus.is_identity() || !(h.focus * h.focus).is_identity()) throw InputError("focus is not an involution");
    if (h.group.closed() && !h.group.contains(h.focus)) throw InputError("focus is not an element of the group");
    for (const auto &w : h.commuting_witnesses) {
        if (h.group.closed() && !h.group.contains(w)) throw InputError("witness is not an element of the group");
        if (!w.commutes_with(h.focus)) throw InputError("witness does not commute with focus");
    }
}

std::vector<FixedSetProfile> admissible_profiles(const InvolutionDecomposition &d, const SearchOptions &opt,
                                                 bool *truncated) {
    auto full = enumerate_profiles(d, d.t + 2, std::max(d.c, 1));
    if (truncated) *truncated = false;
    if (opt.max_components <= 0 && opt.max_complexity <= 0) return full;
    int comps = opt.max_components > 0 ? opt.max_components : d.t + 2;
    int cx = opt.max_complexity > 0 ? opt.max_complexity : std::max(d.c, 1);
    auto capped = enumerate_profiles(d, comps, cx);
    if (truncated) *truncated = capped.size() < full.size();
    return capped;
}

std::string SurfaceEquation::text() const {
    std::ostringstream os;
    const auto &L = lattice.ambient();
    os << equation_string(gram, target) << " on " << lattice.format_in(L.preferred_basis());
    if (nonzero) os << ", nonzero";
    os << " -> " << status_string(verdict.status);
    if (verdict.status == Solvability::Unsolvable) os << " (" << verdict.reason_string() << ")";
    if (verdict.status == Solvability::Solvable && verdict.witness)
        os << " [" << L.format_in(verdict.witness->coords, L.preferred_basis()) << "]";
    return os.str();
}

SurfaceEquation single_surface_equation(const Isometry &m, const SignatureBudget &b, const FixedSetProfile &profile) {
    Sublattice lat = eigenlattice(m, 1).presented_in(m.lattice().preferred_basis());
    SurfaceEquation e{profile, lat, restricted_gram(lat), Integer(b.budget), profile.size() >= 2, {}};
    e.verdict = solve_norm_equation(NormEquation{lat, e.target, e.nonzero, std::nullopt});
    return e;
}

namespace {

enum class Outcome { Closed, Open, Unknown };

struct ProfileResult {
    Outcome outcome = Outcome::Closed;
    std::vector<std::string> lines;
    std::optional<LatticeElement> witness;
};

std::string sign_str(int s) { return s > 0 ? "+" : "-"; }

std::string verdict_str(const SolvabilityVerdict &v) {
    if (v.status == Solvability::Unsolvable) return "Unsolvable (" + v.reason_string() + ")";
    return status_string(v.status);
}

Sublattice present(const Sublattice &s) { return s.presented_in(s.ambient().preferred_basis()); }

std::string fmt(const Sublattice &s) { return present(s).format_in(s.ambient().preferred_basis()); }

std::string fmt(const LorentzianLattice &L, const IVec &v) { return L.format_in(v, L.preferred_basis()); }

SolvabilityVerdict solve_on(const Sublattice &s, const Integer &k, bool nonzero) {
    return solve_norm_equation(NormEquation{present(s), k, nonzero, std::nullopt});
}

std::string equation_on(const Sublattice &s, const Integer &k) { return equation_string(restricted_gram(present(s)), k); }

// signs forced on <focus, witnesses> by a sign choice on the witnesses; nullopt when no character exists
std::optional<std::vector<std::pair<Isometry, int>>> extend_character(const Isometry &focus,
                                                                      const std::vector<Isometry> &w,
                                                                      const std::vector<int> &eps) {
    std::map<std::vector<long long>, std::pair<Isometry, int>> seen;
    std::vector<std::pair<Isometry, int>> gens{{focus, 1}};
    for (size_t i = 0; i < w.size(); ++i) gens.push_back({w[i], eps[i]});
    const Isometry id = Isometry::identity(focus.lattice());
    std::vector<std::pair<Isometry, int>> frontier{{id, 1}};
    seen.emplace(id.key(), std::make_pair(id, 1));
    while (!frontier.empty()) {
        std::vector<std::pair<Isometry, int>> next;
        for (const auto &[x, sx] : frontier)
            for (const auto &[g, sg] : gens) {
                Isometry y = x * g;
                int sy = sx * sg;
                auto it = seen.find(y.key());
                if (it != seen.end()) {
                    if (it->second.second != sy) return std::nullopt;
                    continue;
                }
                if (seen.size() > static_cast<size_t>(CLOSURE_CAP)) throw InputError("witness group does not close");
                seen.emplace(y.key(), std::make_pair(y, sy));
                next.push_back({y, sy});
            }
        frontier = std::move(next);
    }
    std::vector<std::pair<Isometry, int>> out;
    for (auto &[k, v] : seen) out.push_back(v);
    return out;
}

ProfileResult single_surface(const Isometry &focus, const SignatureBudget &b, const FixedSetProfile &profile,
                             const std::vector<Isometry> &witnesses, const std::vector<std::string> &names) {
    ProfileResult r;
    const auto &L = focus.lattice();
    const Integer k(b.budget);
    const bool nonzero = nonzero_class_rule(profile, 0) == NonzeroObligation::Obligatory;
    Sublattice fix = eigenlattice(focus, 1);
    {
        std::ostringstream os;
        os << "profile " << profile.name() << ": Q([F],[F]) = " << b.budget << ", [F] in " << fmt(fix)
           << (nonzero ? ", [F] nonzero (two or more components)" : "");
        r.lines.push_back(os.str());
    }
    if (witnesses.empty()) {
        SolvabilityVerdict v = solve_on(fix, k, nonzero);
        r.lines.push_back("  " + equation_on(fix, k) + " -> " + verdict_str(v));
        if (v.status == Solvability::Solvable) {
            r.outcome = Outcome::Open;
            r.witness = v.witness;
            r.lines.push_back("  surviving class [F] = " + fmt(L, v.witness->coords));
        } else {
            r.outcome = v.status == Solvability::Unknown ? Outcome::Unknown : Outcome::Closed;
        }
        return r;
    }
    const size_t kw = witnesses.size();
    bool any_open = false, any_unknown = false;
    for (size_t mask = 0; mask < (size_t(1) << kw); ++mask) {
        std::vector<int> eps(kw);
        for (size_t i = 0; i < kw; ++i) eps[i] = (mask >> (kw - 1 - i)) & 1 ? -1 : 1;
        std::ostringstream label;
        for (size_t i = 0; i < kw; ++i)
            label << (i ? ", " : " ") << names[i] << "[F] = " << sign_str(eps[i]) << "[F]";
        auto character = extend_character(focus, witnesses, eps);
        if (!character) {
            r.lines.push_back("  branch" + label.str() + ": no sign character of <focus, witnesses> -> closed");
            continue;
        }
        Sublattice wl = Sublattice::full(L);
        for (size_t i = 0; i < kw; ++i) wl = intersect_sublattices(wl, eigenlattice(witnesses[i], eps[i]));
        SolvabilityVerdict v = solve_on(wl, k, nonzero);
        std::string line = "  branch" + label.str() + ": [F] in " + fmt(wl) + ": " + equation_on(wl, k) + " -> " +
                           verdict_str(v);
        if (v.status != Solvability::Unsolvable) {
            Sublattice refined = intersect_sublattices(wl, fix);
            for (const auto &[g, s] : *character) refined = intersect_sublattices(refined, eigenlattice(g, s));
            v = solve_on(refined, k, nonzero);
            line += "; with every forced sign [F] in " + fmt(refined) + ": " + equation_on(refined, k) + " -> " +
                    verdict_str(v);
        }
        r.lines.push_back(line);
        if (v.status == Solvability::Solvable) {
            if (!any_open) {
                r.witness = v.witness;
                r.lines.push_back("  surviving class [F] = " + fmt(L, v.witness->coords));
            }
            any_open = true;
        } else if (v.status == Solvability::Unknown) {
            any_unknown = true;
        }
    }
    r.outcome = any_open ? Outcome::Open : any_unknown ? Outcome::Unknown : Outcome::Closed;
    return r;
}

ProfileResult multi_surface(const Isometry &focus, const SignatureBudget &b, const FixedSetProfile &profile,
                            int split_cap) {
    ProfileResult r;
    const auto &L = focus.lattice();
    const int s = profile.surfaces();
    Sublattice fix = eigenlattice(focus, 1);
    {
        std::ostringstream os;
        os << "profile " << profile.name() << ": sum of " << s << " self-intersections = " << b.budget
           << ", each class nonzero in " << fmt(fix) << ", split window |Q| <= " << split_cap;
        r.lines.push_back(os.str());
    }
    std::map<int, SolvabilityVerdict> per;
    bool any_unknown = false;
    for (int q = -split_cap; q <= split_cap; ++q) {
        per[q] = solve_on(fix, Integer(q), true);
        if (per[q].status == Solvability::Unknown) any_unknown = true;
    }
    // reachable[j][sum]: first j classes can take values summing to sum
    std::vector<std::map<int, int>> choice(s + 1);
    choice[0][0] = 0;
    for (int j = 0; j < s; ++j)
        for (const auto &[sum, unused] : choice[j])
            for (const auto &[q, v] : per)
                if (v.status == Solvability::Solvable && !choice[j + 1].count(sum + q)) choice[j + 1][sum + q] = q;
    if (choice[s].count(b.budget)) {
        std::vector<int> qs(s);
        int sum = b.budget;
        for (int j = s; j > 0; --j) {
            qs[j - 1] = choice[j][sum];
            sum -= qs[j - 1];
        }
        std::ostringstream os;
        os << "  split";
        for (int j = 0; j < s; ++j) os << " " << qs[j] << " [" << fmt(L, per[qs[j]].witness->coords) << "]";
        os << " satisfies the budget";
        r.lines.push_back(os.str());
        r.witness = per[qs[0]].witness;
        r.outcome = Outcome::Open;
        return r;
    }
    Inertia in = restricted_signature(L, fix);
    bool definite = fix.rank() > 0 && (in.plus == fix.rank() || in.minus == fix.rank());
    bool exhaustive = (definite && std::abs(b.budget) <= split_cap) || fix.rank() == 0;
    if (exhaustive && !any_unknown) {
        r.lines.push_back("  no split within the window; the fixed lattice is definite so the window is exhaustive");
        r.outcome = Outcome::Closed;
    } else {
        r.lines.push_back("  no split within the window; window not exhaustive");
        r.outcome = Outcome::Unknown;
    }
    return r;
}

ProfileResult evaluate_profile(const Isometry &focus, const SignatureBudget &b, const FixedSetProfile &profile,
                               const std::vector<Isometry> &witnesses, const std::vector<std::string> &names,
                               const SearchOptions &opt) {
    ProfileResult r;
    if (parity_prune(b, profile) == PruneVerdict::Discard) {
        r.lines.push_back("profile " + profile.name() + ": discarded by parity (budget " + std::to_string(b.budget) +
                          " needs a surface)");
        return r;
    }
    if (profile.has_nonorientable()) {
        r.outcome = Outcome::Open;
        r.lines.push_back("profile " + profile.name() + ": nonorientable surface, signature budget not applicable");
        return r;
    }
    if (profile.surfaces() == 0) {
        r.outcome = Outcome::Open;
        r.lines.push_back("profile " + profile.name() + ": isolated points only, budget 0 is met");
        return r;
    }
    try {
        if (profile.surfaces() == 1) return single_surface(focus, b, profile, witnesses, names);
        return multi_surface(focus, b, profile, opt.split_cap);
    } catch (const InputError &e) {
        r.outcome = Outcome::Unknown;
        r.lines.push_back("profile " + profile.name() + ": " + e.what());
        return r;
    }
}

} // namespace

Verdict branch_search(const LiftHypothesis &h, const SearchOptions &opt) {
    validate_hypothesis(h);
    const auto &L = h.group.lattice();
    Verdict v;
    if (h.focus.is_identity()) {
        v.status = VerdictStatus::ConsistentConstraints;
        v.trace.push_back("focus is the identity: no fixed-set constraints");
        return v;
    }
    if (!(h.focus * h.focus).is_identity()) throw InputError("focus is not an involution");
    InvolutionDecomposition d = decompose_involution(h.focus);
    SignatureBudget b = defect_budget(L, h.focus);
    {
        std::ostringstream os;
        os << "focus " << (h.focus_name.empty() ? "" : h.focus_name + " = ") << matrix_string(h.focus.matrix()) << ": (t,c,r) = (" << d.t << "," << d.c << "," << d.r
           << "), beta1 = " << d.beta1() << ", beta0+beta2 = " << d.beta02();
        v.trace.push_back(os.str());
        std::ostringstream bs;
        bs << "signature budget " << b.budget << " = 2*" << b.sigma_quotient << " - (" << b.sigma_M << ")";
        v.trace.push_back(bs.str());
        Integer lef = Integer(2);
        for (int i = 0; i < L.rank(); ++i) lef += h.focus.matrix()(i, i);
        v.trace.push_back("Lefschetz number " + lef.str() +
                          (lef.is_zero() ? ": nonempty fixed set assumed" : ": fixed set nonempty"));
        for (size_t i = 0; i < h.commuting_witnesses.size(); ++i)
            v.trace.push_back("witness " + (i < h.witness_names.size() ? h.witness_names[i] : "w" + std::to_string(i + 1)) +
                              " = " + matrix_string(h.commuting_witnesses[i].matrix()));
    }
    std::vector<std::string> names;
    for (size_t i = 0; i < h.commuting_witnesses.size(); ++i)
        names.push_back(i < h.witness_names.size() ? h.witness_names[i] : "w" + std::to_string(i + 1));
    bool truncated = false;
    auto profiles = admissible_profiles(d, opt, &truncated);
    if (profiles.empty()) {
        v.trace.push_back("no admissible profile: empty-fixed-set branch left open");
        v.status = VerdictStatus::Undetermined;
        return v;
    }
    std::vector<ProfileResult> results(profiles.size());
    parallel_for(profiles.size(), opt.threads,
                 [&](size_t i) { results[i] = evaluate_profile(h.focus, b, profiles[i], h.commuting_witnesses, names, opt); });
    bool any_open = false, any_unknown = false;
    for (auto &r : results) {
        for (auto &line : r.lines) v.trace.push_back(line);
        if (r.outcome == Outcome::Open) {
            if (!any_open) v.witness = r.witness;
            any_open = true;
        }
        if (r.outcome == Outcome::Unknown) any_unknown = true;
    }
    if (truncated) v.trace.push_back("profile caps hide admissible profiles; those branches are open");
    if (any_open) v.status = VerdictStatus::ConsistentConstraints;
    else if (any_unknown || truncated) v.status = VerdictStatus::Undetermined;
    else v.status = VerdictStatus::Obstructed;
    return v;
}

Order2Report order2_profile_report(const LorentzianLattice &L, const Isometry &m, const SearchOptions &opt) {
    if (&m.lattice() != &L) throw InputError("matrix lives in a different lattice");
    if (m.is_identity() || !(m * m).is_identity()) throw InputError("matrix is not an involution");
    Order2Report rep;
    rep.decomposition = decompose_involution(m);
    rep.budget = defect_budget(L, m);
    rep.fixed_lattice = eigenlattice(m, 1).presented_in(L.preferred_basis()).format_in(L.preferred_basis());
    auto profiles = admissible_profiles(rep.decomposition, opt, &rep.truncated);
    bool orientable_alive = false, orientable_unknown = false, pointless_alive = false;
    for (const auto &p : profiles) {
        ProfileAssessment a;
        a.profile = p;
        if (parity_prune(rep.budget, p) == PruneVerdict::Discard) {
            a.pruned = a.closed = true;
            a.note = "discarded by parity";
            rep.closing_equations.push_back(p.name() + ": parity, budget " + std::to_string(rep.budget.budget) +
                                            " needs a surface");
        } else if (p.all_orientable() && p.surfaces() == 1) {
            a.equation = single_surface_equation(m, rep.budget, p);
            a.closed = a.equation->verdict.status == Solvability::Unsolvable;
            a.unknown = a.equation->verdict.status == Solvability::Unknown;
            if (a.closed) rep.closing_equations.push_back(p.name() + ": " + a.equation->text());
        } else if (p.all_orientable() && p.surfaces() >= 2) {
            ProfileResult r = multi_surface(m, rep.budget, p, opt.split_cap);
            a.closed = r.outcome == Outcome::Closed;
            a.unknown = r.outcome == Outcome::Unknown;
            a.note = r.lines.back();
            if (a.closed) rep.closing_equations.push_back(p.name() + ": " + a.note);
        }
        if (!a.closed) {
            if (p.all_orientable()) (a.unknown ? orientable_unknown : orientable_alive) = true;
            if (p.points() == 0) pointless_alive = true;
        }
        rep.profiles.push_back(a);
    }
    bool any_orientable = false;
    for (const auto &p : profiles) any_orientable |= p.all_orientable();
    if (!any_orientable) {
        for (const auto &p : profiles)
            if (p.surfaces() == 1 && p.points() > 0) {
                rep.orientable_variant = single_surface_equation(m, rep.budget, p);
                break;
            }
    }
    if (orientable_alive || orientable_unknown || rep.truncated) {
        rep.biholomorphic_feasible = true;
        rep.biholomorphic_reason = orientable_alive ? "an orientable profile survives"
                                                    : "not excluded: an orientable profile is undecided";
    } else {
        rep.biholomorphic_feasible = false;
        rep.biholomorphic_reason = any_orientable ? "every orientable profile closes"
                                                  : "every admissible profile contains a nonorientable surface";
    }
    if (pointless_alive || rep.truncated) {
        rep.anti_biholomorphic_feasible = true;
        rep.anti_biholomorphic_reason = "a profile without isolated points survives";
    } else {
        rep.anti_biholomorphic_feasible = false;
        rep.anti_biholomorphic_reason = "every surviving profile has an isolated point";
    }
    return rep;
}

} // namespace dp
