#include "delpezzo/equivariant.hpp"

#include <algorithm>
#include <functional>
#include <cctype>
#include <sstream>

namespace dp {

InvolutionDecomposition decompose_involution(const LorentzianLattice &L, const IMat &m) {
    const int n = L.rank();
    if (!equal(IMat(m * m), identity(n)) || equal(m, identity(n))) throw InputError("matrix is not an involution");
    IMat I = identity(n);
    InvolutionDecomposition d;
    d.r = rank_mod2(m - I);
    int plus = n - rank(IMat(m - I));
    int minus = n - rank(IMat(m + I));
    d.t = plus - d.r;
    d.c = minus - d.r;
    if (d.t < 0 || d.c < 0 || d.t + d.c + 2 * d.r != n) throw std::logic_error("inconsistent involution decomposition");
    return d;
}

InvolutionDecomposition decompose_involution(const Isometry &m) { return decompose_involution(m.lattice(), m.matrix()); }

int ComponentKind::beta1() const {
    switch (type) {
    case ComponentType::Point: return 0;
    case ComponentType::Orientable: return 2 * complexity;
    case ComponentType::Nonorientable: return complexity;
    }
    return 0;
}

std::string ComponentKind::name() const {
    switch (type) {
    case ComponentType::Point: return "pt";
    case ComponentType::Orientable:
        if (complexity == 0) return "S^2";
        if (complexity == 1) return "T^2";
        return "#" + std::to_string(complexity) + "T^2";
    case ComponentType::Nonorientable:
        if (complexity == 1) return "RP^2";
        return "#" + std::to_string(complexity) + "RP^2";
    }
    return "?";
}

void FixedSetProfile::canonicalize() { std::sort(components.begin(), components.end()); }

int FixedSetProfile::surfaces() const {
    return static_cast<int>(std::count_if(components.begin(), components.end(), [](const auto &c) { return c.is_surface(); }));
}

int FixedSetProfile::points() const { return size() - surfaces(); }

bool FixedSetProfile::all_orientable() const { return !has_nonorientable(); }

bool FixedSetProfile::has_nonorientable() const {
    return std::any_of(components.begin(), components.end(),
                       [](const auto &c) { return c.type == ComponentType::Nonorientable; });
}

int FixedSetProfile::beta1() const {
    int b = 0;
    for (const auto &c : components) b += c.beta1();
    return b;
}

int FixedSetProfile::beta02() const {
    int b = 0;
    for (const auto &c : components) b += c.beta0() + c.beta2();
    return b;
}

std::string FixedSetProfile::name() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < components.size(); ++i) os << (i ? ", " : "") << components[i].name();
    os << "]";
    return os.str();
}

FixedSetProfile parse_profile(const std::string &text) {
    std::string s;
    for (char ch : text)
        if (ch != '[' && ch != ']' && ch != ' ') s += ch;
    FixedSetProfile p;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        int mult = 1;
        // "#3RP^2" is a surface; "3pt" means three points
        if (tok == "pt") p.components.push_back(ComponentKind::point());
        else if (tok.size() > 2 && tok.substr(tok.size() - 2) == "pt") {
            mult = std::stoi(tok.substr(0, tok.size() - 2));
            for (int i = 0; i < mult; ++i) p.components.push_back(ComponentKind::point());
        } else if (tok == "S^2") p.components.push_back(ComponentKind::orientable(0));
        else if (tok == "T^2") p.components.push_back(ComponentKind::orientable(1));
        else if (tok == "RP^2") p.components.push_back(ComponentKind::nonorientable(1));
        else if (tok[0] == '#') {
            size_t i = 1;
            while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) ++i;
            int k = std::stoi(tok.substr(1, i - 1));
            std::string rest = tok.substr(i);
            if (rest == "T^2") p.components.push_back(ComponentKind::orientable(k));
            else if (rest == "RP^2") p.components.push_back(ComponentKind::nonorientable(k));
            else throw InputError("unknown component '" + tok + "'");
        } else {
            throw InputError("unknown component '" + tok + "'");
        }
    }
    if (p.components.empty()) throw InputError("empty profile");
    p.canonicalize();
    return p;
}

std::vector<FixedSetProfile> enumerate_profiles(const InvolutionDecomposition &d, int max_components, int max_complexity) {
    if (max_components < 1 || max_complexity < 1) throw InputError("profile caps must be >= 1");
    std::vector<ComponentKind> kinds;
    for (int g = 0; g <= max_complexity; ++g) kinds.push_back(ComponentKind::orientable(g));
    for (int k = 1; k <= max_complexity; ++k) kinds.push_back(ComponentKind::nonorientable(k));
    std::sort(kinds.begin(), kinds.end());

    std::vector<FixedSetProfile> out;
    const int b02 = d.t + 2;
    for (int s = 0; 2 * s <= b02; ++s) {
        const int pts = b02 - 2 * s;
        if (s + pts > max_components || s + pts == 0) continue;
        std::vector<ComponentKind> cur;
        std::function<void(size_t, int)> rec = [&](size_t from, int beta1_left) {
            if (static_cast<int>(cur.size()) == s) {
                if (beta1_left != 0) return;
                FixedSetProfile p;
                p.components = cur;
                for (int i = 0; i < pts; ++i) p.components.push_back(ComponentKind::point());
                p.canonicalize();
                out.push_back(p);
                return;
            }
            for (size_t i = from; i < kinds.size(); ++i) {
                if (kinds[i].beta1() > beta1_left) continue;
                cur.push_back(kinds[i]);
                rec(i, beta1_left - kinds[i].beta1());
                cur.pop_back();
            }
        };
        rec(0, d.c);
    }
    std::sort(out.begin(), out.end(), [](const FixedSetProfile &a, const FixedSetProfile &b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.components < b.components;
    });
    return out;
}

NonzeroObligation nonzero_class_rule(const FixedSetProfile &profile, int component) {
    if (component < 0 || component >= profile.size()) throw InputError("component index out of range");
    const auto &c = profile.components[component];
    if (c.type != ComponentType::Orientable) throw InputError("nonzero-class rule applies to orientable surfaces");
    return profile.size() >= 2 ? NonzeroObligation::Obligatory : NonzeroObligation::None;
}

} // namespace dp
