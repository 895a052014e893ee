#include "delpezzo/local_model.hpp"

#include <algorithm>
#include <sstream>

namespace dp {

LocalModel::LocalModel(std::vector<Isometry> generators) : gens_(std::move(generators)) {
    if (gens_.empty()) throw InputError("local model needs at least one generator");
    if (gens_.size() > 4) throw InputError("local model supports rank <= 4");
    const auto &L = gens_[0].lattice();
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (!(gens_[i] * gens_[i]).is_identity() || gens_[i].is_identity())
            throw InputError("local model generators must be involutions");
        for (size_t j = 0; j < i; ++j)
            if (!gens_[i].commutes_with(gens_[j])) throw InputError("local model generators must commute");
    }
    for (int mask = 0; mask < (1 << gens_.size()); ++mask) {
        Isometry e = Isometry::identity(L);
        for (size_t i = 0; i < gens_.size(); ++i)
            if (mask >> i & 1) e = e * gens_[i];
        if (std::find(elements_.begin(), elements_.end(), e) != elements_.end())
            throw InputError("local model generators are not independent");
        elements_.push_back(e);
    }
}

int LocalModel::index_of(const Isometry &g) const {
    for (size_t i = 0; i < elements_.size(); ++i)
        if (elements_[i] == g) return static_cast<int>(i);
    return -1;
}

Isometry LocalModel::element(int mask) const { return elements_.at(mask); }

int LocalModel::minus_count(const Assignment &a, int x) {
    int c = 0;
    for (int ch : a) c += value(ch, x) < 0;
    return c;
}

std::vector<LocalModel::Assignment> LocalModel::consistent(const Facts &f) const {
    const int n = size();
    std::vector<Assignment> out;
    Assignment a{};
    for (a[0] = 0; a[0] < n; ++a[0])
        for (a[1] = a[0]; a[1] < n; ++a[1])
            for (a[2] = a[1]; a[2] < n; ++a[2])
                for (a[3] = a[2]; a[3] < n; ++a[3]) {
                    bool ok = true;
                    for (int x = 1; x < n && ok; ++x) {
                        int c = minus_count(a, x);
                        ok = c > 0 && c % 2 == 0;
                    }
                    for (int x : f.minus_identity) ok = ok && minus_count(a, x) == 4;
                    for (int x : f.not_isolated) ok = ok && minus_count(a, x) < 4;
                    if (ok) out.push_back(a);
                }
    return out;
}

int LocalModel::plane_sign(const Assignment &a, int g, int h) {
    if (minus_count(a, g) != 2) return 0;
    int s = 1;
    for (int ch : a)
        if (value(ch, g) > 0) s *= value(ch, h);
    return s;
}

std::string LocalModel::describe(const Assignment &a) const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < 4; ++i) {
        os << (i ? " | " : "");
        for (int g = 0; g < rank(); ++g) os << (g ? "," : "") << (value(a[i], 1 << g) > 0 ? "+" : "-");
    }
    os << ")";
    return os.str();
}

} // namespace dp
