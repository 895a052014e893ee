#include "delpezzo/textdoc.hpp"

#include <fstream>
#include <sstream>

namespace dp {

DocError::DocError(const std::string &source, int line_, const std::string &msg)
    : InputError(source + ":" + std::to_string(line_) + ": " + msg), line(line_) {}

const DocLine *TextDoc::find(const std::string &key) const {
    for (const auto &l : lines)
        if (!l.tokens.empty() && l.tokens[0] == key) return &l;
    return nullptr;
}

std::string TextDoc::value(const std::string &key) const {
    const DocLine *l = find(key);
    if (!l || l->tokens.size() < 2) throw DocError(source, l ? l->number : 0, "missing '" + key + "'");
    std::string out;
    for (size_t i = 1; i < l->tokens.size(); ++i) out += (i > 1 ? " " : "") + l->tokens[i];
    return out;
}

std::vector<std::string> tokenize_line(const std::string &line) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') return out;
    for (char ch : line) {
        if (ch == '[' || ch == '(' || ch == '{') ++depth;
        if (ch == ']' || ch == ')' || ch == '}') {
            if (--depth < 0) throw InputError("unbalanced bracket in '" + line + "'");
        }
        if (depth == 0 && (ch == ' ' || ch == '\t' || ch == '\r')) {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (depth != 0) throw InputError("unbalanced bracket in '" + line + "'");
    if (!cur.empty()) out.push_back(cur);
    return out;
}

TextDoc parse_textdoc(const std::string &content, const std::string &source) {
    TextDoc doc;
    doc.source = source;
    std::istringstream in(content);
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        ++n;
        std::vector<std::string> toks;
        try {
            toks = tokenize_line(line);
        } catch (const InputError &e) {
            throw DocError(source, n, e.what());
        }
        if (toks.empty()) continue;
        size_t a = line.find_first_not_of(" \t");
        doc.lines.push_back(DocLine{n, toks, line.substr(a)});
    }
    return doc;
}

TextDoc load_textdoc(const std::filesystem::path &path) {
    std::ifstream f(path);
    if (!f) throw InputError("cannot read " + path.string());
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_textdoc(ss.str(), path.filename().string());
}

const LorentzianLattice &lattice_by_name(const std::string &name) {
    if (name == "Mstar" || name == "M*" || name == "star") return LorentzianLattice::Mstar();
    if (name.size() == 2 && name[0] == 'M' && name[1] >= '0' && name[1] <= '9') return LorentzianLattice::M(name[1] - '0');
    throw InputError("unknown lattice '" + name + "'");
}

IMat parse_matrix_literal(const std::string &text) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']') throw InputError("matrix literal must be [..]");
    std::string body = text.substr(1, text.size() - 2);
    std::vector<std::vector<long long>> rows;
    std::stringstream ss(body);
    std::string row;
    while (std::getline(ss, row, ';')) {
        std::istringstream rs(row);
        std::vector<long long> r;
        std::string tok;
        while (rs >> tok) {
            try {
                size_t used = 0;
                r.push_back(std::stoll(tok, &used));
                if (used != tok.size()) throw InputError("");
            } catch (...) {
                throw InputError("bad matrix entry '" + tok + "'");
            }
        }
        rows.push_back(r);
    }
    if (rows.empty()) throw InputError("empty matrix literal");
    IMat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size()) throw InputError("ragged matrix literal");
        for (size_t j = 0; j < rows[i].size(); ++j) m(static_cast<int>(i), static_cast<int>(j)) = Integer(rows[i][j]);
    }
    return m;
}

namespace {

std::vector<std::string> split_product(const std::string &text) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char ch : text) {
        if (ch == '[' || ch == '(' || ch == '{') ++depth;
        if (ch == ']' || ch == ')' || ch == '}') --depth;
        if (ch == '*' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

Isometry parse_factor(const LorentzianLattice &L, std::string f, const std::map<std::string, Isometry> &env) {
    bool neg = false;
    if (!f.empty() && f[0] == '-' && f != "-I") {
        neg = true;
        f = f.substr(1);
    }
    std::optional<Isometry> out;
    if (f == "I") out = Isometry::identity(L);
    else if (f == "-I") out = Isometry::minus_identity(L);
    else if (f.rfind("Ref(", 0) == 0 && f.back() == ')') out = Isometry::reflection(L, f.substr(4, f.size() - 5));
    else if (auto it = env.find(f); it != env.end()) out = it->second;
    else if (!f.empty() && f[0] == '[') out = Isometry(L, parse_matrix_literal(f));
    else if (auto c = f.find(":["); c != std::string::npos) out = Isometry(L, parse_matrix_literal(f.substr(c + 1)), f.substr(0, c));
    else throw InputError("cannot parse element '" + f + "'");
    return neg ? -*out : *out;
}

} // namespace

Isometry parse_isometry_expr(const LorentzianLattice &L, const std::string &text,
                             const std::map<std::string, Isometry> &env) {
    auto parts = split_product(text);
    std::optional<Isometry> acc;
    for (const auto &p : parts) {
        if (p.empty()) throw InputError("empty factor in '" + text + "'");
        Isometry f = parse_factor(L, p, env);
        acc = acc ? *acc * f : f;
    }
    return *acc;
}

} // namespace dp
