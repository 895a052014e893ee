#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "delpezzo/isometry.hpp"

namespace dp {

// Line-oriented documents: one statement per line, whitespace-separated tokens,
// bracketed groups ([..], (..), {..}) kept whole, lines starting with '#' are comments.
struct DocLine {
    int number = 0;
    std::vector<std::string> tokens;
    std::string text;
};

struct TextDoc {
    std::string source;
    std::vector<DocLine> lines;
    // first line whose first token is key
    const DocLine *find(const std::string &key) const;
    std::string value(const std::string &key) const;
};

struct DocError : InputError {
    DocError(const std::string &source, int line, const std::string &msg);
    int line;
};

TextDoc parse_textdoc(const std::string &content, const std::string &source);
TextDoc load_textdoc(const std::filesystem::path &path);
std::vector<std::string> tokenize_line(const std::string &line);

const LorentzianLattice &lattice_by_name(const std::string &name);

// "[a b; c d]" integer matrix literal
IMat parse_matrix_literal(const std::string &text);

// Products of factors: -I, I, Ref(expr), a defined name, a matrix literal, basis:[..]; optional leading '-'
Isometry parse_isometry_expr(const LorentzianLattice &L, const std::string &text,
                             const std::map<std::string, Isometry> &env);

} // namespace dp
