#include "darboux3/systemfile.hpp"

#include <array>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "darboux3/errors.hpp"
#include "darboux3/parse.hpp"

namespace dbx {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

bool valid_ident(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
        return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

}  // namespace

SystemFile parse_system_text(const std::string& text, const std::string& name) {
    SystemFile sf;
    sf.field.description = name;
    Bindings bindings;
    bool saw_vars = false;
    std::array<bool, 3> have_eq{false, false, false};
    std::array<Polynomial, 3> eq;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;

        if (!saw_vars) {
            if (split_ws(line) != std::vector<std::string>{"vars:", "x", "y", "z"})
                throw SystemFileError("expected 'vars: x y z' as the first declaration", lineno);
            saw_vars = true;
            continue;
        }

        const auto eq_pos = line.find('=');
        if (eq_pos == std::string::npos)
            throw SystemFileError("expected 'param name = value' or 'dx|dy|dz = expr'", lineno);
        const std::string lhs = trim(line.substr(0, eq_pos));
        const std::string rhs = trim(line.substr(eq_pos + 1));
        const auto lhs_toks = split_ws(lhs);

        try {
            if (lhs_toks.size() == 2 && lhs_toks[0] == "param") {
                const std::string& ident = lhs_toks[1];
                if (!valid_ident(ident))
                    throw SystemFileError("bad parameter name '" + ident + "'", lineno);
                if (ident == "x" || ident == "y" || ident == "z")
                    throw SystemFileError("parameter may not shadow a variable", lineno);
                if (bindings.count(ident))
                    throw SystemFileError("duplicate parameter '" + ident + "'", lineno);
                bindings.emplace(ident, Rational::from_string(rhs));
            } else if (lhs_toks.size() == 1 &&
                       (lhs == "dx" || lhs == "dy" || lhs == "dz")) {
                const int var = lhs[1] - 'x';
                if (have_eq[var])
                    throw SystemFileError("duplicate equation for " + lhs, lineno);
                eq[var] = parse_polynomial(rhs, bindings);
                have_eq[var] = true;
            } else {
                throw SystemFileError("unrecognized declaration '" + lhs + "'", lineno);
            }
        } catch (const SystemFileError&) {
            throw;
        } catch (const Error& e) {
            throw SystemFileError(e.what(), lineno);
        }
    }

    if (!saw_vars) throw SystemFileError("missing 'vars: x y z' declaration", lineno);
    for (int v = 0; v < 3; ++v)
        if (!have_eq[v])
            throw SystemFileError(std::string("missing equation for d") +
                                      static_cast<char>('x' + v),
                                  lineno);

    sf.field.P = eq[0];
    sf.field.Q = eq[1];
    sf.field.R = eq[2];
    sf.params = std::move(bindings);
    return sf;
}

SystemFile load_system_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_system_text(buf.str(), std::filesystem::path(path).stem().string());
}

}  // namespace dbx
