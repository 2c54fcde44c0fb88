#pragma once

#include <map>
#include <string>

#include "darboux3/vectorfield.hpp"

namespace dbx {

struct SystemFile {
    VectorField field;
    std::map<std::string, Rational> params;
};

// Line-oriented system definition: '#' starts a comment, the first content line
// is "vars: x y z", then any mix of "param name = rational" lines and the three
// equations "dx|dy|dz = expr" (each exactly once, parameters bound before use).
SystemFile parse_system_text(const std::string& text, const std::string& name);

SystemFile load_system_file(const std::string& path);

}  // namespace dbx
