#pragma once

#include "hsg/module.hpp"

namespace hsg {

// A session: one ring and named module definitions, loaded from the sectioned
// plain-text format:
//
//   [ring]
//   char = 32003
//   vars = x, y, u, v
//   relation = x*u - y*v     # omit for the ambient polynomial ring
//
//   [module M]
//   kind = ideal             # ideal | cokernel | free | dual-of NAME |
//   generators = x, y        #   syzygy-of NAME | pushforward-of NAME
//
//   [module N]
//   kind = cokernel
//   matrix = x, z; z, y      # row-major, ';' separates rows
//   shifts = 0, 0            # optional target degrees, default 0
//
// Modules may reference previously defined ones.  '#' starts a comment.
struct SessionConfig {
    Ring ring;
    std::vector<std::pair<std::string, GradedModule>> modules;

    const GradedModule& module(const std::string& name) const;
    bool has_module(const std::string& name) const;
};

SessionConfig parse_config_text(const std::string& text, const std::string& origin = "<config>");
SessionConfig parse_config_file(const std::string& path);

} // namespace hsg
