#include "hsg/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "hsg/stable.hpp"
#include "hsg/theta.hpp"

namespace hsg {

namespace {

std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

struct Section {
    std::string header;
    int line = 0;
    std::vector<std::pair<std::string, std::string>> entries;
    const std::string* find(const std::string& key) const {
        for (const auto& [k, v] : entries)
            if (k == key) return &v;
        return nullptr;
    }
};

[[noreturn]] void fail(const std::string& origin, int line, const std::string& msg) {
    throw Error(origin + ":" + std::to_string(line) + ": " + msg);
}

} // namespace

const GradedModule& SessionConfig::module(const std::string& name) const {
    for (const auto& [n, m] : modules)
        if (n == name) return m;
    throw Error("unknown module name '" + name + "'");
}

bool SessionConfig::has_module(const std::string& name) const {
    for (const auto& [n, m] : modules)
        if (n == name) return true;
    return false;
}

SessionConfig parse_config_text(const std::string& text, const std::string& origin) {
    std::vector<Section> sections;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto pos = line.find('#'); pos != std::string::npos) line = line.substr(0, pos);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') fail(origin, lineno, "unterminated section header");
            sections.push_back({trim(line.substr(1, line.size() - 2)), lineno, {}});
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) fail(origin, lineno, "expected 'key = value'");
        if (sections.empty()) fail(origin, lineno, "entry outside any section");
        sections.back().entries.push_back({trim(line.substr(0, eq)), trim(line.substr(eq + 1))});
    }

    const Section* ring_sec = nullptr;
    for (const auto& s : sections)
        if (s.header == "ring") {
            if (ring_sec) fail(origin, s.line, "duplicate [ring] section");
            ring_sec = &s;
        }
    if (!ring_sec) throw Error(origin + ": missing [ring] section");

    const std::string* pchar = ring_sec->find("char");
    const std::string* pvars = ring_sec->find("vars");
    if (!pchar) fail(origin, ring_sec->line, "missing 'char' in [ring]");
    if (!pvars) fail(origin, ring_sec->line, "missing 'vars' in [ring]");
    uint32_t p = 0;
    try {
        p = static_cast<uint32_t>(std::stoul(*pchar));
    } catch (...) {
        fail(origin, ring_sec->line, "invalid characteristic '" + *pchar + "'");
    }
    std::vector<std::string> vars = split(*pvars, ',');

    SessionConfig cfg;
    if (const std::string* rel = ring_sec->find("relation"); rel && !rel->empty())
        cfg.ring = define_hypersurface(p, vars, *rel);
    else
        cfg.ring = ambient_ring(p, vars);

    for (const auto& s : sections) {
        if (s.header == "ring") continue;
        if (s.header.rfind("module", 0) != 0)
            fail(origin, s.line, "unknown section [" + s.header + "]");
        std::string name = trim(s.header.substr(6));
        if (name.empty()) fail(origin, s.line, "module section needs a name");
        if (cfg.has_module(name)) fail(origin, s.line, "duplicate module '" + name + "'");

        const std::string* kind = s.find("kind");
        if (!kind) fail(origin, s.line, "missing 'kind' for module " + name);

        auto parse_exprs = [&](const std::string& text_list) {
            std::vector<VecPoly> out;
            for (const auto& e : split(text_list, ','))
                out.push_back(parse_polynomial(e, *cfg.ring.ctx));
            return out;
        };

        GradedModule m;
        if (*kind == "ideal") {
            const std::string* gens = s.find("generators");
            if (!gens) fail(origin, s.line, "kind = ideal needs 'generators'");
            try {
                m = ideal_module(cfg.ring, parse_exprs(*gens));
            } catch (const Error& e) {
                fail(origin, s.line, std::string(e.what()));
            }
        } else if (*kind == "cokernel") {
            const std::string* mat = s.find("matrix");
            if (!mat) fail(origin, s.line, "kind = cokernel needs 'matrix'");
            std::vector<std::vector<VecPoly>> rows;
            for (const auto& row : split(*mat, ';')) rows.push_back(parse_exprs(row));
            const size_t ncols = rows.empty() ? 0 : rows[0].size();
            for (const auto& row : rows)
                if (row.size() != ncols) fail(origin, s.line, "ragged matrix rows");
            std::vector<int64_t> shifts(rows.size(), 0);
            if (const std::string* sh = s.find("shifts")) {
                auto parts = split(*sh, ',');
                if (parts.size() != rows.size())
                    fail(origin, s.line, "shifts count must match matrix row count");
                for (size_t i = 0; i < parts.size(); ++i) shifts[i] = std::stoll(parts[i]);
            }
            std::vector<VecPoly> cols;
            for (size_t j = 0; j < ncols; ++j) {
                VecPoly col(cfg.ring.nvars());
                for (size_t i = 0; i < rows.size(); ++i)
                    for (size_t t = 0; t < rows[i][j].nterms(); ++t)
                        col.push_term(rows[i][j].coeff(t), static_cast<int32_t>(i),
                                      rows[i][j].exp_row(t));
                col.normalize(cfg.ring.p(), ModuleOrder{});
                cols.push_back(std::move(col));
            }
            try {
                m = make_module(cfg.ring, std::move(shifts), std::move(cols));
            } catch (const Error& e) {
                fail(origin, s.line, std::string(e.what()));
            }
        } else if (*kind == "free") {
            std::vector<int64_t> shifts{0};
            if (const std::string* sh = s.find("shifts")) {
                shifts.clear();
                for (const auto& part : split(*sh, ',')) shifts.push_back(std::stoll(part));
            }
            m = free_module(cfg.ring, std::move(shifts));
        } else if (kind->rfind("dual-of", 0) == 0) {
            std::string ref = trim(kind->substr(7));
            if (!cfg.has_module(ref)) fail(origin, s.line, "unknown module '" + ref + "'");
            m = dual_module(cfg.module(ref)).module;
        } else if (kind->rfind("syzygy-of", 0) == 0) {
            std::string ref = trim(kind->substr(9));
            if (!cfg.has_module(ref)) fail(origin, s.line, "unknown module '" + ref + "'");
            m = first_syzygy(cfg.module(ref));
        } else if (kind->rfind("pushforward-of", 0) == 0) {
            std::string ref = trim(kind->substr(14));
            if (!cfg.has_module(ref)) fail(origin, s.line, "unknown module '" + ref + "'");
            try {
                m = pushforward(cfg.module(ref)).m1;
            } catch (const Error& e) {
                fail(origin, s.line, std::string(e.what()));
            }
        } else {
            fail(origin, s.line, "unknown module kind '" + *kind + "'");
        }
        cfg.modules.push_back({std::move(name), std::move(m)});
    }
    return cfg;
}

SessionConfig parse_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str(), path);
}

} // namespace hsg
