#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hsg/field.hpp"

namespace hsg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Session context: the prime characteristic and the ordered variable list of
// the ambient polynomial ring.  Frozen at construction; shared by handle.
class Context {
public:
    Context(uint32_t p, std::vector<std::string> vars) : p_(p), vars_(std::move(vars)) {
        if (!is_prime_u32(p_)) throw Error("characteristic must be prime, got " + std::to_string(p_));
        if (vars_.empty()) throw Error("variable list must be nonempty");
        for (size_t i = 0; i < vars_.size(); ++i)
            for (size_t j = i + 1; j < vars_.size(); ++j)
                if (vars_[i] == vars_[j]) throw Error("duplicate variable '" + vars_[i] + "'");
    }

    uint32_t p() const { return p_; }
    int nvars() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::string& var(int i) const { return vars_[static_cast<size_t>(i)]; }

    // -1 when unknown
    int var_index(const std::string& name) const {
        for (size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return static_cast<int>(i);
        return -1;
    }

    bool same_as(const Context& other) const {
        return p_ == other.p_ && vars_ == other.vars_;
    }

private:
    uint32_t p_;
    std::vector<std::string> vars_;
};

using ContextPtr = std::shared_ptr<const Context>;

} // namespace hsg
