#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gml/error.hpp"

namespace gml {

// Ordered list of variable names. The declared order fixes the graded
// lexicographic term order, so it is part of every problem description.
class Ring {
public:
    Ring() : vars_(std::make_shared<const std::vector<std::string>>()) {}

    explicit Ring(std::vector<std::string> vars)
        : vars_(std::make_shared<const std::vector<std::string>>(std::move(vars))) {
        for (size_t i = 0; i < size(); ++i)
            for (size_t j = i + 1; j < size(); ++j)
                if (name(i) == name(j))
                    fail("core/ring", "duplicate variable name: " + name(i));
    }

    size_t size() const { return vars_->size(); }
    const std::string& name(size_t i) const { return (*vars_)[i]; }
    const std::vector<std::string>& names() const { return *vars_; }

    std::optional<size_t> find(const std::string& v) const {
        for (size_t i = 0; i < size(); ++i)
            if ((*vars_)[i] == v) return i;
        return std::nullopt;
    }

    size_t index(const std::string& v) const {
        auto i = find(v);
        if (!i) fail("core/ring", "unknown variable: " + v);
        return *i;
    }

    bool operator==(const Ring& o) const {
        return vars_ == o.vars_ || *vars_ == *o.vars_;
    }
    bool operator!=(const Ring& o) const { return !(*this == o); }

private:
    std::shared_ptr<const std::vector<std::string>> vars_;
};

} // namespace gml
