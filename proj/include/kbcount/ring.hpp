#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "kbcount/errors.hpp"

namespace kb {

/// Immutable ordered variable list. Variable identity is by name.
class Ring {
  public:
    explicit Ring(std::vector<std::string> vars) : vars_(std::move(vars)) {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            for (std::size_t j = i + 1; j < vars_.size(); ++j)
                if (vars_[i] == vars_[j])
                    throw InvalidParameter("duplicate variable '" + vars_[i] + "'");
    }

    static std::shared_ptr<const Ring> make(std::vector<std::string> vars) {
        return std::make_shared<const Ring>(std::move(vars));
    }

    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t size() const { return vars_.size(); }
    const std::string& name(std::size_t i) const { return vars_[i]; }

    int index_of(const std::string& name) const {
        auto it = std::find(vars_.begin(), vars_.end(), name);
        return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
    }

    bool same_as(const Ring& other) const {
        return this == &other || vars_ == other.vars_;
    }

  private:
    std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline void require_same_ring(const Ring& a, const Ring& b) {
    if (!a.same_as(b)) throw RingMismatch();
}

}  // namespace kb
