#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <vector>

#include "kbcount/errors.hpp"

namespace kb {

/// Exponent vector; length equals the ambient ring's variable count.
/// Exponents are machine integers with an overflow guard (degrees in scope stay tiny).
class Monomial {
  public:
    static constexpr std::int32_t kMaxExponent = 1 << 24;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<std::int32_t> exps) : e_(std::move(exps)) {
        for (auto x : e_)
            if (x < 0 || x > kMaxExponent) throw InvalidParameter("exponent out of range");
    }

    static Monomial unit(std::size_t nvars, std::size_t var, std::int32_t power = 1) {
        Monomial m(nvars);
        m.e_[var] = power;
        return m;
    }

    std::size_t nvars() const { return e_.size(); }
    std::int32_t operator[](std::size_t i) const { return e_[i]; }
    const std::vector<std::int32_t>& exponents() const { return e_; }

    std::int64_t degree() const {
        return std::accumulate(e_.begin(), e_.end(), std::int64_t{0});
    }

    bool is_one() const {
        for (auto x : e_)
            if (x != 0) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        check_len(o);
        Monomial r(e_.size());
        for (std::size_t i = 0; i < e_.size(); ++i) {
            r.e_[i] = e_[i] + o.e_[i];
            if (r.e_[i] > kMaxExponent) throw InvalidParameter("exponent overflow");
        }
        return r;
    }

    bool divides(const Monomial& o) const {
        check_len(o);
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    /// o / this, assuming divisibility.
    Monomial divide_into(const Monomial& o) const {
        check_len(o);
        Monomial r(e_.size());
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = o.e_[i] - e_[i];
        return r;
    }

    Monomial lcm(const Monomial& o) const {
        check_len(o);
        Monomial r(e_.size());
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = std::max(e_[i], o.e_[i]);
        return r;
    }

    bool coprime(const Monomial& o) const {
        check_len(o);
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > 0 && o.e_[i] > 0) return false;
        return true;
    }

    Monomial pow(std::int32_t k) const {
        Monomial r(e_.size());
        for (std::size_t i = 0; i < e_.size(); ++i) {
            std::int64_t v = std::int64_t(e_[i]) * k;
            if (v > kMaxExponent) throw InvalidParameter("exponent overflow");
            r.e_[i] = static_cast<std::int32_t>(v);
        }
        return r;
    }

    // Storage order only (canonical map key); monomial orders live in order.hpp.
    auto operator<=>(const Monomial&) const = default;

  private:
    void check_len(const Monomial& o) const {
        if (e_.size() != o.e_.size()) throw RingMismatch();
    }

    std::vector<std::int32_t> e_;
};

}  // namespace kb
