#pragma once

#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "kbcount/monomial.hpp"
#include "kbcount/order.hpp"
#include "kbcount/rational.hpp"
#include "kbcount/ring.hpp"

namespace kb {

struct Term {
    Rational coeff;
    Monomial mono;
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Term storage is order-agnostic; sorted views are produced per MonomialOrder.
class Polynomial {
  public:
    using TermMap = std::map<Monomial, Rational>;

    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }

    static Polynomial constant(RingPtr ring, const Rational& c) {
        Polynomial p(ring);
        if (c != 0) p.terms_[Monomial(ring->size())] = c;
        return p;
    }

    static Polynomial var(RingPtr ring, const std::string& name) {
        int i = ring->index_of(name);
        if (i < 0) throw UnboundVariable(name);
        Polynomial p(ring);
        p.terms_[Monomial::unit(ring->size(), i)] = 1;
        return p;
    }

    static Polynomial monomial(RingPtr ring, const Rational& c, Monomial m) {
        if (m.nvars() != ring->size()) throw RingMismatch();
        Polynomial p(std::move(ring));
        if (c != 0) p.terms_[std::move(m)] = c;
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }

    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        auto it = terms_.find(Monomial(ring_->size()));
        return it == terms_.end() ? Rational(0) : it->second;
    }

    std::int64_t total_degree() const {
        std::int64_t d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    void add_term(const Rational& c, const Monomial& m) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        check(o);
        for (const auto& [m, c] : o.terms_) add_term(c, m);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        check(o);
        for (const auto& [m, c] : o.terms_) add_term(-c, m);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    Polynomial operator-() const {
        Polynomial r(ring_);
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check(b);
        Polynomial r(a.ring_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ca * cb, ma * mb);
        return r;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator*(const Rational& c, const Polynomial& p) {
        Polynomial r(p.ring_);
        if (c != 0)
            for (const auto& [m, q] : p.terms_) r.terms_[m] = c * q;
        return r;
    }

    /// c * x^m * p
    Polynomial scaled_shift(const Rational& c, const Monomial& m) const {
        Polynomial r(ring_);
        if (c != 0)
            for (const auto& [mm, q] : terms_) r.terms_[mm * m] = c * q;
        return r;
    }

    Polynomial pow(std::int32_t k) const {
        Polynomial r = constant(ring_, 1);
        Polynomial base = *this;
        while (k > 0) {
            if (k & 1) r = r * base;
            base = (k >>= 1) ? base * base : base;
        }
        return r;
    }

    bool operator==(const Polynomial& o) const {
        return ring_->same_as(*o.ring_) && terms_ == o.terms_;
    }

    /// The ord-maximal term. Throws ZeroPolynomial on 0.
    Term leading_term(const MonomialOrder& ord) const {
        if (terms_.empty()) throw ZeroPolynomial();
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (ord.greater(it->first, best->first)) best = it;
        return {best->second, best->first};
    }

    Monomial leading_monomial(const MonomialOrder& ord) const { return leading_term(ord).mono; }

    Polynomial monic(const MonomialOrder& ord) const {
        if (terms_.empty()) return *this;
        Rational lc = leading_term(ord).coeff;
        Polynomial r(ring_);
        for (const auto& [m, c] : terms_) r.terms_[m] = c / lc;
        return r;
    }

    /// Terms sorted descending under ord.
    std::vector<Term> sorted_terms(const MonomialOrder& ord) const {
        std::vector<Term> ts;
        ts.reserve(terms_.size());
        for (const auto& [m, c] : terms_) ts.push_back({c, m});
        std::sort(ts.begin(), ts.end(),
                  [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
        return ts;
    }

    /// Exact composition. Every variable of *this must be assigned; images share one ring.
    Polynomial substitute(const std::map<std::string, Polynomial>& assignment) const {
        RingPtr target;
        for (const auto& [name, img] : assignment) {
            if (!target)
                target = img.ring();
            else
                require_same_ring(*target, *img.ring());
        }
        if (!target) target = ring_;
        for (std::size_t i = 0; i < ring_->size(); ++i) {
            bool used = false;
            for (const auto& [m, c] : terms_)
                if (m[i] > 0) used = true;
            if (used && !assignment.count(ring_->name(i))) throw UnboundVariable(ring_->name(i));
        }
        Polynomial out = zero(target);
        for (const auto& [m, c] : terms_) {
            Polynomial prod = constant(target, c);
            for (std::size_t i = 0; i < ring_->size(); ++i)
                if (m[i] > 0) prod = prod * assignment.at(ring_->name(i)).pow(m[i]);
            out += prod;
        }
        return out;
    }

    /// Rename variables into another ring by name. Variables absent from the
    /// target are tolerated only if they never occur in a term.
    Polynomial relabel(const RingPtr& target,
                       const std::map<std::string, std::string>& rename = {}) const {
        std::vector<int> map(ring_->size());
        for (std::size_t i = 0; i < ring_->size(); ++i) {
            std::string name = ring_->name(i);
            if (auto it = rename.find(name); it != rename.end()) name = it->second;
            map[i] = target->index_of(name);
        }
        Polynomial out(target);
        for (const auto& [m, c] : terms_) {
            std::vector<std::int32_t> e(target->size(), 0);
            for (std::size_t i = 0; i < ring_->size(); ++i) {
                if (m[i] == 0) continue;
                if (map[i] < 0) throw UnboundVariable(ring_->name(i));
                e[map[i]] += m[i];
            }
            out.add_term(c, Monomial(std::move(e)));
        }
        return out;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        // storage order, reversed, reads roughly degree-descending for typical inputs
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            Rational ac = abs(c);
            os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
            first = false;
            bool coeff_shown = (ac != 1) || m.is_one();
            if (coeff_shown) os << rational_str(ac);
            bool any = false;
            for (std::size_t i = 0; i < m.nvars(); ++i) {
                if (m[i] == 0) continue;
                if (coeff_shown || any) os << "*";
                os << ring_->name(i);
                if (m[i] > 1) os << "^" << m[i];
                any = true;
            }
        }
        return os.str();
    }

    static Polynomial parse(const RingPtr& ring, const std::string& text);

  private:
    void check(const Polynomial& o) const { require_same_ring(*ring_, *o.ring_); }

    RingPtr ring_;
    TermMap terms_;
};

struct PolySystem {
    RingPtr ring;
    std::vector<Polynomial> equations;

    PolySystem() = default;
    PolySystem(RingPtr r, std::vector<Polynomial> eqs)
        : ring(std::move(r)), equations(std::move(eqs)) {
        for (const auto& e : equations) require_same_ring(*ring, *e.ring());
    }
};

namespace detail {

/// Recursive-descent parser: + - * ^ ( ), integer/rational literals, variable names.
class PolyParser {
  public:
    PolyParser(RingPtr ring, const std::string& s) : ring_(std::move(ring)), s_(s) {}

    Polynomial run() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("trailing input at position " + std::to_string(pos_));
        return p;
    }

  private:
    Polynomial expr() {
        Polynomial acc = Polynomial::zero(ring_);
        int sign = 1;
        skip_ws();
        if (peek() == '+' || peek() == '-') sign = (get() == '-') ? -1 : 1;
        acc += Rational(sign) * term();
        while (true) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            get();
            acc += Rational(c == '-' ? -1 : 1) * term();
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (true) {
            skip_ws();
            if (peek() == '*') {
                get();
                acc = acc * factor();
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial base = atom();
        skip_ws();
        if (peek() == '^') {
            get();
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) throw ParseError("expected exponent");
            base = base.pow(std::stoi(s_.substr(start, pos_ - start)));
        }
        return base;
    }

    Polynomial atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            get();
            Polynomial p = expr();
            skip_ws();
            if (get() != ')') throw ParseError("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/'))
                ++pos_;
            return Polynomial::constant(ring_, parse_rational(s_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' ||
                    s_[pos_] == '\''))
                ++pos_;
            return Polynomial::var(ring_, s_.substr(start, pos_ - start));
        }
        throw ParseError(std::string("unexpected character '") + c + "'");
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }

    RingPtr ring_;
    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial Polynomial::parse(const RingPtr& ring, const std::string& text) {
    return detail::PolyParser(ring, text).run();
}

}  // namespace kb
