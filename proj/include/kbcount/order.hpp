#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kbcount/monomial.hpp"
#include "kbcount/rational.hpp"
#include "kbcount/ring.hpp"

namespace kb {

enum class OrderKind { Lex, DegLex, DegRevLex };

/// Total multiplicative well-order on monomials of a fixed ring.
///
/// Built from an optional weight vector (compared first) and a list of variable
/// blocks, each with its own base comparison. Block lists double as elimination
/// orders: any monomial touching an earlier block beats a monomial that does not,
/// provided the block comparison is degree-compatible.
class MonomialOrder {
  public:
    struct Block {
        std::vector<int> vars;  // priority order inside the block, largest first
        OrderKind kind = OrderKind::DegRevLex;
    };

    static MonomialOrder simple(const Ring& ring, OrderKind kind) {
        std::vector<int> all(ring.size());
        for (std::size_t i = 0; i < ring.size(); ++i) all[i] = static_cast<int>(i);
        return MonomialOrder({Block{all, kind}}, {});
    }

    static MonomialOrder lex(const Ring& r) { return simple(r, OrderKind::Lex); }
    static MonomialOrder deglex(const Ring& r) { return simple(r, OrderKind::DegLex); }
    static MonomialOrder degrevlex(const Ring& r) { return simple(r, OrderKind::DegRevLex); }

    /// Same kinds with an explicit variable priority (names, largest first).
    static MonomialOrder with_priority(const Ring& ring, OrderKind kind,
                                       const std::vector<std::string>& priority) {
        if (priority.size() != ring.size())
            throw InvalidParameter("priority list must mention every variable once");
        std::vector<int> idx;
        idx.reserve(priority.size());
        for (const auto& name : priority) {
            int i = ring.index_of(name);
            if (i < 0) throw UnboundVariable(name);
            idx.push_back(i);
        }
        return MonomialOrder({Block{idx, kind}}, {});
    }

    static MonomialOrder blocks(std::vector<Block> bs) { return MonomialOrder(std::move(bs), {}); }

    static MonomialOrder weighted(std::vector<Integer> w, const MonomialOrder& tie) {
        return MonomialOrder(tie.blocks_, std::move(w));
    }

    /// Block elimination order: dropped variables dominate.
    static MonomialOrder elimination(const Ring& ring, const std::vector<int>& drop) {
        std::vector<char> dropped(ring.size(), 0);
        for (int i : drop) dropped[i] = 1;
        Block front, back;
        for (std::size_t i = 0; i < ring.size(); ++i)
            (dropped[i] ? front.vars : back.vars).push_back(static_cast<int>(i));
        std::vector<Block> bs;
        if (!front.vars.empty()) bs.push_back(front);
        if (!back.vars.empty()) bs.push_back(back);
        return MonomialOrder(std::move(bs), {});
    }

    /// +1 if a > b, 0 if equal, -1 if a < b.
    int compare(const Monomial& a, const Monomial& b) const {
        if (a.nvars() != b.nvars()) throw RingMismatch();
        if (!weights_.empty()) {
            Integer wa = 0, wb = 0;
            for (std::size_t i = 0; i < weights_.size(); ++i) {
                wa += weights_[i] * a[i];
                wb += weights_[i] * b[i];
            }
            if (wa != wb) return wa > wb ? 1 : -1;
        }
        for (const auto& blk : blocks_) {
            int c = compare_block(blk, a, b);
            if (c != 0) return c;
        }
        return 0;
    }

    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    const std::vector<Block>& block_list() const { return blocks_; }

  private:
    MonomialOrder(std::vector<Block> bs, std::vector<Integer> w)
        : blocks_(std::move(bs)), weights_(std::move(w)) {}

    static int compare_block(const Block& blk, const Monomial& a, const Monomial& b) {
        if (blk.kind != OrderKind::Lex) {
            std::int64_t da = 0, db = 0;
            for (int v : blk.vars) {
                da += a[v];
                db += b[v];
            }
            if (da != db) return da > db ? 1 : -1;
        }
        if (blk.kind == OrderKind::DegRevLex) {
            for (auto it = blk.vars.rbegin(); it != blk.vars.rend(); ++it)
                if (a[*it] != b[*it]) return a[*it] < b[*it] ? 1 : -1;
            return 0;
        }
        for (int v : blk.vars)
            if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
        return 0;
    }

    std::vector<Block> blocks_;
    std::vector<Integer> weights_;
};

inline std::optional<OrderKind> order_kind_from_name(const std::string& s) {
    if (s == "lex") return OrderKind::Lex;
    if (s == "deglex") return OrderKind::DegLex;
    if (s == "degrevlex") return OrderKind::DegRevLex;
    return std::nullopt;
}

inline std::string order_kind_name(OrderKind k) {
    switch (k) {
        case OrderKind::Lex: return "lex";
        case OrderKind::DegLex: return "deglex";
        default: return "degrevlex";
    }
}

}  // namespace kb
