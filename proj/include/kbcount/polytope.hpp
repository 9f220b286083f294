#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "kbcount/intmat.hpp"
#include "kbcount/polynomial.hpp"
#include "kbcount/rational.hpp"

namespace kb {

/// Exact determinant, Bareiss fraction-free elimination.
inline Integer int_det(IntMat A) {
    std::size_t n = A.size();
    if (n == 0) return 1;
    Integer denom = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n - 1; ++k) {
        std::size_t pivot = k;
        while (pivot < n && A[pivot][k] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            std::swap(A[pivot], A[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                A[i][j] = A[i][j] * A[k][k] - A[i][k] * A[k][j];
                A[i][j] /= denom;  // exact by Bareiss
            }
        denom = A[k][k];
    }
    return sign > 0 ? A[n - 1][n - 1] : -A[n - 1][n - 1];
}

struct Hyperplane {
    IntVec normal;   // inner normal convention: normal . x <= offset on the polytope
    Integer offset;
    bool operator<(const Hyperplane& o) const {
        if (normal != o.normal) return normal < o.normal;
        return offset < o.offset;
    }
    bool operator==(const Hyperplane& o) const = default;
};

struct HullFacet {
    IntVec normal;  // outward; normal . x <= offset, equality on the facet
    Integer offset;
    std::vector<int> verts;  // d point indices, sorted
};

struct Hull {
    int ambient = 0;
    int affine_dim = -1;            // -1: empty input
    std::vector<IntVec> points;     // deduplicated, lexicographically sorted
    std::vector<int> vertices;      // indices into points
    std::vector<HullFacet> facets;  // simplicial boundary triangulation (full-dim case)
    std::vector<Hyperplane> inequalities;
};

namespace detail {

inline Integer dot(const IntVec& a, const IntVec& b) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// Outward-undirected normal of the hyperplane through d affinely independent
/// points in dimension d (generalized cross product of the difference vectors).
inline IntVec hyperplane_normal(const std::vector<IntVec>& pts, const std::vector<int>& idx) {
    std::size_t d = pts[idx[0]].size();
    IntVec n(d, 0);
    IntMat diff(d - 1, IntVec(d));
    for (std::size_t i = 1; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) diff[i - 1][j] = pts[idx[i]][j] - pts[idx[0]][j];
    for (std::size_t j = 0; j < d; ++j) {
        IntMat minor(d - 1, IntVec(d - 1));
        for (std::size_t r = 0; r < d - 1; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < d; ++c)
                if (c != j) minor[r][cc++] = diff[r][c];
        }
        Integer det = int_det(minor);
        n[j] = (j % 2 == 0) ? det : -det;
    }
    return n;
}

inline void normalize_hyperplane(IntVec& n, Integer& c) {
    Integer g = 0;
    for (const auto& x : n) g = gcd(g, x);
    g = gcd(g, c);
    if (g > 1) {
        for (auto& x : n) x /= g;
        c /= g;
    }
}

/// Greedy affinely independent subset (indices), deterministic.
inline std::vector<int> affine_basis(const std::vector<IntVec>& pts) {
    if (pts.empty()) return {};
    std::vector<int> basis = {0};
    IntMat diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        IntVec d(pts[i].size());
        for (std::size_t j = 0; j < d.size(); ++j) d[j] = pts[i][j] - pts[0][j];
        IntMat trial = diffs;
        trial.push_back(d);
        if (mat_rank(trial) > mat_rank(diffs)) {
            diffs = std::move(trial);
            basis.push_back(static_cast<int>(i));
            if (basis.size() == pts[0].size() + 1) break;
        }
    }
    return basis;
}

Hull hull_full_dim(std::vector<IntVec> pts, const std::vector<int>& basis);

}  // namespace detail

/// Exact convex hull; handles lower-dimensional point sets by flagging the
/// affine dimension (facets are produced only in the full-dimensional case).
inline Hull convex_hull(std::vector<IntVec> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    Hull h;
    h.points = pts;
    if (pts.empty()) return h;
    h.ambient = static_cast<int>(pts[0].size());
    std::vector<int> basis = detail::affine_basis(pts);
    h.affine_dim = static_cast<int>(basis.size()) - 1;

    if (h.affine_dim == 0) {
        h.vertices = {0};
        return h;
    }
    if (h.affine_dim < h.ambient) {
        // project onto a coordinate subspace where the affine hull keeps rank
        std::size_t d = pts[0].size();
        IntMat diffs;
        for (std::size_t b = 1; b < basis.size(); ++b) {
            IntVec v(d);
            for (std::size_t j = 0; j < d; ++j) v[j] = pts[basis[b]][j] - pts[basis[0]][j];
            diffs.push_back(std::move(v));
        }
        std::vector<std::size_t> cols;
        IntMat sel;
        for (std::size_t j = 0; j < d && cols.size() < diffs.size(); ++j) {
            IntMat trial = sel;
            for (std::size_t r = 0; r < diffs.size(); ++r) {
                if (trial.size() <= r) trial.push_back({});
                trial[r].push_back(diffs[r][j]);
            }
            if (mat_rank(trial) > mat_rank(sel)) {
                sel = std::move(trial);
                cols.push_back(j);
            }
        }
        std::vector<IntVec> proj(pts.size(), IntVec(cols.size()));
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t k = 0; k < cols.size(); ++k) proj[i][k] = pts[i][cols[k]];
        Hull sub = convex_hull(proj);
        // map vertices back (projection is injective on the affine hull)
        std::map<IntVec, int> where;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            IntVec key(cols.size());
            for (std::size_t k = 0; k < cols.size(); ++k) key[k] = pts[i][cols[k]];
            where[key] = static_cast<int>(i);
        }
        for (int v : sub.vertices) h.vertices.push_back(where.at(sub.points[v]));
        std::sort(h.vertices.begin(), h.vertices.end());
        return h;
    }
    return detail::hull_full_dim(std::move(pts), basis);
}

namespace detail {

inline Hull hull_full_dim(std::vector<IntVec> pts, const std::vector<int>& basis) {
    Hull h;
    h.points = pts;
    std::size_t d = pts[0].size();
    h.ambient = static_cast<int>(d);
    h.affine_dim = static_cast<int>(d);

    if (d == 1) {
        int lo = 0, hi = static_cast<int>(pts.size()) - 1;  // points sorted
        h.vertices = (lo == hi) ? std::vector<int>{lo} : std::vector<int>{lo, hi};
        h.facets.push_back({{Integer(1)}, pts[hi][0], {hi}});
        h.facets.push_back({{Integer(-1)}, -pts[lo][0], {lo}});
        for (const auto& f : h.facets) h.inequalities.push_back({f.normal, f.offset});
        return h;
    }

    // strictly interior reference point, scaled by (d+1): sum of the basis points
    IntVec interior(d, 0);
    for (int b : basis)
        for (std::size_t j = 0; j < d; ++j) interior[j] += pts[b][j];
    Integer iscale = static_cast<long>(basis.size());

    std::vector<HullFacet> facets;
    auto make_facet = [&](std::vector<int> verts) {
        std::sort(verts.begin(), verts.end());
        IntVec n = hyperplane_normal(pts, verts);
        Integer c = dot(n, pts[verts[0]]);
        // orient outward: interior strictly below
        if (dot(n, interior) > c * iscale) {
            for (auto& x : n) x = -x;
            c = -c;
        }
        return HullFacet{std::move(n), std::move(c), std::move(verts)};
    };

    for (std::size_t k = 0; k < basis.size(); ++k) {
        std::vector<int> verts;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (i != k) verts.push_back(basis[i]);
        facets.push_back(make_facet(std::move(verts)));
    }

    std::set<int> in_basis(basis.begin(), basis.end());
    for (int p = 0; p < static_cast<int>(pts.size()); ++p) {
        if (in_basis.count(p)) continue;
        std::vector<char> visible(facets.size(), 0);
        bool strictly_beyond = false;
        for (std::size_t f = 0; f < facets.size(); ++f) {
            Integer side = dot(facets[f].normal, pts[p]) - facets[f].offset;
            if (side > 0) {
                visible[f] = 1;
                strictly_beyond = true;
            } else if (side == 0) {
                visible[f] = 2;  // coplanar: joins the visible set only if p is outside
            }
        }
        if (!strictly_beyond) continue;  // p inside or on the current hull
        // horizon = ridges with exactly one visible incident facet
        std::map<std::vector<int>, std::vector<std::size_t>> ridge_map;
        for (std::size_t f = 0; f < facets.size(); ++f)
            for (std::size_t skip = 0; skip < facets[f].verts.size(); ++skip) {
                std::vector<int> ridge;
                for (std::size_t i = 0; i < facets[f].verts.size(); ++i)
                    if (i != skip) ridge.push_back(facets[f].verts[i]);
                ridge_map[ridge].push_back(f);
            }
        std::vector<HullFacet> next;
        for (std::size_t f = 0; f < facets.size(); ++f)
            if (!visible[f]) next.push_back(facets[f]);
        for (const auto& [ridge, fs] : ridge_map) {
            int vis = 0;
            for (auto f : fs) vis += visible[f] ? 1 : 0;
            if (vis != 1 || fs.size() != 2) continue;
            std::vector<int> verts = ridge;
            verts.push_back(p);
            next.push_back(make_facet(std::move(verts)));
        }
        facets = std::move(next);
    }

    h.facets = std::move(facets);

    // distinct supporting hyperplanes and exact vertex classification
    std::set<Hyperplane> planes;
    std::map<int, std::set<Hyperplane>> incident;
    for (const auto& f : h.facets) {
        IntVec n = f.normal;
        Integer c = f.offset;
        normalize_hyperplane(n, c);
        Hyperplane hp{n, c};
        planes.insert(hp);
        for (int v : f.verts) incident[v].insert(hp);
    }
    h.inequalities.assign(planes.begin(), planes.end());
    for (const auto& [v, hps] : incident) {
        IntMat normals;
        for (const auto& hp : hps) normals.push_back(hp.normal);
        if (mat_rank(normals) == static_cast<std::size_t>(d)) h.vertices.push_back(v);
    }
    std::sort(h.vertices.begin(), h.vertices.end());
    return h;
}

}  // namespace detail

/// Integer-vertex polytope given by generator points, with cached exact hull.
class LatticePolytope {
  public:
    LatticePolytope() = default;
    LatticePolytope(int ambient_dim, std::vector<IntVec> points)
        : dim_(ambient_dim), points_(std::move(points)) {
        for (const auto& p : points_)
            if (static_cast<int>(p.size()) != dim_)
                throw DimensionMismatch("point dimension differs from ambient dimension");
        if (points_.empty()) throw InvalidParameter("polytope needs at least one point");
    }

    static LatticePolytope from_exponent_columns(const IntMat& rows) {
        // paper-style layout: one row per variable, one column per monomial
        std::size_t nv = rows.size(), nm = col_count(rows);
        std::vector<IntVec> pts(nm, IntVec(nv));
        for (std::size_t i = 0; i < nv; ++i)
            for (std::size_t j = 0; j < nm; ++j) pts[j][i] = rows[i][j];
        return LatticePolytope(static_cast<int>(nv), std::move(pts));
    }

    int ambient_dim() const { return dim_; }
    const std::vector<IntVec>& points() const { return points_; }

    const Hull& hull() const {
        if (!hull_) hull_ = convex_hull(points_);
        return *hull_;
    }

    std::vector<IntVec> vertex_points() const {
        const Hull& h = hull();
        std::vector<IntVec> out;
        for (int v : h.vertices) out.push_back(h.points[v]);
        return out;
    }

    /// Exact Euclidean volume (0 for lower-dimensional polytopes).
    Rational volume() const {
        const Hull& h = hull();
        if (h.affine_dim < dim_ || dim_ == 0) return dim_ == 0 ? Rational(1) : Rational(0);
        int v0 = h.vertices.front();
        Integer total = 0;
        for (const auto& f : h.facets) {
            if (std::find(f.verts.begin(), f.verts.end(), v0) != f.verts.end()) continue;
            IntMat M(dim_, IntVec(dim_));
            for (int i = 0; i < dim_; ++i)
                for (int j = 0; j < dim_; ++j) M[i][j] = h.points[f.verts[i]][j] - h.points[v0][j];
            total += abs(int_det(M));
        }
        Rational vol(total, factorial(static_cast<unsigned long>(dim_)));
        vol.canonicalize();
        return vol;
    }

    /// m! * vol, an integer for lattice polytopes.
    Integer normalized_volume() const {
        Rational nv = Rational(factorial(static_cast<unsigned long>(dim_))) * volume();
        nv.canonicalize();
        if (nv.get_den() != 1) throw NonIntegerResult("normalized volume is not an integer");
        return nv.get_num();
    }

  private:
    int dim_ = 0;
    std::vector<IntVec> points_;
    mutable std::optional<Hull> hull_;
};

inline LatticePolytope minkowski_sum(const std::vector<LatticePolytope>& ps) {
    if (ps.empty()) throw InvalidParameter("empty Minkowski sum");
    int dim = ps[0].ambient_dim();
    std::vector<IntVec> acc = {IntVec(dim, 0)};
    for (const auto& p : ps) {
        if (p.ambient_dim() != dim) throw DimensionMismatch("Minkowski sum dimension mismatch");
        std::vector<IntVec> vs = p.vertex_points();
        std::set<IntVec> next;
        for (const auto& a : acc)
            for (const auto& b : vs) {
                IntVec s(dim);
                for (int j = 0; j < dim; ++j) s[j] = a[j] + b[j];
                next.insert(std::move(s));
            }
        acc.assign(next.begin(), next.end());
    }
    return LatticePolytope(dim, std::move(acc));
}

/// MV(P_1,...,P_m), normalized so that MV(P,...,P) = m! vol(P).
/// Inclusion-exclusion over the 2^m - 1 Minkowski-sum volumes.
inline Integer mixed_volume(const std::vector<LatticePolytope>& ps) {
    std::size_t m = ps.size();
    if (m == 0) throw InvalidParameter("mixed volume of zero polytopes");
    for (const auto& p : ps)
        if (p.ambient_dim() != static_cast<int>(m))
            throw DimensionMismatch("mixed volume needs m polytopes in dimension m");
    Rational total = 0;
    for (std::size_t mask = 1; mask < (std::size_t(1) << m); ++mask) {
        std::vector<LatticePolytope> subset;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (std::size_t(1) << i)) subset.push_back(ps[i]);
        Rational v = minkowski_sum(subset).volume();
        total += ((m - subset.size()) % 2 == 0) ? v : -v;
    }
    total.canonicalize();
    if (total.get_den() != 1) throw NonIntegerResult("mixed volume is not an integer");
    return total.get_num();
}

/// MV(Q_1[k_1],...,Q_r[k_r]) of Thm-style block multiplicities.
inline Integer mv_with_multiplicity(const std::vector<LatticePolytope>& qs,
                                    const std::vector<int>& ks) {
    if (qs.size() != ks.size()) throw DimensionMismatch("polytope/multiplicity count mismatch");
    std::vector<LatticePolytope> expanded;
    for (std::size_t i = 0; i < qs.size(); ++i)
        for (int k = 0; k < ks[i]; ++k) expanded.push_back(qs[i]);
    // single distinct polytope: MV collapses to the normalized volume
    bool all_same = true;
    for (std::size_t i = 1; i < expanded.size(); ++i)
        if (!(expanded[i].points() == expanded[0].points())) all_same = false;
    if (all_same && !expanded.empty() &&
        static_cast<int>(expanded.size()) == expanded[0].ambient_dim())
        return expanded[0].normalized_volume();
    return mixed_volume(expanded);
}

/// Newton polytope: hull of exponent vectors restricted to the kept variables.
/// Dropped coordinates must be constant across terms.
inline LatticePolytope newton_polytope(const Polynomial& p,
                                       const std::vector<std::string>& drop_vars = {}) {
    if (p.is_zero()) throw ZeroPolynomial();
    const Ring& ring = *p.ring();
    std::vector<char> drop(ring.size(), 0);
    for (const auto& name : drop_vars) {
        int i = ring.index_of(name);
        if (i < 0) throw UnboundVariable(name);
        drop[i] = 1;
    }
    for (std::size_t v = 0; v < ring.size(); ++v) {
        if (!drop[v]) continue;
        std::int32_t e0 = p.terms().begin()->first[v];
        for (const auto& [m, c] : p.terms())
            if (m[v] != e0) throw NonconstantDroppedExponent(ring.name(v));
    }
    std::vector<std::size_t> kept;
    for (std::size_t v = 0; v < ring.size(); ++v)
        if (!drop[v]) kept.push_back(v);
    std::vector<IntVec> pts;
    for (const auto& [m, c] : p.terms()) {
        IntVec e(kept.size());
        for (std::size_t k = 0; k < kept.size(); ++k) e[k] = m[kept[k]];
        pts.push_back(std::move(e));
    }
    return LatticePolytope(static_cast<int>(kept.size()), std::move(pts));
}

}  // namespace kb
