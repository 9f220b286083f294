#pragma once

#include <complex>
#include <random>
#include <string>
#include <vector>

#include "kbcount/khovanskii.hpp"
#include "kbcount/polynomial.hpp"

namespace kb {

enum class HBMode { SYMBOLIC_GENERIC, PHYSICAL };

/// F_k / G_k prefactor: C(2k+1, k) / 2^{2k+1}.
inline Rational fourier_coefficient(unsigned long k) {
    Rational q(binomial(2 * k + 1, k), Integer(1) << (2 * k + 1));
    q.canonicalize();
    return q;
}

struct PhysicalParams {
    Rational w0, w, lam, gam;
    std::vector<Rational> alpha;  // alpha_1 .. alpha_{n-1}
};

/// Coefficients of one resonator pair:
/// p = a0 + a1 u + a2 v + sum_k a_{k+2} u (u^2+v^2)^k,
/// q = b0 + b1 u + b2 v + sum_k b_{k+2} v (u^2+v^2)^k.
struct CoefficientMap {
    int n = 2;
    std::vector<Rational> a, b;  // length n+2 each
    bool physical = false;

    static CoefficientMap physical_map(int n, const PhysicalParams& ph) {
        if (n < 2) throw InvalidParameter("nonlinearity needs n >= 2");
        if (static_cast<int>(ph.alpha.size()) != n - 1)
            throw InvalidParameter("need n-1 nonlinear coefficients");
        CoefficientMap m;
        m.n = n;
        m.physical = true;
        m.a.assign(n + 2, 0);
        m.b.assign(n + 2, 0);
        Rational det = (ph.w0 * ph.w0 - ph.w * ph.w) / 2;
        Rational par = ph.lam * ph.w0 * ph.w0 / 4;
        m.a[1] = det - par;
        m.a[2] = ph.gam * ph.w / 2;
        m.b[1] = -m.a[2];
        m.b[2] = det + par;
        for (int k = 1; k <= n - 1; ++k) m.a[k + 2] = m.b[k + 2] = ph.alpha[k - 1] * fourier_coefficient(k);
        m.assert_relations(ph.w0 * ph.w0 - ph.w * ph.w);
        return m;
    }

    static CoefficientMap symbolic(int n, std::mt19937_64& rng, bool respect_relations = false) {
        if (n < 2) throw InvalidParameter("nonlinearity needs n >= 2");
        CoefficientMap m;
        m.n = n;
        m.a.resize(n + 2);
        m.b.resize(n + 2);
        for (auto& c : m.a) c = random_coefficient(rng);
        for (auto& c : m.b) c = random_coefficient(rng);
        if (respect_relations) {
            m.b[1] = -m.a[2];
            for (int k = 3; k <= n + 1; ++k) m.b[k] = m.a[k];
        }
        return m;
    }

    /// a1 + b2 = w0^2 - w^2, a2 + b1 = 0, a_k = b_k (k >= 3).
    void assert_relations(const Rational& detuning) const {
        if (a[1] + b[2] != detuning || a[2] + b[1] != 0)
            throw InvalidParameter("linear coefficient relations violated");
        for (int k = 3; k <= n + 1; ++k)
            if (a[k] != b[k]) throw InvalidParameter("nonlinear coefficient relations violated");
    }
};

namespace detail {

inline Polynomial radial(const Polynomial& u, const Polynomial& v) { return u * u + v * v; }

/// a0 + a1 u + a2 v + sum a_{k+2} w (u^2+v^2)^k, with w = u (p-form) or v (q-form).
inline Polynomial pair_polynomial(const RingPtr& ring, const std::vector<Rational>& c,
                                  const Polynomial& u, const Polynomial& v, const Polynomial& w) {
    Polynomial out = Polynomial::constant(ring, c[0]);
    out += c[1] * u;
    out += c[2] * v;
    Polynomial r2 = radial(u, v);
    Polynomial pw = w;
    for (std::size_t k = 3; k < c.size(); ++k) {
        pw = pw * r2;
        out += c[k] * pw;
    }
    return out;
}

}  // namespace detail

/// The N=1, M=1 harmonic-balance pair over (u, v).
inline PolySystem generate_single(int n, const CoefficientMap& coeffs) {
    if (n < 2 || coeffs.n != n) throw InvalidParameter("coefficient map does not match n");
    RingPtr ring = Ring::make({"u", "v"});
    Polynomial u = Polynomial::var(ring, "u"), v = Polynomial::var(ring, "v");
    return PolySystem(ring, {detail::pair_polynomial(ring, coeffs.a, u, v, u),
                             detail::pair_polynomial(ring, coeffs.b, u, v, v)});
}

/// Coupling convention for the N-resonator system: either the physical form
/// (1/2) J_{j,i} u_j / (1/2) J_{j,i} v_j, or the generalized form with
/// independent matrices, c_{j,i} v_j in p_i and d_{j,i} u_j in q_i.
struct CouplingSpec {
    bool general = false;
    std::vector<std::vector<Rational>> J;     // used when general == false
    std::vector<std::vector<Rational>> C, D;  // used when general == true
};

inline PolySystem generate_coupled(int N, int n, const std::vector<CoefficientMap>& coeffs,
                                   const CouplingSpec& coupling) {
    if (N < 1) throw InvalidParameter("need N >= 1 resonators");
    if (static_cast<int>(coeffs.size()) != N)
        throw InvalidParameter("one coefficient map per resonator required");
    auto check = [&](const std::vector<std::vector<Rational>>& M, const char* what) {
        if (static_cast<int>(M.size()) != N) throw DimensionMismatch(std::string(what) + " must be NxN");
        for (const auto& row : M)
            if (static_cast<int>(row.size()) != N)
                throw DimensionMismatch(std::string(what) + " must be NxN");
    };
    if (coupling.general) {
        check(coupling.C, "coupling matrix C");
        check(coupling.D, "coupling matrix D");
    } else {
        check(coupling.J, "coupling matrix J");
    }

    std::vector<std::string> vars;
    for (int i = 1; i <= N; ++i) {
        vars.push_back("u" + std::to_string(i));
        vars.push_back("v" + std::to_string(i));
    }
    RingPtr ring = Ring::make(vars);
    std::vector<Polynomial> eqs;
    for (int i = 0; i < N; ++i) {
        if (coeffs[i].n != n) throw InvalidParameter("coefficient map does not match n");
        Polynomial u = Polynomial::var(ring, "u" + std::to_string(i + 1));
        Polynomial v = Polynomial::var(ring, "v" + std::to_string(i + 1));
        Polynomial p = detail::pair_polynomial(ring, coeffs[i].a, u, v, u);
        Polynomial q = detail::pair_polynomial(ring, coeffs[i].b, u, v, v);
        for (int j = 0; j < N; ++j) {
            if (j == i) continue;
            Polynomial uj = Polynomial::var(ring, "u" + std::to_string(j + 1));
            Polynomial vj = Polynomial::var(ring, "v" + std::to_string(j + 1));
            if (coupling.general) {
                p += coupling.C[j][i] * vj;
                q += coupling.D[j][i] * uj;
            } else {
                p += (coupling.J[j][i] / 2) * uj;
                q += (coupling.J[j][i] / 2) * vj;
            }
        }
        eqs.push_back(std::move(p));
        eqs.push_back(std::move(q));
    }
    return PolySystem(ring, std::move(eqs));
}

/// Coefficients of one frequency pair of the M-frequency, n=2 system:
/// p_k = a0 + a1 u_k + c v_k + d u_k(u_k^2+v_k^2) + 2d sum_{j!=k} u_k(u_j^2+v_j^2),
/// q_k = b0 - c u_k + b1 v_k + d v_k(u_k^2+v_k^2) + 2d sum_{j!=k} v_k(u_j^2+v_j^2).
struct MultiCoefficientMap {
    std::vector<Rational> a0, a1, b0, b1, c, d;  // length M each

    static MultiCoefficientMap physical_map(const Rational& w0, const std::vector<Rational>& ws,
                                            const Rational& lam, const Rational& gam,
                                            const Rational& alpha) {
        MultiCoefficientMap m;
        std::size_t M = ws.size();
        Rational par = lam * w0 * w0 / 4;
        for (std::size_t k = 0; k < M; ++k) {
            Rational det = (w0 * w0 - ws[k] * ws[k]) / 2;
            m.a0.push_back(0);
            m.b0.push_back(0);
            m.a1.push_back(k == 0 ? det - par : det);  // parametric drive only at k=1
            m.b1.push_back(k == 0 ? det + par : det);
            m.c.push_back(gam * ws[k] / 2);
            m.d.push_back(alpha * fourier_coefficient(1));
        }
        return m;
    }

    static MultiCoefficientMap symbolic(int M, std::mt19937_64& rng) {
        MultiCoefficientMap m;
        for (int k = 0; k < M; ++k) {
            m.a0.push_back(random_coefficient(rng));
            m.b0.push_back(random_coefficient(rng));
            m.a1.push_back(random_coefficient(rng));
            m.b1.push_back(random_coefficient(rng));
            m.c.push_back(random_coefficient(rng));
            m.d.push_back(random_coefficient(rng));
        }
        return m;
    }
};

inline PolySystem generate_multifreq(int M, const MultiCoefficientMap& coeffs) {
    if (M < 1) throw InvalidParameter("need M >= 1 frequencies");
    if (static_cast<int>(coeffs.d.size()) != M)
        throw InvalidParameter("one coefficient set per frequency required");
    std::vector<std::string> vars;
    for (int k = 1; k <= M; ++k) {
        vars.push_back("u" + std::to_string(k));
        vars.push_back("v" + std::to_string(k));
    }
    RingPtr ring = Ring::make(vars);
    std::vector<Polynomial> eqs;
    for (int k = 0; k < M; ++k) {
        Polynomial u = Polynomial::var(ring, "u" + std::to_string(k + 1));
        Polynomial v = Polynomial::var(ring, "v" + std::to_string(k + 1));
        Polynomial p = Polynomial::constant(ring, coeffs.a0[k]) + coeffs.a1[k] * u + coeffs.c[k] * v +
                       coeffs.d[k] * (u * detail::radial(u, v));
        Polynomial q = Polynomial::constant(ring, coeffs.b0[k]) - coeffs.c[k] * u + coeffs.b1[k] * v +
                       coeffs.d[k] * (v * detail::radial(u, v));
        for (int j = 0; j < M; ++j) {
            if (j == k) continue;
            Polynomial uj = Polynomial::var(ring, "u" + std::to_string(j + 1));
            Polynomial vj = Polynomial::var(ring, "v" + std::to_string(j + 1));
            Polynomial r2 = detail::radial(uj, vj);
            p += (2 * coeffs.d[k]) * (u * r2);
            q += (2 * coeffs.d[k]) * (v * r2);
        }
        eqs.push_back(std::move(p));
        eqs.push_back(std::move(q));
    }
    return PolySystem(ring, std::move(eqs));
}

/// Trapezoidal quadrature of (a e^{i t} + a* e^{-i t})^{2k+1} e^{-i t} over a
/// period, compared to the closed form C(2k+1, k) a |a|^{2k}. Exact up to
/// aliasing for grid > 2(2k+2), so the deviation is at rounding level.
inline double fourier_quadrature_check(unsigned long k, std::complex<double> a, int grid) {
    if (grid < static_cast<int>(4 * k + 4)) throw InvalidParameter("quadrature grid too coarse");
    const double pi = 3.14159265358979323846;
    std::complex<double> acc = 0;
    for (int j = 0; j < grid; ++j) {
        double t = 2 * pi * j / grid;
        std::complex<double> e(std::cos(t), std::sin(t));
        std::complex<double> base = a * e + std::conj(a) * std::conj(e);
        std::complex<double> pw = 1;
        for (unsigned long i = 0; i < 2 * k + 1; ++i) pw *= base;
        acc += pw * std::conj(e);
    }
    acc /= static_cast<double>(grid);
    double binom = binomial(2 * k + 1, k).get_d();
    std::complex<double> closed = binom * a * std::pow(std::abs(a), 2.0 * k);
    return std::abs(acc - closed);
}

enum class LowerBoundKind { SINGLE, MULTI };

/// The explicit specializations used for the lower-bound counts:
/// SINGLE(n, c): { c u + v + u r^{2n-2}, -u + v r^{2n-2} }, c not in {0, 2, -2};
/// MULTI(M): { u_k + v_k + u_k R_k, -u_k + v_k R_k } with
/// R_k = r_k^2 + 2 sum_{j!=k} r_j^2.
inline PolySystem lower_bound_system(LowerBoundKind kind, int size, const Rational& parameter = 3) {
    if (kind == LowerBoundKind::SINGLE) {
        int n = size;
        if (n < 2) throw InvalidParameter("nonlinearity needs n >= 2");
        if (parameter == 0 || parameter == 2 || parameter == -2)
            throw DegenerateParameter("parameter must avoid {0, 2, -2}");
        RingPtr ring = Ring::make({"u", "v"});
        Polynomial u = Polynomial::var(ring, "u"), v = Polynomial::var(ring, "v");
        Polynomial rp = detail::radial(u, v).pow(n - 1);
        return PolySystem(ring, {parameter * u + v + u * rp, -u + v * rp});
    }
    int M = size;
    if (M < 1) throw InvalidParameter("need M >= 1 frequencies");
    std::vector<std::string> vars;
    for (int k = 1; k <= M; ++k) {
        vars.push_back("u" + std::to_string(k));
        vars.push_back("v" + std::to_string(k));
    }
    RingPtr ring = Ring::make(vars);
    std::vector<Polynomial> eqs;
    for (int k = 0; k < M; ++k) {
        Polynomial u = Polynomial::var(ring, "u" + std::to_string(k + 1));
        Polynomial v = Polynomial::var(ring, "v" + std::to_string(k + 1));
        Polynomial R = detail::radial(u, v);
        for (int j = 0; j < M; ++j) {
            if (j == k) continue;
            Polynomial uj = Polynomial::var(ring, "u" + std::to_string(j + 1));
            Polynomial vj = Polynomial::var(ring, "v" + std::to_string(j + 1));
            R += Rational(2) * detail::radial(uj, vj);
        }
        eqs.push_back(u + v + u * R);
        eqs.push_back(-u + v * R);
    }
    return PolySystem(ring, std::move(eqs));
}

/// The unmixed n-family {1, u, v, u(u^2+v^2)^k, v(u^2+v^2)^k : k < n} with two
/// equations, the subject of the trapezoid count.
inline BlockFamily resonator_family(int n) {
    if (n < 2) throw InvalidParameter("family needs n >= 2");
    RingPtr ring = Ring::make({"u", "v"});
    Polynomial u = Polynomial::var(ring, "u"), v = Polynomial::var(ring, "v");
    Polynomial r2 = detail::radial(u, v);
    std::vector<Polynomial> gens = {Polynomial::constant(ring, 1)};
    Polynomial pu = u, pv = v;
    gens.push_back(pu);
    gens.push_back(pv);
    for (int k = 1; k < n; ++k) {
        pu = pu * r2;
        pv = pv * r2;
        gens.push_back(pu);
        gens.push_back(pv);
    }
    return BlockFamily::unmixed(ring, std::move(gens), 2);
}

/// N variable-disjoint copies of the n-family sharing one constant and one
/// label, with 2N equations; the input of the decoupled certification.
inline BlockFamily coupled_family(int N, int n) {
    if (N < 1) throw InvalidParameter("need N >= 1 resonators");
    std::vector<std::string> vars;
    for (int i = 1; i <= N; ++i) {
        vars.push_back("u" + std::to_string(i));
        vars.push_back("v" + std::to_string(i));
    }
    RingPtr ring = Ring::make(vars);
    std::vector<Polynomial> gens = {Polynomial::constant(ring, 1)};
    for (int i = 1; i <= N; ++i) {
        Polynomial u = Polynomial::var(ring, "u" + std::to_string(i));
        Polynomial v = Polynomial::var(ring, "v" + std::to_string(i));
        Polynomial r2 = detail::radial(u, v);
        Polynomial pu = u, pv = v;
        gens.push_back(pu);
        gens.push_back(pv);
        for (int k = 1; k < n; ++k) {
            pu = pu * r2;
            pv = pv * r2;
            gens.push_back(pu);
            gens.push_back(pv);
        }
    }
    return BlockFamily::unmixed(ring, std::move(gens), 2 * N);
}

/// Element-index partition of coupled_family(N, n): the shared constant plus
/// each resonator's own generators.
inline std::vector<std::vector<int>> coupled_partition(int N, int n) {
    std::vector<std::vector<int>> parts;
    int per = 2 * n;  // non-constant elements per resonator
    for (int i = 0; i < N; ++i) {
        std::vector<int> part = {0};
        for (int t = 0; t < per; ++t) part.push_back(1 + i * per + t);
        parts.push_back(std::move(part));
    }
    return parts;
}

}  // namespace kb
