#pragma once

// Skew-polynomial arithmetic A[y; tau, delta] over the function algebra,
// together with the extension's coproduct, counit and antipode.
//
// The data (chi, r, delta):
//   chi    point evaluation at x0; tau(f)(x) = f(x0*x), a basis bijection
//          e_x -> e_{ldiv(x0,x)}
//   r      an (expected group-like) diagonal multiplier
//   delta  a tau-derivation: zero, twisted h*(tau - id), or a finite basis
//          table
//
// Normal form keeps all y's on the right: products rewrite y*a to
// tau(a)y + delta(a), and y*f to tau_bar(f)y + delta_bar(f) for multiplier
// coefficients.  The coproduct sends y to y(x)1 + r(x)y; covered
// expressions Delta(P)(1(x)Q), (Q(x)1)Delta(P), Delta(P)(Q(x)1) and
// (1(x)Q)Delta(P) all land in finite tensors of polynomials, computed here
// without truncation.

#include <functional>
#include <optional>
#include <set>
#include <utility>

#include "coalgebra.hpp"

namespace mhcq {

struct OreError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Character {
    Point point;
    // Fault-injection knob for mutation fixtures: extra unit mass points
    // turn chi into a non-multiplicative functional.  Empty for real data.
    std::vector<Point> extra_points;
};

struct Derivation {
    enum class Kind { Zero, Twisted, Table };
    Kind kind = Kind::Zero;
    DiagMult h;                      // Twisted
    std::map<Point, Element> table;  // Table; zero off the listed basis points
};

struct OreData {
    Character chi;
    DiagMult r;
    Derivation delta;
    // Test knob: drop the r^{-1} factor in S(y), i.e. S(y) := -y.
    bool fault_sy_drop_rinv = false;
};

// ---------------------------------------------------------------------------
// tau and delta.

inline Point tau_point(const AlgebraConfig& cfg, const OreData& d, const Point& x) {
    return cfg.ldiv(d.chi.point, x);
}
inline Point tau_point_inv(const AlgebraConfig& cfg, const OreData& d, const Point& x) {
    return cfg.mul(d.chi.point, x);
}

// The configured tau: linear extension of the basis bijection.
inline Element tau_configured(const AlgebraConfig& cfg, const OreData& d, const Element& a) {
    Element r;
    for (auto& [p, c] : a.coeffs) r.coeffs.emplace(tau_point(cfg, d, p), c);
    return r;
}

// chi as a functional: unit mass at the primary point (plus faults).
inline Scalar chi_value(const AlgebraConfig&, const OreData& d, const Element& a) {
    Scalar v = a.at(d.chi.point);
    for (auto& q : d.chi.extra_points) v += a.at(q);
    return v;
}

// (chi (x) id)Delta(a), evaluated from coproduct components.
inline Element tau_apply(const AlgebraConfig& cfg, const OreData& d, const Element& a) {
    Element r;
    for (auto& [z, c] : a.coeffs) r.add_term(cfg.ldiv(d.chi.point, z), c);
    for (auto& q : d.chi.extra_points)
        for (auto& [z, c] : a.coeffs) r.add_term(cfg.ldiv(q, z), c);
    return r;
}

inline DiagMult tau_shift_mult(const AlgebraConfig& cfg, const OreData& d, const DiagMult& f) {
    return f.tau_shift(cfg, d.chi.point);
}

inline Element delta_apply(const AlgebraConfig& cfg, const OreData& d, const Element& a) {
    switch (d.delta.kind) {
        case Derivation::Kind::Zero:
            return Element{};
        case Derivation::Kind::Twisted:
            return mult_apply(cfg, d.delta.h, tau_configured(cfg, d, a) - a);
        case Derivation::Kind::Table: {
            Element r;
            for (auto& [z, c] : a.coeffs) {
                auto it = d.delta.table.find(z);
                if (it != d.delta.table.end()) r += c * it->second;
            }
            return r;
        }
    }
    return Element{};
}

// Twisted-equivalent form of a table derivation.  On this backend a total
// tau-derivation is pinned down by its diagonal coefficients:
//   delta(e_x) = c_x e_x - c_{tau x} e_{tau x},
// which is h*(tau - id) with h(x) = -c_x.  Tables that do not fit that
// shape are not globally tau-derivations and do not extend to multipliers.
inline DiagMult table_derivation_as_twisted(const AlgebraConfig& cfg, const OreData& d) {
    const auto& tab = d.delta.table;
    std::map<Point, Scalar> c;
    for (auto& [x, v] : tab) {
        Scalar diag = v.at(x);
        if (!diag.is_zero()) c.emplace(x, diag);
    }
    auto c_at = [&](const Point& p) {
        auto it = c.find(p);
        return it == c.end() ? Scalar() : it->second;
    };
    for (auto& [x, v] : tab) {
        Point tx = tau_point(cfg, d, x);
        Element expect;
        expect.add_term(x, c_at(x));
        expect.add_term(tx, -c_at(tx));
        if (!(v == expect))
            throw OreError("table derivation is not a global tau-derivation at basis point " +
                           cfg.render(x) + "; it does not extend to multiplier coefficients");
    }
    for (auto& [x, cx] : c) {
        Point pre = tau_point_inv(cfg, d, x);
        if (!tab.count(pre) && !cx.is_zero())
            throw OreError("table derivation is not a global tau-derivation: delta(e" +
                           cfg.render(pre) + ") would need a term at " + cfg.render(x));
    }
    std::map<Point, Scalar> hmap;
    for (auto& [x, cx] : c) hmap.emplace(x, -cx);
    return DiagMult::table(std::move(hmap), Scalar(0));
}

// delta-bar on diagonal multipliers; nullopt means the zero multiplier.
inline std::optional<DiagMult> delta_mult(const AlgebraConfig& cfg, const OreData& d,
                                          const DiagMult& f) {
    switch (d.delta.kind) {
        case Derivation::Kind::Zero:
            return std::nullopt;
        case Derivation::Kind::Twisted:
            return d.delta.h * (tau_shift_mult(cfg, d, f) - f);
        case Derivation::Kind::Table: {
            DiagMult h = table_derivation_as_twisted(cfg, d);
            return h * (tau_shift_mult(cfg, d, f) - f);
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Polynomials.

struct OrePoly {
    std::vector<Element> c;  // c[i] is the coefficient of y^i

    static OrePoly from_element(Element a) {
        OrePoly p;
        p.c.push_back(std::move(a));
        p.trim();
        return p;
    }
    static OrePoly monomial(Element a, std::size_t n) {
        OrePoly p;
        p.c.resize(n + 1);
        p.c[n] = std::move(a);
        p.trim();
        return p;
    }
    static OrePoly basis_monomial(const Point& pt, std::size_t n) {
        return monomial(basis_element(pt), n);
    }

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    std::size_t degree() const { return c.empty() ? 0 : c.size() - 1; }
    Element coeff(std::size_t i) const { return i < c.size() ? c[i] : Element{}; }

    friend bool operator==(const OrePoly& a, const OrePoly& b) { return a.c == b.c; }

    OrePoly& operator+=(const OrePoly& o) {
        if (o.c.size() > c.size()) c.resize(o.c.size());
        for (std::size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
        trim();
        return *this;
    }
    friend OrePoly operator+(OrePoly a, const OrePoly& b) { return a += b; }
    friend OrePoly operator-(OrePoly a, const OrePoly& b) {
        OrePoly nb = b;
        for (auto& e : nb.c) e = Scalar(-1) * e;
        return a += nb;
    }
    friend OrePoly operator*(const Scalar& s, OrePoly p) {
        for (auto& e : p.c) e = s * e;
        p.trim();
        return p;
    }
};

// Multiplier-coefficient polynomials (members of M(A)[y; tau, delta]);
// absent coefficients are structural zeros.
struct MultPoly {
    std::vector<std::optional<DiagMult>> c;

    static MultPoly one(std::size_t rank) {
        MultPoly p;
        p.c.push_back(DiagMult::one(rank));
        return p;
    }
    static MultPoly monomial(DiagMult f, std::size_t n) {
        MultPoly p;
        p.c.resize(n + 1);
        p.c[n] = std::move(f);
        return p;
    }
    std::size_t size() const { return c.size(); }
};

// y * P
inline OrePoly y_times(const AlgebraConfig& cfg, const OreData& d, const OrePoly& p) {
    OrePoly r;
    r.c.resize(p.c.size() + 1);
    for (std::size_t i = 0; i < p.c.size(); ++i) {
        if (p.c[i].is_zero()) continue;
        r.c[i + 1] += tau_configured(cfg, d, p.c[i]);
        r.c[i] += delta_apply(cfg, d, p.c[i]);
    }
    r.trim();
    return r;
}

inline OrePoly y_pow_times(const AlgebraConfig& cfg, const OreData& d, std::size_t n,
                           OrePoly p) {
    for (std::size_t k = 0; k < n; ++k) p = y_times(cfg, d, p);
    return p;
}

// y * F for multiplier coefficients.
inline MultPoly y_times(const AlgebraConfig& cfg, const OreData& d, const MultPoly& f) {
    MultPoly r;
    r.c.resize(f.c.size() + 1);
    auto acc = [&](std::size_t i, const DiagMult& g) {
        if (r.c[i])
            r.c[i] = *r.c[i] + g;
        else
            r.c[i] = g;
    };
    for (std::size_t i = 0; i < f.c.size(); ++i) {
        if (!f.c[i]) continue;
        acc(i + 1, tau_shift_mult(cfg, d, *f.c[i]));
        if (auto db = delta_mult(cfg, d, *f.c[i])) acc(i, *db);
    }
    return r;
}

inline MultPoly y_pow_times(const AlgebraConfig& cfg, const OreData& d, std::size_t n,
                            MultPoly f) {
    for (std::size_t k = 0; k < n; ++k) f = y_times(cfg, d, f);
    return f;
}

// a * F with a an element on the left: coefficients scale pointwise.
inline OrePoly elem_times_mult_poly(const AlgebraConfig& cfg, const Element& a,
                                    const MultPoly& f) {
    OrePoly r;
    r.c.resize(f.c.size());
    for (std::size_t i = 0; i < f.c.size(); ++i)
        if (f.c[i]) r.c[i] = mult_apply(cfg, *f.c[i], a);
    r.trim();
    return r;
}

// F * P: multiplier-coefficient polynomial times element-coefficient one.
inline OrePoly mult_poly_times_ore(const AlgebraConfig& cfg, const OreData& d, const MultPoly& f,
                                   const OrePoly& p) {
    OrePoly r;
    OrePoly cur = p;  // y^i * P
    for (std::size_t i = 0; i < f.c.size(); ++i) {
        if (i > 0) cur = y_times(cfg, d, cur);
        if (!f.c[i]) continue;
        OrePoly term;
        term.c.resize(cur.c.size());
        for (std::size_t j = 0; j < cur.c.size(); ++j)
            term.c[j] = mult_apply(cfg, *f.c[i], cur.c[j]);
        term.trim();
        r += term;
    }
    return r;
}

// P * F: element-coefficient polynomial times multiplier-coefficient one.
inline OrePoly ore_times_mult_poly(const AlgebraConfig& cfg, const OreData& d, const OrePoly& p,
                                   const MultPoly& f) {
    OrePoly r;
    MultPoly cur = f;  // y^i * F
    for (std::size_t i = 0; i < p.c.size(); ++i) {
        if (i > 0) cur = y_times(cfg, d, cur);
        if (p.c[i].is_zero()) continue;
        r += elem_times_mult_poly(cfg, p.c[i], cur);
    }
    return r;
}

inline MultPoly mult_poly_mul(const AlgebraConfig& cfg, const OreData& d, const MultPoly& f,
                              const MultPoly& g) {
    MultPoly r;
    MultPoly cur = g;
    auto acc = [&](std::size_t i, const DiagMult& v) {
        if (r.c.size() <= i) r.c.resize(i + 1);
        if (r.c[i])
            r.c[i] = *r.c[i] + v;
        else
            r.c[i] = v;
    };
    for (std::size_t i = 0; i < f.c.size(); ++i) {
        if (i > 0) cur = y_times(cfg, d, cur);
        if (!f.c[i]) continue;
        for (std::size_t j = 0; j < cur.c.size(); ++j)
            if (cur.c[j]) acc(j, *f.c[i] * *cur.c[j]);
    }
    return r;
}

// Normal-form product by repeated rewriting.
inline OrePoly ore_mul(const AlgebraConfig& cfg, const OreData& d, const OrePoly& p,
                       const OrePoly& q) {
    OrePoly r;
    OrePoly cur = q;  // y^i * Q
    for (std::size_t i = 0; i < p.c.size(); ++i) {
        if (i > 0) cur = y_times(cfg, d, cur);
        if (p.c[i].is_zero()) continue;
        OrePoly term;
        term.c.resize(cur.c.size());
        for (std::size_t j = 0; j < cur.c.size(); ++j) term.c[j] = mul(p.c[i], cur.c[j]);
        term.trim();
        r += term;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Extension structure maps.

inline Scalar ext_counit(const AlgebraConfig& cfg, const OrePoly& p) {
    // eps(sum a_i y^i) = eps(a_0) since eps(y) = 0.
    return p.c.empty() ? Scalar() : counit(cfg, p.c[0]);
}

// S(y) = -r^{-1} y (or -y under the fault knob).
inline MultPoly s_y(const AlgebraConfig& cfg, const OreData& d) {
    DiagMult f = d.fault_sy_drop_rinv ? DiagMult::one(cfg.rank) : d.r.inverse(cfg);
    return MultPoly::monomial(scale(Scalar(-1), f), 1);
}

// S^{-1}(y) = -y sbar(r), normalized.
inline MultPoly s_y_inv(const AlgebraConfig& cfg, const OreData& d) {
    if (d.fault_sy_drop_rinv) return MultPoly::monomial(scale(Scalar(-1), DiagMult::one(cfg.rank)), 1);
    DiagMult f = d.r.sbar(cfg);
    MultPoly r;
    r.c.resize(2);
    r.c[1] = scale(Scalar(-1), tau_shift_mult(cfg, d, f));
    if (auto db = delta_mult(cfg, d, f)) r.c[0] = scale(Scalar(-1), *db);
    return r;
}

inline MultPoly mult_poly_pow(const AlgebraConfig& cfg, const OreData& d, const MultPoly& f,
                              std::size_t n) {
    MultPoly acc = MultPoly::one(cfg.rank);
    for (std::size_t k = 0; k < n; ++k) acc = mult_poly_mul(cfg, d, acc, f);
    return acc;
}

// S(a y^n) = S(y)^n S(a), antimultiplicative extension.
inline OrePoly ext_antipode(const AlgebraConfig& cfg, const OreData& d, const OrePoly& p) {
    OrePoly r;
    MultPoly sy = s_y(cfg, d);
    for (std::size_t n = 0; n < p.c.size(); ++n) {
        if (p.c[n].is_zero()) continue;
        r += mult_poly_times_ore(cfg, d, mult_poly_pow(cfg, d, sy, n),
                                 OrePoly::from_element(antipode(cfg, p.c[n])));
    }
    return r;
}

// S^{-1}(a y^n) = S^{-1}(y)^n S(a); S restricted to A is involutive.
inline OrePoly ext_antipode_inv(const AlgebraConfig& cfg, const OreData& d, const OrePoly& p) {
    OrePoly r;
    MultPoly sy = s_y_inv(cfg, d);
    for (std::size_t n = 0; n < p.c.size(); ++n) {
        if (p.c[n].is_zero()) continue;
        r += mult_poly_times_ore(cfg, d, mult_poly_pow(cfg, d, sy, n),
                                 OrePoly::from_element(antipode(cfg, p.c[n])));
    }
    return r;
}

inline Element star_element(const Element& a) {
    Element r;
    for (auto& [p, c] : a.coeffs) r.coeffs.emplace(p, conj(c));
    return r;
}

// (a y^n)* = y^n a*, with y* = y; normalized.
inline OrePoly ext_star(const AlgebraConfig& cfg, const OreData& d, const OrePoly& p) {
    OrePoly r;
    for (std::size_t n = 0; n < p.c.size(); ++n) {
        if (p.c[n].is_zero()) continue;
        r += y_pow_times(cfg, d, n, OrePoly::from_element(star_element(p.c[n])));
    }
    return r;
}

// ---------------------------------------------------------------------------
// Covered coproducts on the extension.

struct PMono {
    Point pt;
    int deg = 0;

    friend bool operator==(const PMono& a, const PMono& b) {
        return a.deg == b.deg && a.pt == b.pt;
    }
    friend bool operator<(const PMono& a, const PMono& b) {
        if (a.pt == b.pt) return a.deg < b.deg;
        return a.pt < b.pt;
    }
};

struct TensorOre {
    std::map<std::pair<PMono, PMono>, Scalar> coeffs;

    void add_term(PMono x, PMono y, const Scalar& c) {
        if (c.is_zero()) return;
        auto key = std::make_pair(std::move(x), std::move(y));
        auto [it, fresh] = coeffs.emplace(std::move(key), c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) coeffs.erase(it);
        }
    }
    Scalar at(const PMono& x, const PMono& y) const {
        auto it = coeffs.find(std::make_pair(x, y));
        return it == coeffs.end() ? Scalar() : it->second;
    }
    friend bool operator==(const TensorOre& a, const TensorOre& b) {
        return a.coeffs == b.coeffs;
    }
};

inline void add_poly_tensor(TensorOre& t, const OrePoly& f, const OrePoly& g,
                            const Scalar& s = Scalar(1)) {
    for (std::size_t i = 0; i < f.c.size(); ++i)
        for (auto& [z, cz] : f.c[i].coeffs)
            for (std::size_t j = 0; j < g.c.size(); ++j)
                for (auto& [w, cw] : g.c[j].coeffs)
                    t.add_term(PMono{z, static_cast<int>(i)}, PMono{w, static_cast<int>(j)},
                               s * cz * cw);
}

inline TensorOre tensor_of(const OrePoly& f, const OrePoly& g) {
    TensorOre t;
    add_poly_tensor(t, f, g);
    return t;
}

inline std::string render_pmono(const AlgebraConfig& cfg, const PMono& m) {
    std::string s = "e" + cfg.render(m.pt);
    if (m.deg == 1) s += "*y";
    if (m.deg > 1) s += "*y^" + std::to_string(m.deg);
    return s;
}

inline std::string render_ore(const AlgebraConfig& cfg, const OrePoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (std::size_t i = 0; i < p.c.size(); ++i) {
        if (p.c[i].is_zero()) continue;
        if (!first) s += " + ";
        first = false;
        s += "(" + render_element(cfg, p.c[i]) + ")";
        if (i == 1) s += "*y";
        if (i > 1) s += "*y^" + std::to_string(i);
    }
    return s;
}

namespace detail {

// Delta(y)^n acting on a right-covered state: pairs (leg1 in M(A)[y],
// leg2 in A[y]).  One step maps (F,G) to (yF, G) + (rF, yG).
using MixedRight = std::vector<std::pair<MultPoly, OrePoly>>;

inline MixedRight delta_y_step(const AlgebraConfig& cfg, const OreData& d,
                               const MixedRight& w) {
    MixedRight out;
    out.reserve(w.size() * 2);
    for (auto& [f, g] : w) {
        out.emplace_back(y_times(cfg, d, f), g);
        MultPoly rf;
        rf.c.resize(f.c.size());
        for (std::size_t i = 0; i < f.c.size(); ++i)
            if (f.c[i]) rf.c[i] = d.r * *f.c[i];
        out.emplace_back(std::move(rf), y_times(cfg, d, g));
    }
    return out;
}

// Delta(a) applied to a mixed-right state, producing a finite tensor: the
// leg-2 supports pick the unique leg-1 partner x with x*w = z.
inline void delta_elem_act_right(const AlgebraConfig& cfg, const Element& a, const MixedRight& w,
                                 TensorOre& out) {
    for (auto& [f, g] : w) {
        for (std::size_t j = 0; j < g.c.size(); ++j) {
            for (auto& [wp, cw] : g.c[j].coeffs) {
                for (auto& [z, cz] : a.coeffs) {
                    Point x = cfg.rdiv(wp, z);
                    for (std::size_t i = 0; i < f.c.size(); ++i) {
                        if (!f.c[i]) continue;
                        Scalar v = f.c[i]->value(cfg, x) * cz * cw;
                        if (!v.is_zero())
                            out.add_term(PMono{x, static_cast<int>(i)},
                                         PMono{wp, static_cast<int>(j)}, v);
                    }
                }
            }
        }
    }
}

// Delta(y)^n on a left-covered state: pairs (leg1 in A[y], leg2 in M(A)[y]).
using MixedLeft = std::vector<std::pair<OrePoly, MultPoly>>;

inline MixedLeft delta_y_step(const AlgebraConfig& cfg, const OreData& d, const MixedLeft& w) {
    MixedLeft out;
    out.reserve(w.size() * 2);
    for (auto& [f, g] : w) {
        out.emplace_back(y_times(cfg, d, f), g);
        OrePoly rf;
        rf.c.resize(f.c.size());
        for (std::size_t i = 0; i < f.c.size(); ++i) rf.c[i] = mult_apply(cfg, d.r, f.c[i]);
        rf.trim();
        out.emplace_back(std::move(rf), y_times(cfg, d, g));
    }
    return out;
}

inline void delta_elem_act_left(const AlgebraConfig& cfg, const OreData& d, const Element& a,
                                const MixedLeft& w, TensorOre& out) {
    for (auto& [f, g] : w) {
        for (std::size_t i = 0; i < f.c.size(); ++i) {
            for (auto& [x, cx] : f.c[i].coeffs) {
                for (auto& [z, cz] : a.coeffs) {
                    Point v = cfg.ldiv(x, z);
                    for (std::size_t j = 0; j < g.c.size(); ++j) {
                        if (!g.c[j]) continue;
                        Scalar val = g.c[j]->value(cfg, v) * cx * cz;
                        if (!val.is_zero())
                            out.add_term(PMono{x, static_cast<int>(i)},
                                         PMono{v, static_cast<int>(j)}, val);
                    }
                }
            }
        }
    }
}

// Basis points x such that y^l e_x can have support meeting `targets`:
// either x = tau^{-l}(w), or the chain passes through the derivation table.
inline std::set<Point> left_y_preimage_candidates(const AlgebraConfig& cfg, const OreData& d,
                                                  std::size_t l,
                                                  const std::set<Point>& targets) {
    std::set<Point> cand;
    std::vector<Point> frontier(targets.begin(), targets.end());
    if (d.delta.kind == Derivation::Kind::Table)
        for (auto& [x, v] : d.delta.table) frontier.push_back(x);
    for (auto& w : frontier) {
        Point cur = w;
        cand.insert(cur);
        for (std::size_t j = 1; j <= l; ++j) {
            cur = tau_point_inv(cfg, d, cur);
            cand.insert(cur);
        }
    }
    return cand;
}

}  // namespace detail

// Delta(P)(1 (x) Q).
inline TensorOre ext_t1(const AlgebraConfig& cfg, const OreData& d, const OrePoly& p,
                        const OrePoly& q) {
    TensorOre out;
    detail::MixedRight w = {{MultPoly::one(cfg.rank), q}};
    for (std::size_t n = 0; n < p.c.size(); ++n) {
        if (n > 0) w = detail::delta_y_step(cfg, d, w);
        if (!p.c[n].is_zero()) detail::delta_elem_act_right(cfg, p.c[n], w, out);
    }
    return out;
}

// Delta(P)(Q (x) 1).
inline TensorOre ext_t2l(const AlgebraConfig& cfg, const OreData& d, const OrePoly& p,
                         const OrePoly& q) {
    TensorOre out;
    detail::MixedLeft w = {{q, MultPoly::one(cfg.rank)}};
    for (std::size_t n = 0; n < p.c.size(); ++n) {
        if (n > 0) w = detail::delta_y_step(cfg, d, w);
        if (!p.c[n].is_zero()) detail::delta_elem_act_left(cfg, d, p.c[n], w, out);
    }
    return out;
}

namespace detail {

// (Q (x) 1)Delta(a) for a single element a: the left cover pins leg 1 to
// finitely many basis points, each solved by division on leg 2.
using CoveredPairs = std::vector<std::pair<OrePoly, OrePoly>>;

inline CoveredPairs leg1_left_cover(const AlgebraConfig& cfg, const OreData& d, const Element& a,
                                    const OrePoly& q) {
    CoveredPairs out;
    for (std::size_t l = 0; l < q.c.size(); ++l) {
        if (q.c[l].is_zero()) continue;
        std::set<Point> targets;
        for (auto& [w, cw] : q.c[l].coeffs) targets.insert(w);
        for (auto& x : left_y_preimage_candidates(cfg, d, l, targets)) {
            OrePoly b = y_pow_times(cfg, d, l, OrePoly::from_element(basis_element(x)));
            OrePoly covered;
            covered.c.resize(b.c.size());
            for (std::size_t j = 0; j < b.c.size(); ++j) covered.c[j] = mul(q.c[l], b.c[j]);
            covered.trim();
            if (covered.is_zero()) continue;
            for (auto& [z, cz] : a.coeffs) {
                Point v = cfg.ldiv(x, z);
                out.emplace_back(cz * covered, OrePoly::basis_monomial(v, 0));
            }
        }
    }
    return out;
}

// (1 (x) Q)Delta(a): symmetric, covering leg 2 from the left.
inline CoveredPairs leg2_left_cover(const AlgebraConfig& cfg, const OreData& d, const Element& a,
                                    const OrePoly& q) {
    CoveredPairs out;
    for (std::size_t l = 0; l < q.c.size(); ++l) {
        if (q.c[l].is_zero()) continue;
        std::set<Point> targets;
        for (auto& [w, cw] : q.c[l].coeffs) targets.insert(w);
        for (auto& v : left_y_preimage_candidates(cfg, d, l, targets)) {
            OrePoly b = y_pow_times(cfg, d, l, OrePoly::from_element(basis_element(v)));
            OrePoly covered;
            covered.c.resize(b.c.size());
            for (std::size_t j = 0; j < b.c.size(); ++j) covered.c[j] = mul(q.c[l], b.c[j]);
            covered.trim();
            if (covered.is_zero()) continue;
            for (auto& [z, cz] : a.coeffs) {
                Point u = cfg.rdiv(v, z);
                out.emplace_back(OrePoly::basis_monomial(u, 0), cz * covered);
            }
        }
    }
    return out;
}

// Right-multiplication of a covered pair list by Delta(y)^n.
inline CoveredPairs delta_y_right_step(const AlgebraConfig& cfg, const OreData& d,
                                       const CoveredPairs& w) {
    CoveredPairs out;
    out.reserve(w.size() * 2);
    for (auto& [f, g] : w) {
        // (F (x) G)(y (x) 1) = Fy (x) G
        OrePoly fy;
        fy.c.resize(f.c.size() + 1);
        for (std::size_t i = 0; i < f.c.size(); ++i) fy.c[i + 1] = f.c[i];
        out.emplace_back(std::move(fy), g);
        // (F (x) G)(r (x) y) = Fr (x) Gy
        OrePoly fr = ore_times_mult_poly(cfg, d, f, MultPoly::monomial(d.r, 0));
        OrePoly gy;
        gy.c.resize(g.c.size() + 1);
        for (std::size_t j = 0; j < g.c.size(); ++j) gy.c[j + 1] = g.c[j];
        out.emplace_back(std::move(fr), std::move(gy));
    }
    return out;
}

}  // namespace detail

// (Q (x) 1)Delta(P).
inline TensorOre ext_t1l(const AlgebraConfig& cfg, const OreData& d, const OrePoly& p,
                         const OrePoly& q) {
    TensorOre out;
    for (std::size_t n = 0; n < p.c.size(); ++n) {
        if (p.c[n].is_zero()) continue;
        detail::CoveredPairs w = detail::leg1_left_cover(cfg, d, p.c[n], q);
        for (std::size_t k = 0; k < n; ++k) w = detail::delta_y_right_step(cfg, d, w);
        for (auto& [f, g] : w) add_poly_tensor(out, f, g);
    }
    return out;
}

// (1 (x) Q)Delta(P).
inline TensorOre ext_leg2_left(const AlgebraConfig& cfg, const OreData& d, const OrePoly& p,
                               const OrePoly& q) {
    TensorOre out;
    for (std::size_t n = 0; n < p.c.size(); ++n) {
        if (p.c[n].is_zero()) continue;
        detail::CoveredPairs w = detail::leg2_left_cover(cfg, d, p.c[n], q);
        for (std::size_t k = 0; k < n; ++k) w = detail::delta_y_right_step(cfg, d, w);
        for (auto& [f, g] : w) add_poly_tensor(out, f, g);
    }
    return out;
}

// Spec surface: right covers use Delta(P)(1 (x) Q), left covers
// (Q (x) 1)Delta(P).
enum class CoverSide { Right, Left };
inline TensorOre ext_coproduct(const AlgebraConfig& cfg, const OreData& d, const OrePoly& p,
                               const OrePoly& cover_q, CoverSide side) {
    return side == CoverSide::Right ? ext_t1(cfg, d, p, cover_q)
                                    : ext_t1l(cfg, d, p, cover_q);
}

// Multiplier action Delta(y) * T on a finite tensor: term by term,
// (y (x) 1) rewrites leg 1 and (r (x) y) scales leg 1 and rewrites leg 2.
inline TensorOre delta_y_act(const AlgebraConfig& cfg, const OreData& d, const TensorOre& t) {
    TensorOre next;
    for (auto& [key, c] : t.coeffs) {
        OrePoly leg1 = y_times(cfg, d, OrePoly::basis_monomial(key.first.pt, key.first.deg));
        for (std::size_t i = 0; i < leg1.c.size(); ++i)
            for (auto& [z, cz] : leg1.c[i].coeffs)
                next.add_term(PMono{z, static_cast<int>(i)}, key.second, c * cz);
        Scalar rv = d.r.value(cfg, key.first.pt) * c;
        if (!rv.is_zero()) {
            OrePoly yg = y_times(cfg, d, OrePoly::basis_monomial(key.second.pt, key.second.deg));
            for (std::size_t j = 0; j < yg.c.size(); ++j)
                for (auto& [w, cw] : yg.c[j].coeffs)
                    next.add_term(key.first, PMono{w, static_cast<int>(j)}, rv * cw);
        }
    }
    return next;
}

// Multiplier action Delta(P) * T on a finite tensor.
inline TensorOre delta_act_left(const AlgebraConfig& cfg, const OreData& d, const OrePoly& p,
                                const TensorOre& t) {
    TensorOre out;
    TensorOre cur = t;  // Delta(y)^n * T, advanced incrementally
    for (std::size_t n = 0; n < p.c.size(); ++n) {
        if (n > 0) cur = delta_y_act(cfg, d, cur);
        if (p.c[n].is_zero()) continue;
        for (auto& [key, c] : cur.coeffs) {
            Scalar v = p.c[n].at(cfg.mul(key.first.pt, key.second.pt)) * c;
            if (!v.is_zero()) out.add_term(key.first, key.second, v);
        }
    }
    return out;
}

inline TensorOre& operator+=(TensorOre& a, const TensorOre& b) {
    for (auto& [key, c] : b.coeffs) a.add_term(key.first, key.second, c);
    return a;
}

}  // namespace mhcq
