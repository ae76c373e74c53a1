#pragma once

// Coalgebra structure of the function algebra and the axiom checkers that
// only involve degree-zero data: Galois-map covers, counit laws, the four
// antipode identities in covered form, comultiplicativity of the product,
// group-likeness, and the coassociativity probe.
//
// Checker semantics is component-window evaluation: an identity between
// multipliers is asserted coefficient-by-coefficient on every output
// component reachable from window inputs.  Each coproduct pairs a leg-2
// index with a unique leg-1 index, so every covered expression below is a
// finite exact tensor.

#include <utility>

#include "algebra.hpp"
#include "report.hpp"

namespace mhcq {

struct TensorElement {
    std::map<std::pair<Point, Point>, Scalar> coeffs;

    void add_term(Point x, Point y, const Scalar& c) {
        if (c.is_zero()) return;
        auto key = std::make_pair(std::move(x), std::move(y));
        auto [it, fresh] = coeffs.emplace(std::move(key), c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) coeffs.erase(it);
        }
    }
    Scalar at(const Point& x, const Point& y) const {
        auto it = coeffs.find(std::make_pair(x, y));
        return it == coeffs.end() ? Scalar() : it->second;
    }
    friend bool operator==(const TensorElement& a, const TensorElement& b) {
        return a.coeffs == b.coeffs;
    }
};

inline TensorElement tensor_product(const Element& a, const Element& b) {
    TensorElement t;
    for (auto& [p, c] : a.coeffs)
        for (auto& [q, d] : b.coeffs) t.coeffs.emplace(std::make_pair(p, q), c * d);
    return t;
}

inline std::string render_tensor_component(const AlgebraConfig& cfg, const Point& x,
                                           const Point& y) {
    return "e" + cfg.render(x) + " (x) e" + cfg.render(y);
}

// eps(f) = f(identity).
inline Scalar counit(const AlgebraConfig& cfg, const Element& a) {
    return a.at(cfg.identity());
}

// S(f)(x) = f(inv(x)).  inv is involutive for two-sided inverses, so S is
// its own inverse on the base algebra; the direction parameter of the
// engine's antipode is resolved here.
inline Element antipode(const AlgebraConfig& cfg, const Element& a) {
    Element r;
    for (auto& [p, c] : a.coeffs) r.coeffs.emplace(cfg.inv(p), c);
    return r;
}

// Coefficient of Delta(a) at a given output pair: Delta(f)(x,y) = f(x*y).
inline Scalar coproduct_component(const AlgebraConfig& cfg, const Element& a, const Point& out1,
                                  const Point& out2) {
    return a.at(cfg.mul(out1, out2));
}

enum class CoverKind { T1, T1L, T2, T2L };

// T1(a(x)b)  = Delta(a)(1(x)b)      T1L(a(x)b) = (b(x)1)Delta(a)
// T2(a(x)b)  = (a(x)1)Delta(b)      T2L(a(x)b) = Delta(b)(a(x)1)
// Each basis pair produces a single term; the free leg index is solved by
// loop division.
inline TensorElement cover(const AlgebraConfig& cfg, CoverKind kind, const Element& a,
                           const Element& b) {
    TensorElement t;
    switch (kind) {
        case CoverKind::T1:
            for (auto& [z, cz] : a.coeffs)
                for (auto& [u, cu] : b.coeffs) t.add_term(cfg.rdiv(u, z), u, cz * cu);
            break;
        case CoverKind::T1L:
            for (auto& [z, cz] : a.coeffs)
                for (auto& [u, cu] : b.coeffs) t.add_term(u, cfg.ldiv(u, z), cz * cu);
            break;
        case CoverKind::T2:
        case CoverKind::T2L:
            // Both cover leg 1 of Delta(b) with a; they coincide because the
            // algebra is commutative.
            for (auto& [z, cz] : b.coeffs)
                for (auto& [u, cu] : a.coeffs) t.add_term(u, cfg.ldiv(u, z), cz * cu);
            break;
    }
    return t;
}

// Multiplier action of Delta(a) on a finite tensor: pointwise scaling by
// a(x*y) on each component.
inline TensorElement delta_act(const AlgebraConfig& cfg, const Element& a,
                               const TensorElement& t) {
    TensorElement r;
    for (auto& [key, c] : t.coeffs) {
        Scalar v = a.at(cfg.mul(key.first, key.second)) * c;
        if (!v.is_zero()) r.coeffs.emplace(key, std::move(v));
    }
    return r;
}

// ---------------------------------------------------------------------------
// Law evaluation on arbitrary elements.  The suite runner instantiates them
// on window basis tuples.

namespace laws {

// (eps (x) id)T1(a(x)b) = ab
inline bool counit_t1(const AlgebraConfig& cfg, const Element& a, const Element& b,
                      Element& lhs, Element& rhs) {
    TensorElement t = cover(cfg, CoverKind::T1, a, b);
    lhs = Element{};
    const Point e = cfg.identity();
    for (auto& [key, c] : t.coeffs)
        if (key.first == e) lhs.add_term(key.second, c);
    rhs = mul(a, b);
    return lhs == rhs;
}

// (id (x) eps)T2(a(x)b) = ab
inline bool counit_t2(const AlgebraConfig& cfg, const Element& a, const Element& b,
                      Element& lhs, Element& rhs) {
    TensorElement t = cover(cfg, CoverKind::T2, a, b);
    lhs = Element{};
    const Point e = cfg.identity();
    for (auto& [key, c] : t.coeffs)
        if (key.second == e) lhs.add_term(key.first, c);
    rhs = mul(a, b);
    return lhs == rhs;
}

// First antipode identity, covered: with W = Delta(a)(S^{-1}(c) (x) 1),
//   sum S(u_i) [Delta(v_i)(1 (x) b)]  =  c (x) ab.
inline bool eq21a(const AlgebraConfig& cfg, const Element& a, const Element& b, const Element& c,
                  TensorElement& lhs, TensorElement& rhs) {
    TensorElement w = cover(cfg, CoverKind::T2L, antipode(cfg, c), a);
    lhs = TensorElement{};
    for (auto& [key, c0] : w.coeffs) {
        const Point ui = cfg.inv(key.first);
        TensorElement t = cover(cfg, CoverKind::T1, basis_element(key.second), b);
        for (auto& [key1, c1] : t.coeffs)
            if (key1.first == ui) lhs.add_term(key1.first, key1.second, c0 * c1);
    }
    rhs = tensor_product(c, mul(a, b));
    return lhs == rhs;
}

// Second antipode identity, covered:
//   sum (c a_(1)) S(a_(2)(1)) (x) a_(2)(2) b  =  c (x) ab.
inline bool eq21b(const AlgebraConfig& cfg, const Element& a, const Element& b, const Element& c,
                  TensorElement& lhs, TensorElement& rhs) {
    TensorElement w = cover(cfg, CoverKind::T1L, a, c);
    lhs = TensorElement{};
    for (auto& [key, c0] : w.coeffs) {
        TensorElement t = cover(cfg, CoverKind::T1, basis_element(key.second), b);
        for (auto& [key1, c1] : t.coeffs)
            if (cfg.inv(key1.first) == key.first)
                lhs.add_term(key.first, key1.second, c0 * c1);
    }
    rhs = tensor_product(c, mul(a, b));
    return lhs == rhs;
}

// Third antipode identity, covered: with W = (1 (x) S^{-1}(b))Delta(a),
//   sum [Delta(u_i)(c (x) 1)] (1 (x) S(v_i))  =  ac (x) b.
inline bool eq22a(const AlgebraConfig& cfg, const Element& a, const Element& b, const Element& c,
                  TensorElement& lhs, TensorElement& rhs) {
    TensorElement w = cover(cfg, CoverKind::T1, a, antipode(cfg, b));
    lhs = TensorElement{};
    for (auto& [key, c0] : w.coeffs) {
        const Point vi = cfg.inv(key.second);
        TensorElement t = cover(cfg, CoverKind::T2L, c, basis_element(key.first));
        for (auto& [key1, c1] : t.coeffs)
            if (key1.second == vi) lhs.add_term(key1.first, key1.second, c0 * c1);
    }
    rhs = tensor_product(mul(a, c), b);
    return lhs == rhs;
}

// Fourth antipode identity, covered: with W = Delta(a)(1 (x) b),
//   sum [Delta(u_i)(c (x) 1)] with S on its leg 2 against v_i  =  ac (x) b.
inline bool eq22b(const AlgebraConfig& cfg, const Element& a, const Element& b, const Element& c,
                  TensorElement& lhs, TensorElement& rhs) {
    TensorElement w = cover(cfg, CoverKind::T1, a, b);
    lhs = TensorElement{};
    for (auto& [key, c0] : w.coeffs) {
        TensorElement t = cover(cfg, CoverKind::T2L, c, basis_element(key.first));
        for (auto& [key1, c1] : t.coeffs)
            if (cfg.inv(key1.second) == key.second)
                lhs.add_term(key1.first, key.second, c0 * c1);
    }
    rhs = tensor_product(mul(a, c), b);
    return lhs == rhs;
}

// Delta is multiplicative: Delta(ab)(1 (x) c) = Delta(a) [Delta(b)(1 (x) c)].
inline bool delta_hom(const AlgebraConfig& cfg, const Element& a, const Element& b,
                      const Element& c, TensorElement& lhs, TensorElement& rhs) {
    lhs = cover(cfg, CoverKind::T1, mul(a, b), c);
    rhs = delta_act(cfg, a, cover(cfg, CoverKind::T1, b, c));
    return lhs == rhs;
}

// S(ab) = S(b)S(a).
inline bool s_antimult(const AlgebraConfig& cfg, const Element& a, const Element& b, Element& lhs,
                       Element& rhs) {
    lhs = antipode(cfg, mul(a, b));
    rhs = mul(antipode(cfg, b), antipode(cfg, a));
    return lhs == rhs;
}

}  // namespace laws

// ---------------------------------------------------------------------------
// Suite checkers.

// Group-likeness of a multiplier rule: eps-value 1 at the identity point and
// Delta(r) = r (x) r componentwise, i.e. r(x*y) = r(x) r(y) on window pairs.
inline std::vector<LawResult> check_grouplike(const AlgebraConfig& cfg, const DiagMult& r,
                                              const Window& win) {
    std::vector<LawResult> out;
    const auto pts = win.points(cfg);
    {
        LawResult lr{"GroupLike.eps"};
        lr.checked = 1;
        Scalar v = r.value(cfg, cfg.identity());
        if (v != Scalar(1)) {
            lr.passed = false;
            lr.witness = Witness{"GroupLike.eps", "r", cfg.render(cfg.identity()), to_string(v),
                                 "1"};
        }
        out.push_back(std::move(lr));
    }
    {
        LawResult lr{"GroupLike.mult"};
        for (auto& x : pts) {
            for (auto& y : pts) {
                ++lr.checked;
                Scalar l = r.value(cfg, cfg.mul(x, y));
                Scalar rr = r.value(cfg, x) * r.value(cfg, y);
                if (l != rr) {
                    lr.passed = false;
                    lr.witness = Witness{"GroupLike.mult", cfg.render(x) + " + " + cfg.render(y),
                                         cfg.render(cfg.mul(x, y)), to_string(l), to_string(rr)};
                    break;
                }
            }
            if (!lr.passed) break;
        }
        out.push_back(std::move(lr));
    }
    return out;
}

namespace detail {

inline std::string diff_component(const AlgebraConfig& cfg, const TensorElement& lhs,
                                  const TensorElement& rhs, std::string& lv, std::string& rv) {
    for (auto& [key, c] : lhs.coeffs) {
        Scalar r = rhs.at(key.first, key.second);
        if (r != c) {
            lv = to_string(c);
            rv = to_string(r);
            return render_tensor_component(cfg, key.first, key.second);
        }
    }
    for (auto& [key, c] : rhs.coeffs) {
        Scalar l = lhs.at(key.first, key.second);
        if (l != c) {
            lv = to_string(l);
            rv = to_string(c);
            return render_tensor_component(cfg, key.first, key.second);
        }
    }
    return "?";
}

inline std::string diff_component(const AlgebraConfig& cfg, const Element& lhs,
                                  const Element& rhs, std::string& lv, std::string& rv) {
    for (auto& [p, c] : lhs.coeffs) {
        Scalar r = rhs.at(p);
        if (r != c) {
            lv = to_string(c);
            rv = to_string(r);
            return "e" + cfg.render(p);
        }
    }
    for (auto& [p, c] : rhs.coeffs) {
        Scalar l = lhs.at(p);
        if (l != c) {
            lv = to_string(l);
            rv = to_string(c);
            return "e" + cfg.render(p);
        }
    }
    return "?";
}

}  // namespace detail

// All degree-zero axioms on the window: both counit laws, the four antipode
// identities in covered form, comultiplicativity of the product, and the
// two antipode compatibility laws.  Scans stop at the first witness per law
// (fixed lexicographic input order keeps reports deterministic).
inline SuiteReport check_mhc_axioms(const AlgebraConfig& cfg, const Window& win) {
    SuiteReport rep;
    rep.name = "mhc";
    const auto pts = win.points(cfg);

    auto run_pair_law = [&](const std::string& name, auto&& fn) {
        LawResult lr{name};
        for (auto& x : pts) {
            for (auto& y : pts) {
                ++lr.checked;
                Element lhs, rhs;
                if (!fn(basis_element(x), basis_element(y), lhs, rhs)) {
                    lr.passed = false;
                    std::string lv, rv;
                    std::string comp = detail::diff_component(cfg, lhs, rhs, lv, rv);
                    lr.witness = Witness{name, "a=e" + cfg.render(x) + ", b=e" + cfg.render(y),
                                         comp, lv, rv};
                    break;
                }
            }
            if (!lr.passed) break;
        }
        rep.add(std::move(lr));
    };
    auto run_triple_law = [&](const std::string& name, auto&& fn) {
        LawResult lr{name};
        for (auto& x : pts) {
            for (auto& y : pts) {
                for (auto& z : pts) {
                    ++lr.checked;
                    TensorElement lhs, rhs;
                    if (!fn(basis_element(x), basis_element(y), basis_element(z), lhs, rhs)) {
                        lr.passed = false;
                        std::string lv, rv;
                        std::string comp = detail::diff_component(cfg, lhs, rhs, lv, rv);
                        lr.witness =
                            Witness{name,
                                    "a=e" + cfg.render(x) + ", b=e" + cfg.render(y) +
                                        ", c=e" + cfg.render(z),
                                    comp, lv, rv};
                        break;
                    }
                }
                if (!lr.passed) break;
            }
            if (!lr.passed) break;
        }
        rep.add(std::move(lr));
    };

    run_pair_law("CounitT1", [&](const Element& a, const Element& b, Element& l, Element& r) {
        return laws::counit_t1(cfg, a, b, l, r);
    });
    run_pair_law("CounitT2", [&](const Element& a, const Element& b, Element& l, Element& r) {
        return laws::counit_t2(cfg, a, b, l, r);
    });
    run_triple_law("Eq2.1a", [&](const Element& a, const Element& b, const Element& c,
                                 TensorElement& l, TensorElement& r) {
        return laws::eq21a(cfg, a, b, c, l, r);
    });
    run_triple_law("Eq2.1b", [&](const Element& a, const Element& b, const Element& c,
                                 TensorElement& l, TensorElement& r) {
        return laws::eq21b(cfg, a, b, c, l, r);
    });
    run_triple_law("Eq2.2a", [&](const Element& a, const Element& b, const Element& c,
                                 TensorElement& l, TensorElement& r) {
        return laws::eq22a(cfg, a, b, c, l, r);
    });
    run_triple_law("Eq2.2b", [&](const Element& a, const Element& b, const Element& c,
                                 TensorElement& l, TensorElement& r) {
        return laws::eq22b(cfg, a, b, c, l, r);
    });
    run_triple_law("DeltaHom", [&](const Element& a, const Element& b, const Element& c,
                                   TensorElement& l, TensorElement& r) {
        return laws::delta_hom(cfg, a, b, c, l, r);
    });
    run_pair_law("SAntimult", [&](const Element& a, const Element& b, Element& l, Element& r) {
        return laws::s_antimult(cfg, a, b, l, r);
    });

    // flip(S (x) S)Delta(a) vs Delta(S(a)) per component: a(inv(y)inv(x))
    // vs a(inv(x*y)).
    {
        LawResult lr{"SAnticomult"};
        for (auto& pa : pts) {
            Element a = basis_element(pa);
            for (auto& x : pts) {
                for (auto& y : pts) {
                    ++lr.checked;
                    Scalar l = a.at(cfg.mul(cfg.inv(y), cfg.inv(x)));
                    Scalar r = a.at(cfg.inv(cfg.mul(x, y)));
                    if (l != r) {
                        lr.passed = false;
                        lr.witness = Witness{"SAnticomult", "a=e" + cfg.render(pa),
                                             render_tensor_component(cfg, x, y), to_string(l),
                                             to_string(r)};
                        break;
                    }
                }
                if (!lr.passed) break;
            }
            if (!lr.passed) break;
        }
        rep.add(std::move(lr));
    }
    return rep;
}

// Coassociativity probe via iterated coproduct components:
// (Delta (x) id)Delta(a) at (x,y,z) is a((x*y)*z), the other order gives
// a(x*(y*z)).  Returns the first window component where they differ.
inline LawResult check_coassociativity(const AlgebraConfig& cfg, const Window& win) {
    LawResult lr{"Coassoc"};
    const auto pts = win.points(cfg);
    const long long R = win.radius;
    auto in_window = [&](const Point& p) {
        for (auto v : p.grade)
            if (v < -R || v > R) return false;
        return true;
    };
    for (auto& x : pts) {
        for (auto& y : pts) {
            for (auto& z : pts) {
                ++lr.checked;
                Point u = cfg.mul(cfg.mul(x, y), z);
                Point v = cfg.mul(x, cfg.mul(y, z));
                if (u == v) continue;
                const Point* wit = nullptr;
                bool lhs_one = false;
                if (in_window(u)) {
                    wit = &u;
                    lhs_one = true;
                } else if (in_window(v)) {
                    wit = &v;
                }
                if (!wit) continue;
                lr.passed = false;
                lr.witness = Witness{
                    "Coassoc", "a=e" + cfg.render(*wit),
                    cfg.render(x) + " (x) " + cfg.render(y) + " (x) " + cfg.render(z),
                    lhs_one ? "1" : "0", lhs_one ? "0" : "1"};
                return lr;
            }
        }
    }
    return lr;
}

}  // namespace mhcq
