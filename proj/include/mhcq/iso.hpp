#pragma once

// Isomorphisms of extensions: a base isomorphism induced by a loop
// isomorphism (grades fixed), an optional skew-primitive shift d' with
// Delta(d') = d' (x) 1 + r' (x) d', and the extension map
// phi(sum a_i y^i) = sum phi(a_i)(y' + d')^i.
//
// Shifts live in the multiplier algebra; an element-valued d' (meaningful
// in the unital rank-0 case) is carried as a finite table rule.

#include "ore_checks.hpp"

namespace mhcq {

struct IsoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PrimitiveShift {
    bool zero = true;
    DiagMult rule;  // ignored when zero

    Scalar value(const AlgebraConfig& cfg, const Point& p) const {
        return zero ? Scalar() : rule.value(cfg, p);
    }
};

struct BaseIso {
    std::vector<Loop::Elem> sigma;      // source elem -> target elem
    std::vector<Loop::Elem> sigma_inv;  // target elem -> source elem

    Point map_point(const Point& p) const { return Point{p.grade, sigma[p.elem]}; }
    Point unmap_point(const Point& p) const { return Point{p.grade, sigma_inv[p.elem]}; }
    Element map_element(const Element& a) const {
        Element r;
        for (auto& [p, c] : a.coeffs) r.coeffs.emplace(map_point(p), c);
        return r;
    }
    Element unmap_element(const Element& a) const {
        Element r;
        for (auto& [p, c] : a.coeffs) r.coeffs.emplace(unmap_point(p), c);
        return r;
    }
};

// Builds the base isomorphism from element-name pairs, verifying it is a
// loop isomorphism.
inline BaseIso validate_loop_iso(const Loop& src, const Loop& tgt,
                                 const std::map<std::string, std::string>& name_map) {
    if (src.size() != tgt.size())
        throw IsoError("loop_map: source and target loops have different orders");
    BaseIso iso;
    iso.sigma.assign(src.size(), 0);
    iso.sigma_inv.assign(tgt.size(), 0);
    std::vector<bool> hit(tgt.size(), false);
    for (std::size_t i = 0; i < src.size(); ++i) {
        auto it = name_map.find(src.name(static_cast<Loop::Elem>(i)));
        if (it == name_map.end())
            throw IsoError("loop_map: no image for element '" +
                           src.name(static_cast<Loop::Elem>(i)) + "'");
        auto j = tgt.index_of(it->second);
        if (!j) throw IsoError("loop_map: image '" + it->second + "' is not a target element");
        if (hit[*j]) throw IsoError("loop_map: image '" + it->second + "' repeated");
        hit[*j] = true;
        iso.sigma[i] = *j;
        iso.sigma_inv[*j] = static_cast<Loop::Elem>(i);
    }
    for (Loop::Elem a = 0; a < src.size(); ++a)
        for (Loop::Elem b = 0; b < src.size(); ++b)
            if (iso.sigma[src.mul(a, b)] != tgt.mul(iso.sigma[a], iso.sigma[b]))
                throw IsoError("loop_map is not a homomorphism at ('" + src.name(a) + "','" +
                               src.name(b) + "')");
    if (iso.sigma[src.identity()] != tgt.identity())
        throw IsoError("loop_map does not fix the identity");
    return iso;
}

struct IsoProblem {
    const AlgebraConfig& src;
    const OreData& dsrc;
    const AlgebraConfig& tgt;
    const OreData& dtgt;
    BaseIso iso;
    PrimitiveShift shift;
};

inline SuiteReport check_hypotheses(const IsoProblem& pr, const Window& win) {
    SuiteReport rep;
    rep.name = "iso-hypotheses";
    const auto src_pts = win.points(pr.src);
    const auto tgt_pts = win.points(pr.tgt);
    DiagMult rtgt_inv = pr.dtgt.r.inverse(pr.tgt);

    // phi(r) = r' pointwise on the target window.
    {
        LawResult lr{"Thm4.2:phi(r)"};
        for (auto& xt : tgt_pts) {
            ++lr.checked;
            Scalar lhs = pr.dsrc.r.value(pr.src, pr.iso.unmap_point(xt));
            Scalar rhs = pr.dtgt.r.value(pr.tgt, xt);
            if (lhs != rhs) {
                lr.passed = false;
                lr.witness = Witness{"Thm4.2:phi(r)", "phi(r) vs r'", pr.tgt.render(xt),
                                     to_string(lhs), to_string(rhs)};
                break;
            }
        }
        rep.add(std::move(lr));
    }
    // tau'(phi(a)) = phi(tau(a)).
    {
        LawResult lr{"Thm4.2:tau"};
        for (auto& x : src_pts) {
            ++lr.checked;
            Element a = basis_element(x);
            Element lhs = tau_configured(pr.tgt, pr.dtgt, pr.iso.map_element(a));
            Element rhs = pr.iso.map_element(tau_configured(pr.src, pr.dsrc, a));
            if (!(lhs == rhs)) {
                lr.passed = false;
                std::string lv, rv;
                std::string comp = detail::diff_component(pr.tgt, lhs, rhs, lv, rv);
                lr.witness = Witness{"Thm4.2:tau", "a=e" + pr.src.render(x), comp, lv, rv};
                break;
            }
        }
        rep.add(std::move(lr));
    }
    // delta'(phi(a)) = phi(delta(a)) + phi(tau(a)) d' - d' phi(a).
    {
        LawResult lr{"Thm4.2:delta"};
        for (auto& x : src_pts) {
            ++lr.checked;
            Element a = basis_element(x);
            Element lhs = delta_apply(pr.tgt, pr.dtgt, pr.iso.map_element(a));
            Element rhs = pr.iso.map_element(delta_apply(pr.src, pr.dsrc, a));
            if (!pr.shift.zero) {
                rhs += mult_apply(pr.tgt, pr.shift.rule,
                                  pr.iso.map_element(tau_configured(pr.src, pr.dsrc, a)));
                rhs = rhs - mult_apply(pr.tgt, pr.shift.rule, pr.iso.map_element(a));
            }
            if (!(lhs == rhs)) {
                lr.passed = false;
                std::string lv, rv;
                std::string comp = detail::diff_component(pr.tgt, lhs, rhs, lv, rv);
                lr.witness = Witness{"Thm4.2:delta", "a=e" + pr.src.render(x), comp, lv, rv};
                break;
            }
        }
        rep.add(std::move(lr));
    }
    // Skew-primitivity of d': d'(x*y) = d'(x) + r'(x) d'(y) on window pairs.
    {
        LawResult lr{"Thm4.2:skewprim"};
        for (auto& x : tgt_pts) {
            for (auto& y : tgt_pts) {
                ++lr.checked;
                Scalar lhs = pr.shift.value(pr.tgt, pr.tgt.mul(x, y));
                Scalar rhs = pr.shift.value(pr.tgt, x) +
                             pr.dtgt.r.value(pr.tgt, x) * pr.shift.value(pr.tgt, y);
                if (lhs != rhs) {
                    lr.passed = false;
                    lr.witness =
                        Witness{"Thm4.2:skewprim", "d' at " + pr.tgt.render(x) + " * " +
                                                       pr.tgt.render(y),
                                pr.tgt.render(pr.tgt.mul(x, y)), to_string(lhs), to_string(rhs)};
                    break;
                }
            }
            if (!lr.passed) break;
        }
        rep.add(std::move(lr));
    }
    // Forced consequences: eps(d') = 0 and S(d') = -r'^{-1} d'.
    {
        LawResult lr{"Thm4.2:eps(d')"};
        lr.checked = 1;
        Scalar v = pr.shift.value(pr.tgt, pr.tgt.identity());
        if (!v.is_zero()) {
            lr.passed = false;
            lr.witness = Witness{"Thm4.2:eps(d')", "d'", pr.tgt.render(pr.tgt.identity()),
                                 to_string(v), "0"};
        }
        rep.add(std::move(lr));
    }
    {
        LawResult lr{"Thm4.2:S(d')"};
        for (auto& x : tgt_pts) {
            ++lr.checked;
            Scalar lhs = pr.shift.value(pr.tgt, pr.tgt.inv(x));
            Scalar rhs = -(rtgt_inv.value(pr.tgt, x) * pr.shift.value(pr.tgt, x));
            if (lhs != rhs) {
                lr.passed = false;
                lr.witness = Witness{"Thm4.2:S(d')", "S(d') vs -r'^{-1}d'",
                                     pr.tgt.render(x), to_string(lhs), to_string(rhs)};
                break;
            }
        }
        rep.add(std::move(lr));
    }
    return rep;
}

// The extension map.  Built only after the hypotheses pass.
struct PhiHat {
    const IsoProblem* pr = nullptr;

    OrePoly apply(const OrePoly& p) const {
        OrePoly out;
        MultPoly yshift;  // y' + d'
        yshift.c.resize(2);
        yshift.c[1] = DiagMult::one(pr->tgt.rank);
        if (!pr->shift.zero) yshift.c[0] = pr->shift.rule;
        MultPoly pow = MultPoly::one(pr->tgt.rank);
        for (std::size_t i = 0; i < p.c.size(); ++i) {
            if (i > 0) pow = mult_poly_mul(pr->tgt, pr->dtgt, yshift, pow);
            if (p.c[i].is_zero()) continue;
            out += elem_times_mult_poly(pr->tgt, pr->iso.map_element(p.c[i]), pow);
        }
        return out;
    }
};

inline PhiHat build_phi_hat(const IsoProblem& pr, const Window& win) {
    SuiteReport hy = check_hypotheses(pr, win);
    if (hy.status != SuiteStatus::Pass)
        throw IsoError("refusing to build the extension map: hypotheses failed");
    return PhiHat{&pr};
}

inline SuiteReport verify_iso(const PhiHat& phi, const Window& win, int maxdeg, bool star) {
    SuiteReport rep;
    rep.name = "iso";
    const IsoProblem& pr = *phi.pr;
    const auto monos = window_monomials(pr.src, win, maxdeg);
    const auto tgt_monos = window_monomials(pr.tgt, win, maxdeg);

    // Inverse candidate: base map sigma^{-1} with shift -phi^{-1}(d').
    IsoProblem inv_pr{pr.tgt, pr.dtgt, pr.src, pr.dsrc,
                      BaseIso{pr.iso.sigma_inv, pr.iso.sigma}, PrimitiveShift{}};
    if (!pr.shift.zero) {
        inv_pr.shift.zero = false;
        inv_pr.shift.rule = scale(Scalar(-1), remap_elems(pr.shift.rule, pr.iso.sigma));
    }
    PhiHat psi{&inv_pr};

    {
        LawResult lr{"Thm4.2:mult"};
        for (auto& p : monos) {
            for (auto& q : monos) {
                ++lr.checked;
                OrePoly pp = OrePoly::basis_monomial(p.pt, p.deg);
                OrePoly qq = OrePoly::basis_monomial(q.pt, q.deg);
                OrePoly lhs = phi.apply(ore_mul(pr.src, pr.dsrc, pp, qq));
                OrePoly rhs = ore_mul(pr.tgt, pr.dtgt, phi.apply(pp), phi.apply(qq));
                if (!(lhs == rhs)) {
                    lr.passed = false;
                    std::string lv, rv;
                    std::string comp = detail::diff_poly(pr.tgt, lhs, rhs, lv, rv);
                    lr.witness = Witness{"Thm4.2:mult",
                                         "P=" + render_pmono(pr.src, p) + ", Q=" +
                                             render_pmono(pr.src, q),
                                         comp, lv, rv};
                    break;
                }
            }
            if (!lr.passed) break;
        }
        rep.add(std::move(lr));
    }
    {
        LawResult lr{"Thm4.2:Delta"};
        for (auto& p : monos) {
            for (auto& q : monos) {
                ++lr.checked;
                OrePoly pp = OrePoly::basis_monomial(p.pt, p.deg);
                OrePoly qq = OrePoly::basis_monomial(q.pt, q.deg);
                TensorOre src_t = ext_t1(pr.src, pr.dsrc, pp, qq);
                TensorOre lhs;
                for (auto& [key, c] : src_t.coeffs) {
                    OrePoly f = phi.apply(OrePoly::basis_monomial(key.first.pt, key.first.deg));
                    OrePoly g = phi.apply(OrePoly::basis_monomial(key.second.pt, key.second.deg));
                    add_poly_tensor(lhs, f, g, c);
                }
                TensorOre rhs = ext_t1(pr.tgt, pr.dtgt, phi.apply(pp), phi.apply(qq));
                if (!(lhs == rhs)) {
                    lr.passed = false;
                    std::string lv, rv;
                    std::string comp = detail::diff_component(pr.tgt, lhs, rhs, lv, rv);
                    lr.witness = Witness{"Thm4.2:Delta",
                                         "P=" + render_pmono(pr.src, p) + ", Q=" +
                                             render_pmono(pr.src, q),
                                         comp, lv, rv};
                    break;
                }
            }
            if (!lr.passed) break;
        }
        rep.add(std::move(lr));
    }
    {
        LawResult lr{"Thm4.2:counit"};
        for (auto& p : monos) {
            ++lr.checked;
            OrePoly pp = OrePoly::basis_monomial(p.pt, p.deg);
            Scalar lhs = ext_counit(pr.tgt, phi.apply(pp));
            Scalar rhs = ext_counit(pr.src, pp);
            if (lhs != rhs) {
                lr.passed = false;
                lr.witness = Witness{"Thm4.2:counit", "P=" + render_pmono(pr.src, p), "eps",
                                     to_string(lhs), to_string(rhs)};
                break;
            }
        }
        rep.add(std::move(lr));
    }
    {
        LawResult lr{"Thm4.2:antipode"};
        for (auto& p : monos) {
            ++lr.checked;
            OrePoly pp = OrePoly::basis_monomial(p.pt, p.deg);
            OrePoly lhs = phi.apply(ext_antipode(pr.src, pr.dsrc, pp));
            OrePoly rhs = ext_antipode(pr.tgt, pr.dtgt, phi.apply(pp));
            if (!(lhs == rhs)) {
                lr.passed = false;
                std::string lv, rv;
                std::string comp = detail::diff_poly(pr.tgt, lhs, rhs, lv, rv);
                lr.witness =
                    Witness{"Thm4.2:antipode", "P=" + render_pmono(pr.src, p), comp, lv, rv};
                break;
            }
        }
        rep.add(std::move(lr));
    }
    {
        LawResult lr{"Thm4.2:inverse"};
        for (auto& p : monos) {
            ++lr.checked;
            OrePoly pp = OrePoly::basis_monomial(p.pt, p.deg);
            OrePoly round = psi.apply(phi.apply(pp));
            if (!(round == pp)) {
                lr.passed = false;
                std::string lv, rv;
                std::string comp = detail::diff_poly(pr.src, round, pp, lv, rv);
                lr.witness = Witness{"Thm4.2:inverse", "psi(phi(P)), P=" + render_pmono(pr.src, p),
                                     comp, lv, rv};
                break;
            }
        }
        if (lr.passed)
            for (auto& q : tgt_monos) {
                ++lr.checked;
                OrePoly qq = OrePoly::basis_monomial(q.pt, q.deg);
                OrePoly round = phi.apply(psi.apply(qq));
                if (!(round == qq)) {
                    lr.passed = false;
                    std::string lv, rv;
                    std::string comp = detail::diff_poly(pr.tgt, round, qq, lv, rv);
                    lr.witness = Witness{"Thm4.2:inverse",
                                         "phi(psi(Q)), Q=" + render_pmono(pr.tgt, q), comp, lv,
                                         rv};
                    break;
                }
            }
        rep.add(std::move(lr));
    }
    if (star) {
        LawResult lr{"Cor4.3:d'*"};
        lr.checked = 1;
        if (!pr.shift.zero) {
            for (auto& x : win.points(pr.tgt)) {
                Scalar v = pr.shift.value(pr.tgt, x);
                if (conj(v) != v) {
                    lr.passed = false;
                    lr.witness = Witness{"Cor4.3:d'*", "(d')* vs d'", pr.tgt.render(x),
                                         to_string(conj(v)), to_string(v)};
                    break;
                }
            }
        }
        rep.add(std::move(lr));

        LawResult ls{"Cor4.3:star"};
        for (auto& p : monos) {
            ++ls.checked;
            OrePoly pp = OrePoly::basis_monomial(p.pt, p.deg);
            OrePoly lhs = phi.apply(ext_star(pr.src, pr.dsrc, pp));
            OrePoly rhs = ext_star(pr.tgt, pr.dtgt, phi.apply(pp));
            if (!(lhs == rhs)) {
                ls.passed = false;
                std::string lv, rv;
                std::string comp = detail::diff_poly(pr.tgt, lhs, rhs, lv, rv);
                ls.witness = Witness{"Cor4.3:star", "P=" + render_pmono(pr.src, p), comp, lv, rv};
                break;
            }
        }
        rep.add(std::move(ls));
    }
    return rep;
}

}  // namespace mhcq
