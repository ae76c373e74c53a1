#include <catch2/catch_amalgamated.hpp>

#include <mhcq/ore.hpp>
#include <mhcq/ore_checks.hpp>

#include "test_helpers.hpp"

using namespace mhcq;
using testutil::pt;

namespace {

// The running data set: m = 1, chi at (-2,e), r = lambda-power with
// lambda = 2, delta = 0.
OreData paper_data(const AlgebraConfig& cfg) {
    OreData d;
    d.chi.point = Point{{-2}, cfg.loop.identity()};
    d.r = DiagMult::power(Scalar(1), {Scalar(2)});
    return d;
}

Element unit_element(const AlgebraConfig& cfg) {
    Element e;
    for (Loop::Elem a = 0; a < cfg.loop.size(); ++a)
        e.add_term(Point{std::vector<long long>(cfg.rank, 0), a}, Scalar(1));
    return e;
}

bool law_passed(const SuiteReport& rep, const std::string& law) {
    for (auto& lr : rep.laws)
        if (lr.law == law) return lr.passed;
    return false;
}

const LawResult* law_of(const SuiteReport& rep, const std::string& law) {
    for (auto& lr : rep.laws)
        if (lr.law == law) return &lr;
    return nullptr;
}

}  // namespace

TEST_CASE("tau is the shift by the character point") {
    auto cfg = testutil::config(testutil::c2());
    OreData d = paper_data(cfg);
    // tau(e_(p,alpha)) = e_(p+2,alpha)
    CHECK(tau_apply(cfg, d, basis_element(pt(cfg, {0}, "g"))) ==
          basis_element(pt(cfg, {2}, "g")));
    CHECK(tau_configured(cfg, d, basis_element(pt(cfg, {-5}, "e"))) ==
          basis_element(pt(cfg, {-3}, "e")));
    // chi at the identity point gives tau = id.
    OreData id_d = d;
    id_d.chi.point = Point{{0}, cfg.loop.identity()};
    for (auto& p : Window{2}.points(cfg))
        CHECK(tau_apply(cfg, id_d, basis_element(p)) == basis_element(p));
    // chi(a) = eps(tau(a)) on the window basis.
    for (auto& p : Window{3}.points(cfg)) {
        Element a = basis_element(p);
        CHECK(chi_value(cfg, d, a) == counit(cfg, tau_configured(cfg, d, a)));
    }
}

TEST_CASE("rewriting moves y past coefficients via tau") {
    auto cfg = testutil::config(testutil::c2());
    OreData d = paper_data(cfg);
    // y * e_(p,alpha) = e_(p+2,alpha) * y when delta = 0.
    OrePoly p = y_times(cfg, d, OrePoly::from_element(basis_element(pt(cfg, {0}, "g"))));
    CHECK(p == OrePoly::monomial(basis_element(pt(cfg, {2}, "g")), 1));
    // ore_mul on monomials: (e_(2,g) y) * (e_(2,g) y) = e_(2,g) y^2 after
    // tau shifts the right coefficient to grade 4 -- orthogonality kills it
    // unless grades align.
    OrePoly a = OrePoly::monomial(basis_element(pt(cfg, {2}, "g")), 1);
    OrePoly b = OrePoly::monomial(basis_element(pt(cfg, {0}, "g")), 1);
    OrePoly prod = ore_mul(cfg, d, a, b);
    CHECK(prod == OrePoly::monomial(basis_element(pt(cfg, {2}, "g")), 2));
}

TEST_CASE("ore_mul is associative on monomial triples") {
    for (auto loop : {testutil::c2(), testutil::s3()}) {
        auto cfg = testutil::config(loop);
        OreData d = paper_data(cfg);
        auto monos = window_monomials(cfg, Window{2}, 2);
        for (auto& x : monos)
            for (auto& y : monos)
                for (auto& z : monos) {
                    OrePoly px = OrePoly::basis_monomial(x.pt, x.deg);
                    OrePoly py = OrePoly::basis_monomial(y.pt, y.deg);
                    OrePoly pz = OrePoly::basis_monomial(z.pt, z.deg);
                    REQUIRE(ore_mul(cfg, d, ore_mul(cfg, d, px, py), pz) ==
                            ore_mul(cfg, d, px, ore_mul(cfg, d, py, pz)));
                }
    }
}

TEST_CASE("degree adds when leading coefficients survive") {
    auto cfg = testutil::config(testutil::c2());
    OreData d = paper_data(cfg);
    auto monos = window_monomials(cfg, Window{1}, 2);
    for (auto& x : monos)
        for (auto& y : monos) {
            OrePoly px = OrePoly::basis_monomial(x.pt, x.deg);
            OrePoly py = OrePoly::basis_monomial(y.pt, y.deg);
            OrePoly prod = ore_mul(cfg, d, px, py);
            // Leading coefficient of the product: tau^deg(P) applied to y's coeff.
            Element lead = mul(px.c.back(), [&] {
                Element t = py.c.back();
                for (int k = 0; k < x.deg; ++k) t = tau_configured(cfg, d, t);
                return t;
            }());
            if (!lead.is_zero()) {
                CHECK(prod.degree() == px.degree() + py.degree());
            } else {
                CHECK(prod.is_zero());
            }
        }
}

TEST_CASE("extension counit kills y") {
    auto cfg = testutil::config(testutil::c2());
    OreData d = paper_data(cfg);
    CHECK(ext_counit(cfg, OrePoly::monomial(basis_element(pt(cfg, {0}, "e")), 1)) == Scalar(0));
    CHECK(ext_counit(cfg, OrePoly::from_element(basis_element(pt(cfg, {0}, "e")))) == Scalar(1));
    // eps is multiplicative on the extension (delta = 0 data).
    auto monos = window_monomials(cfg, Window{2}, 2);
    for (auto& x : monos)
        for (auto& y : monos) {
            OrePoly px = OrePoly::basis_monomial(x.pt, x.deg);
            OrePoly py = OrePoly::basis_monomial(y.pt, y.deg);
            CHECK(ext_counit(cfg, ore_mul(cfg, d, px, py)) ==
                  ext_counit(cfg, px) * ext_counit(cfg, py));
        }
}

TEST_CASE("S(y) = -r^{-1} y as an identity of normal forms") {
    auto cfg = testutil::config(testutil::c2());
    OreData d = paper_data(cfg);
    MultPoly sy = s_y(cfg, d);
    REQUIRE(sy.c.size() == 2);
    CHECK(!sy.c[0].has_value());
    REQUIRE(sy.c[1].has_value());
    DiagMult expect = scale(Scalar(-1), d.r.inverse(cfg));
    CHECK(DiagMult::equal_on(cfg, *sy.c[1], expect, Window{3}.points(cfg)));
}

TEST_CASE("S^2(y) = lambda^{p0} y = y/4, via the r^{-1}yr oracle") {
    auto cfg = testutil::config(testutil::c2());
    OreData d = paper_data(cfg);
    // Oracle: hand normalization of r^{-1} y r = r^{-1} taubar(r) y = 2^{p0} y.
    MultPoly rinv = MultPoly::monomial(d.r.inverse(cfg), 0);
    MultPoly ymono = MultPoly::monomial(DiagMult::one(cfg.rank), 1);
    MultPoly rr = MultPoly::monomial(d.r, 0);
    MultPoly prod = mult_poly_mul(cfg, d, rinv, mult_poly_mul(cfg, d, ymono, rr));
    REQUIRE(prod.c.size() == 2);
    CHECK(!prod.c[0].has_value());
    DiagMult quarter = DiagMult::power(Scalar(Rational(1, 4)), {Scalar(1)});
    CHECK(DiagMult::equal_on(cfg, *prod.c[1], quarter, Window{3}.points(cfg)));
    // S^2 on monomials a*y: S^2(a y) = (1/4) a y.
    for (auto& p : Window{2}.points(cfg)) {
        OrePoly ay = OrePoly::basis_monomial(p, 1);
        OrePoly s2 = ext_antipode(cfg, d, ext_antipode(cfg, d, ay));
        CHECK(s2 == Scalar(Rational(1, 4)) * ay);
    }
    // And S^{-1} really inverts S on monomials up to degree 3.
    for (auto& m : window_monomials(cfg, Window{1}, 3)) {
        OrePoly p = OrePoly::basis_monomial(m.pt, m.deg);
        CHECK(ext_antipode_inv(cfg, d, ext_antipode(cfg, d, p)) == p);
        CHECK(ext_antipode(cfg, d, ext_antipode_inv(cfg, d, p)) == p);
    }
}

TEST_CASE("r = 1, delta = 0 gives the primitive coproduct and involutive S") {
    auto cfg = testutil::config(testutil::c2());
    OreData d;
    d.chi.point = Point{{0}, cfg.loop.identity()};
    d.r = DiagMult::one(1);
    // S(y) = -y when r = 1.
    MultPoly sy = s_y(cfg, d);
    REQUIRE(sy.c.size() == 2);
    CHECK(DiagMult::equal_on(cfg, *sy.c[1], scale(Scalar(-1), DiagMult::one(1)),
                             Window{2}.points(cfg)));
    for (auto& m : window_monomials(cfg, Window{2}, 2)) {
        OrePoly p = OrePoly::basis_monomial(m.pt, m.deg);
        CHECK(ext_antipode(cfg, d, ext_antipode(cfg, d, p)) == p);
    }
    // Delta(a y)(1 (x) b) = a y (x) b-ish: check against the generic engine
    // by the counit law instead of shapes: handled in verify_extension below.
    SuiteReport rep = verify_extension(cfg, d, Window{1}, 2);
    CHECK(rep.status == SuiteStatus::Pass);
}

TEST_CASE("covered coproduct of y^2 matches the hand expansion (rank 0)") {
    auto cfg = testutil::config(testutil::c2(), 0);
    OreData d;
    d.chi.point = Point{{}, cfg.loop.identity()};
    // r = the sign character of C2.
    d.r = DiagMult::table({{Point{{}, *cfg.loop.index_of("e")}, Scalar(1)},
                           {Point{{}, *cfg.loop.index_of("g")}, Scalar(-1)}},
                          Scalar(1));
    Element one = unit_element(cfg);
    OrePoly y2 = OrePoly::monomial(one, 2);
    TensorOre got = ext_t1(cfg, d, y2, OrePoly::from_element(one));
    // Expected: y^2 (x) 1 + (yr + ry) (x) y + r^2 (x) y^2 with yr = ry and
    // r^2 = 1 here, expanded over the basis.
    TensorOre expect;
    for (Loop::Elem a = 0; a < 2; ++a)
        for (Loop::Elem b = 0; b < 2; ++b) {
            Point pa{{}, a}, pb{{}, b};
            Scalar ra = d.r.value(cfg, pa);
            expect.add_term(PMono{pa, 2}, PMono{pb, 0}, Scalar(1));
            expect.add_term(PMono{pa, 1}, PMono{pb, 1}, Scalar(2) * ra);
            expect.add_term(PMono{pa, 0}, PMono{pb, 2}, Scalar(1));
        }
    CHECK(got == expect);
    // Delta(y)(1 (x) b) = y (x) b + r (x) yb.
    Element bg = basis_element(Point{{}, *cfg.loop.index_of("g")});
    TensorOre got1 = ext_t1(cfg, d, OrePoly::monomial(one, 1), OrePoly::from_element(bg));
    TensorOre expect1;
    for (Loop::Elem a = 0; a < 2; ++a) {
        Point pa{{}, a};
        expect1.add_term(PMono{pa, 1}, PMono{Point{{}, *cfg.loop.index_of("g")}, 0}, Scalar(1));
        expect1.add_term(PMono{pa, 0}, PMono{Point{{}, *cfg.loop.index_of("g")}, 1},
                         d.r.value(cfg, pa));
    }
    CHECK(got1 == expect1);
    // The cover-side wrapper dispatches to the same computations.
    CHECK(ext_coproduct(cfg, d, y2, OrePoly::from_element(one), CoverSide::Right) == got);
    CHECK(ext_coproduct(cfg, d, y2, OrePoly::from_element(one), CoverSide::Left) ==
          ext_t1l(cfg, d, y2, OrePoly::from_element(one)));
}

TEST_CASE("check_conditions passes on the running data") {
    for (auto loop : {testutil::c2(), testutil::s3()}) {
        auto cfg = testutil::config(loop);
        OreData d = paper_data(cfg);
        SuiteReport rep = check_conditions(cfg, d, Window{3});
        INFO(rep.laws.size());
        CHECK(rep.status == SuiteStatus::Pass);
    }
}

TEST_CASE("two-point character fails C1 and C2 with witnesses") {
    auto cfg = testutil::config(testutil::c2());
    OreData d = paper_data(cfg);
    d.chi.extra_points.push_back(Point{{-1}, cfg.loop.identity()});
    // chi is no longer multiplicative: chi(ab) != chi(a)chi(b) at
    // a = e_(-2,e), b = e_(-1,e).
    Element a = basis_element(pt(cfg, {-2}, "e"));
    Element b = basis_element(pt(cfg, {-1}, "e"));
    CHECK(chi_value(cfg, d, mul(a, b)) != chi_value(cfg, d, a) * chi_value(cfg, d, b));
    SuiteReport rep = check_conditions(cfg, d, Window{3});
    CHECK(rep.status == SuiteStatus::Fail);
    CHECK(!law_passed(rep, "C1"));
    const LawResult* c1 = law_of(rep, "C1");
    REQUIRE(c1 != nullptr);
    REQUIRE(c1->witness.has_value());
    // Replay: the witness input re-fails in isolation.
    CHECK(!(tau_apply(cfg, d, basis_element(Window{3}.points(cfg)[0])) ==
            tau_configured(cfg, d, basis_element(Window{3}.points(cfg)[0]))));
}

TEST_CASE("twisted derivations satisfy the derivation law; C3 decides") {
    auto cfg = testutil::config(testutil::c2());
    OreData d = paper_data(cfg);
    d.delta.kind = Derivation::Kind::Twisted;
    // h = r - 1 vanishes at the identity point.
    d.delta.h = d.r - DiagMult::one(1);
    SuiteReport rep = check_conditions(cfg, d, Window{2});
    CHECK(law_passed(rep, "TauDerivationLaw"));
    // The checker decides C3 deterministically; both runs agree.
    SuiteReport rep2 = check_conditions(cfg, d, Window{2});
    CHECK(law_passed(rep, "Eq3.4") == law_passed(rep2, "Eq3.4"));
    // If C3 failed, the witness replays.
    const LawResult* c3 = law_of(rep, "Eq3.4");
    REQUIRE(c3 != nullptr);
    if (!c3->passed) REQUIRE(c3->witness.has_value());
}

TEST_CASE("table derivations convert to twisted form exactly when consistent") {
    auto cfg = testutil::config(testutil::c2());
    OreData d = paper_data(cfg);
    d.delta.kind = Derivation::Kind::Table;
    // delta(e_x) = c_x e_x - c_{tau x} e_{tau x} with c supported at (0,e),
    // propagated consistently: c_(0,e) = 1 requires delta(e_(2,e)) to carry
    // -e_(0,e)... build the genuine twisted table for h with h(0,e) = -1.
    Point x0 = pt(cfg, {0}, "e");
    Point pre = tau_point_inv(cfg, d, x0);  // tau(pre) = (0,e)
    Element dx;
    dx.add_term(x0, Scalar(1));
    dx.add_term(tau_point(cfg, d, x0), Scalar(0));
    d.delta.table[x0] = dx;
    Element dpre;
    dpre.add_term(pre, Scalar(0));
    dpre.add_term(x0, Scalar(-1));
    d.delta.table[pre] = dpre;
    DiagMult h = table_derivation_as_twisted(cfg, d);
    CHECK(h.value(cfg, x0) == Scalar(-1));
    CHECK(h.value(cfg, pre) == Scalar(0));
    // An inconsistent table (support off the tau-chain) is rejected.
    OreData bad = paper_data(cfg);
    bad.delta.kind = Derivation::Kind::Table;
    Element junk;
    junk.add_term(pt(cfg, {1}, "g"), Scalar(1));
    bad.delta.table[pt(cfg, {0}, "e")] = junk;
    CHECK_THROWS_AS(table_derivation_as_twisted(cfg, bad), OreError);
}

TEST_CASE("verify_extension passes on the running data") {
    auto cfg = testutil::config(testutil::c2());
    OreData d = paper_data(cfg);
    SuiteReport rep = verify_extension(cfg, d, Window{2}, 2);
    for (auto& lr : rep.laws) {
        INFO(lr.law);
        CHECK(lr.passed);
    }
    CHECK(rep.status == SuiteStatus::Pass);
}

TEST_CASE("corrupting S(y) := -y breaks the first antipode law") {
    auto cfg = testutil::config(testutil::c2());
    OreData d = paper_data(cfg);
    d.fault_sy_drop_rinv = true;
    SuiteReport rep = verify_extension(cfg, d, Window{1}, 1);
    CHECK(rep.status == SuiteStatus::Fail);
    bool eq21_failed = false;
    for (auto& lr : rep.laws)
        if ((lr.law == "ext:Eq2.1a" || lr.law == "ext:Eq2.1b") && !lr.passed) {
            eq21_failed = true;
            REQUIRE(lr.witness.has_value());
        }
    CHECK(eq21_failed);
}

TEST_CASE("derived identities pass on the running data and reduce when trivial") {
    auto cfg = testutil::config(testutil::c2());
    OreData d = paper_data(cfg);
    SuiteReport rep = derived_identities(cfg, d, Window{3});
    for (auto& lr : rep.laws) {
        INFO(lr.law);
        CHECK(lr.passed);
    }
    // delta = 0: Eq3.13's both sides vanish identically.
    for (auto& p : Window{2}.points(cfg)) {
        Element a = basis_element(p);
        CHECK(delta_apply(cfg, d, antipode(cfg, tau_configured(cfg, d, a))).is_zero());
    }
    // tau = id, r = 1: Eq3.12 reduces to S(a) = S(a).
    OreData triv;
    triv.chi.point = Point{{0}, cfg.loop.identity()};
    triv.r = DiagMult::one(1);
    SuiteReport rep2 = derived_identities(cfg, triv, Window{2});
    CHECK(rep2.status == SuiteStatus::Pass);
}

TEST_CASE("moufang12 extension: axioms pass, coassociativity fails") {
    auto cfg = testutil::config(testutil::moufang12());
    OreData d = paper_data(cfg);
    SuiteReport rep = verify_extension(cfg, d, Window{1}, 1);
    CHECK(rep.status == SuiteStatus::Pass);
    LawResult co = ext_coassociativity(cfg, d, Window{1}, 1);
    CHECK(!co.passed);
    REQUIRE(co.witness.has_value());
    // Groups stay coassociative on the extension.
    auto cfg2 = testutil::config(testutil::c2());
    OreData d2 = paper_data(cfg2);
    CHECK(ext_coassociativity(cfg2, d2, Window{1}, 1).passed);
}

TEST_CASE("window monotonicity: conditions passing at radius 3 pass at radius 2") {
    auto cfg = testutil::config(testutil::c2());
    OreData d = paper_data(cfg);
    CHECK(check_conditions(cfg, d, Window{3}).status == SuiteStatus::Pass);
    CHECK(check_conditions(cfg, d, Window{2}).status == SuiteStatus::Pass);
}
