#pragma once

// The function algebra spanned by orthogonal idempotents e_(p,alpha) with
// p in Z^m and alpha in a finite loop G.  A basis index is a point of the
// index set X = Z^m x G; X carries a componentwise product (grades add,
// loop elements multiply), an identity and two-sided inverses.  All
// structure maps of the algebra are pullbacks along X:
//
//   (f*g)(x) = f(x)g(x)      Delta(f)(x,y) = f(x*y)
//   eps(f)   = f(identity)   S(f)(x)       = f(inv(x))
//
// Elements are finitely supported scalar maps on X; multipliers are total
// rules on X acting pointwise.

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "loop.hpp"
#include "scalar.hpp"

namespace mhcq {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Point {
    std::vector<long long> grade;
    Loop::Elem elem = 0;

    friend bool operator==(const Point& a, const Point& b) {
        return a.elem == b.elem && a.grade == b.grade;
    }
    friend bool operator<(const Point& a, const Point& b) {
        if (a.grade != b.grade) return a.grade < b.grade;
        return a.elem < b.elem;
    }
};

struct AlgebraConfig {
    std::size_t rank = 0;  // m, the number of grade coordinates
    Loop loop;

    Point identity() const {
        return Point{std::vector<long long>(rank, 0), loop.identity()};
    }
    Point mul(const Point& a, const Point& b) const {
        Point r;
        r.grade.resize(rank);
        for (std::size_t j = 0; j < rank; ++j) r.grade[j] = a.grade[j] + b.grade[j];
        r.elem = loop.mul(a.elem, b.elem);
        return r;
    }
    Point inv(const Point& a) const {
        Point r;
        r.grade.resize(rank);
        for (std::size_t j = 0; j < rank; ++j) r.grade[j] = -a.grade[j];
        r.elem = loop.inverse(a.elem);
        return r;
    }
    // Unique x with a*x = b.
    Point ldiv(const Point& a, const Point& b) const {
        Point r;
        r.grade.resize(rank);
        for (std::size_t j = 0; j < rank; ++j) r.grade[j] = b.grade[j] - a.grade[j];
        r.elem = loop.ldiv(a.elem, b.elem);
        return r;
    }
    // Unique x with x*a = b.
    Point rdiv(const Point& a, const Point& b) const {
        Point r;
        r.grade.resize(rank);
        for (std::size_t j = 0; j < rank; ++j) r.grade[j] = b.grade[j] - a.grade[j];
        r.elem = loop.rdiv(a.elem, b.elem);
        return r;
    }
    bool is_identity(const Point& a) const {
        if (a.elem != loop.identity()) return false;
        for (auto v : a.grade)
            if (v != 0) return false;
        return true;
    }

    std::string render(const Point& p) const {
        std::string s = "(";
        for (std::size_t j = 0; j < rank; ++j) s += std::to_string(p.grade[j]) + ",";
        s += loop.name(p.elem) + ")";
        return s;
    }
};

// Finite test window: all grades with |p_j| <= radius, all loop elements.
// Enumeration works outward from the origin (0, 1, -1, 2, -2, ...) per
// coordinate, so the first witness a failing scan reports involves the
// smallest grades available.
struct Window {
    long long radius = 2;

    std::vector<Point> points(const AlgebraConfig& cfg) const {
        std::vector<long long> vals;
        vals.push_back(0);
        for (long long v = 1; v <= radius; ++v) {
            vals.push_back(v);
            vals.push_back(-v);
        }
        std::vector<Point> out;
        std::vector<std::size_t> idx(cfg.rank, 0);
        const std::size_t nelem = cfg.loop.size();
        while (true) {
            std::vector<long long> g(cfg.rank);
            for (std::size_t j = 0; j < cfg.rank; ++j) g[j] = vals[idx[j]];
            for (Loop::Elem a = 0; a < nelem; ++a) out.push_back(Point{g, a});
            std::size_t j = 0;
            for (; j < cfg.rank; ++j) {
                if (idx[j] + 1 < vals.size()) {
                    ++idx[j];
                    break;
                }
                idx[j] = 0;
            }
            if (j == cfg.rank) break;
        }
        return out;
    }
};

// Finitely supported scalar map on X; no explicit zeros stored.
struct Element {
    std::map<Point, Scalar> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    Scalar at(const Point& p) const {
        auto it = coeffs.find(p);
        return it == coeffs.end() ? Scalar() : it->second;
    }
    void add_term(const Point& p, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = coeffs.emplace(p, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) coeffs.erase(it);
        }
    }
    friend bool operator==(const Element& a, const Element& b) { return a.coeffs == b.coeffs; }

    Element& operator+=(const Element& o) {
        for (auto& [p, c] : o.coeffs) add_term(p, c);
        return *this;
    }
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) {
        for (auto& [p, c] : b.coeffs) a.add_term(p, -c);
        return a;
    }
    friend Element operator*(const Scalar& s, const Element& a) {
        Element r;
        if (s.is_zero()) return r;
        for (auto& [p, c] : a.coeffs) r.coeffs.emplace(p, s * c);
        return r;
    }
};

inline Element basis_element(const Point& p) {
    Element e;
    e.coeffs.emplace(p, Scalar(1));
    return e;
}

// Pointwise product; the basis is orthogonal idempotent.
inline Element mul(const Element& a, const Element& b) {
    const Element& small = a.coeffs.size() <= b.coeffs.size() ? a : b;
    const Element& big = a.coeffs.size() <= b.coeffs.size() ? b : a;
    Element r;
    for (auto& [p, c] : small.coeffs) {
        auto it = big.coeffs.find(p);
        if (it != big.coeffs.end()) {
            Scalar v = c * it->second;
            if (!v.is_zero()) r.coeffs.emplace(p, std::move(v));
        }
    }
    return r;
}

inline std::string render_element(const AlgebraConfig& cfg, const Element& a) {
    if (a.coeffs.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [p, c] : a.coeffs) {
        if (!first) s += " + ";
        first = false;
        if (!c.is_one()) s += to_string(c) + "*";
        s += "e" + cfg.render(p);
    }
    return s;
}

// ---------------------------------------------------------------------------
// Diagonal multipliers: total scalar rules on X acting by pointwise
// multiplication.  Closed under product, inverse (when pointwise nonzero),
// the reindexings used by tau/S/conjugation, and sums (needed for extended
// derivations).  Power and table rules keep canonical shape through the
// operations that preserve it; everything else falls back to an expression
// tree evaluated on demand -- exact in all cases.

class DiagMult;

namespace detail {

struct MultNode;
using MultNodePtr = std::shared_ptr<const MultNode>;
DiagMult make_node(MultNode n);

}  // namespace detail

class DiagMult {
public:
    // value = coeff * prod_j lambda_j^{p_j}; independent of the loop part.
    struct Power {
        Scalar coeff;
        std::vector<Scalar> lambdas;  // one per grade coordinate, each nonzero
    };
    struct Table {
        std::map<Point, Scalar> entries;
        Scalar dflt;
    };

    DiagMult() : DiagMult(one(0)) {}

    static DiagMult one(std::size_t rank) {
        Power p;
        p.coeff = Scalar(1);
        p.lambdas.assign(rank, Scalar(1));
        return DiagMult(std::move(p));
    }
    static DiagMult power(Scalar coeff, std::vector<Scalar> lambdas) {
        for (auto& l : lambdas)
            if (l.is_zero()) throw ConfigError("power rule requires nonzero lambda");
        return DiagMult(Power{std::move(coeff), std::move(lambdas)});
    }
    static DiagMult table(std::map<Point, Scalar> entries, Scalar dflt) {
        return DiagMult(Table{std::move(entries), std::move(dflt)});
    }
    static DiagMult from_element(const Element& a) {
        Table t;
        t.dflt = Scalar(0);
        t.entries = a.coeffs;
        return DiagMult(std::move(t));
    }

    Scalar value(const AlgebraConfig& cfg, const Point& x) const;

    bool is_power() const { return kind_ == Kind::Power; }
    const Power& as_power() const { return power_; }

    DiagMult inverse(const AlgebraConfig& cfg) const;
    DiagMult conj_rule() const;
    // tau-bar: value at x becomes value at x0*x.
    DiagMult tau_shift(const AlgebraConfig& cfg, const Point& x0) const;
    // S-bar: value at x becomes value at inv(x).
    DiagMult sbar(const AlgebraConfig& cfg) const;

    friend DiagMult operator*(const DiagMult& a, const DiagMult& b);
    friend DiagMult operator+(const DiagMult& a, const DiagMult& b);
    friend DiagMult operator-(const DiagMult& a, const DiagMult& b);
    friend DiagMult scale(const Scalar& s, const DiagMult& f);

    // Structural equality for power rules (distinct lambdas are distinct
    // functions on Z^m); other shapes compare pointwise on a window.
    static bool equal_on(const AlgebraConfig& cfg, const DiagMult& a, const DiagMult& b,
                         const std::vector<Point>& pts);

private:
    enum class Kind { Power, Table, Node };

    explicit DiagMult(Power p) : kind_(Kind::Power), power_(std::move(p)) {}
    explicit DiagMult(Table t) : kind_(Kind::Table), table_(std::move(t)) {}
    explicit DiagMult(detail::MultNodePtr n) : kind_(Kind::Node), node_(std::move(n)) {}

    static const Scalar& power_lambda(const Power& p, std::size_t j) {
        static const Scalar one_scalar(1);
        return j < p.lambdas.size() ? p.lambdas[j] : one_scalar;
    }

    Kind kind_;
    Power power_;
    Table table_;
    detail::MultNodePtr node_;

    friend DiagMult detail::make_node(detail::MultNode n);
};

namespace detail {

struct MultNode {
    enum class Op { Prod, Sum, Neg, Inverse, TauShift, SBar, Conj, Scale, Remap };
    Op op;
    std::vector<DiagMult> args;
    Scalar scalar;                   // Scale
    Point shift;                     // TauShift
    std::vector<Loop::Elem> remap;   // Remap: elem -> preimage elem
};

}  // namespace detail

inline Scalar DiagMult::value(const AlgebraConfig& cfg, const Point& x) const {
    switch (kind_) {
        case Kind::Power: {
            Scalar v = power_.coeff;
            for (std::size_t j = 0; j < power_.lambdas.size(); ++j)
                v *= power_.lambdas[j].pow(x.grade[j]);
            return v;
        }
        case Kind::Table: {
            auto it = table_.entries.find(x);
            return it == table_.entries.end() ? table_.dflt : it->second;
        }
        case Kind::Node: {
            const auto& n = *node_;
            using Op = detail::MultNode::Op;
            switch (n.op) {
                case Op::Prod: {
                    Scalar v(1);
                    for (auto& f : n.args) v *= f.value(cfg, x);
                    return v;
                }
                case Op::Sum: {
                    Scalar v(0);
                    for (auto& f : n.args) v += f.value(cfg, x);
                    return v;
                }
                case Op::Neg:
                    return -n.args[0].value(cfg, x);
                case Op::Inverse: {
                    Scalar v = n.args[0].value(cfg, x);
                    if (v.is_zero())
                        throw ConfigError("multiplier not invertible: vanishes at " +
                                          cfg.render(x));
                    return v.inverse();
                }
                case Op::TauShift:
                    return n.args[0].value(cfg, cfg.mul(n.shift, x));
                case Op::SBar:
                    return n.args[0].value(cfg, cfg.inv(x));
                case Op::Conj:
                    return conj(n.args[0].value(cfg, x));
                case Op::Scale:
                    return n.scalar * n.args[0].value(cfg, x);
                case Op::Remap: {
                    Point y = x;
                    y.elem = n.remap[x.elem];
                    return n.args[0].value(cfg, y);
                }
            }
            throw ConfigError("unreachable multiplier node");
        }
    }
    throw ConfigError("unreachable multiplier kind");
}

namespace detail {

inline DiagMult make_node(MultNode n) {
    return DiagMult(std::make_shared<const MultNode>(std::move(n)));
}

}  // namespace detail

inline DiagMult DiagMult::inverse(const AlgebraConfig& cfg) const {
    switch (kind_) {
        case Kind::Power: {
            Power p;
            p.coeff = power_.coeff.inverse();
            for (auto& l : power_.lambdas) p.lambdas.push_back(l.inverse());
            return DiagMult(std::move(p));
        }
        case Kind::Table: {
            Table t;
            if (table_.dflt.is_zero())
                throw ConfigError("multiplier not invertible: default value is 0");
            t.dflt = table_.dflt.inverse();
            for (auto& [p, v] : table_.entries) {
                if (v.is_zero())
                    throw ConfigError("multiplier not invertible: vanishes at " + cfg.render(p));
                t.entries.emplace(p, v.inverse());
            }
            return DiagMult(std::move(t));
        }
        case Kind::Node: {
            detail::MultNode n;
            n.op = detail::MultNode::Op::Inverse;
            n.args = {*this};
            return detail::make_node(std::move(n));
        }
    }
    throw ConfigError("unreachable");
}

inline DiagMult DiagMult::conj_rule() const {
    switch (kind_) {
        case Kind::Power: {
            Power p;
            p.coeff = conj(power_.coeff);
            for (auto& l : power_.lambdas) p.lambdas.push_back(conj(l));
            return DiagMult(std::move(p));
        }
        case Kind::Table: {
            Table t;
            t.dflt = conj(table_.dflt);
            for (auto& [pt, v] : table_.entries) t.entries.emplace(pt, conj(v));
            return DiagMult(std::move(t));
        }
        case Kind::Node: {
            detail::MultNode n;
            n.op = detail::MultNode::Op::Conj;
            n.args = {*this};
            return detail::make_node(std::move(n));
        }
    }
    throw ConfigError("unreachable");
}

inline DiagMult DiagMult::tau_shift(const AlgebraConfig& cfg, const Point& x0) const {
    switch (kind_) {
        case Kind::Power: {
            // lambda^{p0 + p} absorbs the offset into the constant.
            Power p = power_;
            for (std::size_t j = 0; j < p.lambdas.size(); ++j)
                p.coeff *= p.lambdas[j].pow(x0.grade[j]);
            return DiagMult(std::move(p));
        }
        case Kind::Table: {
            Table t;
            t.dflt = table_.dflt;
            for (auto& [pt, v] : table_.entries) t.entries.emplace(cfg.ldiv(x0, pt), v);
            return DiagMult(std::move(t));
        }
        case Kind::Node: {
            detail::MultNode n;
            n.op = detail::MultNode::Op::TauShift;
            n.shift = x0;
            n.args = {*this};
            return detail::make_node(std::move(n));
        }
    }
    throw ConfigError("unreachable");
}

inline DiagMult DiagMult::sbar(const AlgebraConfig& cfg) const {
    switch (kind_) {
        case Kind::Power: {
            Power p;
            p.coeff = power_.coeff;
            for (auto& l : power_.lambdas) p.lambdas.push_back(l.inverse());
            return DiagMult(std::move(p));
        }
        case Kind::Table: {
            Table t;
            t.dflt = table_.dflt;
            for (auto& [pt, v] : table_.entries) t.entries.emplace(cfg.inv(pt), v);
            return DiagMult(std::move(t));
        }
        case Kind::Node: {
            detail::MultNode n;
            n.op = detail::MultNode::Op::SBar;
            n.args = {*this};
            return detail::make_node(std::move(n));
        }
    }
    throw ConfigError("unreachable");
}

inline DiagMult remap_elems(const DiagMult& f, std::vector<Loop::Elem> elem_map) {
    detail::MultNode n;
    n.op = detail::MultNode::Op::Remap;
    n.remap = std::move(elem_map);
    n.args = {f};
    return detail::make_node(std::move(n));
}

inline DiagMult operator*(const DiagMult& a, const DiagMult& b) {
    if (a.kind_ == DiagMult::Kind::Power && b.kind_ == DiagMult::Kind::Power) {
        DiagMult::Power p;
        p.coeff = a.power_.coeff * b.power_.coeff;
        std::size_t len = std::max(a.power_.lambdas.size(), b.power_.lambdas.size());
        for (std::size_t j = 0; j < len; ++j)
            p.lambdas.push_back(DiagMult::power_lambda(a.power_, j) *
                                DiagMult::power_lambda(b.power_, j));
        return DiagMult(std::move(p));
    }
    detail::MultNode n;
    n.op = detail::MultNode::Op::Prod;
    n.args = {a, b};
    return detail::make_node(std::move(n));
}

inline DiagMult operator+(const DiagMult& a, const DiagMult& b) {
    detail::MultNode n;
    n.op = detail::MultNode::Op::Sum;
    n.args = {a, b};
    return detail::make_node(std::move(n));
}

inline DiagMult operator-(const DiagMult& a, const DiagMult& b) {
    detail::MultNode neg;
    neg.op = detail::MultNode::Op::Neg;
    neg.args = {b};
    detail::MultNode n;
    n.op = detail::MultNode::Op::Sum;
    n.args = {a, detail::make_node(std::move(neg))};
    return detail::make_node(std::move(n));
}

inline DiagMult scale(const Scalar& s, const DiagMult& f) {
    detail::MultNode n;
    n.op = detail::MultNode::Op::Scale;
    n.scalar = s;
    n.args = {f};
    return detail::make_node(std::move(n));
}

inline bool DiagMult::equal_on(const AlgebraConfig& cfg, const DiagMult& a, const DiagMult& b,
                               const std::vector<Point>& pts) {
    if (a.kind_ == Kind::Power && b.kind_ == Kind::Power) {
        if (a.power_.coeff != b.power_.coeff) return false;
        std::size_t len = std::max(a.power_.lambdas.size(), b.power_.lambdas.size());
        for (std::size_t j = 0; j < len; ++j)
            if (power_lambda(a.power_, j) != power_lambda(b.power_, j)) return false;
        return true;
    }
    for (auto& p : pts)
        if (a.value(cfg, p) != b.value(cfg, p)) return false;
    return true;
}

// Pointwise action of a multiplier on an element; left and right actions
// coincide because the algebra is commutative.
inline Element mult_apply(const AlgebraConfig& cfg, const DiagMult& f, const Element& a) {
    Element r;
    for (auto& [p, c] : a.coeffs) {
        Scalar v = f.value(cfg, p) * c;
        if (!v.is_zero()) r.coeffs.emplace(p, std::move(v));
    }
    return r;
}

}  // namespace mhcq
