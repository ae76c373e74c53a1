#pragma once

// Finite loops (quasigroups with identity) given by Cayley tables.
//
// Validation enforces: Latin square, identity element, and a two-sided
// inverse for every element.  Uniqueness of two-sided inverses in a Latin
// square makes inv an involution, so the antipode below is always
// involutive on basis indices.  The inverse-property (IP) laws are *not*
// required at validation; a loop that fails them is accepted with a
// warning and the axiom checkers locate the concrete law that breaks.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace mhcq {

struct LoopError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Loop {
public:
    using Elem = std::uint32_t;

    Loop() = default;

    std::size_t size() const { return names_.size(); }
    Elem identity() const { return identity_; }
    Elem inverse(Elem x) const { return inv_[x]; }
    Elem mul(Elem a, Elem b) const { return table_[a][b]; }
    // Unique x with a*x = b.
    Elem ldiv(Elem a, Elem b) const { return ldiv_[a][b]; }
    // Unique x with x*a = b.
    Elem rdiv(Elem a, Elem b) const { return rdiv_[a][b]; }

    const std::string& name(Elem x) const { return names_[x]; }
    std::optional<Elem> index_of(const std::string& n) const {
        auto it = index_.find(n);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    friend Loop validate_loop(const std::vector<std::string>& names,
                              const std::vector<std::vector<std::string>>& table);

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, Elem> index_;
    std::vector<std::vector<Elem>> table_;
    std::vector<std::vector<Elem>> ldiv_;
    std::vector<std::vector<Elem>> rdiv_;
    std::vector<Elem> inv_;
    Elem identity_ = 0;
};

inline Loop validate_loop(const std::vector<std::string>& names,
                          const std::vector<std::vector<std::string>>& table) {
    Loop g;
    const std::size_t n = names.size();
    if (n == 0) throw LoopError("loop must have at least one element");
    for (std::size_t i = 0; i < n; ++i) {
        if (!g.index_.emplace(names[i], static_cast<Loop::Elem>(i)).second)
            throw LoopError("duplicate element name '" + names[i] + "'");
    }
    g.names_ = names;
    if (table.size() != n)
        throw LoopError("table has " + std::to_string(table.size()) + " rows, expected " +
                        std::to_string(n));
    g.table_.assign(n, std::vector<Loop::Elem>(n));
    for (std::size_t r = 0; r < n; ++r) {
        if (table[r].size() != n)
            throw LoopError("table row " + std::to_string(r) + " has " +
                            std::to_string(table[r].size()) + " entries, expected " +
                            std::to_string(n));
        for (std::size_t c = 0; c < n; ++c) {
            auto it = g.index_.find(table[r][c]);
            if (it == g.index_.end())
                throw LoopError("table entry '" + table[r][c] + "' at row " + std::to_string(r) +
                                ", column " + std::to_string(c) + " is not a declared element");
            g.table_[r][c] = it->second;
        }
    }
    // Latin square: rows and columns are permutations.
    for (std::size_t r = 0; r < n; ++r) {
        std::vector<bool> seen(n, false);
        for (std::size_t c = 0; c < n; ++c) {
            if (seen[g.table_[r][c]])
                throw LoopError("not a Latin square: row '" + names[r] +
                                "' repeats element '" + names[g.table_[r][c]] + "'");
            seen[g.table_[r][c]] = true;
        }
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<bool> seen(n, false);
        for (std::size_t r = 0; r < n; ++r) {
            if (seen[g.table_[r][c]])
                throw LoopError("not a Latin square: column '" + names[c] +
                                "' repeats element '" + names[g.table_[r][c]] + "'");
            seen[g.table_[r][c]] = true;
        }
    }
    // Identity element.
    bool found = false;
    for (std::size_t e = 0; e < n && !found; ++e) {
        bool ok = true;
        for (std::size_t x = 0; x < n && ok; ++x)
            ok = g.table_[e][x] == x && g.table_[x][e] == x;
        if (ok) {
            g.identity_ = static_cast<Loop::Elem>(e);
            found = true;
        }
    }
    if (!found) throw LoopError("no identity: no row/column pair acts as the identity");
    // Two-sided inverses.
    g.inv_.assign(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
        bool ok = false;
        for (std::size_t y = 0; y < n; ++y) {
            if (g.table_[x][y] == g.identity_ && g.table_[y][x] == g.identity_) {
                g.inv_[x] = static_cast<Loop::Elem>(y);
                ok = true;
                break;
            }
        }
        if (!ok)
            throw LoopError("element '" + names[x] + "' has no two-sided inverse");
    }
    // Division tables from the Latin property.
    g.ldiv_.assign(n, std::vector<Loop::Elem>(n));
    g.rdiv_.assign(n, std::vector<Loop::Elem>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t x = 0; x < n; ++x) {
            g.ldiv_[a][g.table_[a][x]] = static_cast<Loop::Elem>(x);
            g.rdiv_[a][g.table_[x][a]] = static_cast<Loop::Elem>(x);
        }
    return g;
}

// Inverse-property report: each law either holds or carries the first
// failing pair (in element order).
struct IpReport {
    std::optional<std::pair<Loop::Elem, Loop::Elem>> left_failure;      // inv(x)*(x*y) != y
    std::optional<std::pair<Loop::Elem, Loop::Elem>> right_failure;     // (y*x)*inv(x) != y
    std::optional<std::pair<Loop::Elem, Loop::Elem>> antiauto_failure;  // inv(x*y) != inv(y)*inv(x)

    bool pass() const { return !left_failure && !right_failure && !antiauto_failure; }
};

inline IpReport check_ip(const Loop& g) {
    IpReport rep;
    const std::size_t n = g.size();
    for (std::size_t x = 0; x < n && !rep.left_failure; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (g.mul(g.inverse(x), g.mul(x, y)) != y) {
                rep.left_failure = {static_cast<Loop::Elem>(x), static_cast<Loop::Elem>(y)};
                break;
            }
    for (std::size_t x = 0; x < n && !rep.right_failure; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (g.mul(g.mul(y, x), g.inverse(x)) != y) {
                rep.right_failure = {static_cast<Loop::Elem>(x), static_cast<Loop::Elem>(y)};
                break;
            }
    for (std::size_t x = 0; x < n && !rep.antiauto_failure; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (g.inverse(g.mul(x, y)) != g.mul(g.inverse(y), g.inverse(x))) {
                rep.antiauto_failure = {static_cast<Loop::Elem>(x), static_cast<Loop::Elem>(y)};
                break;
            }
    return rep;
}

inline std::optional<std::array<Loop::Elem, 3>> associativity_witness(const Loop& g) {
    const std::size_t n = g.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                    return std::array<Loop::Elem, 3>{static_cast<Loop::Elem>(a),
                                                     static_cast<Loop::Elem>(b),
                                                     static_cast<Loop::Elem>(c)};
    return std::nullopt;
}

}  // namespace mhcq
