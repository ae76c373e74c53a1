#pragma once

// Input document handling.  One self-contained JSON file describes an
// experiment: the loop, the grading rank, optionally the extension data
// (character, group-like, derivation), a star flag, an isomorphism block
// and window defaults.  Schema violations carry JSON-pointer style paths.

#include <json.hpp>

#include "iso.hpp"
#include "star.hpp"

namespace mhcq {

using Json = nlohmann::json;

struct SchemaError : std::runtime_error {
    std::string path;
    SchemaError(std::string p, const std::string& msg)
        : std::runtime_error(p + ": " + msg), path(std::move(p)) {}
};

struct IsoInput {
    AlgebraConfig target_cfg;
    OreData target_ore;
    std::map<std::string, std::string> loop_map;
    PrimitiveShift shift;
};

struct Problem {
    AlgebraConfig cfg;
    std::optional<OreData> ore;
    bool star_enabled = false;
    std::optional<IsoInput> iso;
    std::optional<long long> default_radius;
    std::optional<int> default_maxdeg;
    std::vector<std::string> declared_suites;
};

namespace iodetail {

inline const Json& need(const Json& j, const char* key, const std::string& path) {
    if (!j.is_object()) throw SchemaError(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(path + "/" + key, "missing required key");
    return *it;
}

inline std::string need_string(const Json& j, const std::string& path) {
    if (!j.is_string()) throw SchemaError(path, "expected a string");
    return j.get<std::string>();
}

inline Scalar need_scalar(const Json& j, const std::string& path) {
    if (!j.is_string()) throw SchemaError(path, "expected a scalar literal string");
    try {
        return parse_scalar(j.get<std::string>());
    } catch (const ScalarError& e) {
        throw SchemaError(path, e.what());
    }
}

inline std::vector<long long> need_grade(const Json& j, std::size_t rank,
                                         const std::string& path) {
    if (!j.is_array()) throw SchemaError(path, "expected an array of integers");
    if (j.size() != rank)
        throw SchemaError(path, "grade has " + std::to_string(j.size()) +
                                    " entries, expected grading_rank = " + std::to_string(rank));
    std::vector<long long> g;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_integer())
            throw SchemaError(path + "/" + std::to_string(i), "expected an integer");
        g.push_back(j[i].get<long long>());
    }
    return g;
}

inline Point need_point(const Json& j, const AlgebraConfig& cfg, const std::string& path) {
    Point p;
    p.grade = need_grade(need(j, "grade", path), cfg.rank, path + "/grade");
    std::string name = need_string(need(j, "elem", path), path + "/elem");
    auto idx = cfg.loop.index_of(name);
    if (!idx) throw SchemaError(path + "/elem", "'" + name + "' is not a loop element");
    p.elem = *idx;
    return p;
}

inline Element need_element(const Json& j, const AlgebraConfig& cfg, const std::string& path) {
    if (!j.is_array()) throw SchemaError(path, "expected an array of basis terms");
    Element e;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string p = path + "/" + std::to_string(i);
        Point pt = need_point(j[i], cfg, p);
        Scalar c = need_scalar(need(j[i], "coeff", p), p + "/coeff");
        e.add_term(pt, c);
    }
    return e;
}

inline DiagMult need_multiplier(const Json& j, const AlgebraConfig& cfg,
                                const std::string& path) {
    std::string type = need_string(need(j, "type", path), path + "/type");
    if (type == "power") {
        const Json& lam = need(j, "lambda", path);
        if (!lam.is_array()) throw SchemaError(path + "/lambda", "expected an array");
        if (lam.size() != cfg.rank)
            throw SchemaError(path + "/lambda", "expected grading_rank = " +
                                                    std::to_string(cfg.rank) + " entries");
        std::vector<Scalar> ls;
        for (std::size_t i = 0; i < lam.size(); ++i) {
            Scalar v = need_scalar(lam[i], path + "/lambda/" + std::to_string(i));
            if (v.is_zero())
                throw SchemaError(path + "/lambda/" + std::to_string(i),
                                  "lambda must be a nonzero scalar");
            ls.push_back(std::move(v));
        }
        return DiagMult::power(Scalar(1), std::move(ls));
    }
    if (type == "table") {
        const Json& ent = need(j, "entries", path);
        if (!ent.is_array()) throw SchemaError(path + "/entries", "expected an array");
        std::map<Point, Scalar> entries;
        for (std::size_t i = 0; i < ent.size(); ++i) {
            const std::string p = path + "/entries/" + std::to_string(i);
            Point pt = need_point(ent[i], cfg, p);
            entries[pt] = need_scalar(need(ent[i], "value", p), p + "/value");
        }
        Scalar dflt = need_scalar(need(j, "default", path), path + "/default");
        return DiagMult::table(std::move(entries), std::move(dflt));
    }
    throw SchemaError(path + "/type", "unknown multiplier type '" + type +
                                          "' (expected 'power' or 'table')");
}

inline AlgebraConfig need_algebra(const Json& root, const Json& loop_j, std::size_t rank,
                                  const std::string& loop_path) {
    const Json& elems = need(loop_j, "elements", loop_path);
    if (!elems.is_array() || elems.empty())
        throw SchemaError(loop_path + "/elements", "expected a nonempty array of names");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < elems.size(); ++i)
        names.push_back(need_string(elems[i], loop_path + "/elements/" + std::to_string(i)));
    const Json& table = need(loop_j, "table", loop_path);
    if (!table.is_array()) throw SchemaError(loop_path + "/table", "expected an array of rows");
    std::vector<std::vector<std::string>> rows;
    for (std::size_t r = 0; r < table.size(); ++r) {
        if (!table[r].is_array())
            throw SchemaError(loop_path + "/table/" + std::to_string(r), "expected a row array");
        std::vector<std::string> row;
        for (std::size_t c = 0; c < table[r].size(); ++c)
            row.push_back(need_string(table[r][c], loop_path + "/table/" + std::to_string(r) +
                                                       "/" + std::to_string(c)));
        rows.push_back(std::move(row));
    }
    AlgebraConfig cfg;
    cfg.rank = rank;
    try {
        cfg.loop = validate_loop(names, rows);
    } catch (const LoopError& e) {
        throw SchemaError(loop_path, e.what());
    }
    (void)root;
    return cfg;
}

inline OreData need_ore(const Json& j, const AlgebraConfig& cfg, const std::string& path) {
    OreData d;
    const Json& ch = need(j, "character", path);
    d.chi.point = need_point(ch, cfg, path + "/character");
    if (ch.contains("extra_points")) {
        const Json& xs = ch["extra_points"];
        if (!xs.is_array()) throw SchemaError(path + "/character/extra_points", "expected array");
        for (std::size_t i = 0; i < xs.size(); ++i)
            d.chi.extra_points.push_back(
                need_point(xs[i], cfg, path + "/character/extra_points/" + std::to_string(i)));
    }
    d.r = need_multiplier(need(j, "grouplike", path), cfg, path + "/grouplike");
    const Json& der = need(j, "derivation", path);
    std::string type = need_string(need(der, "type", path + "/derivation"),
                                   path + "/derivation/type");
    if (type == "zero") {
        d.delta.kind = Derivation::Kind::Zero;
    } else if (type == "twisted") {
        d.delta.kind = Derivation::Kind::Twisted;
        d.delta.h = need_multiplier(need(der, "h", path + "/derivation"),
                                    cfg, path + "/derivation/h");
    } else if (type == "table") {
        d.delta.kind = Derivation::Kind::Table;
        const Json& ent = need(der, "entries", path + "/derivation");
        if (!ent.is_array())
            throw SchemaError(path + "/derivation/entries", "expected an array");
        for (std::size_t i = 0; i < ent.size(); ++i) {
            const std::string p = path + "/derivation/entries/" + std::to_string(i);
            Point pt = need_point(ent[i], cfg, p);
            d.delta.table[pt] = need_element(need(ent[i], "value", p), cfg, p + "/value");
        }
    } else {
        throw SchemaError(path + "/derivation/type",
                          "unknown derivation type '" + type +
                              "' (expected 'zero', 'twisted' or 'table')");
    }
    if (j.contains("faults")) {
        const Json& fs = j["faults"];
        if (!fs.is_array()) throw SchemaError(path + "/faults", "expected an array");
        for (std::size_t i = 0; i < fs.size(); ++i) {
            std::string f = need_string(fs[i], path + "/faults/" + std::to_string(i));
            if (f == "antipode-drop-rinv")
                d.fault_sy_drop_rinv = true;
            else
                throw SchemaError(path + "/faults/" + std::to_string(i),
                                  "unknown fault '" + f + "'");
        }
    }
    return d;
}

}  // namespace iodetail

inline Problem parse_problem(const Json& j) {
    using namespace iodetail;
    Problem pr;
    if (!j.is_object()) throw SchemaError("", "input document must be a JSON object");
    const Json& rank_j = need(j, "grading_rank", "");
    if (!rank_j.is_number_unsigned() && !(rank_j.is_number_integer() && rank_j.get<long long>() >= 0))
        throw SchemaError("/grading_rank", "expected a nonnegative integer");
    std::size_t rank = rank_j.get<std::size_t>();
    pr.cfg = need_algebra(j, need(j, "loop", ""), rank, "/loop");
    if (j.contains("ore")) pr.ore = need_ore(j["ore"], pr.cfg, "/ore");
    if (j.contains("star")) {
        const Json& st = j["star"];
        if (!st.is_object() || !st.contains("enabled") || !st["enabled"].is_boolean())
            throw SchemaError("/star", "expected {\"enabled\": bool}");
        pr.star_enabled = st["enabled"].get<bool>();
    }
    if (j.contains("iso")) {
        const Json& is = j["iso"];
        IsoInput iso;
        const Json& tgt = need(is, "target", "/iso");
        if (tgt.contains("loop"))
            iso.target_cfg = need_algebra(j, tgt["loop"], rank, "/iso/target/loop");
        else
            iso.target_cfg = pr.cfg;
        iso.target_ore = need_ore(need(tgt, "ore", "/iso/target"), iso.target_cfg,
                                  "/iso/target/ore");
        const Json& lm = need(is, "loop_map", "/iso");
        if (!lm.is_object()) throw SchemaError("/iso/loop_map", "expected an object");
        for (auto it = lm.begin(); it != lm.end(); ++it)
            iso.loop_map[it.key()] = need_string(it.value(), "/iso/loop_map/" + it.key());
        const Json& dp = need(is, "d_prime", "/iso");
        if (dp.is_string()) {
            if (dp.get<std::string>() != "zero")
                throw SchemaError("/iso/d_prime", "expected \"zero\", an element array or a "
                                                  "multiplier object");
        } else if (dp.is_array()) {
            iso.shift.zero = false;
            iso.shift.rule =
                DiagMult::from_element(need_element(dp, iso.target_cfg, "/iso/d_prime"));
        } else if (dp.is_object()) {
            iso.shift.zero = false;
            iso.shift.rule = need_multiplier(dp, iso.target_cfg, "/iso/d_prime");
        } else {
            throw SchemaError("/iso/d_prime", "expected \"zero\", an element array or a "
                                              "multiplier object");
        }
        pr.iso = std::move(iso);
    }
    if (j.contains("windows")) {
        const Json& w = j["windows"];
        if (!w.is_object()) throw SchemaError("/windows", "expected an object");
        if (w.contains("radius")) {
            if (!w["radius"].is_number_integer() || w["radius"].get<long long>() < 0)
                throw SchemaError("/windows/radius", "expected a nonnegative integer");
            pr.default_radius = w["radius"].get<long long>();
        }
        if (w.contains("maxdeg")) {
            if (!w["maxdeg"].is_number_integer() || w["maxdeg"].get<int>() < 0)
                throw SchemaError("/windows/maxdeg", "expected a nonnegative integer");
            pr.default_maxdeg = w["maxdeg"].get<int>();
        }
    }
    if (j.contains("suites")) {
        const Json& s = j["suites"];
        if (!s.is_array()) throw SchemaError("/suites", "expected an array of suite names");
        for (std::size_t i = 0; i < s.size(); ++i)
            pr.declared_suites.push_back(need_string(s[i], "/suites/" + std::to_string(i)));
    }
    return pr;
}

}  // namespace mhcq
