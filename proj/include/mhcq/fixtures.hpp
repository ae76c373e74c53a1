#pragma once

// Bundled demo fixtures.  The same documents ship as files under
// fixtures/; the copies here make `demo` independent of the working
// directory.  The mutation pack is a composite demo: each entry is a
// deliberately corrupted data set together with the law it must break.

#include <array>

#include "engine.hpp"

namespace mhcq {

struct DemoFixture {
    const char* name;
    const char* json;
};

inline constexpr const char* kFixtureC2 = R"JSON({
  "schema_version": 1,
  "grading_rank": 1,
  "loop": {"elements": ["e", "g"], "table": [["e", "g"], ["g", "e"]]},
  "ore": {
    "character": {"grade": [-2], "elem": "e"},
    "grouplike": {"type": "power", "lambda": ["2"]},
    "derivation": {"type": "zero"}
  },
  "windows": {"radius": 3, "maxdeg": 3},
  "suites": ["loop", "mhc", "coassoc", "ore-conditions", "extension", "derived"]
})JSON";

inline constexpr const char* kFixtureS3 = R"JSON({
  "schema_version": 1,
  "grading_rank": 1,
  "loop": {
    "elements": ["e", "r", "rr", "s", "sr", "srr"],
    "table": [
      ["e", "r", "rr", "s", "sr", "srr"],
      ["r", "rr", "e", "sr", "srr", "s"],
      ["rr", "e", "r", "srr", "s", "sr"],
      ["s", "srr", "sr", "e", "rr", "r"],
      ["sr", "s", "srr", "r", "e", "rr"],
      ["srr", "sr", "s", "rr", "r", "e"]
    ]
  },
  "ore": {
    "character": {"grade": [-2], "elem": "e"},
    "grouplike": {"type": "power", "lambda": ["2"]},
    "derivation": {"type": "zero"}
  },
  "windows": {"radius": 2, "maxdeg": 1},
  "suites": ["loop", "mhc", "coassoc", "ore-conditions", "extension", "derived"]
})JSON";

inline constexpr const char* kFixtureMoufang12 = R"JSON({
  "schema_version": 1,
  "grading_rank": 1,
  "loop": {
    "elements": ["e", "r", "rr", "s", "sr", "srr", "eu", "ru", "rru", "su", "sru", "srru"],
    "table": [
      ["e", "r", "rr", "s", "sr", "srr", "eu", "ru", "rru", "su", "sru", "srru"],
      ["r", "rr", "e", "sr", "srr", "s", "ru", "rru", "eu", "srru", "su", "sru"],
      ["rr", "e", "r", "srr", "s", "sr", "rru", "eu", "ru", "sru", "srru", "su"],
      ["s", "srr", "sr", "e", "rr", "r", "su", "sru", "srru", "eu", "ru", "rru"],
      ["sr", "s", "srr", "r", "e", "rr", "sru", "srru", "su", "rru", "eu", "ru"],
      ["srr", "sr", "s", "rr", "r", "e", "srru", "su", "sru", "ru", "rru", "eu"],
      ["eu", "rru", "ru", "su", "sru", "srru", "e", "rr", "r", "s", "sr", "srr"],
      ["ru", "eu", "rru", "sru", "srru", "su", "r", "e", "rr", "srr", "s", "sr"],
      ["rru", "ru", "eu", "srru", "su", "sru", "rr", "r", "e", "sr", "srr", "s"],
      ["su", "sru", "srru", "eu", "rru", "ru", "s", "srr", "sr", "e", "r", "rr"],
      ["sru", "srru", "su", "ru", "eu", "rru", "sr", "s", "srr", "rr", "e", "r"],
      ["srru", "su", "sru", "rru", "ru", "eu", "srr", "sr", "s", "r", "rr", "e"]
    ]
  },
  "ore": {
    "character": {"grade": [-2], "elem": "e"},
    "grouplike": {"type": "power", "lambda": ["2"]},
    "derivation": {"type": "zero"}
  },
  "windows": {"radius": 2, "maxdeg": 1},
  "suites": ["loop", "mhc", "coassoc"]
})JSON";

inline constexpr const char* kFixtureStarTrivialShift = R"JSON({
  "schema_version": 1,
  "grading_rank": 1,
  "loop": {"elements": ["e", "g"], "table": [["e", "g"], ["g", "e"]]},
  "ore": {
    "character": {"grade": [0], "elem": "e"},
    "grouplike": {"type": "power", "lambda": ["2"]},
    "derivation": {"type": "zero"}
  },
  "star": {"enabled": true},
  "windows": {"radius": 2, "maxdeg": 2},
  "suites": ["loop", "mhc", "ore-conditions", "star"]
})JSON";

inline constexpr const char* kFixtureIsoS3Conjugation = R"JSON({
  "schema_version": 1,
  "grading_rank": 1,
  "loop": {
    "elements": ["e", "r", "rr", "s", "sr", "srr"],
    "table": [
      ["e", "r", "rr", "s", "sr", "srr"],
      ["r", "rr", "e", "sr", "srr", "s"],
      ["rr", "e", "r", "srr", "s", "sr"],
      ["s", "srr", "sr", "e", "rr", "r"],
      ["sr", "s", "srr", "r", "e", "rr"],
      ["srr", "sr", "s", "rr", "r", "e"]
    ]
  },
  "ore": {
    "character": {"grade": [-2], "elem": "e"},
    "grouplike": {"type": "power", "lambda": ["2"]},
    "derivation": {"type": "zero"}
  },
  "star": {"enabled": true},
  "iso": {
    "loop_map": {"e": "e", "r": "rr", "rr": "r", "s": "s", "sr": "srr", "srr": "sr"},
    "d_prime": "zero",
    "target": {
      "ore": {
        "character": {"grade": [-2], "elem": "e"},
        "grouplike": {"type": "power", "lambda": ["2"]},
        "derivation": {"type": "zero"}
      }
    }
  },
  "windows": {"radius": 2, "maxdeg": 2},
  "suites": ["loop", "ore-conditions", "iso"]
})JSON";

// --- mutation pack -----------------------------------------------------

inline constexpr const char* kMutTwoPointChi = R"JSON({
  "grading_rank": 1,
  "loop": {"elements": ["e", "g"], "table": [["e", "g"], ["g", "e"]]},
  "ore": {
    "character": {"grade": [-2], "elem": "e", "extra_points": [{"grade": [-1], "elem": "e"}]},
    "grouplike": {"type": "power", "lambda": ["2"]},
    "derivation": {"type": "zero"}
  },
  "windows": {"radius": 3, "maxdeg": 1},
  "suites": ["ore-conditions"]
})JSON";

inline constexpr const char* kMutTableR = R"JSON({
  "grading_rank": 1,
  "loop": {"elements": ["e", "g"], "table": [["e", "g"], ["g", "e"]]},
  "ore": {
    "character": {"grade": [-2], "elem": "e"},
    "grouplike": {"type": "table", "entries": [{"grade": [1], "elem": "e", "value": "1"}], "default": "2"},
    "derivation": {"type": "zero"}
  },
  "windows": {"radius": 2, "maxdeg": 1},
  "suites": ["ore-conditions"]
})JSON";

inline constexpr const char* kMutDropRinv = R"JSON({
  "grading_rank": 1,
  "loop": {"elements": ["e", "g"], "table": [["e", "g"], ["g", "e"]]},
  "ore": {
    "character": {"grade": [-2], "elem": "e"},
    "grouplike": {"type": "power", "lambda": ["2"]},
    "derivation": {"type": "zero"},
    "faults": ["antipode-drop-rinv"]
  },
  "windows": {"radius": 1, "maxdeg": 1},
  "suites": ["extension"]
})JSON";

inline constexpr const char* kMutLambdaI = R"JSON({
  "grading_rank": 1,
  "loop": {"elements": ["e", "g"], "table": [["e", "g"], ["g", "e"]]},
  "ore": {
    "character": {"grade": [0], "elem": "e"},
    "grouplike": {"type": "power", "lambda": ["0+1i"]},
    "derivation": {"type": "zero"}
  },
  "star": {"enabled": true},
  "windows": {"radius": 2, "maxdeg": 1},
  "suites": ["star"]
})JSON";

inline constexpr const char* kMutIsoLambdaMismatch = R"JSON({
  "grading_rank": 1,
  "loop": {
    "elements": ["e", "r", "rr", "s", "sr", "srr"],
    "table": [
      ["e", "r", "rr", "s", "sr", "srr"],
      ["r", "rr", "e", "sr", "srr", "s"],
      ["rr", "e", "r", "srr", "s", "sr"],
      ["s", "srr", "sr", "e", "rr", "r"],
      ["sr", "s", "srr", "r", "e", "rr"],
      ["srr", "sr", "s", "rr", "r", "e"]
    ]
  },
  "ore": {
    "character": {"grade": [-2], "elem": "e"},
    "grouplike": {"type": "power", "lambda": ["2"]},
    "derivation": {"type": "zero"}
  },
  "iso": {
    "loop_map": {"e": "e", "r": "rr", "rr": "r", "s": "s", "sr": "srr", "srr": "sr"},
    "d_prime": "zero",
    "target": {
      "ore": {
        "character": {"grade": [-2], "elem": "e"},
        "grouplike": {"type": "power", "lambda": ["3"]},
        "derivation": {"type": "zero"}
      }
    }
  },
  "windows": {"radius": 1, "maxdeg": 1},
  "suites": ["iso"]
})JSON";

struct MutationEntry {
    const char* name;
    const char* json;
    const char* target_suite;
    const char* target_law;
};

inline const std::array<MutationEntry, 5>& mutation_pack() {
    static const std::array<MutationEntry, 5> pack = {{
        {"two-point-chi", kMutTwoPointChi, "ore-conditions", "C1"},
        {"non-grouplike-table-r", kMutTableR, "ore-conditions", "GroupLike.mult"},
        {"antipode-drop-rinv", kMutDropRinv, "extension", "ext:Eq2.1a"},
        {"lambda-i-star", kMutLambdaI, "star", "Thm3.9(3)"},
        {"iso-lambda-mismatch", kMutIsoLambdaMismatch, "iso", "Thm4.2:phi(r)"},
    }};
    return pack;
}

inline const std::vector<DemoFixture>& demo_fixtures() {
    static const std::vector<DemoFixture> fixtures = {
        {"example-3-6-2-c2", kFixtureC2},
        {"example-3-6-2-s3", kFixtureS3},
        {"example-3-6-2-moufang12", kFixtureMoufang12},
        {"star-trivial-shift", kFixtureStarTrivialShift},
        {"iso-s3-conjugation", kFixtureIsoS3Conjugation},
    };
    return fixtures;
}

struct DemoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline RunConfig fixture_run_config(const Problem& pr, const std::string& name) {
    RunConfig rc;
    rc.input_name = name;
    rc.radius = pr.default_radius.value_or(2);
    rc.maxdeg = pr.default_maxdeg.value_or(3);
    rc.suites = resolve_suites(pr, {});
    return rc;
}

// Runs a bundled fixture by name.  The mutation pack runs every corrupted
// fixture twice: the targeted law must fail with a witness, and the rerun
// must reproduce the identical witness (the replay check).
inline EngineReport run_demo(const std::string& name) {
    if (name == "mutation-pack") {
        EngineReport out;
        out.config.input_name = "mutation-pack";
        out.config.suites = {"mutation-pack"};
        SuiteReport rep;
        rep.name = "mutation-pack";
        for (auto& entry : mutation_pack()) {
            LawResult lr{std::string("mutation:") + entry.name};
            lr.checked = 1;
            Problem pr = parse_problem(Json::parse(entry.json));
            RunConfig rc = fixture_run_config(pr, entry.name);
            EngineReport first = run_suites(pr, rc);
            EngineReport second = run_suites(pr, rc);
            const LawResult* target = nullptr;
            const LawResult* target2 = nullptr;
            for (auto& s : first.suites)
                for (auto& l : s.laws)
                    if (s.name == entry.target_suite && l.law == entry.target_law) target = &l;
            for (auto& s : second.suites)
                for (auto& l : s.laws)
                    if (s.name == entry.target_suite && l.law == entry.target_law) target2 = &l;
            auto witness_key = [](const LawResult& l) {
                return l.witness ? l.witness->input + "|" + l.witness->component + "|" +
                                       l.witness->lhs + "|" + l.witness->rhs
                                 : std::string();
            };
            if (!target || target->passed || !target->witness) {
                lr.passed = false;
                lr.witness = Witness{lr.law, entry.target_law, "-",
                                     target ? "law passed or lacks a witness" : "law not run",
                                     "expected a failing law with a witness"};
            } else if (!target2 || witness_key(*target) != witness_key(*target2)) {
                lr.passed = false;
                lr.witness = Witness{lr.law, entry.target_law, "-",
                                     "witness not reproduced on replay", witness_key(*target)};
            } else {
                rep.notes.push_back(std::string(entry.name) + ": " + entry.target_law +
                                    " fails as intended at " + target->witness->component);
            }
            rep.add(std::move(lr));
        }
        out.suites.push_back(std::move(rep));
        return out;
    }
    for (auto& f : demo_fixtures()) {
        if (name == f.name) {
            Problem pr = parse_problem(Json::parse(f.json));
            RunConfig rc = fixture_run_config(pr, name);
            return run_suites(pr, rc);
        }
    }
    throw DemoError("unknown demo '" + name + "'; available: example-3-6-2-c2, example-3-6-2-s3, "
                    "example-3-6-2-moufang12, star-trivial-shift, iso-s3-conjugation, "
                    "mutation-pack");
}

}  // namespace mhcq
