#pragma once

// Shared fixtures for the test suites: small validated loops and algebra
// configurations.  The order-12 table is the Chein double of S3 (the
// smallest nonassociative Moufang loop); the order-5 table is a loop with
// two-sided inverses that violates the inverse properties, found by random
// search and frozen here.

#include <string>
#include <vector>

#include <mhcq/algebra.hpp>
#include <mhcq/loop.hpp>

namespace testutil {

using mhcq::AlgebraConfig;
using mhcq::Loop;

inline Loop c2() {
    return mhcq::validate_loop({"e", "g"}, {{"e", "g"}, {"g", "e"}});
}

inline Loop s3() {
    std::vector<std::string> n = {"e", "r", "rr", "s", "sr", "srr"};
    std::vector<std::vector<std::string>> t = {
        {"e", "r", "rr", "s", "sr", "srr"},   {"r", "rr", "e", "sr", "srr", "s"},
        {"rr", "e", "r", "srr", "s", "sr"},   {"s", "srr", "sr", "e", "rr", "r"},
        {"sr", "s", "srr", "r", "e", "rr"},   {"srr", "sr", "s", "rr", "r", "e"}};
    return mhcq::validate_loop(n, t);
}

inline Loop moufang12() {
    std::vector<std::string> n = {"e",  "r",  "rr",  "s",  "sr",  "srr",
                                  "eu", "ru", "rru", "su", "sru", "srru"};
    std::vector<std::vector<std::string>> t = {
        {"e", "r", "rr", "s", "sr", "srr", "eu", "ru", "rru", "su", "sru", "srru"},
        {"r", "rr", "e", "sr", "srr", "s", "ru", "rru", "eu", "srru", "su", "sru"},
        {"rr", "e", "r", "srr", "s", "sr", "rru", "eu", "ru", "sru", "srru", "su"},
        {"s", "srr", "sr", "e", "rr", "r", "su", "sru", "srru", "eu", "ru", "rru"},
        {"sr", "s", "srr", "r", "e", "rr", "sru", "srru", "su", "rru", "eu", "ru"},
        {"srr", "sr", "s", "rr", "r", "e", "srru", "su", "sru", "ru", "rru", "eu"},
        {"eu", "rru", "ru", "su", "sru", "srru", "e", "rr", "r", "s", "sr", "srr"},
        {"ru", "eu", "rru", "sru", "srru", "su", "r", "e", "rr", "srr", "s", "sr"},
        {"rru", "ru", "eu", "srru", "su", "sru", "rr", "r", "e", "sr", "srr", "s"},
        {"su", "sru", "srru", "eu", "rru", "ru", "s", "srr", "sr", "e", "r", "rr"},
        {"sru", "srru", "su", "ru", "eu", "rru", "sr", "s", "srr", "rr", "e", "r"},
        {"srru", "su", "sru", "rru", "ru", "eu", "srr", "sr", "s", "r", "rr", "e"}};
    return mhcq::validate_loop(n, t);
}

// Two-sided inverses (each element is an involution) but the inverse
// properties fail, e.g. inv(a1)*(a1*a2) = a4 != a2.
inline Loop noip5() {
    std::vector<std::string> n = {"e", "a1", "a2", "a3", "a4"};
    std::vector<std::vector<std::string>> t = {{"e", "a1", "a2", "a3", "a4"},
                                               {"a1", "e", "a3", "a4", "a2"},
                                               {"a2", "a4", "e", "a1", "a3"},
                                               {"a3", "a2", "a4", "e", "a1"},
                                               {"a4", "a3", "a1", "a2", "e"}};
    return mhcq::validate_loop(n, t);
}

inline AlgebraConfig config(Loop g, std::size_t rank = 1) {
    AlgebraConfig cfg;
    cfg.rank = rank;
    cfg.loop = std::move(g);
    return cfg;
}

inline mhcq::Point pt(const AlgebraConfig& cfg, std::vector<long long> grade,
                      const std::string& name) {
    auto idx = cfg.loop.index_of(name);
    return mhcq::Point{std::move(grade), *idx};
}

}  // namespace testutil
