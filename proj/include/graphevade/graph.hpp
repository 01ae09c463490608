#pragma once

#include <cstdint>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace graphevade {

// Canonical byte encoding of a node. Floating-point fields are rounded to a
// fixed decimal precision before encoding so that equal-valued states hash
// identically.
class KeyBuilder {
public:
    KeyBuilder& add(long long v) {
        buf_ += 'i';
        buf_ += std::to_string(v);
        buf_ += '|';
        return *this;
    }
    KeyBuilder& add(int v) { return add(static_cast<long long>(v)); }
    KeyBuilder& add(bool v) {
        buf_ += v ? "b1|" : "b0|";
        return *this;
    }
    KeyBuilder& add(double v) {
        char tmp[64];
        std::snprintf(tmp, sizeof tmp, "f%.9f|", v == 0.0 ? 0.0 : v);  // -0.0 -> 0.0
        buf_ += tmp;
        return *this;
    }
    KeyBuilder& add(const std::string& s) {
        buf_ += 's';
        buf_ += s;
        buf_ += '|';
        return *this;
    }
    std::string str() && { return std::move(buf_); }

private:
    std::string buf_;
};

// Transformation graph: `expand` enumerates the atomic transformations of a
// state together with their strictly positive costs, `key` produces the
// canonical node encoding. Both must be pure and deterministic.
template <class State>
struct Graph {
    std::function<std::vector<std::pair<State, double>>(const State&)> expand;
    std::function<std::string(const State&)> key;
    std::optional<double> min_edge_cost;
    std::string description;
};

template <class State>
using GoalFn = std::function<bool(const State&)>;

}  // namespace graphevade
