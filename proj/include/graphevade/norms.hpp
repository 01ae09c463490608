#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace graphevade {

enum class NormKind { L1, L2, LInf, WeightedL1 };

inline std::string to_string(NormKind k) {
    switch (k) {
        case NormKind::L1: return "l1";
        case NormKind::L2: return "l2";
        case NormKind::LInf: return "linf";
        case NormKind::WeightedL1: return "weighted_l1";
    }
    return "?";
}

inline NormKind norm_kind_from_string(const std::string& s) {
    if (s == "l1") return NormKind::L1;
    if (s == "l2") return NormKind::L2;
    if (s == "linf") return NormKind::LInf;
    if (s == "weighted_l1") return NormKind::WeightedL1;
    throw std::invalid_argument("unknown norm: " + s);
}

// Cost norm used for edge weights. WeightedL1 is ||A x||_1 with a strictly
// positive diagonal A.
struct NormSpec {
    NormKind kind = NormKind::L1;
    std::vector<double> diag;  // WeightedL1 only

    static NormSpec l1() { return {NormKind::L1, {}}; }
    static NormSpec l2() { return {NormKind::L2, {}}; }
    static NormSpec linf() { return {NormKind::LInf, {}}; }
    static NormSpec weighted_l1(std::vector<double> d) {
        for (double w : d)
            if (!(w > 0.0))
                throw std::invalid_argument("weighted_l1 requires strictly positive diagonal");
        return {NormKind::WeightedL1, std::move(d)};
    }
};

inline double norm_of(const NormSpec& spec, std::span<const double> v) {
    double acc = 0.0;
    switch (spec.kind) {
        case NormKind::L1:
            for (double x : v) acc += std::abs(x);
            return acc;
        case NormKind::L2:
            for (double x : v) acc += x * x;
            return std::sqrt(acc);
        case NormKind::LInf:
            for (double x : v) acc = std::max(acc, std::abs(x));
            return acc;
        case NormKind::WeightedL1:
            if (spec.diag.size() != v.size())
                throw std::invalid_argument("weight diagonal dimension mismatch");
            for (std::size_t i = 0; i < v.size(); ++i) acc += std::abs(spec.diag[i] * v[i]);
            return acc;
    }
    throw std::logic_error("unreachable");
}

// Dual (Hoelder-conjugate) norm of a weight vector: L1 <-> LInf, L2 <-> L2.
// For cost ||A d||_1 with diagonal A, rescaling variables gives ||A^-1 w||_inf.
inline double dual_norm_of(const NormSpec& spec, std::span<const double> w) {
    double acc = 0.0;
    switch (spec.kind) {
        case NormKind::L1:
            for (double x : w) acc = std::max(acc, std::abs(x));
            return acc;
        case NormKind::L2:
            for (double x : w) acc += x * x;
            return std::sqrt(acc);
        case NormKind::LInf:
            for (double x : w) acc += std::abs(x);
            return acc;
        case NormKind::WeightedL1:
            if (spec.diag.size() != w.size())
                throw std::invalid_argument("weight diagonal dimension mismatch");
            for (std::size_t i = 0; i < w.size(); ++i)
                acc = std::max(acc, std::abs(w[i] / spec.diag[i]));
            return acc;
    }
    throw std::logic_error("unreachable");
}

}  // namespace graphevade
