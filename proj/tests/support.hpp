#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "posreal/digraph.hpp"
#include "posreal/matrix.hpp"
#include "posreal/rational.hpp"

namespace posreal::testing {

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5eed1234ULL);
    return gen;
}

inline long uniform_int(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Rational random_rational(long bound = 9, long max_den = 5) {
    return Rational(uniform_int(-bound, bound), uniform_int(1, max_den));
}

inline Matrix random_matrix(std::size_t n, long bound = 5, long max_den = 3) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = random_rational(bound, max_den);
    }
    return m;
}

inline Digraph random_digraph(int n, double density) {
    Digraph g(n);
    std::bernoulli_distribution coin(density);
    for (Vertex t = 1; t <= n; ++t) {
        for (Vertex h = 1; h <= n; ++h) {
            if (coin(rng())) g.add_arc({t, h});
        }
    }
    return g;
}

/// Reference cycle lister: every vertex subset, every ordering of it that
/// starts at its minimum, kept if all arcs exist.
inline std::vector<std::vector<Vertex>> brute_force_cycles(const Digraph& g) {
    const int n = g.order();
    std::vector<std::vector<Vertex>> out;
    for (unsigned subset = 1; subset < (1u << n); ++subset) {
        std::vector<Vertex> members;
        for (int v = 1; v <= n; ++v) {
            if (subset & (1u << (v - 1))) members.push_back(v);
        }
        std::vector<Vertex> rest(members.begin() + 1, members.end());
        do {
            std::vector<Vertex> seq{members.front()};
            seq.insert(seq.end(), rest.begin(), rest.end());
            bool ok = true;
            for (std::size_t t = 0; t < seq.size() && ok; ++t) ok = g.has_arc({seq[t], seq[(t + 1) % seq.size()]});
            if (ok) out.push_back(seq);
        } while (std::next_permutation(rest.begin(), rest.end()));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

inline std::vector<std::vector<Vertex>> as_sequences(const std::vector<Cycle>& cycles) {
    std::vector<std::vector<Vertex>> out;
    for (const auto& c : cycles) out.push_back(c.vertices());
    return out;
}

}  // namespace posreal::testing
