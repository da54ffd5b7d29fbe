#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "posreal/rational.hpp"

namespace posreal {

/// Vertices are labeled 1..n.
using Vertex = int;

/// Arc tail -> head. The arc corresponds to the matrix entry A(head, tail).
struct Arc {
    Vertex tail = 0;
    Vertex head = 0;

    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Directed graph without parallel arcs; self-loops allowed. Arcs are kept
/// sorted by (tail, head) and may carry a strictly positive weight.
class Digraph {
public:
    explicit Digraph(int n);

    int order() const noexcept { return n_; }
    std::size_t size() const noexcept { return arcs_.size(); }

    /// Returns false (and leaves the graph unchanged) if the arc already exists.
    /// Throws InvalidVertex for labels outside 1..n.
    bool add_arc(Arc arc, std::optional<Rational> weight = std::nullopt);
    bool has_arc(Arc arc) const;

    /// Throws std::invalid_argument for a non-positive weight and
    /// std::out_of_range for a missing arc.
    void set_weight(Arc arc, const Rational& weight);
    const std::optional<Rational>& weight(Arc arc) const;

    const std::vector<Arc>& arcs() const noexcept { return arcs_; }

    /// Out-neighbours of every vertex; index 0 is unused.
    std::vector<std::vector<Vertex>> successors() const;

    friend bool operator==(const Digraph&, const Digraph&) = default;

private:
    std::size_t index_of(Arc arc) const;

    int n_;
    std::vector<Arc> arcs_;
    std::vector<std::optional<Rational>> weights_;
};

/// Simple directed cycle, rotated so that it starts at its smallest vertex.
/// Ordered by (length, vertex sequence).
class Cycle {
public:
    /// Throws std::invalid_argument for an empty sequence or repeated vertices.
    explicit Cycle(std::vector<Vertex> vertices);

    std::size_t length() const noexcept { return vertices_.size(); }
    const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
    bool contains(Vertex v) const;

    /// v_0 -> v_1 -> ... -> v_0, in traversal order from the canonical start.
    std::vector<Arc> arcs() const;

    friend bool operator==(const Cycle&, const Cycle&) = default;
    friend std::strong_ordering operator<=>(const Cycle& a, const Cycle& b) {
        if (auto c = a.length() <=> b.length(); c != 0) return c;
        return a.vertices_ <=> b.vertices_;
    }

private:
    std::vector<Vertex> vertices_;
};

/// Backtracking enumeration with blocking (Johnson). Visits each simple cycle
/// once, rooted at its smallest vertex, in no particular order. The visitor
/// returns false to stop; the function returns false if it was stopped.
bool visit_simple_cycles(const Digraph& g, const std::function<bool(std::span<const Vertex>)>& visitor);

/// All simple cycles sorted by (length, vertex sequence).
/// Throws CycleBudgetExceeded when more than max_cycles exist.
std::vector<Cycle> enumerate_simple_cycles(const Digraph& g,
                                           std::size_t max_cycles = std::numeric_limits<std::size_t>::max());

/// Every simple cycle of length exactly k on vertices 1..n, C(n,k)(k-1)! of
/// them, sorted. Throws InvalidDegree unless 1 <= k <= n.
std::vector<Cycle> enumerate_monomial_cycles(int n, int k);

bool vertex_disjoint(const Cycle& a, const Cycle& b);

/// Union of the cycles' arc sets, weights unassigned.
Digraph union_of_cycles(std::span<const Cycle> cycles, int n);

}  // namespace posreal
