#include "posreal/digraph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "posreal/error.hpp"

namespace posreal {

Digraph::Digraph(int n) : n_(n) {
    if (n < 1) throw Error(Errc::InvalidVertex, "digraph order must be positive");
}

std::size_t Digraph::index_of(Arc arc) const {
    return static_cast<std::size_t>(std::lower_bound(arcs_.begin(), arcs_.end(), arc) - arcs_.begin());
}

bool Digraph::add_arc(Arc arc, std::optional<Rational> weight) {
    if (arc.tail < 1 || arc.tail > n_ || arc.head < 1 || arc.head > n_) {
        throw Error(Errc::InvalidVertex, "arc " + std::to_string(arc.tail) + "->" + std::to_string(arc.head) +
                                             " outside 1.." + std::to_string(n_));
    }
    if (weight && weight->sign() <= 0) throw std::invalid_argument("arc weights must be strictly positive");
    const std::size_t i = index_of(arc);
    if (i < arcs_.size() && arcs_[i] == arc) return false;
    arcs_.insert(arcs_.begin() + static_cast<std::ptrdiff_t>(i), arc);
    weights_.insert(weights_.begin() + static_cast<std::ptrdiff_t>(i), std::move(weight));
    return true;
}

bool Digraph::has_arc(Arc arc) const {
    const std::size_t i = index_of(arc);
    return i < arcs_.size() && arcs_[i] == arc;
}

void Digraph::set_weight(Arc arc, const Rational& weight) {
    if (weight.sign() <= 0) throw std::invalid_argument("arc weights must be strictly positive");
    const std::size_t i = index_of(arc);
    if (i >= arcs_.size() || arcs_[i] != arc) throw std::out_of_range("no such arc");
    weights_[i] = weight;
}

const std::optional<Rational>& Digraph::weight(Arc arc) const {
    const std::size_t i = index_of(arc);
    if (i >= arcs_.size() || arcs_[i] != arc) throw std::out_of_range("no such arc");
    return weights_[i];
}

std::vector<std::vector<Vertex>> Digraph::successors() const {
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n_) + 1);
    for (const Arc& a : arcs_) adj[static_cast<std::size_t>(a.tail)].push_back(a.head);
    return adj;
}

Cycle::Cycle(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw std::invalid_argument("a cycle needs at least one vertex");
    std::vector<Vertex> sorted = vertices_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("cycle vertices must be distinct");
    }
    std::rotate(vertices_.begin(), std::min_element(vertices_.begin(), vertices_.end()), vertices_.end());
}

bool Cycle::contains(Vertex v) const { return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end(); }

std::vector<Arc> Cycle::arcs() const {
    std::vector<Arc> out;
    out.reserve(vertices_.size());
    for (std::size_t t = 0; t < vertices_.size(); ++t) {
        out.push_back({vertices_[t], vertices_[(t + 1) % vertices_.size()]});
    }
    return out;
}

namespace {

class JohnsonSearch {
public:
    JohnsonSearch(const Digraph& g, const std::function<bool(std::span<const Vertex>)>& visitor)
        : adj_(g.successors()),
          visitor_(visitor),
          blocked_(adj_.size(), false),
          blist_(adj_.size()) {}

    bool run() {
        const auto n = static_cast<Vertex>(adj_.size() - 1);
        for (start_ = 1; start_ <= n; ++start_) {
            for (Vertex v = start_; v <= n; ++v) {
                blocked_[static_cast<std::size_t>(v)] = false;
                blist_[static_cast<std::size_t>(v)].clear();
            }
            circuit(start_);
            if (stopped_) return false;
        }
        return true;
    }

private:
    bool circuit(Vertex v) {
        bool found = false;
        stack_.push_back(v);
        blocked_[static_cast<std::size_t>(v)] = true;
        for (Vertex w : adj_[static_cast<std::size_t>(v)]) {
            if (w < start_) continue;
            if (w == start_) {
                found = true;
                if (!visitor_(stack_)) stopped_ = true;
            } else if (!blocked_[static_cast<std::size_t>(w)] && circuit(w)) {
                found = true;
            }
            if (stopped_) break;
        }
        if (found) {
            unblock(v);
        } else {
            for (Vertex w : adj_[static_cast<std::size_t>(v)]) {
                if (w <= start_) continue;
                auto& b = blist_[static_cast<std::size_t>(w)];
                if (std::find(b.begin(), b.end(), v) == b.end()) b.push_back(v);
            }
        }
        stack_.pop_back();
        return found;
    }

    void unblock(Vertex u) {
        blocked_[static_cast<std::size_t>(u)] = false;
        auto pending = std::move(blist_[static_cast<std::size_t>(u)]);
        blist_[static_cast<std::size_t>(u)].clear();
        for (Vertex w : pending) {
            if (blocked_[static_cast<std::size_t>(w)]) unblock(w);
        }
    }

    std::vector<std::vector<Vertex>> adj_;
    const std::function<bool(std::span<const Vertex>)>& visitor_;
    std::vector<bool> blocked_;
    std::vector<std::vector<Vertex>> blist_;
    std::vector<Vertex> stack_;
    Vertex start_ = 1;
    bool stopped_ = false;
};

}  // namespace

bool visit_simple_cycles(const Digraph& g, const std::function<bool(std::span<const Vertex>)>& visitor) {
    return JohnsonSearch(g, visitor).run();
}

std::vector<Cycle> enumerate_simple_cycles(const Digraph& g, std::size_t max_cycles) {
    std::vector<Cycle> out;
    bool exceeded = false;
    visit_simple_cycles(g, [&](std::span<const Vertex> path) {
        if (out.size() >= max_cycles) {
            exceeded = true;
            return false;
        }
        out.emplace_back(std::vector<Vertex>(path.begin(), path.end()));
        return true;
    });
    if (exceeded) {
        throw Error(Errc::CycleBudgetExceeded, "more than " + std::to_string(max_cycles) + " simple cycles");
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Cycle> enumerate_monomial_cycles(int n, int k) {
    if (k < 1 || k > n) {
        throw Error(Errc::InvalidDegree,
                    "cycle length " + std::to_string(k) + " outside 1.." + std::to_string(n));
    }
    std::vector<Cycle> out;
    // Walk k-subsets in lexicographic order; the smallest element leads,
    // the remaining k-1 are permuted.
    std::vector<Vertex> subset(static_cast<std::size_t>(k));
    std::iota(subset.begin(), subset.end(), 1);
    while (true) {
        std::vector<Vertex> rest(subset.begin() + 1, subset.end());
        do {
            std::vector<Vertex> cyc{subset.front()};
            cyc.insert(cyc.end(), rest.begin(), rest.end());
            out.emplace_back(std::move(cyc));
        } while (std::next_permutation(rest.begin(), rest.end()));

        int i = k - 1;
        while (i >= 0 && subset[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
        if (i < 0) break;
        ++subset[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool vertex_disjoint(const Cycle& a, const Cycle& b) {
    for (Vertex v : a.vertices()) {
        if (b.contains(v)) return false;
    }
    return true;
}

Digraph union_of_cycles(std::span<const Cycle> cycles, int n) {
    Digraph g(n);
    for (const Cycle& c : cycles) {
        for (const Arc& a : c.arcs()) g.add_arc(a);
    }
    return g;
}

}  // namespace posreal
