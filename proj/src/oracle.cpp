#include "posreal/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "posreal/error.hpp"

namespace posreal::oracle {

CharPoly char_poly_of_matrix(const Matrix& a) {
    if (!a.is_square()) throw Error(Errc::NotSquare, "characteristic polynomial of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) throw Error(Errc::NotSquare, "empty matrix");

    // c[i] is the coefficient of lambda^i; c[n] = 1.
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    Matrix m = Matrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        const Matrix am = a * m;
        c[n - k] = -am.trace() / Rational(static_cast<long>(k));
        m = am + c[n - k] * Matrix::identity(n);
    }
    std::vector<Rational> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = -c[i];
    return CharPoly(std::move(d));
}

namespace {

using PolyMatrix = std::vector<std::vector<ShiftedPoly>>;

ShiftedPoly cofactor_det(const PolyMatrix& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    ShiftedPoly det;
    for (std::size_t col = 0; col < n; ++col) {
        if (m[0][col].is_zero()) continue;
        PolyMatrix minor;
        for (std::size_t r = 1; r < n; ++r) {
            auto& row = minor.emplace_back();
            for (std::size_t cidx = 0; cidx < n; ++cidx) {
                if (cidx != col) row.push_back(m[r][cidx]);
            }
        }
        const ShiftedPoly term = poly_mul(m[0][col], cofactor_det(minor));
        det = col % 2 == 0 ? det + term : det - term;
    }
    return det;
}

}  // namespace

ShiftedPoly char_poly_cofactor(const Matrix& a) {
    if (!a.is_square()) throw Error(Errc::NotSquare, "characteristic polynomial of a non-square matrix");
    const std::size_t n = a.rows();
    PolyMatrix m(n, std::vector<ShiftedPoly>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j] = i == j ? ShiftedPoly{-a(i, j), Rational(1)} : ShiftedPoly{-a(i, j)};
        }
    }
    return cofactor_det(m);
}

namespace {

struct CandidateCycle {
    std::uint32_t arc_mask = 0;
    std::uint32_t vertex_mask = 0;
    int length = 0;
};

// Bit (tail-1)*n + (head-1) encodes the arc tail -> head.
std::vector<CandidateCycle> all_possible_cycles(int n) {
    std::vector<CandidateCycle> out;
    for (std::uint32_t subset = 1; subset < (1u << n); ++subset) {
        std::vector<int> members;
        for (int v = 0; v < n; ++v) {
            if (subset & (1u << v)) members.push_back(v);
        }
        std::vector<int> rest(members.begin() + 1, members.end());
        do {
            std::vector<int> seq{members.front()};
            seq.insert(seq.end(), rest.begin(), rest.end());
            CandidateCycle cyc{0, subset, static_cast<int>(seq.size())};
            for (std::size_t t = 0; t < seq.size(); ++t) {
                const int tail = seq[t];
                const int head = seq[(t + 1) % seq.size()];
                cyc.arc_mask |= 1u << (tail * n + head);
            }
            out.push_back(cyc);
        } while (std::next_permutation(rest.begin(), rest.end()));
    }
    return out;
}

}  // namespace

std::set<ArcStructure> brute_force_structures(const std::vector<Monomial>& monomials, int n,
                                              const BruteForceOptions& options) {
    const int cap = options.allow_order4 ? 4 : 3;
    if (n < 1 || n > cap) {
        throw Error(Errc::OrderTooLarge, "brute-force structure scan supports 1 <= n <= " + std::to_string(cap));
    }
    std::vector<int> wanted;
    for (const Monomial& m : monomials) wanted.push_back(m.degree);
    std::sort(wanted.begin(), wanted.end());

    const auto cycles = all_possible_cycles(n);
    const std::uint32_t all_vertices = (1u << n) - 1;
    const std::uint64_t structures = std::uint64_t{1} << (n * n);

    std::set<ArcStructure> out;
    std::vector<const CandidateCycle*> present;
    for (std::uint64_t s = 0; s < structures; ++s) {
        const auto mask = static_cast<std::uint32_t>(s);
        present.clear();
        bool too_many = false;
        for (const auto& cyc : cycles) {
            if ((cyc.arc_mask & mask) == cyc.arc_mask) {
                if (present.size() == wanted.size()) {
                    too_many = true;
                    break;
                }
                present.push_back(&cyc);
            }
        }
        if (too_many || present.size() != wanted.size() || present.empty()) continue;

        std::vector<int> lengths;
        std::uint32_t covered = 0;
        for (const auto* c : present) {
            lengths.push_back(c->length);
            covered |= c->vertex_mask;
        }
        std::sort(lengths.begin(), lengths.end());
        if (lengths != wanted || covered != all_vertices) continue;

        bool disjoint = false;
        for (std::size_t i = 0; i < present.size() && !disjoint; ++i) {
            for (std::size_t j = i + 1; j < present.size(); ++j) {
                if ((present[i]->vertex_mask & present[j]->vertex_mask) == 0) {
                    disjoint = true;
                    break;
                }
            }
        }
        if (disjoint) continue;

        ArcStructure arcs;
        for (int bit = 0; bit < n * n; ++bit) {
            if (mask & (1u << bit)) arcs.push_back({bit / n + 1, bit % n + 1});
        }
        out.insert(std::move(arcs));
    }
    return out;
}

bool verify_realization(const Matrix& a, const CharPoly& target) {
    if (a.rows() != target.order() || !a.is_square()) {
        throw Error(Errc::DimensionMismatch, "matrix dimension does not match the characteristic polynomial order");
    }
    return char_poly_of_matrix(a) == target;
}

}  // namespace posreal::oracle
