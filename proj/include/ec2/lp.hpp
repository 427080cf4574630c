#ifndef EC2_LP_HPP
#define EC2_LP_HPP

#include <ec2/connectivity.hpp>
#include <ec2/error.hpp>
#include <ec2/graph.hpp>
#include <ec2/rational.hpp>

#include <set>
#include <span>
#include <vector>

namespace ec2 {

/// Cut constraint x(delta(S)) >= 2, stored by the side that contains 0.
struct CutConstraint {
    std::vector<VertexId> side; // ascending, contains 0, proper subset of V

    friend bool operator==(const CutConstraint&, const CutConstraint&) = default;
    friend auto operator<=>(const CutConstraint&, const CutConstraint&) = default;
};

inline CutConstraint make_cut(std::size_t n, std::span<const char> in_side) {
    const bool flip = !in_side[0];
    CutConstraint c;
    for (VertexId v = 0; v < n; ++v) {
        if (static_cast<bool>(in_side[v]) != flip) c.side.push_back(v);
    }
    if (c.side.empty() || c.side.size() == n) throw Error(ErrorCode::InvalidArgument, "cut side must be proper and nonempty");
    return c;
}

inline std::vector<char> side_mask(std::size_t n, const CutConstraint& c) {
    std::vector<char> m(n, 0);
    for (VertexId v : c.side) m[v] = 1;
    return m;
}

/// Cut LP restricted to a growing family of cuts, solved exactly through its
/// dual
///
///   max  2 sum_S y_S - sum_e z_e
///   s.t. sum_{S : e in delta(S)} y_S - z_e <= 1   for every edge e,
///        y, z >= 0,
///
/// whose slack basis is feasible from the start. A new cut is a new dual
/// column, so re-solving after separation continues from the current basis.
/// Pivoting follows Bland's rule; arithmetic is exact.
class CutLp {
public:
    explicit CutLp(const Graph& g) : g_(g), m_(g.edge_count()) {
        rows_.assign(m_, std::vector<Rational>(2 * m_, 0));
        rhs_.assign(m_, 1);
        basis_.resize(m_);
        reduced_.assign(2 * m_, 0);
        for (std::size_t i = 0; i < m_; ++i) {
            rows_[i][i] = 1;       // slack w_i
            rows_[i][m_ + i] = -1; // z_i
            basis_[i] = i;
            reduced_[m_ + i] = -1;
        }
    }

    /// Returns false if the cut is already present.
    bool add_cut(const CutConstraint& cut) {
        if (!known_.insert(cut).second) return false;
        const auto mask = side_mask(g_.vertex_count(), cut);
        std::vector<std::size_t> crossing;
        for (EdgeId e = 0; e < m_; ++e) {
            if (mask[g_.edge(e).u] != mask[g_.edge(e).v]) crossing.push_back(e);
        }
        // column = B^-1 a; B^-1 sits in the slack columns
        Rational reduced = 2;
        for (std::size_t i = 0; i < m_; ++i) {
            Rational entry = 0;
            for (std::size_t k : crossing) entry += rows_[i][k];
            rows_[i].push_back(entry);
        }
        for (std::size_t k : crossing) reduced += reduced_[k]; // reduced_[w_k] = -x_k
        reduced_.push_back(reduced);
        cuts_.push_back(cut);
        return true;
    }

    void solve() {
        while (true) {
            std::size_t entering = reduced_.size();
            for (std::size_t j = 0; j < reduced_.size(); ++j) {
                if (reduced_[j] > 0) {
                    entering = j;
                    break;
                }
            }
            if (entering == reduced_.size()) return;
            std::size_t leaving = m_;
            Rational best_ratio;
            for (std::size_t i = 0; i < m_; ++i) {
                if (rows_[i][entering] <= 0) continue;
                Rational ratio = rhs_[i] / rows_[i][entering];
                if (leaving == m_ || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[leaving])) {
                    leaving = i;
                    best_ratio = ratio;
                }
            }
            if (leaving == m_) throw Error(ErrorCode::Infeasible, "cut LP has no feasible point (graph has a bridge)");
            pivot(leaving, entering);
        }
    }

    /// Dual objective of the current basis; equals sum x at optimality.
    Rational objective() const {
        Rational total = 0;
        for (std::size_t i = 0; i < m_; ++i) total += cost(basis_[i]) * rhs_[i];
        return total;
    }

    /// Edge values x_e: the simplex multipliers of the edge rows.
    std::vector<Rational> primal() const {
        std::vector<Rational> x(m_);
        for (std::size_t e = 0; e < m_; ++e) x[e] = -reduced_[e];
        return x;
    }

    std::vector<Rational> cut_duals() const { return column_values(2 * m_, cuts_.size()); }
    std::vector<Rational> edge_duals() const { return column_values(m_, m_); }
    const std::vector<CutConstraint>& cuts() const noexcept { return cuts_; }

private:
    Rational cost(std::size_t col) const {
        if (col < m_) return 0;
        if (col < 2 * m_) return -1;
        return 2;
    }

    std::vector<Rational> column_values(std::size_t first, std::size_t count) const {
        std::vector<Rational> out(count, 0);
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] >= first && basis_[i] < first + count) out[basis_[i] - first] = rhs_[i];
        }
        return out;
    }

    void pivot(std::size_t p, std::size_t q) {
        const Rational piv = rows_[p][q];
        for (auto& a : rows_[p]) a /= piv;
        rhs_[p] /= piv;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == p || rows_[i][q] == 0) continue;
            const Rational factor = rows_[i][q];
            for (std::size_t j = 0; j < rows_[i].size(); ++j) {
                if (rows_[p][j] != 0) rows_[i][j] -= factor * rows_[p][j];
            }
            rhs_[i] -= factor * rhs_[p];
        }
        const Rational rfactor = reduced_[q];
        for (std::size_t j = 0; j < reduced_.size(); ++j) {
            if (rows_[p][j] != 0) reduced_[j] -= rfactor * rows_[p][j];
        }
        basis_[p] = q;
    }

    const Graph& g_;
    std::size_t m_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<Rational> rhs_;
    std::vector<std::size_t> basis_;
    std::vector<Rational> reduced_;
    std::vector<CutConstraint> cuts_;
    std::set<CutConstraint> known_;
};

struct LpState {
    std::vector<Rational> x;
    std::vector<CutConstraint> active_constraints;
    Rational objective;
    /// Optimal dual certificate, aligned with active_constraints and edges.
    std::vector<Rational> cut_duals;
    std::vector<Rational> edge_duals;
    std::size_t separation_rounds = 0;
};

/// Value of the cut LP: start from the singleton cuts, solve, separate with
/// an exact minimum cut under weights x, repeat until every cut carries 2.
inline LpState lp_cut_bound(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n < 2 || !is_2ecss(g, g.all_edges())) throw Error(ErrorCode::Infeasible, "graph is not 2-edge-connected");
    CutLp lp(g);
    for (VertexId v = 0; v < n; ++v) {
        std::vector<char> mask(n, 0);
        mask[v] = 1;
        lp.add_cut(make_cut(n, mask));
    }
    LpState state;
    while (true) {
        lp.solve();
        const auto x = lp.primal();
        const GlobalCut cut = min_global_cut(g, x);
        if (cut.value >= 2) break;
        std::vector<char> mask(n, 0);
        for (VertexId v : cut.side) mask[v] = 1;
        if (!lp.add_cut(make_cut(n, mask))) throw std::logic_error("separated cut was already active");
        ++state.separation_rounds;
    }
    state.x = lp.primal();
    state.active_constraints = lp.cuts();
    state.objective = lp.objective();
    state.cut_duals = lp.cut_duals();
    state.edge_duals = lp.edge_duals();
    return state;
}

} // namespace ec2

#endif // EC2_LP_HPP
