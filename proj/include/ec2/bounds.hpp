#ifndef EC2_BOUNDS_HPP
#define EC2_BOUNDS_HPP

#include <ec2/connectivity.hpp>
#include <ec2/error.hpp>
#include <ec2/graph.hpp>
#include <ec2/lp.hpp>
#include <ec2/rational.hpp>
#include <ec2/solver.hpp>

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

namespace ec2 {

enum class Connectivity { Edge, Vertex };

struct ExactOptions {
    std::size_t limit = 14;
    /// Wall-clock cap per oracle call; unset means no cap.
    std::optional<std::chrono::milliseconds> budget;
};

struct ExactResult {
    std::size_t size = 0;
    EdgeSubset witness;
    std::size_t nodes = 0;
};

struct BoundReport {
    std::size_t degree_bound = 0;
    std::optional<Rational> lp_value;
    std::optional<std::size_t> exact_ec;
    std::optional<std::size_t> exact_vc;
    std::optional<EdgeSubset> ec_witness;
    std::optional<EdgeSubset> vc_witness;
};

/// Every vertex needs two solution edges, so any 2-ECSS has at least n.
inline std::size_t degree_lower_bound(const Graph& g) { return g.vertex_count(); }

inline bool satisfies(const Graph& g, const EdgeSubset& f, Connectivity c) {
    return c == Connectivity::Edge ? is_2ecss(g, f) : is_2vcss(g, f);
}

namespace detail {

/// Include/exclude search over edges in id order, exclusion first. The set
/// of still-usable edges is kept feasible, which prunes every branch that
/// has already created a bridge (or a cut vertex); feasibility is monotone
/// under edge addition, so no completion of such a branch can recover.
class ExactSearch {
public:
    ExactSearch(const Graph& g, Connectivity mode, const ExactOptions& opts)
        : g_(g), mode_(mode), opts_(opts), start_(std::chrono::steady_clock::now()),
          usable_(g.all_edges()), best_(g.all_edges()), deg_(g.vertex_count(), 0) {}

    ExactResult run(std::optional<EdgeSubset> incumbent) {
        if (incumbent && incumbent->size() < best_.size() && satisfies(g_, *incumbent, mode_)) best_ = *incumbent;
        chosen_ = 0;
        if (best_.size() > degree_lower_bound(g_)) visit(0);
        return {best_.size(), best_, nodes_};
    }

private:
    void visit(std::size_t index) {
        if (++nodes_ % 1024 == 0 && opts_.budget &&
            std::chrono::steady_clock::now() - start_ > *opts_.budget) {
            throw Error(ErrorCode::BudgetExceeded, "exact oracle exceeded its time budget");
        }
        if (usable_.size() < best_.size()) best_ = usable_;
        if (best_.size() == degree_lower_bound(g_)) return;
        if (index == g_.edge_count()) return;
        std::size_t deficit = 0;
        for (std::size_t d : deg_) deficit += d < 2 ? 2 - d : 0;
        if (chosen_ + (deficit + 1) / 2 >= best_.size()) return;

        const auto e = static_cast<EdgeId>(index);
        const Edge& ed = g_.edge(e);
        usable_.erase(e);
        if (satisfies(g_, usable_, mode_)) visit(index + 1);
        usable_.insert(e);
        if (best_.size() == degree_lower_bound(g_)) return;

        ++chosen_;
        ++deg_[ed.u];
        ++deg_[ed.v];
        visit(index + 1);
        --deg_[ed.u];
        --deg_[ed.v];
        --chosen_;
    }

    const Graph& g_;
    Connectivity mode_;
    ExactOptions opts_;
    std::chrono::steady_clock::time_point start_;
    EdgeSubset usable_;
    EdgeSubset best_;
    std::vector<std::size_t> deg_;
    std::size_t chosen_ = 0;
    std::size_t nodes_ = 0;
};

inline void check_exact_preconditions(const Graph& g, Connectivity mode, const ExactOptions& opts) {
    if (g.vertex_count() > opts.limit) {
        throw Error(ErrorCode::TooLarge, "n=" + std::to_string(g.vertex_count()) + " exceeds exact limit " + std::to_string(opts.limit));
    }
    if (g.vertex_count() < 3 || !satisfies(g, g.all_edges(), mode)) {
        throw Error(ErrorCode::Infeasible, mode == Connectivity::Edge ? "graph is not 2-edge-connected" : "graph is not 2-connected");
    }
}

} // namespace detail

/// Minimum 2-ECSS / 2-VCSS size by branch and bound. `incumbent`, if
/// feasible, seeds the upper bound.
inline ExactResult exact_opt(const Graph& g, Connectivity mode, const ExactOptions& opts = {},
                             std::optional<EdgeSubset> incumbent = std::nullopt) {
    detail::check_exact_preconditions(g, mode, opts);
    return detail::ExactSearch(g, mode, opts).run(std::move(incumbent));
}

inline ExactResult exact_opt_2ecss(const Graph& g, const ExactOptions& opts = {}) { return exact_opt(g, Connectivity::Edge, opts); }
inline ExactResult exact_opt_2vcss(const Graph& g, const ExactOptions& opts = {}) { return exact_opt(g, Connectivity::Vertex, opts); }

/// Raw enumeration by increasing cardinality, subsets in lexicographic order:
/// the witness is the lexicographically smallest optimum. Only for small m.
inline ExactResult exact_opt_enumerate(const Graph& g, Connectivity mode, const ExactOptions& opts = {}) {
    detail::check_exact_preconditions(g, mode, opts);
    const std::size_t m = g.edge_count();
    if (m > 40) throw Error(ErrorCode::TooLarge, "enumeration oracle limited to 40 edges");
    ExactResult out;
    for (std::size_t k = degree_lower_bound(g); k <= m; ++k) {
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            ++out.nodes;
            EdgeSubset s(m);
            for (std::size_t i : idx) s.insert(static_cast<EdgeId>(i));
            if (satisfies(g, s, mode)) {
                out.size = k;
                out.witness = std::move(s);
                return out;
            }
            std::size_t i = k;
            while (i > 0 && idx[i - 1] == m - k + (i - 1)) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    throw std::logic_error("full edge set should have been feasible");
}

/// 7 * size <= 9 * opt, in integers.
constexpr bool within_ratio(std::size_t size, std::size_t opt) noexcept { return 7 * size <= 9 * opt; }

inline void check_ratio(std::size_t f, std::size_t f_bar, std::size_t opt) {
    if (!within_ratio(f, opt) || !within_ratio(f_bar, opt)) {
        throw Error(ErrorCode::RatioViolation, "|F|=" + std::to_string(f) + " |Fbar|=" + std::to_string(f_bar) +
                                                   " opt=" + std::to_string(opt) + " breaks 7*size <= 9*opt");
    }
}

struct BoundOptions {
    bool lp = false;
    bool exact = false;
    ExactOptions exact_options;
};

/// Collects the requested bounds for a solved instance and enforces the
/// ordering degree <= lp <= opt_ec <= opt_vc and the 9/7 guarantee.
inline BoundReport bound_report(const Graph& g, const SolveResult& result, const BoundOptions& opts = {}) {
    BoundReport r;
    r.degree_bound = degree_lower_bound(g);
    if (opts.lp) r.lp_value = lp_cut_bound(g).objective;
    if (opts.exact) {
        auto ec = exact_opt(g, Connectivity::Edge, opts.exact_options, result.F_bar);
        r.exact_ec = ec.size;
        r.ec_witness = std::move(ec.witness);
        if (is_2vcss(g, g.all_edges())) {
            std::optional<EdgeSubset> seed;
            if (result.vcss_valid) seed = result.F;
            auto vc = exact_opt(g, Connectivity::Vertex, opts.exact_options, seed);
            r.exact_vc = vc.size;
            r.vc_witness = std::move(vc.witness);
        }
    }
    auto ordered = [](const Rational& a, const Rational& b) { return a <= b; };
    if (r.lp_value && !ordered(Rational(r.degree_bound), *r.lp_value)) throw std::logic_error("lp below degree bound");
    if (r.lp_value && r.exact_ec && !ordered(*r.lp_value, Rational(*r.exact_ec))) throw std::logic_error("lp above opt_ec");
    if (r.exact_ec && r.exact_vc && *r.exact_ec > *r.exact_vc) throw std::logic_error("opt_ec above opt_vc");
    if (r.exact_ec) check_ratio(result.F.size(), result.F_bar.size(), *r.exact_ec);
    return r;
}

} // namespace ec2

#endif // EC2_BOUNDS_HPP
