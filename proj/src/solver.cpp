#include <algorithm>
#include <memory>
#include <numeric>

#include "hyperspec/coloring.hpp"
#include "hyperspec/detail/overloaded.hpp"
#include "hyperspec/error.hpp"

namespace hyperspec {

using detail::overloaded;

namespace {

// Incremental feasibility of partial colorings. Every constraint here is monotone:
// coloring more items can only add violations, so rejecting a partial assignment is exact.
class ConstraintModel {
public:
    virtual ~ConstraintModel() = default;
    virtual std::size_t items() const = 0;
    virtual std::size_t degree(std::size_t item) const = 0;
    virtual bool can_assign(std::size_t item, int color) const = 0;
    virtual void assign(std::size_t item, int color) = 0;
    virtual void unassign(std::size_t item, int color) = 0;
};

// Sum of weights to same-colored neighbours may not exceed a per-item capacity.
// Proper coloring is capacity 0 with unit weights.
class WeightedConflictModel final : public ConstraintModel {
public:
    struct Arc {
        std::size_t to;
        std::int64_t weight;
    };

    WeightedConflictModel(std::vector<std::vector<Arc>> arcs, std::vector<std::int64_t> capacity)
        : arcs_(std::move(arcs)), capacity_(std::move(capacity)), color_(arcs_.size(), 0),
          load_(arcs_.size(), std::vector<std::int64_t>(arcs_.size() + 2, 0))
    {
    }

    std::size_t items() const override { return arcs_.size(); }
    std::size_t degree(std::size_t item) const override { return arcs_[item].size(); }

    bool can_assign(std::size_t item, int color) const override
    {
        const auto c = static_cast<std::size_t>(color);
        if (load_[item][c] > capacity_[item])
            return false;
        for (const Arc& arc : arcs_[item])
            if (color_[arc.to] == color && load_[arc.to][c] + arc.weight > capacity_[arc.to])
                return false;
        return true;
    }

    void assign(std::size_t item, int color) override
    {
        color_[item] = color;
        for (const Arc& arc : arcs_[item])
            load_[arc.to][static_cast<std::size_t>(color)] += arc.weight;
    }

    void unassign(std::size_t item, int color) override
    {
        color_[item] = 0;
        for (const Arc& arc : arcs_[item])
            load_[arc.to][static_cast<std::size_t>(color)] -= arc.weight;
    }

private:
    std::vector<std::vector<Arc>> arcs_;
    std::vector<std::int64_t> capacity_;
    std::vector<int> color_;
    // load_[v][c]: weight from colored neighbours of v that carry color c.
    std::vector<std::vector<std::int64_t>> load_;
};

// At most d members of each color per edge.
class EdgeCapacityModel final : public ConstraintModel {
public:
    EdgeCapacityModel(const OrientedHypergraph& h, int d)
        : h_(h), d_(d), count_(h.num_edges(), std::vector<int>(h.num_vertices() + 2, 0))
    {
    }

    std::size_t items() const override { return h_.num_vertices(); }
    std::size_t degree(std::size_t item) const override { return h_.incident_edges(item).size(); }

    bool can_assign(std::size_t item, int color) const override
    {
        for (std::size_t e : h_.incident_edges(item))
            if (count_[e][static_cast<std::size_t>(color)] + 1 > d_)
                return false;
        return true;
    }

    void assign(std::size_t item, int color) override
    {
        for (std::size_t e : h_.incident_edges(item))
            ++count_[e][static_cast<std::size_t>(color)];
    }

    void unassign(std::size_t item, int color) override
    {
        for (std::size_t e : h_.incident_edges(item))
            --count_[e][static_cast<std::size_t>(color)];
    }

private:
    const OrientedHypergraph& h_;
    int d_;
    std::vector<std::vector<int>> count_;
};

std::unique_ptr<ConstraintModel> proper_model(const SimpleGraph& g, std::int64_t capacity)
{
    std::vector<std::vector<WeightedConflictModel::Arc>> arcs(g.size());
    for (std::size_t v = 0; v < g.size(); ++v)
        for (std::size_t w : g.adjacency[v])
            arcs[v].push_back({w, 1});
    return std::make_unique<WeightedConflictModel>(std::move(arcs), std::vector<std::int64_t>(g.size(), capacity));
}

std::unique_ptr<ConstraintModel> make_model(const OrientedHypergraph& h, const ColoringMode& mode)
{
    return std::visit(
        overloaded{
            [&](const Strong&) { return proper_model(primal_graph(h), 0); },
            [&](const DProper& m) -> std::unique_ptr<ConstraintModel> {
                return std::make_unique<EdgeCapacityModel>(h, m.d);
            },
            [&](const QTailored& m) -> std::unique_ptr<ConstraintModel> {
                // Scale by den(q): sum |A_vw| * den <= num * deg v.
                const IntMatrix a = adjacency(h);
                const std::size_t n = h.num_vertices();
                std::vector<std::vector<WeightedConflictModel::Arc>> arcs(n);
                std::vector<std::int64_t> capacity(n);
                for (std::size_t v = 0; v < n; ++v) {
                    capacity[v] = m.q.num() * h.degree(v);
                    for (std::size_t w = 0; w < n; ++w)
                        if (w != v && a(v, w) != 0)
                            arcs[v].push_back({w, (a(v, w) < 0 ? -a(v, w) : a(v, w)) * m.q.den()});
                }
                return std::make_unique<WeightedConflictModel>(std::move(arcs), std::move(capacity));
            },
            [&](const DImproper& m) { return proper_model(primal_graph(h), m.d); },
            [&](const EdgeStrong&) { return proper_model(intersection_graph(h), 0); },
        },
        mode);
}

int greedy_clique(const SimpleGraph& g)
{
    const std::size_t n = g.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&g](std::size_t a, std::size_t b) {
        return g.adjacency[a].size() > g.adjacency[b].size();
    });
    int best = n > 0 ? 1 : 0;
    for (std::size_t seed : order) {
        std::vector<std::size_t> clique{seed};
        for (std::size_t v : order) {
            if (v == seed)
                continue;
            if (std::all_of(clique.begin(), clique.end(), [&](std::size_t u) { return g.adjacent(u, v); }))
                clique.push_back(v);
        }
        best = std::max(best, static_cast<int>(clique.size()));
    }
    return best;
}

int lower_bound_for(const OrientedHypergraph& h, const ColoringMode& mode)
{
    return std::visit(overloaded{
                          [&](const Strong&) {
                              int lb = 0;
                              for (const auto& e : h.edges())
                                  lb = std::max(lb, static_cast<int>(e.size()));
                              return std::max(lb, greedy_clique(primal_graph(h)));
                          },
                          [&](const DProper& m) {
                              int lb = 1;
                              for (const auto& e : h.edges())
                                  lb = std::max(lb, (static_cast<int>(e.size()) + m.d - 1) / m.d);
                              return lb;
                          },
                          [&](const QTailored&) { return 1; },
                          [&](const DImproper& m) {
                              const int omega = greedy_clique(primal_graph(h));
                              return std::max(1, (omega + m.d) / (m.d + 1));
                          },
                          [&](const EdgeStrong&) {
                              return std::max(static_cast<int>(h.degrees().max()),
                                              greedy_clique(intersection_graph(h)));
                          },
                      },
                      mode);
}

class Search {
public:
    Search(ConstraintModel& model, std::uint64_t budget)
        : model_(model), budget_(budget), colors_(model.items(), 0)
    {
    }

    std::uint64_t nodes() const { return nodes_; }
    bool exhausted() const { return exhausted_; }

    // First-fit in descending-degree order; always succeeds because a fresh color is always feasible.
    std::vector<int> greedy()
    {
        std::vector<int> out(model_.items(), 0);
        for (std::size_t item : degree_order()) {
            int c = 1;
            while (!model_.can_assign(item, c))
                ++c;
            model_.assign(item, c);
            out[item] = c;
        }
        for (std::size_t item = 0; item < out.size(); ++item)
            model_.unassign(item, out[item]);
        return out;
    }

    // Decides whether k colors suffice; on success colors() holds the witness.
    bool decide(int k)
    {
        k_ = k;
        std::fill(colors_.begin(), colors_.end(), 0);
        return extend(0, 0);
    }

    const std::vector<int>& colors() const { return colors_; }

private:
    std::vector<std::size_t> degree_order() const
    {
        std::vector<std::size_t> order(model_.items());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [this](std::size_t a, std::size_t b) { return model_.degree(a) > model_.degree(b); });
        return order;
    }

    int feasible_count(std::size_t item, int limit) const
    {
        int count = 0;
        for (int c = 1; c <= limit; ++c)
            if (model_.can_assign(item, c))
                ++count;
        return count;
    }

    bool extend(std::size_t colored, int max_used)
    {
        if (colored == colors_.size())
            return true;
        if (nodes_ >= budget_) {
            exhausted_ = true;
            return false;
        }
        ++nodes_;

        // Colors above max_used + 1 are symmetric to max_used + 1.
        const int limit = std::min(k_, max_used + 1);
        // First fail: the uncolored item with fewest feasible colors, then highest degree.
        std::size_t pick = colors_.size();
        int pick_count = 0;
        for (std::size_t item = 0; item < colors_.size(); ++item) {
            if (colors_[item] != 0)
                continue;
            const int count = feasible_count(item, limit);
            if (count == 0)
                return false;
            if (pick == colors_.size() || count < pick_count
                || (count == pick_count && model_.degree(item) > model_.degree(pick))) {
                pick = item;
                pick_count = count;
            }
        }

        for (int c = 1; c <= limit; ++c) {
            if (!model_.can_assign(pick, c))
                continue;
            model_.assign(pick, c);
            colors_[pick] = c;
            if (extend(colored + 1, std::max(max_used, c)))
                return true;
            colors_[pick] = 0;
            model_.unassign(pick, c);
            if (exhausted_)
                return false;
        }
        return false;
    }

    ConstraintModel& model_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    int k_ = 0;
    std::vector<int> colors_;
};

} // namespace

ChromaticResult chromatic(const OrientedHypergraph& h, const ColoringMode& mode, SolverOptions options)
{
    check_mode_applicable(h, mode);
    const Target target = target_of(mode);
    auto model = make_model(h, mode);

    ChromaticResult result;
    if (model->items() == 0) {
        result.status = SolveStatus::Solved;
        result.number = 0;
        result.lower_bound = 0;
        result.upper_bound = 0;
        result.witness = Coloring(target, {});
        return result;
    }

    Search search(*model, options.node_budget);
    std::vector<int> best = search.greedy();
    result.upper_bound = *std::max_element(best.begin(), best.end());
    result.lower_bound = std::min(lower_bound_for(h, mode), result.upper_bound);

    while (result.lower_bound < result.upper_bound) {
        if (search.decide(result.lower_bound)) {
            best = search.colors();
            result.upper_bound = result.lower_bound;
            break;
        }
        if (search.exhausted())
            break;
        ++result.lower_bound;
    }

    result.nodes = search.nodes();
    result.witness = Coloring::normalized(target, best);
    if (result.lower_bound == result.upper_bound) {
        result.status = SolveStatus::Solved;
        result.number = result.upper_bound;
    }
    return result;
}

} // namespace hyperspec
