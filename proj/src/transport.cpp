#include "supmod/transport.hpp"

#include <algorithm>
#include <stdexcept>

namespace supmod {

namespace {

std::vector<long long> parse_count_row(std::string_view line, const char* what) {
    std::vector<long long> out;
    for (const Rational& v : parse_scalars(line)) {
        if (!v.is_integer() || v.num() < 0)
            throw ValidationError(std::string(what) + " entry " + v.to_string() +
                                  " is not a nonnegative integer");
        out.push_back(v.num());
    }
    if (out.empty()) throw ValidationError(std::string(what) + " row is empty");
    return out;
}

}  // namespace

TransportInstance::TransportInstance(Matrix utility, std::vector<long long> supply,
                                     std::vector<long long> demand)
    : utility_(std::move(utility)), supply_(std::move(supply)), demand_(std::move(demand)) {
    if (supply_.size() != static_cast<std::size_t>(utility_.rows()))
        throw DimensionError("supply vector length " + std::to_string(supply_.size()) +
                             " does not match " + std::to_string(utility_.rows()) + " rows");
    if (demand_.size() != static_cast<std::size_t>(utility_.cols()))
        throw DimensionError("demand vector length " + std::to_string(demand_.size()) +
                             " does not match " + std::to_string(utility_.cols()) + " columns");
    long long total_supply = 0, total_demand = 0;
    for (long long s : supply_) {
        if (s < 0) throw ValidationError("negative supply " + std::to_string(s));
        total_supply += s;
    }
    for (long long d : demand_) {
        if (d < 0) throw ValidationError("negative demand " + std::to_string(d));
        total_demand += d;
    }
    if (total_supply != total_demand)
        throw ValidationError("unbalanced instance: total supply " +
                              std::to_string(total_supply) + " != total demand " +
                              std::to_string(total_demand));
}

std::string TransportPlan::to_text() const {
    std::string out;
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            if (j > 0) out += ' ';
            out += std::to_string(flow_at(i, j));
        }
        out += '\n';
    }
    out += "value=" + value.to_string() + "\n";
    return out;
}

TransportPlan greedy_transport(const TransportInstance& inst) {
    const Matrix& u = inst.utility();
    std::vector<long long> rs = inst.supply();
    std::vector<long long> rd = inst.demand();

    TransportPlan plan;
    plan.rows = u.rows();
    plan.cols = u.cols();
    plan.flow.assign(static_cast<std::size_t>(u.size()), 0);
    for (int i = 0; i < u.rows(); ++i) {
        for (int j = 0; j < u.cols(); ++j) {
            const long long x = std::min(rs[static_cast<std::size_t>(i)],
                                         rd[static_cast<std::size_t>(j)]);
            if (x == 0) continue;
            plan.flow[static_cast<std::size_t>(i) * u.cols() + j] = x;
            rs[static_cast<std::size_t>(i)] -= x;
            rd[static_cast<std::size_t>(j)] -= x;
            plan.value += u(i, j) * Rational(x);
        }
    }
    return plan;
}

namespace {

struct PlanSearch {
    const Matrix* u = nullptr;
    int m = 0, n = 0;
    std::vector<long long> rs, rd;
    std::vector<long long> flow;
    Rational value;
    std::uint64_t nodes = 0;
    std::uint64_t guard = 0;

    bool has_best = false;
    std::vector<long long> best_flow;
    Rational best_value;

    void run(int cell) {
        if (++nodes > guard)
            throw ResourceError("plan enumeration exceeded the guard of " +
                                std::to_string(guard) + " nodes");
        if (cell == m * n) {
            // Row sums hold by construction; balance forces column sums.
            if (!has_best || value > best_value) {
                has_best = true;
                best_value = value;
                best_flow = flow;
            }
            return;
        }
        const int i = cell / n, j = cell % n;

        // The rest of this row must fit into the remaining demands.
        long long tail_capacity = 0;
        for (int k = j; k < n; ++k) tail_capacity += rd[static_cast<std::size_t>(k)];
        if (rs[static_cast<std::size_t>(i)] > tail_capacity) return;

        if (j == n - 1) {
            const long long x = rs[static_cast<std::size_t>(i)];
            if (x > rd[static_cast<std::size_t>(j)]) return;
            assign(cell, i, j, x);
            run(cell + 1);
            unassign(cell, i, j, x);
            return;
        }
        const long long cap = std::min(rs[static_cast<std::size_t>(i)],
                                       rd[static_cast<std::size_t>(j)]);
        for (long long x = 0; x <= cap; ++x) {
            assign(cell, i, j, x);
            run(cell + 1);
            unassign(cell, i, j, x);
        }
    }

    void assign(int cell, int i, int j, long long x) {
        flow[static_cast<std::size_t>(cell)] = x;
        rs[static_cast<std::size_t>(i)] -= x;
        rd[static_cast<std::size_t>(j)] -= x;
        if (x != 0) value += (*u)(i, j) * Rational(x);
    }

    void unassign(int cell, int i, int j, long long x) {
        flow[static_cast<std::size_t>(cell)] = 0;
        rs[static_cast<std::size_t>(i)] += x;
        rd[static_cast<std::size_t>(j)] += x;
        if (x != 0) value -= (*u)(i, j) * Rational(x);
    }
};

}  // namespace

TransportPlan brute_force_transport(const TransportInstance& inst, std::uint64_t node_guard) {
    PlanSearch search;
    search.u = &inst.utility();
    search.m = inst.utility().rows();
    search.n = inst.utility().cols();
    search.rs = inst.supply();
    search.rd = inst.demand();
    search.flow.assign(static_cast<std::size_t>(search.m * search.n), 0);
    search.guard = node_guard;
    search.run(0);
    if (!search.has_best)
        throw std::logic_error("balanced instance admits no plan");  // unreachable
    TransportPlan plan;
    plan.rows = search.m;
    plan.cols = search.n;
    plan.flow = std::move(search.best_flow);
    plan.value = search.best_value;
    return plan;
}

PreprocessResult preprocess_transporters(const std::vector<Rational>& prices, int m,
                                         int n, std::uint64_t budget) {
    if (m < 1 || n < 1) throw DimensionError("dimensions must be at least 1");
    if (prices.size() != static_cast<std::size_t>(m) * n)
        throw DimensionError("expected " + std::to_string(m * n) + " prices, got " +
                             std::to_string(prices.size()));

    std::vector<Rational> negated;
    negated.reserve(prices.size());
    for (const Rational& p : prices) negated.push_back(-p);
    Matrix arranged(m, n, std::move(negated));

    PreprocessResult result;
    result.search = decide_permutable(arranged, budget);
    switch (result.search.status) {
        case Permutability::permutable: {
            Matrix utility = apply_permutation(arranged, *result.search.pattern);
            result.status = AssignStatus::assigned;
            result.assignment =
                TransporterAssignment{prices, *result.search.pattern, std::move(utility)};
            break;
        }
        case Permutability::not_permutable:
            result.status = AssignStatus::not_permutable;
            break;
        case Permutability::unknown:
            result.status = AssignStatus::budget_exhausted;
            break;
    }
    return result;
}

std::vector<ServedRequest> serve_stream(const TransporterAssignment& assignment,
                                        const std::vector<StreamRequest>& requests,
                                        std::optional<long long> unit_bound) {
    std::vector<ServedRequest> served;
    served.reserve(requests.size());
    for (const StreamRequest& req : requests) {
        try {
            if (unit_bound) {
                for (long long s : req.supply)
                    if (s > *unit_bound)
                        throw ValidationError("supply " + std::to_string(s) +
                                              " exceeds the unit bound " +
                                              std::to_string(*unit_bound));
                for (long long d : req.demand)
                    if (d > *unit_bound)
                        throw ValidationError("demand " + std::to_string(d) +
                                              " exceeds the unit bound " +
                                              std::to_string(*unit_bound));
            }
            TransportInstance inst(assignment.utility, req.supply, req.demand);
            served.push_back(ServedRequest{greedy_transport(inst), ""});
        } catch (const Error& e) {
            served.push_back(ServedRequest{std::nullopt, e.what()});
        }
    }
    return served;
}

TransportInstance parse_instance(std::string_view text) {
    std::vector<std::string> blocks = split_blocks(text);
    if (blocks.size() != 2)
        throw ParseError("instance file needs a matrix block and a supply/demand block, got " +
                             std::to_string(blocks.size()) + " blocks",
                         1, 1);
    Matrix utility = parse_matrix(blocks[0]);

    std::vector<std::string_view> lines;
    std::string_view block = blocks[1];
    std::size_t pos = 0;
    while (pos < block.size()) {
        std::size_t nl = block.find('\n', pos);
        if (nl == std::string_view::npos) nl = block.size();
        if (nl > pos) lines.push_back(block.substr(pos, nl - pos));
        pos = nl + 1;
    }
    if (lines.size() != 2)
        throw ParseError("expected exactly a supply row and a demand row after the matrix", 1, 1);
    std::vector<long long> supply = parse_count_row(lines[0], "supply");
    std::vector<long long> demand = parse_count_row(lines[1], "demand");
    return TransportInstance(std::move(utility), std::move(supply), std::move(demand));
}

StreamRequest parse_request_line(std::string_view line) {
    std::size_t bar = line.find('|');
    if (bar == std::string_view::npos)
        throw ParseError("request line needs 's1 .. sm | d1 .. dn'", 1, 1);
    StreamRequest req;
    req.supply = parse_count_row(line.substr(0, bar), "supply");
    req.demand = parse_count_row(line.substr(bar + 1), "demand");
    return req;
}

}  // namespace supmod
