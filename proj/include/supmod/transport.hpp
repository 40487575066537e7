#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "supmod/matrix.hpp"
#include "supmod/permute_search.hpp"

namespace supmod {

// Balanced transportation instance: utility per unit shipped from row
// source i to column sink j, integer supplies and demands with equal
// totals.
class TransportInstance {
public:
    TransportInstance(Matrix utility, std::vector<long long> supply,
                      std::vector<long long> demand);

    const Matrix& utility() const noexcept { return utility_; }
    const std::vector<long long>& supply() const noexcept { return supply_; }
    const std::vector<long long>& demand() const noexcept { return demand_; }

private:
    Matrix utility_;
    std::vector<long long> supply_;
    std::vector<long long> demand_;
};

struct TransportPlan {
    int rows = 0;
    int cols = 0;
    std::vector<long long> flow;  // row-major, nonnegative
    Rational value;               // sum of utility * flow

    long long flow_at(int i, int j) const noexcept {
        return flow[static_cast<std::size_t>(i) * cols + j];
    }

    // Flow matrix plus a "value=<scalar>" trailer line.
    std::string to_text() const;
};

// Row-major greedy fill: each cell takes the largest amount its row
// supply and column demand still allow. Always feasible on a balanced
// instance; optimal whenever the utility matrix is supmodular.
TransportPlan greedy_transport(const TransportInstance& inst);

// Exact oracle: enumerates every nonnegative integer flow matrix with the
// prescribed row and column sums and keeps a maximum-value plan, the
// lexicographically first one among ties. The guard bounds the number of
// enumeration nodes explored.
TransportPlan brute_force_transport(const TransportInstance& inst,
                                    std::uint64_t node_guard = 10'000'000);

enum class AssignStatus { assigned, not_permutable, budget_exhausted };

// One-off preprocessing output: transporter k charges prices[k-1] per
// unit; pattern places the k-th cheapest negated price, making utility a
// supmodular matrix usable by the greedy solver for every later request.
struct TransporterAssignment {
    std::vector<Rational> prices;
    PermPattern pattern;
    Matrix utility;
};

struct PreprocessResult {
    AssignStatus status = AssignStatus::not_permutable;
    std::optional<TransporterAssignment> assignment;
    PermuteOutcome search;  // statistics of the permutability decision
};

// Arranges the negated prices row-major and searches for a supmodular
// rearrangement within the node budget.
PreprocessResult preprocess_transporters(const std::vector<Rational>& prices, int m,
                                         int n, std::uint64_t budget = 10'000'000);

struct StreamRequest {
    std::vector<long long> supply;
    std::vector<long long> demand;
};

struct ServedRequest {
    std::optional<TransportPlan> plan;
    std::string error;  // nonempty iff the request was rejected
};

// Greedy-solves each request against the fixed assignment utility.
// Malformed requests (wrong length, unbalanced, exceeding the unit bound)
// produce a per-request error; the stream continues. O(mn) per request.
std::vector<ServedRequest> serve_stream(const TransporterAssignment& assignment,
                                        const std::vector<StreamRequest>& requests,
                                        std::optional<long long> unit_bound = std::nullopt);

// Instance file: utility matrix block, blank line, then a supply row and
// a demand row.
TransportInstance parse_instance(std::string_view text);

// Request line: "s1 ... sm | d1 ... dn".
StreamRequest parse_request_line(std::string_view line);

}  // namespace supmod
