#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"

#include "motive/ff/prime_field.hpp"
#include "motive/ff/quadratic_form.hpp"

namespace motive::ff {

/// Exhaustive tally N_{n,r}(q) of quadratic forms on F_q^n by rank.
struct RankCensus {
    std::uint32_t q = 0;
    int n = 0;
    std::vector<mpz_class> counts;

    friend bool operator==(const RankCensus &, const RankCensus &) = default;
};

/// Half-open range of linear form indices. Index digits are the coefficient
/// cells in row-major pair order, cell 0 most significant, so each block of
/// q^{m-1} consecutive indices fixes the first cell.
struct IndexRange {
    std::uint64_t begin = 0;
    std::uint64_t end = 0;
};

inline constexpr std::uint64_t default_budget = std::uint64_t{1} << 31;

struct EnumerationOptions {
    mpz_class budget = mpz_class(static_cast<unsigned long>(default_budget));
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

/// q^{n(n+1)/2}.
mpz_class form_space_size(std::uint32_t q, int n);

/// Ranks of the forms with linear index in [range.begin, range.end).
std::vector<std::uint64_t> tally_range(const PrimeField &field, int n, IndexRange range);

/// Sums tallies over the given ranges in the given order. The ranges must
/// tile [0, q^{n(n+1)/2}) exactly; std::invalid_argument otherwise.
RankCensus census_over_ranges(std::uint32_t q, int n, std::span<const IndexRange> ranges,
                              const EnumerationOptions &options = {});

/// Throws BudgetExceeded when q^{n(n+1)/2} exceeds the budget. Work is split
/// by the value of the first coefficient cell across worker threads, each
/// with a private tally.
RankCensus enumerate_rank_census(std::uint32_t q, int n, const EnumerationOptions &options = {});

struct CensusRow {
    int r = 0;
    mpz_class count;
    mpz_class formula_value;
    bool match = false;
};

struct CensusReport {
    std::uint32_t q = 0;
    int n = 0;
    std::vector<CensusRow> rows;
    bool pass = false;
};

/// counts[r] == [Quad_{n,r}] evaluated at L = q, for every r.
CensusReport verify_census(std::uint32_t q, int n, const EnumerationOptions &options = {});

nlohmann::json to_json(const CensusReport &report);
/// Rows "q,n,r,count,formula_value,match" without header.
std::string to_csv_rows(const CensusReport &report);
inline constexpr const char *census_csv_header = "q,n,r,count,formula_value,match";

/// |O(Q)|: invertible g with Q(g v) = Q(v). The nominal search space is the
/// q^{n^2} matrices, which is what the budget is checked against; columns
/// are filled one at a time and pruned as soon as a coefficient of the
/// pulled-back form disagrees.
mpz_class isometry_group_order(const QuadraticFormFq &form, const mpz_class &budget =
                                                              mpz_class(static_cast<unsigned long>(default_budget)));

struct StackCountReport {
    std::uint32_t q = 0;
    int n = 0;
    mpz_class nondegenerate_count;
    mpz_class gl_order;
    mpq_class groupoid_ratio;  // nondegenerate_count / |GL_n(F_q)|
    mpq_class formula_value;   // [BO_n] at L = q
    bool quotient_match = false;
    std::optional<mpz_class> isometry_order;  // |O(split form)|
    std::optional<bool> isometry_match;        // odd n: formula == 1 / (|O| / 2)
    std::vector<std::string> warnings;
    bool pass = false;
};

/// (a) N_{n,n}(q) / |GL_n(F_q)| == [BO_n](q); (b) for odd n within the
/// isometry budget, [BO_n](q) == 1/|SO_n(F_q)| with |SO_n| = |O(split)|/2.
/// Check (b) is a consistency check of the groupoid-count reading of the
/// class, skipped with a warning when over budget.
StackCountReport verify_stack_count(std::uint32_t q, int n, const EnumerationOptions &options = {});

nlohmann::json to_json(const StackCountReport &report);

} // namespace motive::ff
