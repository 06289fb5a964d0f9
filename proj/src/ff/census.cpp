#include "motive/ff/census.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "motive/catalog.hpp"
#include "motive/errors.hpp"

namespace motive::ff {

namespace {

constexpr int max_census_dimension = 8;

std::uint64_t checked_space_size(std::uint32_t q, int n, const mpz_class &budget) {
    if (n < 0 || n > max_census_dimension) {
        throw std::invalid_argument("census dimension must be in [0, " + std::to_string(max_census_dimension) + "]");
    }
    const mpz_class total = form_space_size(q, n);
    if (total > budget) {
        throw BudgetExceeded(total, budget);
    }
    if (!total.fits_ulong_p()) {
        throw std::invalid_argument("form space does not fit a 64-bit index");
    }
    return total.get_ui();
}

// Rank of a small symmetric matrix, destroying it.
int eliminate(const PrimeField &f, std::array<std::array<std::uint32_t, max_census_dimension>, max_census_dimension> &m,
              int n) {
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int pivot = rank;
        while (pivot < n && m[pivot][col] == 0) {
            ++pivot;
        }
        if (pivot == n) {
            continue;
        }
        if (pivot != rank) {
            std::swap(m[pivot], m[rank]);
        }
        const std::uint32_t inv = f.inv(m[rank][col]);
        for (int row = rank + 1; row < n; ++row) {
            if (m[row][col] == 0) {
                continue;
            }
            const std::uint32_t factor = f.mul(m[row][col], inv);
            for (int c = col; c < n; ++c) {
                m[row][c] = f.sub(m[row][c], f.mul(factor, m[rank][c]));
            }
        }
        ++rank;
    }
    return rank;
}

} // namespace

mpz_class form_space_size(std::uint32_t q, int n) {
    mpz_class total;
    mpz_ui_pow_ui(total.get_mpz_t(), q, static_cast<unsigned long>(pair_count(n)));
    return total;
}

std::vector<std::uint64_t> tally_range(const PrimeField &field, int n, IndexRange range) {
    if (n < 0 || n > max_census_dimension) {
        throw std::invalid_argument("census dimension out of range");
    }
    std::vector<std::uint64_t> tally(static_cast<std::size_t>(n) + 1, 0);
    if (range.begin >= range.end) {
        return tally;
    }
    const int cells = pair_count(n);
    const std::uint32_t q = field.q();

    // Row/column of each cell and the scaled value it contributes to B.
    std::vector<int> row_of(cells), col_of(cells);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            const int k = pair_index(n, i, j);
            row_of[k] = i;
            col_of[k] = j;
        }
    }
    std::vector<std::uint32_t> halved(q);
    for (std::uint32_t c = 0; c < q; ++c) {
        halved[c] = field.mul(c, field.half());
    }

    std::vector<std::uint32_t> digits(cells, 0);
    std::uint64_t rest = range.begin;
    for (int k = cells - 1; k >= 0; --k) {
        digits[k] = static_cast<std::uint32_t>(rest % q);
        rest /= q;
    }

    std::array<std::array<std::uint32_t, max_census_dimension>, max_census_dimension> m{};
    for (std::uint64_t index = range.begin; index < range.end; ++index) {
        for (int k = 0; k < cells; ++k) {
            const int i = row_of[k];
            const int j = col_of[k];
            if (i == j) {
                m[i][i] = digits[k];
            } else {
                m[i][j] = m[j][i] = halved[digits[k]];
            }
        }
        ++tally[static_cast<std::size_t>(eliminate(field, m, n))];

        for (int k = cells - 1; k >= 0; --k) {
            if (++digits[k] < q) {
                break;
            }
            digits[k] = 0;
        }
    }
    return tally;
}

RankCensus census_over_ranges(std::uint32_t q, int n, std::span<const IndexRange> ranges,
                              const EnumerationOptions &options) {
    const PrimeField field(q);
    const std::uint64_t total = checked_space_size(q, n, options.budget);

    std::vector<IndexRange> sorted(ranges.begin(), ranges.end());
    std::sort(sorted.begin(), sorted.end(), [](const IndexRange &a, const IndexRange &b) { return a.begin < b.begin; });
    std::uint64_t expected = 0;
    for (const auto &r : sorted) {
        if (r.begin != expected || r.end < r.begin) {
            throw std::invalid_argument("ranges must tile the form space without gaps or overlaps");
        }
        expected = r.end;
    }
    if (expected != total) {
        throw std::invalid_argument("ranges must cover the whole form space");
    }

    std::vector<std::uint64_t> tally(static_cast<std::size_t>(n) + 1, 0);
    for (const auto &r : ranges) {
        const auto part = tally_range(field, n, r);
        for (std::size_t i = 0; i < tally.size(); ++i) {
            tally[i] += part[i];
        }
    }
    RankCensus census{q, n, {}};
    for (auto c : tally) {
        census.counts.emplace_back(static_cast<unsigned long>(c));
    }
    return census;
}

RankCensus enumerate_rank_census(std::uint32_t q, int n, const EnumerationOptions &options) {
    const PrimeField field(q);
    const std::uint64_t total = checked_space_size(q, n, options.budget);

    // One block per value of the first coefficient cell.
    const std::uint64_t blocks = n == 0 ? 1 : q;
    const std::uint64_t block_size = total / blocks;

    unsigned workers = options.threads != 0 ? options.threads : std::max(1U, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, blocks));

    std::vector<std::vector<std::uint64_t>> tallies(workers, std::vector<std::uint64_t>(n + 1, 0));
    std::atomic<std::uint64_t> next{0};
    auto work = [&](unsigned id) {
        for (std::uint64_t b = next++; b < blocks; b = next++) {
            const auto part = tally_range(field, n, {b * block_size, (b + 1) * block_size});
            for (std::size_t i = 0; i < part.size(); ++i) {
                tallies[id][i] += part[i];
            }
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned id = 0; id < workers; ++id) {
            pool.emplace_back(work, id);
        }
    }

    RankCensus census{q, n, std::vector<mpz_class>(static_cast<std::size_t>(n) + 1, 0)};
    for (const auto &t : tallies) {
        for (std::size_t i = 0; i < t.size(); ++i) {
            census.counts[i] += static_cast<unsigned long>(t[i]);
        }
    }
    return census;
}

CensusReport verify_census(std::uint32_t q, int n, const EnumerationOptions &options) {
    const RankCensus census = enumerate_rank_census(q, n, options);
    CensusReport report{q, n, {}, true};
    for (int r = 0; r <= n; ++r) {
        const mpq_class value = catalog::motive_quad(n, r).evaluate(mpq_class(q));
        CensusRow row;
        row.r = r;
        row.count = census.counts[static_cast<std::size_t>(r)];
        row.formula_value = value.get_num();
        row.match = value.get_den() == 1 && row.count == row.formula_value;
        report.pass = report.pass && row.match;
        report.rows.push_back(std::move(row));
    }
    return report;
}

nlohmann::json to_json(const CensusReport &report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto &row : report.rows) {
        rows.push_back({{"r", row.r},
                        {"count", row.count.get_str()},
                        {"formula_value", row.formula_value.get_str()},
                        {"match", row.match}});
    }
    return {{"identity", "census"}, {"q", report.q}, {"n", report.n}, {"pass", report.pass}, {"rows", rows}};
}

std::string to_csv_rows(const CensusReport &report) {
    std::ostringstream os;
    for (const auto &row : report.rows) {
        os << report.q << ',' << report.n << ',' << row.r << ',' << row.count.get_str() << ','
           << row.formula_value.get_str() << ',' << (row.match ? "true" : "false") << '\n';
    }
    return os.str();
}

mpz_class isometry_group_order(const QuadraticFormFq &form, const mpz_class &budget) {
    const int n = form.dimension();
    const PrimeField &f = form.field();
    const std::uint32_t q = f.q();
    mpz_class space;
    mpz_ui_pow_ui(space.get_mpz_t(), q, static_cast<unsigned long>(n) * static_cast<unsigned long>(n));
    if (space > budget) {
        throw BudgetExceeded(space, budget);
    }
    if (n == 0) {
        return 1;
    }

    // All vectors of F_q^n with their values under Q.
    std::uint64_t vector_count = 1;
    for (int i = 0; i < n; ++i) {
        vector_count *= q;
    }
    std::vector<std::vector<std::uint32_t>> vectors(vector_count, std::vector<std::uint32_t>(n));
    std::vector<std::uint32_t> value(vector_count);
    for (std::uint64_t idx = 0; idx < vector_count; ++idx) {
        std::uint64_t rest = idx;
        for (int a = 0; a < n; ++a) {
            vectors[idx][a] = static_cast<std::uint32_t>(rest % q);
            rest /= q;
        }
        value[idx] = form.evaluate(vectors[idx]);
    }
    // Q(u + v) - Q(u) - Q(v), i.e. the off-diagonal coefficient of the pullback.
    auto cross = [&](const std::vector<std::uint32_t> &u, const std::vector<std::uint32_t> &v) {
        std::uint32_t acc = 0;
        for (int a = 0; a < n; ++a) {
            for (int b = a; b < n; ++b) {
                const std::uint32_t c = form.coefficient(a, b);
                if (c == 0) {
                    continue;
                }
                std::uint32_t t = f.mul(u[a], v[b]);
                t = a == b ? f.add(t, t) : f.add(t, f.mul(u[b], v[a]));
                acc = f.add(acc, f.mul(c, t));
            }
        }
        return acc;
    };

    mpz_class order = 0;
    std::vector<std::uint64_t> columns(n);
    MatrixFq g{n, std::vector<std::uint32_t>(static_cast<std::size_t>(n * n))};
    auto search = [&](auto &&self, int col) -> void {
        if (col == n) {
            for (int j = 0; j < n; ++j) {
                for (int a = 0; a < n; ++a) {
                    g.at(a, j) = vectors[columns[j]][a];
                }
            }
            if (matrix_rank(f, g) == n) {
                ++order;
            }
            return;
        }
        for (std::uint64_t idx = 0; idx < vector_count; ++idx) {
            if (value[idx] != form.coefficient(col, col)) {
                continue;
            }
            bool ok = true;
            for (int prev = 0; prev < col && ok; ++prev) {
                ok = cross(vectors[columns[prev]], vectors[idx]) == form.coefficient(prev, col);
            }
            if (ok) {
                columns[col] = idx;
                self(self, col + 1);
            }
        }
    };
    search(search, 0);
    return order;
}

StackCountReport verify_stack_count(std::uint32_t q, int n, const EnumerationOptions &options) {
    if (n < 1) {
        throw std::invalid_argument("verify_stack_count: n must be >= 1");
    }
    StackCountReport report;
    report.q = q;
    report.n = n;
    const RankCensus census = enumerate_rank_census(q, n, options);
    report.nondegenerate_count = census.counts[static_cast<std::size_t>(n)];
    const mpq_class at(q);
    const mpq_class gl = catalog::motive_gl(n).evaluate(at);
    report.gl_order = gl.get_num();
    report.groupoid_ratio = mpq_class(report.nondegenerate_count) / gl;
    report.groupoid_ratio.canonicalize();
    report.formula_value = catalog::motive_bo(n).evaluate(at);
    report.quotient_match = report.groupoid_ratio == report.formula_value;

    if (n % 2 == 1) {
        try {
            const mpz_class order = isometry_group_order(split_form(n, q), options.budget);
            report.isometry_order = order;
            mpq_class so_inverse(mpz_class(2), order);
            so_inverse.canonicalize();
            report.isometry_match = order % 2 == 0 && report.formula_value == so_inverse;
        } catch (const BudgetExceeded &e) {
            report.warnings.push_back(std::string("isometry check skipped: ") + e.what());
        }
    }
    report.pass = report.quotient_match && report.isometry_match.value_or(true);
    return report;
}

nlohmann::json to_json(const StackCountReport &report) {
    nlohmann::json j{{"identity", "stack-count"},
                     {"q", report.q},
                     {"n", report.n},
                     {"nondegenerate_count", report.nondegenerate_count.get_str()},
                     {"gl_order", report.gl_order.get_str()},
                     {"groupoid_ratio", report.groupoid_ratio.get_str()},
                     {"formula_value", report.formula_value.get_str()},
                     {"quotient_match", report.quotient_match},
                     {"pass", report.pass}};
    j["isometry_order"] = report.isometry_order ? nlohmann::json(report.isometry_order->get_str()) : nlohmann::json();
    j["isometry_match"] = report.isometry_match ? nlohmann::json(*report.isometry_match) : nlohmann::json();
    j["warnings"] = report.warnings;
    return j;
}

} // namespace motive::ff
