#include "blockinv/census.hpp"

#include <stdexcept>
#include <vector>

#include "blockinv/design.hpp"

namespace blockinv {

namespace {

// All compositions of total into `parts` nonnegative parts, each at most cap.
void column_types(int parts, int total, int cap, std::vector<int>& current,
                  std::vector<std::vector<int>>& out) {
    if (parts == 1) {
        if (total <= cap) {
            current.push_back(total);
            out.push_back(current);
            current.pop_back();
        }
        return;
    }
    for (int v = std::min(total, cap); v >= 0; --v) {
        current.push_back(v);
        column_types(parts - 1, total - v, cap, current, out);
        current.pop_back();
    }
}

}  // namespace

ExactInt count_weight_arrays(int rows, int cols, int row_sum, int col_sum) {
    if (rows < 1 || cols < 1 || row_sum < 1 || col_sum < 1)
        throw ValidationError("count_weight_arrays arguments must be >= 1");
    if (static_cast<long>(rows) * row_sum != static_cast<long>(cols) * col_sum)
        return 0;

    std::vector<std::vector<int>> types;
    std::vector<int> scratch;
    column_types(rows, col_sum, row_sum, scratch, types);

    // A multiset of columns is a multiplicity per type. Process types one at
    // a time with an in-place unbounded update; the state tracks the column
    // count and the partial sums of the first rows-1 rows (the last row is
    // implied by the totals).
    const int tracked = rows - 1;
    std::size_t states = 1;
    for (int i = 0; i < tracked; ++i)
        states *= static_cast<std::size_t>(row_sum + 1);
    std::vector<std::size_t> weight(static_cast<std::size_t>(tracked));
    {
        std::size_t w = 1;
        for (int i = tracked - 1; i >= 0; --i) {
            weight[static_cast<std::size_t>(i)] = w;
            w *= static_cast<std::size_t>(row_sum + 1);
        }
    }
    const std::size_t total_states = states * static_cast<std::size_t>(cols + 1);
    std::vector<ExactInt> dp(total_states, ExactInt(0));
    dp[0] = 1;

    for (const auto& type : types) {
        std::size_t step = 0;
        bool feasible = true;
        for (int i = 0; i < tracked; ++i) {
            if (type[static_cast<std::size_t>(i)] > row_sum) feasible = false;
            step += weight[static_cast<std::size_t>(i)] *
                    static_cast<std::size_t>(type[static_cast<std::size_t>(i)]);
        }
        if (!feasible) continue;
        // ascending over column count implements unlimited multiplicity
        for (int used = 1; used <= cols; ++used) {
            const std::size_t base = static_cast<std::size_t>(used) * states;
            const std::size_t prev = base - states;
            for (std::size_t s = step; s < states; ++s) {
                // reject states where any tracked partial sum underflows
                bool ok = true;
                std::size_t rem = s;
                for (int i = 0; i < tracked && ok; ++i) {
                    std::size_t digit = rem / weight[static_cast<std::size_t>(i)];
                    rem %= weight[static_cast<std::size_t>(i)];
                    if (digit <
                        static_cast<std::size_t>(type[static_cast<std::size_t>(i)]))
                        ok = false;
                }
                if (!ok) continue;
                const ExactInt& src = dp[prev + (s - step)];
                if (src != 0) dp[base + s] += src;
            }
        }
    }

    std::size_t final_state = 0;
    for (int i = 0; i < tracked; ++i)
        final_state += weight[static_cast<std::size_t>(i)] *
                       static_cast<std::size_t>(row_sum);
    return dp[static_cast<std::size_t>(cols) * states + final_state];
}

ExactInt count_total_monomials(long vars, long degree) {
    if (vars < 1 || degree < 0)
        throw ValidationError("invalid monomial count arguments");
    ExactInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(vars + degree - 1),
                 static_cast<unsigned long>(degree));
    return out;
}

long covering_bound(long m) {
    if (m < 1) throw ValidationError("m must be >= 1");
    long inner = (m - 1 + 3) / 4;  // ceil((m-1)/4)
    return (m * inner + 4) / 5;    // ceil(m*inner/5)
}

ExactInt ah_codimension(const AHTriple& t) {
    if (t.k < 1 || t.d < 1 || t.n < 1)
        throw ValidationError("triple entries must be positive");
    ExactInt binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(t.n + t.d),
                 static_cast<unsigned long>(t.d));
    if (t.d == 2 && 2 <= t.k && t.k <= t.n) {
        ExactInt out;
        mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(t.n - t.k + 2),
                     2);
        return out;
    }
    if (t.d == 4 && (t.n == 2 || t.n == 3 || t.n == 4) &&
        t.k == t.n * (t.n + 3) / 2)
        return 1;
    if (t.d == 3 && t.n == 4 && t.k == 7) return 1;
    // naive count: N + 1 - (n+1)k with N = C(n+d,d) - 1, clamped at 0
    ExactInt naive = binom - ExactInt(t.n + 1) * ExactInt(t.k);
    return naive > 0 ? naive : ExactInt(0);
}

bool is_ah_ordinary(const AHTriple& t) {
    if (t.k < 1 || t.d < 1 || t.n < 1)
        throw ValidationError("triple entries must be positive");
    ExactInt binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(t.n + t.d),
                 static_cast<unsigned long>(t.d));
    return binom == ExactInt(t.n + 1) * ExactInt(t.k) + 1;
}

}  // namespace blockinv
