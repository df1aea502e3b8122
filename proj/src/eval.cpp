#include "blockinv/eval.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <thread>

namespace blockinv {

FormSet FormSet::from_ints(const std::vector<std::vector<long>>& rows) {
    FormSet fs;
    fs.forms.reserve(rows.size());
    for (const auto& row : rows) {
        std::vector<ExactInt> v;
        v.reserve(row.size());
        for (long x : row) v.emplace_back(x);
        fs.forms.push_back(std::move(v));
    }
    for (const auto& f : fs.forms)
        if (f.size() != fs.forms[0].size())
            throw ValidationError("forms of unequal dimension");
    return fs;
}

FormSet parse_form_set(const std::string& text) {
    FormSet fs;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos || line[a] == '#') continue;
        std::vector<ExactInt> vec;
        std::string token;
        std::istringstream ls(line);
        while (std::getline(ls, token, ',')) {
            std::size_t i = 0, j = token.size();
            while (i < j && std::isspace(static_cast<unsigned char>(token[i]))) ++i;
            while (j > i && std::isspace(static_cast<unsigned char>(token[j - 1]))) --j;
            std::string t = token.substr(i, j - i);
            if (t.empty()) throw ParseError("empty coefficient");
            std::size_t p = (t[0] == '-' || t[0] == '+') ? 1 : 0;
            if (p == t.size()) throw ParseError("bad coefficient '" + t + "'");
            for (; p < t.size(); ++p)
                if (!std::isdigit(static_cast<unsigned char>(t[p])))
                    throw ParseError("bad coefficient '" + t + "'");
            vec.emplace_back(t);
        }
        if (vec.empty()) throw ParseError("empty form line");
        if (!fs.forms.empty() && vec.size() != fs.forms[0].size())
            throw ParseError("forms of unequal dimension");
        fs.forms.push_back(std::move(vec));
    }
    return fs;
}

ExactInt det(const std::vector<std::vector<ExactInt>>& rows) {
    const int n = static_cast<int>(rows.size());
    for (const auto& row : rows)
        if (static_cast<int>(row.size()) != n)
            throw ValidationError("determinant input is not square");
    if (n == 0) return 1;
    if (n == 1) return rows[0][0];
    if (n == 2) return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0];
    if (n == 3)
        return rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1]) -
               rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0]) +
               rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0]);

    // Bareiss fraction-free elimination; every division is exact.
    std::vector<std::vector<ExactInt>> a = rows;
    int sign = 1;
    ExactInt prev = 1;
    for (int p = 0; p + 1 < n; ++p) {
        int pivot = -1;
        for (int r = p; r < n; ++r)
            if (a[r][p] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != p) {
            std::swap(a[pivot], a[p]);
            sign = -sign;
        }
        for (int r = p + 1; r < n; ++r) {
            for (int c = p + 1; c < n; ++c) {
                a[r][c] = a[r][c] * a[p][p] - a[r][p] * a[p][c];
                mpz_divexact(a[r][c].get_mpz_t(), a[r][c].get_mpz_t(),
                             prev.get_mpz_t());
            }
            a[r][p] = 0;
        }
        prev = a[p][p];
    }
    return sign > 0 ? a[n - 1][n - 1] : ExactInt(-a[n - 1][n - 1]);
}

DetTable::DetTable(const FormSet& forms, int block_size)
    : r_(forms.count()), k_(block_size) {
    if (forms.count() > 0 && forms.dim() != block_size)
        throw ValidationError("form dimension does not match block size");
    std::size_t size = 1;
    for (int i = 0; i < k_; ++i) {
        if (r_ > 0 && size > (std::size_t(1) << 40) / static_cast<std::size_t>(r_))
            throw ValidationError("determinant table too large");
        size *= static_cast<std::size_t>(r_);
    }
    exact_.resize(r_ == 0 ? 0 : size);
    fast_.assign(exact_.size(), 0);

    std::vector<int> tuple(static_cast<std::size_t>(k_), 0);
    std::vector<std::vector<ExactInt>> rows(static_cast<std::size_t>(k_));
    for (std::size_t idx = 0; idx < exact_.size(); ++idx) {
        bool repeated = false;
        for (int i = 0; i < k_ && !repeated; ++i)
            for (int j = i + 1; j < k_; ++j)
                if (tuple[i] == tuple[j]) {
                    repeated = true;
                    break;
                }
        if (!repeated) {
            for (int i = 0; i < k_; ++i) rows[i] = forms.forms[tuple[i]];
            exact_[idx] = det(rows);
            ExactInt abs_val = abs(exact_[idx]);
            if (abs_val > max_abs_) max_abs_ = abs_val;
            if (fits_int64_) {
                if (mpz_fits_slong_p(exact_[idx].get_mpz_t()))
                    fast_[idx] = exact_[idx].get_si();
                else
                    fits_int64_ = false;
            }
        }
        // odometer: the last tuple position varies fastest, so an index is
        // read back with Horner's rule over the positions in block order
        for (int i = k_ - 1; i >= 0; --i) {
            if (++tuple[i] < r_) break;
            tuple[i] = 0;
        }
    }
}

std::size_t DetTable::index_of(const std::vector<int>& tuple) const {
    std::size_t idx = 0;
    for (int c : tuple) idx = idx * static_cast<std::size_t>(r_) +
                              static_cast<std::size_t>(c);
    return idx;
}

bool DetTable::fast_path_certified(int num_blocks) const {
    if (!fits_int64_) return false;
    if (max_abs_ <= 1) return true;
    ExactInt bound;
    mpz_pow_ui(bound.get_mpz_t(), max_abs_.get_mpz_t(),
               static_cast<unsigned long>(num_blocks));
    ExactInt limit = 1;
    limit <<= 125;
    return bound <= limit;
}

namespace {

constexpr int128 kFlushLimit = int128(1) << 125;

struct FastVisitor {
    const std::int64_t* table;
    const int* block_points;  // num_blocks * k flattened
    int num_blocks;
    int k;
    std::size_t r;
    int128 acc = 0;
    ExactInt total = 0;
    std::uint64_t count = 0;

    bool operator()(const std::vector<int>& c) {
        ++count;
        const int* bp = block_points;
        int128 term = 1;
        for (int b = 0; b < num_blocks; ++b, bp += k) {
            std::size_t idx = 0;
            for (int i = 0; i < k; ++i)
                idx = idx * r + static_cast<std::size_t>(c[bp[i]]);
            const std::int64_t d = table[idx];
            if (d == 0) {
                term = 0;
                break;
            }
            term *= d;
        }
        acc += term;
        if (acc > kFlushLimit || acc < -kFlushLimit) flush();
        return true;
    }

    void flush() {
        if (acc != 0) {
            total += exact_from_int128(acc);
            acc = 0;
        }
    }

    ExactInt take() {
        flush();
        return std::move(total);
    }
};

struct ExactVisitor {
    const ExactInt* table;
    const int* block_points;
    int num_blocks;
    int k;
    std::size_t r;
    ExactInt total = 0;
    ExactInt term;
    std::uint64_t count = 0;

    bool operator()(const std::vector<int>& c) {
        ++count;
        const int* bp = block_points;
        term = 1;
        for (int b = 0; b < num_blocks; ++b, bp += k) {
            std::size_t idx = 0;
            for (int i = 0; i < k; ++i)
                idx = idx * r + static_cast<std::size_t>(c[bp[i]]);
            const ExactInt& d = table[idx];
            if (d == 0) {
                term = 0;
                break;
            }
            term *= d;
        }
        total += term;
        return true;
    }

    ExactInt take() { return std::move(total); }
};

std::vector<int> flatten_blocks(const BlockDesign& design) {
    std::vector<int> flat;
    flat.reserve(static_cast<std::size_t>(design.num_blocks()) *
                 static_cast<std::size_t>(design.block_size()));
    for (const auto& b : design.blocks())
        flat.insert(flat.end(), b.begin(), b.end());
    return flat;
}

struct EvalContext {
    CollinearityGraph graph;
    DetTable table;
    std::vector<int> flat_blocks;
    bool fast;
};

EvalContext make_context(const BlockDesign& design, const FormSet& forms) {
    if (forms.count() > 0 && forms.dim() != design.block_size())
        throw ValidationError("form dimension does not match block size");
    EvalContext ctx{collinearity(design), DetTable(forms, design.block_size()),
                    flatten_blocks(design), false};
    ctx.fast = ctx.table.fast_path_certified(design.num_blocks());
    return ctx;
}

EvalResult run_tasks(const EvalContext& ctx, const BlockDesign& design,
                     int colors, const std::vector<ColoringPrefix>& tasks) {
    EvalResult result{ExactInt(0), 0};
    if (ctx.fast) {
        FastVisitor visitor{ctx.table.fast_values().data(),
                            ctx.flat_blocks.data(), design.num_blocks(),
                            design.block_size(),
                            static_cast<std::size_t>(colors)};
        for (const auto& task : tasks)
            for_each_proper_coloring(ctx.graph, colors, visitor,
                                     TieBreak::LowestIndex, task);
        result.num_colorings = visitor.count;
        result.value = visitor.take();
    } else {
        ExactVisitor visitor{ctx.table.exact_values().data(),
                             ctx.flat_blocks.data(), design.num_blocks(),
                             design.block_size(),
                             static_cast<std::size_t>(colors)};
        for (const auto& task : tasks)
            for_each_proper_coloring(ctx.graph, colors, visitor,
                                     TieBreak::LowestIndex, task);
        result.num_colorings = visitor.count;
        result.value = visitor.take();
    }
    return result;
}

}  // namespace

EvalResult evaluate_detailed(const BlockDesign& design, const FormSet& forms) {
    EvalContext ctx = make_context(design, forms);
    if (forms.count() == 0) return {ExactInt(0), 0};
    return run_tasks(ctx, design, forms.count(), {ColoringPrefix{}});
}

ExactInt evaluate(const BlockDesign& design, const FormSet& forms) {
    return evaluate_detailed(design, forms).value;
}

ExactInt parallel_evaluate(const BlockDesign& design, const FormSet& forms,
                           int parts) {
    if (parts < 1) throw ValidationError("parts must be >= 1");
    EvalContext ctx = make_context(design, forms);
    if (forms.count() == 0) return 0;
    const int colors = forms.count();
    auto tasks = split_coloring_tasks(ctx.graph, colors,
                                      static_cast<std::size_t>(parts));

    // Round-robin task ownership; each worker folds its own exact partial
    // sum, combined afterwards. Addition is commutative and exact, so the
    // result is independent of scheduling and of the number of parts.
    std::vector<ExactInt> partial(static_cast<std::size_t>(parts), ExactInt(0));
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(parts));
    for (int w = 0; w < parts; ++w) {
        workers.emplace_back([&, w] {
            std::vector<ColoringPrefix> mine;
            for (std::size_t t = static_cast<std::size_t>(w); t < tasks.size();
                 t += static_cast<std::size_t>(parts))
                mine.push_back(tasks[t]);
            if (!mine.empty())
                partial[static_cast<std::size_t>(w)] =
                    run_tasks(ctx, design, colors, mine).value;
        });
    }
    for (auto& th : workers) th.join();
    ExactInt total = 0;
    for (const auto& p : partial) total += p;
    return total;
}

BatchResult evaluate_batch(const std::vector<BlockDesign>& designs,
                           const FormSet& forms) {
    BatchResult out;
    out.raw.reserve(designs.size());
    for (const auto& d : designs) out.raw.push_back(evaluate(d, forms));
    out.gcd = exact_gcd(out.raw);
    out.normalized.reserve(out.raw.size());
    for (const auto& v : out.raw)
        out.normalized.push_back(out.gcd == 0 ? ExactInt(0)
                                              : ExactInt(v / out.gcd));
    return out;
}

}  // namespace blockinv
