#include "asfc/kernels.hpp"

#include <omp.h>

#include <cstdint>
#include <unordered_map>

namespace asfc {

namespace {

// Content vector packed base (n+1) with the dinv value in the low bits.
// Keeps the hot loop off the node-based maps.
class Accumulator {
public:
    explicit Accumulator(int n) : n_(n) {}

    void add(std::span<const int> entries, int dinv) {
        std::uint64_t code = 0;
        counts_.assign(n_, 0);
        for (int v : entries)
            ++counts_[v - 1];
        for (int c : counts_)
            code = code * (n_ + 1) + c;
        const std::uint64_t key = (code << 20) | static_cast<std::uint32_t>(dinv + (1 << 19));
        ++table_[key];
    }

    void merge_into(ContentSeries& out) const {
        std::vector<int> content(n_);
        for (const auto& [key, count] : table_) {
            const int dinv = static_cast<int>(key & ((1u << 20) - 1)) - (1 << 19);
            std::uint64_t code = key >> 20;
            for (int k = n_ - 1; k >= 0; --k) {
                content[k] = static_cast<int>(code % (n_ + 1));
                code /= n_ + 1;
            }
            out[content].add_term(dinv, 0, static_cast<LaurentPoly::Coeff>(count));
        }
    }

private:
    int n_;
    std::vector<int> counts_;
    std::unordered_map<std::uint64_t, std::uint64_t> table_;
};

std::vector<std::vector<int>> valid_prefixes(const SkewShape& shape, Sign sign, int depth) {
    std::vector<std::vector<int>> out;
    const int n = shape.n();
    const SkewShape head(Partition(std::vector<int>(shape.inner().parts().begin(),
                                                    shape.inner().parts().begin() +
                                                        std::min(depth, shape.inner().length()))),
                         depth);
    for_each_labelling(head, sign, n,
                       [&](std::span<const int> e) { out.emplace_back(e.begin(), e.end()); });
    return out;
}

}  // namespace

ContentSeries content_series_serial(const DinvTable& table, Sign sign) {
    const int n = table.ctx().n();
    Accumulator acc(n);
    for_each_labelling(table.shape(), sign, n,
                       [&](std::span<const int> e) { acc.add(e, table.dinv(sign, e)); });
    ContentSeries out;
    acc.merge_into(out);
    return out;
}

ContentSeries content_series_parallel(const DinvTable& table, Sign sign, int jobs) {
    const int n = table.ctx().n();
    const int depth = std::min(n, 2);
    const std::vector<std::vector<int>> prefixes = valid_prefixes(table.shape(), sign, depth);
    const int count = static_cast<int>(prefixes.size());
    const int threads = jobs > 0 ? jobs : default_jobs();

    std::vector<Accumulator> partial(count, Accumulator(n));
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (int k = 0; k < count; ++k) {
        Accumulator& acc = partial[k];
        for_each_labelling(
            table.shape(), sign, n,
            [&](std::span<const int> e) { acc.add(e, table.dinv(sign, e)); }, prefixes[k]);
    }

    ContentSeries out;
    for (const Accumulator& acc : partial)
        acc.merge_into(out);
    return out;
}

int default_jobs() {
    const int p = omp_get_max_threads();
    return p > 0 ? p : 1;
}

}  // namespace asfc
