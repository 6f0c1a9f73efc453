#include "hgmoduli/partition.hpp"

namespace hgm {

namespace {

void gen(unsigned remaining, unsigned max_part, std::vector<unsigned>& acc,
         std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        gen(remaining - p, p, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(unsigned n) {
    std::vector<Partition> out;
    std::vector<unsigned> acc;
    gen(n, n == 0 ? 1 : n, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace hgm
