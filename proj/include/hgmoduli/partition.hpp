#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "hgmoduli/errors.hpp"

namespace hgm {

// An integer partition: weakly decreasing positive parts. The empty partition
// indexes the scalar monomial 1. Partitions index power-sum monomials
// p_lambda = p_{l1} p_{l2} ... and, after basis change, h-monomials.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
        std::sort(parts_.begin(), parts_.end(), std::greater<unsigned>());
        if (!parts_.empty() && parts_.back() == 0)
            fail(Errc::bad_range, "partition parts must be positive");
    }

    static Partition single(unsigned m) { return Partition(std::vector<unsigned>{m}); }

    static Partition ones(unsigned n) { return Partition(std::vector<unsigned>(n, 1u)); }

    // (m, m, ..., m) with j copies.
    static Partition rectangle(unsigned m, unsigned j) {
        return Partition(std::vector<unsigned>(j, m));
    }

    const std::vector<unsigned>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    size_t num_parts() const { return parts_.size(); }

    unsigned weight() const {
        return std::accumulate(parts_.begin(), parts_.end(), 0u);
    }

    unsigned multiplicity(unsigned part) const {
        return static_cast<unsigned>(std::count(parts_.begin(), parts_.end(), part));
    }

    // Every part multiplied by n (the Adams action on p-monomial indices).
    Partition scaled(unsigned n) const {
        Partition r(*this);
        for (unsigned& p : r.parts_) p *= n;
        return r;
    }

    // Multiset union (p_lambda * p_mu = p_{lambda u mu}).
    Partition merged(const Partition& o) const {
        std::vector<unsigned> ps;
        ps.reserve(parts_.size() + o.parts_.size());
        std::merge(parts_.begin(), parts_.end(), o.parts_.begin(), o.parts_.end(),
                   std::back_inserter(ps), std::greater<unsigned>());
        Partition r;
        r.parts_ = std::move(ps);
        return r;
    }

    // Removes one copy of the given part; the part must be present.
    Partition without_one(unsigned part) const {
        auto it = std::find(parts_.begin(), parts_.end(), part);
        if (it == parts_.end()) fail(Errc::bad_range, "part not present in partition");
        Partition r;
        r.parts_.reserve(parts_.size() - 1);
        r.parts_.assign(parts_.begin(), it);
        r.parts_.insert(r.parts_.end(), it + 1, parts_.end());
        return r;
    }

    unsigned largest_part() const { return parts_.empty() ? 0 : parts_.front(); }

    // Total order: by weight, then lexicographically on the weakly decreasing
    // part vectors. Within a fixed weight this is a linear extension of
    // dominance ((1,1) < (2), (1,1,1) < (2,1) < (3)), which is what the
    // triangular h-basis elimination needs.
    friend bool operator<(const Partition& a, const Partition& b) {
        unsigned wa = a.weight(), wb = b.weight();
        if (wa != wb) return wa < wb;
        return std::lexicographical_compare(a.parts_.begin(), a.parts_.end(), b.parts_.begin(),
                                            b.parts_.end());
    }
    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

    // "p1^2 p3" given symbol "p"; "1" for the empty partition.
    std::string str(const std::string& symbol) const {
        if (parts_.empty()) return "1";
        std::ostringstream os;
        bool first = true;
        size_t i = 0;
        while (i < parts_.size()) {
            size_t j = i;
            while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
            if (!first) os << " ";
            os << symbol << parts_[i];
            if (j - i > 1) os << "^" << (j - i);
            first = false;
            i = j;
        }
        return os.str();
    }

private:
    std::vector<unsigned> parts_;
};

// All partitions of n, in the order given by operator<.
std::vector<Partition> partitions_of(unsigned n);

} // namespace hgm
