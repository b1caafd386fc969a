#ifndef SVDREF_CLUSTER_PARTITION_HPP
#define SVDREF_CLUSTER_PARTITION_HPP

#include "svdref/errors.hpp"
#include "svdref/mpreal.hpp"

#include <cstddef>
#include <numeric>
#include <vector>

namespace svdref {

// Multiplicities (q_1..q_e) of clustered singular values, with the gap
// delta that separates clusters. Block i covers the half-open index range
// [offset(i), offset(i) + multiplicity(i)), 0-based.
class ClusterPartition {
public:
    ClusterPartition() = default;
    ClusterPartition(std::vector<std::size_t> multiplicities, MpReal delta)
        : q_(std::move(multiplicities)), delta_(std::move(delta)) {
        offsets_.reserve(q_.size());
        std::size_t off = 0;
        for (std::size_t m : q_) {
            if (m == 0) throw Error("ClusterPartition: zero multiplicity");
            offsets_.push_back(off);
            off += m;
        }
        total_ = off;
    }

    std::size_t blocks() const { return q_.size(); }
    std::size_t multiplicity(std::size_t i) const { return q_[i]; }
    std::size_t offset(std::size_t i) const { return offsets_[i]; }
    std::size_t total() const { return total_; }
    const MpReal& delta() const { return delta_; }

    // Block index owning column j.
    std::size_t block_of(std::size_t j) const {
        std::size_t b = 0;
        while (b + 1 < q_.size() && offsets_[b + 1] <= j) ++b;
        return b;
    }

    bool all_singletons() const {
        for (std::size_t m : q_)
            if (m != 1) return false;
        return true;
    }

private:
    std::vector<std::size_t> q_;
    std::vector<std::size_t> offsets_;
    std::size_t total_ = 0;
    MpReal delta_;
};

}  // namespace svdref

#endif
