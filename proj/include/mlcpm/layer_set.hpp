#ifndef MLCPM_LAYER_SET_HPP
#define MLCPM_LAYER_SET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace mlcpm {

using LayerIndex = std::uint32_t;

/// Set of layer indices, the L_ij / L(A) of the clique predicates.
///
/// Layers 0..63 live in one inline machine word, which covers every real
/// dataset we care about; wider networks spill into a heap vector so the
/// algebra stays exact for any layer count. Spilled words are kept trimmed of
/// trailing zeros so equality is plain member comparison.
class LayerSet {
  public:
    LayerSet() = default;

    /// The set {0, 1, ..., layer_count-1}. Used as the empty-intersection
    /// identity: clique_layers of fewer than two nodes returns this.
    static LayerSet full(std::size_t layer_count) {
        LayerSet s;
        std::size_t i = 0;
        for (; i + 64 <= layer_count; i += 64) {
            s.word(i / 64) = ~std::uint64_t{0};
        }
        if (i < layer_count) {
            s.word(i / 64) = (std::uint64_t{1} << (layer_count - i)) - 1;
        }
        return s;
    }

    void set(LayerIndex i) { word(i >> 6) |= std::uint64_t{1} << (i & 63); }

    void reset(LayerIndex i) {
        if ((i >> 6) == 0) {
            low_ &= ~(std::uint64_t{1} << i);
        } else if ((i >> 6) <= high_.size()) {
            high_[(i >> 6) - 1] &= ~(std::uint64_t{1} << (i & 63));
            trim();
        }
    }

    bool test(LayerIndex i) const {
        if ((i >> 6) == 0) {
            return (low_ >> i) & 1;
        }
        std::size_t w = (i >> 6) - 1;
        return w < high_.size() && ((high_[w] >> (i & 63)) & 1);
    }

    std::size_t count() const {
        std::size_t n = std::popcount(low_);
        for (std::uint64_t w : high_) {
            n += std::popcount(w);
        }
        return n;
    }

    bool empty() const { return low_ == 0 && high_.empty(); }

    LayerSet& intersect(const LayerSet& other) {
        low_ &= other.low_;
        if (high_.size() > other.high_.size()) {
            high_.resize(other.high_.size());
        }
        for (std::size_t i = 0; i < high_.size(); ++i) {
            high_[i] &= other.high_[i];
        }
        trim();
        return *this;
    }

    LayerSet& unite(const LayerSet& other) {
        low_ |= other.low_;
        if (high_.size() < other.high_.size()) {
            high_.resize(other.high_.size(), 0);
        }
        for (std::size_t i = 0; i < other.high_.size(); ++i) {
            high_[i] |= other.high_[i];
        }
        return *this;
    }

    friend LayerSet operator&(LayerSet a, const LayerSet& b) {
        a.intersect(b);
        return a;
    }

    friend LayerSet operator|(LayerSet a, const LayerSet& b) {
        a.unite(b);
        return a;
    }

    /// True iff every layer of `other` is also in this set.
    bool contains(const LayerSet& other) const {
        if ((other.low_ & ~low_) != 0 || other.high_.size() > high_.size()) {
            return false;
        }
        for (std::size_t i = 0; i < other.high_.size(); ++i) {
            if (other.high_[i] & ~high_[i]) {
                return false;
            }
        }
        return true;
    }

    bool operator==(const LayerSet&) const = default;

    /// Set bits in ascending order.
    std::vector<LayerIndex> indices() const {
        std::vector<LayerIndex> out;
        out.reserve(count());
        auto scan = [&out](std::uint64_t w, LayerIndex base) {
            while (w) {
                out.push_back(base + static_cast<LayerIndex>(std::countr_zero(w)));
                w &= w - 1;
            }
        };
        scan(low_, 0);
        for (std::size_t i = 0; i < high_.size(); ++i) {
            scan(high_[i], static_cast<LayerIndex>(64 * (i + 1)));
        }
        return out;
    }

  private:
    std::uint64_t& word(std::size_t w) {
        if (w == 0) {
            return low_;
        }
        if (high_.size() < w) {
            high_.resize(w, 0);
        }
        return high_[w - 1];
    }

    void trim() {
        while (!high_.empty() && high_.back() == 0) {
            high_.pop_back();
        }
    }

    std::uint64_t low_ = 0;
    std::vector<std::uint64_t> high_;
};

} // namespace mlcpm

#endif
