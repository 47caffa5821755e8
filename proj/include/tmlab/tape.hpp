#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace tmlab {

// Bi-infinite tape with finite non-blank support, stored as one contiguous
// buffer that grows toward whichever side the head pushes into.
class Tape {
public:
    explicit Tape(int32_t blank = 0) : blank_(blank) { reset(); }

    int32_t blank() const { return blank_; }

    void reset() {
        cells_.assign(16, blank_);
        origin_ = -8;
    }

    int32_t get(int64_t pos) const {
        int64_t i = pos - origin_;
        if (i < 0 || i >= static_cast<int64_t>(cells_.size())) return blank_;
        return cells_[static_cast<size_t>(i)];
    }

    void set(int64_t pos, int32_t v) {
        ensure(pos);
        cells_[static_cast<size_t>(pos - origin_)] = v;
    }

    // Grows the buffer so that pos is addressable; invalidates raw pointers.
    void ensure(int64_t pos) {
        if (pos >= origin_ && pos < origin_ + static_cast<int64_t>(cells_.size())) return;
        grow(pos);
    }

    int32_t* ptr(int64_t pos) { return &cells_[static_cast<size_t>(pos - origin_)]; }

    int64_t lo_bound() const { return origin_; }
    int64_t hi_bound() const { return origin_ + static_cast<int64_t>(cells_.size()); }

    // Exact non-blank support; the pair (1, 0) when the tape is all blank.
    std::pair<int64_t, int64_t> support() const {
        int64_t n = static_cast<int64_t>(cells_.size());
        int64_t lo = -1, hi = -1;
        for (int64_t i = 0; i < n; ++i)
            if (cells_[static_cast<size_t>(i)] != blank_) { lo = i; break; }
        if (lo < 0) return {1, 0};
        for (int64_t i = n - 1; i >= 0; --i)
            if (cells_[static_cast<size_t>(i)] != blank_) { hi = i; break; }
        return {origin_ + lo, origin_ + hi};
    }

    std::map<int64_t, int32_t> nonblank() const {
        std::map<int64_t, int32_t> out;
        for (int64_t i = 0; i < static_cast<int64_t>(cells_.size()); ++i) {
            int32_t v = cells_[static_cast<size_t>(i)];
            if (v != blank_) out[origin_ + i] = v;
        }
        return out;
    }

private:
    void grow(int64_t pos) {
        int64_t lo = origin_, hi = origin_ + static_cast<int64_t>(cells_.size());
        int64_t new_lo = lo, new_hi = hi;
        while (pos < new_lo) new_lo -= (new_hi - new_lo);
        while (pos >= new_hi) new_hi += (new_hi - new_lo);
        std::vector<int32_t> next(static_cast<size_t>(new_hi - new_lo), blank_);
        std::copy(cells_.begin(), cells_.end(), next.begin() + static_cast<size_t>(lo - new_lo));
        cells_ = std::move(next);
        origin_ = new_lo;
    }

    std::vector<int32_t> cells_;
    int64_t origin_ = 0;
    int32_t blank_ = 0;
};

}  // namespace tmlab
