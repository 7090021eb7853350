#include "novik/gf2.hpp"

#include <algorithm>
#include <bit>

namespace novik::gf2 {

bool Row::any() const {
    for (auto w : words_) {
        if (w != 0) return true;
    }
    return false;
}

std::optional<std::size_t> Row::lowest_from(std::size_t from) const {
    if (from >= ncols_) return std::nullopt;
    std::size_t wi = from >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
        if (w != 0) {
            const std::size_t i = (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
            return i < ncols_ ? std::optional<std::size_t>(i) : std::nullopt;
        }
        if (++wi >= words_.size()) return std::nullopt;
        w = words_[wi];
    }
}

Row& Row::operator^=(const Row& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
}

std::pair<Row, bool> Echelon::reduce(Row row, bool rhs) const {
    std::size_t from = 0;
    while (auto c = row.lowest_from(from)) {
        const long r = where_[*c];
        if (r < 0) {
            from = *c + 1;
            continue;
        }
        row ^= rows_[static_cast<std::size_t>(r)];
        rhs = rhs != rhs_[static_cast<std::size_t>(r)];
        from = *c + 1;
    }
    return {std::move(row), rhs};
}

Echelon::Outcome Echelon::insert(Row row, bool rhs) {
    // Only eliminate until the lowest remaining bit has no basis row.
    std::size_t from = 0;
    while (auto c = row.lowest_from(from)) {
        const long r = where_[*c];
        if (r < 0) {
            where_[*c] = static_cast<long>(rows_.size());
            rows_.push_back(std::move(row));
            rhs_.push_back(rhs);
            pivot_.push_back(*c);
            return Outcome::independent;
        }
        row ^= rows_[static_cast<std::size_t>(r)];
        rhs = rhs != rhs_[static_cast<std::size_t>(r)];
        from = *c + 1;
    }
    return rhs ? Outcome::inconsistent : Outcome::dependent;
}

Row Echelon::solution() const {
    // Back substitution from the highest pivot down: every stored row only has
    // bits at or above its pivot.
    Row x(ncols_);
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivot_[a] > pivot_[b]; });
    for (std::size_t r : order) {
        bool v = rhs_[r];
        const Row& row = rows_[r];
        std::size_t from = pivot_[r] + 1;
        while (auto c = row.lowest_from(from)) {
            if (x.test(*c)) v = !v;
            from = *c + 1;
        }
        if (v) x.set(pivot_[r]);
    }
    return x;
}

}  // namespace novik::gf2
