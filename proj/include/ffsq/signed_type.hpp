#ifndef FFSQ_SIGNED_TYPE_HPP
#define FFSQ_SIGNED_TYPE_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ffsq {

/// Conjugacy-class data of a signed permutation: the multiset of
/// (orbit length, orbit sign product) pairs. Only the per-orbit sign
/// PRODUCT is recorded; that is the conjugation invariant, and the
/// quantity readable off a polynomial factorization.
struct SignedCycleType {
    /// (length, sign) with sign in {-1,+1}; kept sorted, -1 before +1.
    std::vector<std::pair<uint32_t, int>> pairs;

    void add(uint32_t length, int sign) {
        pairs.emplace_back(length, sign);
        canonicalize();
    }
    void canonicalize();

    /// Sum of lengths (the degree n of the originating object).
    uint32_t total() const {
        uint32_t t = 0;
        for (auto& [len, s] : pairs) t += len;
        return t;
    }
    bool all_plus() const {
        for (auto& [len, s] : pairs)
            if (s < 0) return false;
        return true;
    }

    /// "len:sign" pairs joined by "+", e.g. "1:-1+2:+1".
    std::string to_string() const;

    auto operator<=>(const SignedCycleType&) const = default;
};

}  // namespace ffsq

#endif
