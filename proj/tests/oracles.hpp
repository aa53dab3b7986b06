// Brute-force references for the tests. These bypass the library's
// standard-form and back-substitution machinery on purpose: spans come from
// enumerating every coefficient tuple over the full ring, kernels from
// scanning the whole ambient space.

#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include <ringcode/ring.hpp>

namespace oracles {

using ringcode::RingMatrix;
using ringcode::RingSpec;
using ringcode::RingVector;

inline std::set<RingVector> span_bruteforce(const RingMatrix& gen) {
    const RingSpec& R = gen.spec();
    const std::uint64_t m = R.modulus();
    const std::size_t r = gen.row_count();
    std::set<RingVector> out;
    std::vector<std::uint64_t> coeff(r, 0);
    while (true) {
        RingVector w = RingVector::zero(R, gen.cols());
        for (std::size_t i = 0; i < r; ++i) {
            if (coeff[i]) w = w + gen.row(i).scaled(coeff[i]);
        }
        out.insert(std::move(w));
        std::size_t i = 0;
        while (i < r && coeff[i] == m - 1) coeff[i++] = 0;
        if (i == r) break;
        ++coeff[i];
    }
    return out;
}

inline std::set<RingVector> kernel_bruteforce(const RingMatrix& gen) {
    const RingSpec& R = gen.spec();
    const std::uint64_t m = R.modulus();
    const std::size_t n = gen.cols();
    std::set<RingVector> out;
    std::vector<std::uint64_t> word(n, 0);
    while (true) {
        RingVector w(R, word);
        bool ortho = true;
        for (std::size_t i = 0; i < gen.row_count() && ortho; ++i) ortho = gen.row(i).dot(w) == 0;
        if (ortho) out.insert(std::move(w));
        std::size_t i = 0;
        while (i < n && word[i] == m - 1) word[i++] = 0;
        if (i == n) break;
        ++word[i];
    }
    return out;
}

// Independence by trying every nonzero coefficient tuple over Z_p.
inline bool p_independent_bruteforce(const std::vector<RingVector>& vectors, const RingSpec& spec) {
    const std::uint64_t p = spec.p();
    const std::size_t k = vectors.size();
    if (k == 0) return true;
    std::vector<std::uint64_t> lambda(k, 0);
    while (true) {
        std::size_t i = 0;
        while (i < k && lambda[i] == p - 1) lambda[i++] = 0;
        if (i == k) return true;
        ++lambda[i];
        RingVector sum = RingVector::zero(spec, vectors[0].size());
        for (std::size_t c = 0; c < k; ++c) {
            if (lambda[c]) sum = sum + vectors[c].scaled(lambda[c]);
        }
        if (sum.is_zero()) return false;
    }
}

}  // namespace oracles
