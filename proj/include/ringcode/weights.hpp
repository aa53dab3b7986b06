/**
 * Weight and distance functions on words over Z_{p^s}: Hamming, Lee,
 * squared-Euclidean, Chinese-Euclidean and homogeneous, plus weight
 * enumerators and minimum nonzero weight. All but the Chinese-Euclidean
 * weight are exact integers; that one is a real number and every comparison
 * involving it carries a 1e-9 tolerance.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <stdexcept>
#include <string>

#include "ring.hpp"

namespace ringcode {

enum class WeightKind { Hamming, Lee, Euclidean, ChineseEuclidean, Homogeneous };

inline const char* weight_kind_name(WeightKind k) {
    switch (k) {
        case WeightKind::Hamming: return "hamming";
        case WeightKind::Lee: return "lee";
        case WeightKind::Euclidean: return "euclidean";
        case WeightKind::ChineseEuclidean: return "chinese-euclidean";
        case WeightKind::Homogeneous: return "homogeneous";
    }
    throw std::invalid_argument("weight_kind_name: unknown kind");
}

inline WeightKind parse_weight_kind(const std::string& name) {
    if (name == "hamming") return WeightKind::Hamming;
    if (name == "lee") return WeightKind::Lee;
    if (name == "euclidean") return WeightKind::Euclidean;
    if (name == "chinese-euclidean") return WeightKind::ChineseEuclidean;
    if (name == "homogeneous") return WeightKind::Homogeneous;
    throw std::invalid_argument("unknown weight kind: " + name);
}

/// A weight: either an exact nonnegative integer or a real value.
/// Real values compare with tolerance 1e-9; histogram bucketing rounds
/// to nine decimals so equal-within-tolerance weights share a bucket.
class WeightValue {
  public:
    static WeightValue exact(std::uint64_t v) { return WeightValue(v); }
    static WeightValue real(double v) { return WeightValue(v); }

    bool is_exact() const { return exact_; }

    std::uint64_t integer_value() const {
        if (!exact_) throw std::logic_error("WeightValue: not an exact integer");
        return int_;
    }

    double as_double() const { return exact_ ? static_cast<double>(int_) : real_; }

    /// Value scaled by 1e9 and rounded; the bucketing key for histograms.
    __int128 scaled() const {
        if (exact_) return static_cast<__int128>(int_) * 1000000000;
        return static_cast<__int128>(std::llround(real_ * 1e9));
    }

    bool equals(const WeightValue& other) const {
        if (exact_ && other.exact_) return int_ == other.int_;
        return std::fabs(as_double() - other.as_double()) <= 1e-9;
    }

    friend bool operator==(const WeightValue& a, const WeightValue& b) { return a.equals(b); }
    friend bool operator!=(const WeightValue& a, const WeightValue& b) { return !a.equals(b); }
    friend bool operator<(const WeightValue& a, const WeightValue& b) {
        if (a.exact_ && b.exact_) return a.int_ < b.int_;
        return a.scaled() < b.scaled();
    }

    std::string to_string() const {
        if (exact_) return std::to_string(int_);
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.9f", real_);
        return buf;
    }

  private:
    explicit WeightValue(std::uint64_t v) : exact_(true), int_(v), real_(0) {}
    explicit WeightValue(double v) : exact_(false), int_(0), real_(v) {}

    bool exact_;
    std::uint64_t int_;
    double real_;
};

/// Strict weak order for map keys; exact and real weights bucket together
/// when they round to the same ninth decimal.
struct WeightValueLess {
    bool operator()(const WeightValue& a, const WeightValue& b) const { return a.scaled() < b.scaled(); }
};

inline std::uint64_t hamming_weight(const RingVector& x) {
    std::uint64_t w = 0;
    for (auto e : x.entries()) w += (e != 0);
    return w;
}

inline std::uint64_t lee_weight(const RingVector& x) {
    const std::uint64_t m = x.spec().modulus();
    std::uint64_t w = 0;
    for (auto e : x.entries()) {
        if (e != 0) w += std::min(e, m - e);
    }
    return w;
}

inline std::uint64_t euclidean_weight(const RingVector& x) {
    const std::uint64_t m = x.spec().modulus();
    std::uint64_t w = 0;
    for (auto e : x.entries()) {
        std::uint64_t d = std::min(e, e == 0 ? std::uint64_t{0} : m - e);
        w += d * d;
    }
    return w;
}

inline double chinese_euclidean_weight(const RingVector& x) {
    const double m = static_cast<double>(x.spec().modulus());
    constexpr double two_pi = 6.283185307179586476925286766559;
    double w = 0;
    for (auto e : x.entries()) w += 2.0 - 2.0 * std::cos(two_pi * static_cast<double>(e) / m);
    return w;
}

/// Homogeneous weight per coordinate: 0 at zero, p^{s-1} on the nonzero
/// elements of p^{s-1} Z_{p^s}, and p^{s-2}(p-1) elsewhere. The middle
/// case is tested first, which makes s = 1 well defined (it degenerates
/// to the Hamming weight).
inline std::uint64_t homogeneous_weight(const RingVector& x) {
    const RingSpec& R = x.spec();
    const unsigned s = R.s();
    const std::uint64_t top = R.pow_p(s - 1);
    const std::uint64_t generic = s >= 2 ? R.pow_p(s - 2) * (R.p() - 1) : 0;
    std::uint64_t w = 0;
    for (auto e : x.entries()) {
        if (e == 0) continue;
        w += (R.valuation(e) >= s - 1) ? top : generic;
    }
    return w;
}

inline WeightValue weight(const RingVector& x, WeightKind kind) {
    switch (kind) {
        case WeightKind::Hamming: return WeightValue::exact(hamming_weight(x));
        case WeightKind::Lee: return WeightValue::exact(lee_weight(x));
        case WeightKind::Euclidean: return WeightValue::exact(euclidean_weight(x));
        case WeightKind::ChineseEuclidean: return WeightValue::real(chinese_euclidean_weight(x));
        case WeightKind::Homogeneous: return WeightValue::exact(homogeneous_weight(x));
    }
    throw std::invalid_argument("weight: unknown kind");
}

inline WeightValue distance(const RingVector& x, const RingVector& y, WeightKind kind) {
    return weight(x - y, kind);
}

using WeightHistogram = std::map<WeightValue, std::uint64_t, WeightValueLess>;

template <typename Range>
WeightHistogram weight_enumerator(const Range& words, WeightKind kind) {
    WeightHistogram hist;
    for (const RingVector& w : words) ++hist[weight(w, kind)];
    return hist;
}

/// Minimum weight over the nonzero words of the range. A range without a
/// nonzero word has no minimum weight.
template <typename Range>
WeightValue min_weight(const Range& words, WeightKind kind) {
    bool found = false;
    WeightValue best = WeightValue::exact(0);
    for (const RingVector& w : words) {
        if (w.is_zero()) continue;
        WeightValue v = weight(w, kind);
        if (!found || WeightValueLess{}(v, best)) {
            best = v;
            found = true;
        }
    }
    if (!found) throw std::domain_error("min_weight: trivial code has no nonzero word");
    return best;
}

}  // namespace ringcode
