/**
 * Exact residue arithmetic in Z_{p^s}: ring descriptors, elements, vectors,
 * matrices, p-adic digit expansions and p-valuations. Everything here is
 * plain 64-bit integer arithmetic; moduli are prime powers fitting in 64 bits.
 */

#pragma once

#include <cstdint>
#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ringcode {

/// Thrown when an enumeration would exceed the configured codeword cap.
class CapExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Default cap on exhaustive codeword / coefficient enumerations (2^26).
inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 26;

/// The ambient ring Z_{p^s} for a prime p and exponent s >= 1.
class RingSpec {
  public:
    RingSpec(std::uint64_t p, unsigned s) : p_(p), s_(s) {
        if (p < 2 || p > 97 || !is_prime(p)) {
            throw std::invalid_argument("RingSpec: p must be a prime in [2, 97], got " + std::to_string(p));
        }
        if (s < 1) {
            throw std::invalid_argument("RingSpec: exponent s must be >= 1");
        }
        m_ = 1;
        for (unsigned i = 0; i < s; ++i) {
            if (m_ > UINT64_MAX / p) {
                throw std::invalid_argument("RingSpec: p^s does not fit in 64 bits");
            }
            m_ *= p;
        }
    }

    std::uint64_t p() const { return p_; }
    unsigned s() const { return s_; }
    std::uint64_t modulus() const { return m_; }

    friend bool operator==(const RingSpec& a, const RingSpec& b) {
        return a.p_ == b.p_ && a.s_ == b.s_;
    }
    friend bool operator!=(const RingSpec& a, const RingSpec& b) { return !(a == b); }

    /// Canonical representative in [0, m); negative inputs wrap.
    std::uint64_t reduce(long long v) const {
        __int128 r = static_cast<__int128>(v) % static_cast<__int128>(m_);
        if (r < 0) r += m_;
        return static_cast<std::uint64_t>(r);
    }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t r = a + b;  // a, b < m <= 2^63 is not guaranteed; go via 128 bits
        if (r < a || r >= m_) {
            r = static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) + b) % m_);
        }
        return r;
    }

    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : m_ - (b - a); }

    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : m_ - a; }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m_);
    }

    /// p^t for t <= s.
    std::uint64_t pow_p(unsigned t) const {
        std::uint64_t r = 1;
        for (unsigned i = 0; i < t; ++i) r *= p_;
        return r;
    }

    /// p-adic digits of u, least significant first; exactly s digits in [0, p).
    std::vector<std::uint32_t> p_adic_digits(std::uint64_t u) const {
        std::vector<std::uint32_t> d(s_);
        for (unsigned i = 0; i < s_; ++i) {
            d[i] = static_cast<std::uint32_t>(u % p_);
            u /= p_;
        }
        return d;
    }

    /// Inverse of p_adic_digits. Requires exactly s digits, each in [0, p).
    std::uint64_t from_digits(const std::vector<std::uint32_t>& digits) const {
        if (digits.size() != s_) {
            throw std::invalid_argument("from_digits: expected " + std::to_string(s_) + " digits, got " +
                                        std::to_string(digits.size()));
        }
        std::uint64_t u = 0;
        for (unsigned i = s_; i-- > 0;) {
            if (digits[i] >= p_) {
                throw std::invalid_argument("from_digits: digit out of range [0, p)");
            }
            u = u * p_ + digits[i];
        }
        return u;
    }

    /// Largest t with p^t | u, in [0, s]. The valuation of 0 is s.
    unsigned valuation(std::uint64_t u) const {
        if (u == 0) return s_;
        unsigned t = 0;
        while (u % p_ == 0) {
            u /= p_;
            ++t;
        }
        return t;
    }

    bool is_unit(std::uint64_t u) const { return u % p_ != 0; }

    /// Multiplicative inverse of a unit mod p^s.
    std::uint64_t unit_inverse(std::uint64_t u) const {
        if (!is_unit(u)) throw std::invalid_argument("unit_inverse: argument is not a unit");
        // extended Euclid on (u, m)
        __int128 r0 = u, r1 = m_, t0 = 1, t1 = 0;
        while (r1 != 0) {
            __int128 q = r0 / r1;
            r0 -= q * r1;
            std::swap(r0, r1);
            t0 -= q * t1;
            std::swap(t0, t1);
        }
        t0 %= static_cast<__int128>(m_);
        if (t0 < 0) t0 += m_;
        return static_cast<std::uint64_t>(t0);
    }

  private:
    static bool is_prime(std::uint64_t p) {
        for (std::uint64_t d = 2; d * d <= p; ++d) {
            if (p % d == 0) return false;
        }
        return true;
    }

    std::uint64_t p_;
    unsigned s_;
    std::uint64_t m_;
};

inline void require_same_spec(const RingSpec& a, const RingSpec& b, const char* what) {
    if (!(a == b)) {
        throw std::invalid_argument(std::string(what) + ": operands live in different rings");
    }
}

/// A single residue together with its ring.
class RingElement {
  public:
    RingElement(const RingSpec& spec, long long value) : spec_(spec), value_(spec.reduce(value)) {}

    const RingSpec& spec() const { return spec_; }
    std::uint64_t value() const { return value_; }

    friend RingElement operator+(const RingElement& a, const RingElement& b) {
        require_same_spec(a.spec_, b.spec_, "RingElement addition");
        return RingElement(a.spec_, a.spec_.add(a.value_, b.value_));
    }
    friend RingElement operator-(const RingElement& a, const RingElement& b) {
        require_same_spec(a.spec_, b.spec_, "RingElement subtraction");
        return RingElement(a.spec_, a.spec_.sub(a.value_, b.value_));
    }
    friend RingElement operator*(const RingElement& a, const RingElement& b) {
        require_same_spec(a.spec_, b.spec_, "RingElement multiplication");
        return RingElement(a.spec_, a.spec_.mul(a.value_, b.value_));
    }
    friend bool operator==(const RingElement& a, const RingElement& b) {
        return a.spec_ == b.spec_ && a.value_ == b.value_;
    }

  private:
    RingElement(const RingSpec& spec, std::uint64_t value, int) : spec_(spec), value_(value) {}

    RingSpec spec_;
    std::uint64_t value_;
};

/// A word over Z_{p^s}: fixed-length tuple of canonical residues.
class RingVector {
  public:
    RingVector(const RingSpec& spec, std::vector<std::uint64_t> entries) : spec_(spec), entries_(std::move(entries)) {
        for (auto& e : entries_) e %= spec_.modulus();
    }

    RingVector(const RingSpec& spec, const std::vector<long long>& entries) : spec_(spec) {
        entries_.reserve(entries.size());
        for (long long e : entries) entries_.push_back(spec_.reduce(e));
    }

    static RingVector zero(const RingSpec& spec, std::size_t n) {
        return RingVector(spec, std::vector<std::uint64_t>(n, 0));
    }

    const RingSpec& spec() const { return spec_; }
    std::size_t size() const { return entries_.size(); }
    std::uint64_t operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<std::uint64_t>& entries() const { return entries_; }

    void set(std::size_t i, std::uint64_t v) { entries_[i] = v % spec_.modulus(); }

    bool is_zero() const {
        for (auto e : entries_) {
            if (e != 0) return false;
        }
        return true;
    }

    friend RingVector operator+(const RingVector& a, const RingVector& b) {
        a.check_compatible(b, "vector addition");
        std::vector<std::uint64_t> r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a.spec_.add(a.entries_[i], b.entries_[i]);
        return RingVector(a.spec_, std::move(r));
    }
    friend RingVector operator-(const RingVector& a, const RingVector& b) {
        a.check_compatible(b, "vector subtraction");
        std::vector<std::uint64_t> r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a.spec_.sub(a.entries_[i], b.entries_[i]);
        return RingVector(a.spec_, std::move(r));
    }

    RingVector scaled(std::uint64_t c) const {
        std::vector<std::uint64_t> r(size());
        for (std::size_t i = 0; i < size(); ++i) r[i] = spec_.mul(entries_[i], c);
        return RingVector(spec_, std::move(r));
    }

    std::uint64_t dot(const RingVector& other) const {
        check_compatible(other, "inner product");
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < size(); ++i) acc = spec_.add(acc, spec_.mul(entries_[i], other.entries_[i]));
        return acc;
    }

    friend bool operator==(const RingVector& a, const RingVector& b) {
        return a.spec_ == b.spec_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const RingVector& a, const RingVector& b) { return !(a == b); }
    friend bool operator<(const RingVector& a, const RingVector& b) {
        if (a.spec_.modulus() != b.spec_.modulus()) return a.spec_.modulus() < b.spec_.modulus();
        return a.entries_ < b.entries_;
    }

  private:
    void check_compatible(const RingVector& other, const char* what) const {
        require_same_spec(spec_, other.spec_, what);
        if (size() != other.size()) {
            throw std::invalid_argument(std::string(what) + ": length mismatch");
        }
    }

    RingSpec spec_;
    std::vector<std::uint64_t> entries_;
};

/// A rectangular matrix over Z_{p^s}, stored as rows of equal length.
class RingMatrix {
  public:
    RingMatrix(const RingSpec& spec, std::size_t cols) : spec_(spec), cols_(cols) {}

    RingMatrix(const RingSpec& spec, std::size_t cols, const std::vector<std::vector<long long>>& rows)
        : spec_(spec), cols_(cols) {
        for (const auto& r : rows) append_row(RingVector(spec, r));
    }

    const RingSpec& spec() const { return spec_; }
    std::size_t cols() const { return cols_; }
    std::size_t row_count() const { return rows_.size(); }
    const RingVector& row(std::size_t i) const { return rows_[i]; }
    const std::vector<RingVector>& rows() const { return rows_; }
    std::uint64_t at(std::size_t i, std::size_t j) const { return rows_[i][j]; }

    void append_row(RingVector r) {
        if (r.size() != cols_) throw std::invalid_argument("RingMatrix: row length mismatch");
        require_same_spec(spec_, r.spec(), "RingMatrix row");
        rows_.push_back(std::move(r));
    }

    bool is_zero() const {
        for (const auto& r : rows_) {
            if (!r.is_zero()) return false;
        }
        return true;
    }

    /// Matrix product; needs a.cols == b.row_count.
    friend RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
        require_same_spec(a.spec_, b.spec_, "matrix product");
        if (a.cols_ != b.row_count()) throw std::invalid_argument("matrix product: inner dimensions disagree");
        RingMatrix out(a.spec_, b.cols_);
        for (std::size_t i = 0; i < a.row_count(); ++i) {
            std::vector<std::uint64_t> r(b.cols_, 0);
            for (std::size_t t = 0; t < a.cols_; ++t) {
                std::uint64_t coeff = a.at(i, t);
                if (coeff == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    r[j] = a.spec_.add(r[j], a.spec_.mul(coeff, b.at(t, j)));
                }
            }
            out.append_row(RingVector(a.spec_, std::move(r)));
        }
        return out;
    }

    RingVector apply(const RingVector& x) const {
        require_same_spec(spec_, x.spec(), "matrix-vector product");
        if (x.size() != cols_) throw std::invalid_argument("matrix-vector product: dimension mismatch");
        std::vector<std::uint64_t> r(row_count());
        for (std::size_t i = 0; i < row_count(); ++i) r[i] = rows_[i].dot(x);
        return RingVector(spec_, std::move(r));
    }

    friend bool operator==(const RingMatrix& a, const RingMatrix& b) {
        return a.spec_ == b.spec_ && a.cols_ == b.cols_ && a.rows_ == b.rows_;
    }

  private:
    RingSpec spec_;
    std::size_t cols_;
    std::vector<RingVector> rows_;
};

}  // namespace ringcode
