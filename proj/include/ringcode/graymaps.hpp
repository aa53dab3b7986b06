/**
 * Gray maps between modular rings. The modular map eta: Z_{2^s} -> Z_{2^{s-1}}^2
 * follows a four-interval rule; its permuted variant xi is tabulated for
 * s in {2, 3, 4} only. The generalized map sends u in Z_{p^s} to the value
 * table of the affine form u_s + u_1 y_1 + ... + u_{s-1} y_{s-1} over Z_p^{s-1}.
 * Staged products of eta reproduce the generalized map at p = 2; the verifiers
 * at the bottom check that equality, the isometry property, distributivity of
 * the maps over p-bases, and the shape of the one-coordinate image.
 */

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "codes.hpp"
#include "ring.hpp"
#include "weights.hpp"

namespace ringcode {

enum class GrayVariant { Eta, Xi };

/// Order of the two halves of an extended word: Blockwise interleaves
/// (a_1, b_1, a_2, b_2, ...), Split concatenates (a_1..a_n, b_1..b_n).
enum class ExtensionLayout { Blockwise, Split };

namespace detail {

inline constexpr std::array<std::pair<std::uint8_t, std::uint8_t>, 4> kXiS2 = {{
    {0, 0}, {1, 0}, {1, 1}, {0, 1},
}};

inline constexpr std::array<std::pair<std::uint8_t, std::uint8_t>, 8> kXiS3 = {{
    {0, 0}, {1, 1}, {2, 0}, {1, 3}, {2, 2}, {3, 1}, {0, 2}, {3, 3},
}};

inline constexpr std::array<std::pair<std::uint8_t, std::uint8_t>, 16> kXiS4 = {{
    {0, 0}, {1, 1}, {2, 2}, {1, 3}, {4, 0}, {1, 5}, {2, 6}, {1, 7},
    {4, 4}, {7, 1}, {6, 2}, {7, 3}, {0, 4}, {7, 5}, {6, 6}, {7, 7},
}};

}  // namespace detail

/// The pair-valued Gray map Z_{2^s} -> Z_{2^{s-1}} x Z_{2^{s-1}}, either the
/// interval-rule map eta or its tabulated permuted variant xi.
class ModularGrayMap {
  public:
    static ModularGrayMap eta(unsigned s) { return ModularGrayMap(GrayVariant::Eta, s); }
    static ModularGrayMap xi(unsigned s) { return ModularGrayMap(GrayVariant::Xi, s); }

    GrayVariant variant() const { return variant_; }
    unsigned s() const { return s_; }
    const RingSpec& domain() const { return domain_; }
    const RingSpec& codomain() const { return codomain_; }

    std::pair<std::uint64_t, std::uint64_t> apply(std::uint64_t u) const {
        if (u >= domain_.modulus()) {
            throw std::invalid_argument("ModularGrayMap: input " + std::to_string(u) + " outside Z_" +
                                        std::to_string(domain_.modulus()));
        }
        if (variant_ == GrayVariant::Eta) {
            const std::uint64_t q = domain_.modulus() / 4;  // 2^{s-2}
            if (u < q) return {u, u};
            if (u < 2 * q) return {u - q, u};
            if (u < 3 * q) return {u - q, u - q};
            return {u - 2 * q, u - 3 * q};
        }
        switch (s_) {
            case 2: return widen(detail::kXiS2[u]);
            case 3: return widen(detail::kXiS3[u]);
            case 4: return widen(detail::kXiS4[u]);
        }
        throw std::logic_error("ModularGrayMap: unreachable");
    }

    std::vector<std::pair<std::uint64_t, std::uint64_t>> table() const {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> t;
        t.reserve(domain_.modulus());
        for (std::uint64_t u = 0; u < domain_.modulus(); ++u) t.push_back(apply(u));
        return t;
    }

  private:
    ModularGrayMap(GrayVariant variant, unsigned s)
        : variant_(variant), s_(s), domain_(2, check_s(variant, s)), codomain_(2, s - 1) {}

    static unsigned check_s(GrayVariant variant, unsigned s) {
        if (s < 2) throw std::invalid_argument("ModularGrayMap: s must be at least 2");
        if (variant == GrayVariant::Eta) {
            if (s > 63) throw std::invalid_argument("ModularGrayMap: 2^s must fit in 64 bits");
        } else if (s > 4) {
            throw std::domain_error("xi is tabulated only for s in {2, 3, 4}; no rule beyond s = 4 is available");
        }
        return s;
    }

    static std::pair<std::uint64_t, std::uint64_t> widen(std::pair<std::uint8_t, std::uint8_t> e) {
        return {e.first, e.second};
    }

    GrayVariant variant_;
    unsigned s_;
    RingSpec domain_;
    RingSpec codomain_;
};

/// The generalized Gray map on Z_{p^s}: u with p-adic digits u_1..u_s goes to
/// the evaluations of u_s + u_1 y_1 + ... + u_{s-1} y_{s-1} over all points
/// (y_1, ..., y_{s-1}) in Z_p^{s-1}. The default point order enumerates the
/// points by index j in [0, p^{s-1}) with y_i = digit i-1 of j in base p,
/// so y_1 varies fastest.
class CarletMap {
  public:
    CarletMap(std::uint64_t p, unsigned s) : CarletMap(p, s, default_order(p, s)) {}

    CarletMap(std::uint64_t p, unsigned s, std::vector<std::uint64_t> point_order)
        : domain_(p, require_s(s)), codomain_(p, 1), points_(std::move(point_order)) {
        const std::uint64_t count = domain_.pow_p(s - 1);
        if (points_.size() != count) {
            throw std::invalid_argument("CarletMap: point order must list all p^{s-1} points exactly once");
        }
        std::vector<bool> seen(count, false);
        for (auto j : points_) {
            if (j >= count || seen[j]) {
                throw std::invalid_argument("CarletMap: point order must list all p^{s-1} points exactly once");
            }
            seen[j] = true;
        }
    }

    const RingSpec& domain() const { return domain_; }
    const RingSpec& codomain() const { return codomain_; }
    std::size_t image_length() const { return points_.size(); }

    RingVector apply(std::uint64_t u) const {
        if (u >= domain_.modulus()) {
            throw std::invalid_argument("CarletMap: input outside the domain ring");
        }
        const std::uint64_t p = domain_.p();
        const unsigned s = domain_.s();
        const auto digits = domain_.p_adic_digits(u);
        std::vector<std::uint64_t> out(points_.size());
        for (std::size_t k = 0; k < points_.size(); ++k) {
            std::uint64_t j = points_[k];
            std::uint64_t acc = digits[s - 1];
            for (unsigned i = 0; i + 1 < s; ++i) {
                acc += digits[i] * (j % p);
                j /= p;
            }
            out[k] = acc % p;
        }
        return RingVector(codomain_, std::move(out));
    }

  private:
    static unsigned require_s(unsigned s) {
        if (s < 2) throw std::invalid_argument("CarletMap: s must be at least 2");
        return s;
    }

    static std::vector<std::uint64_t> default_order(std::uint64_t p, unsigned s) {
        RingSpec probe(p, require_s(s));
        const std::uint64_t count = probe.pow_p(s - 1);
        std::vector<std::uint64_t> order(count);
        for (std::uint64_t j = 0; j < count; ++j) order[j] = j;
        return order;
    }

    RingSpec domain_;
    RingSpec codomain_;
    std::vector<std::uint64_t> points_;
};

/// Coordinatewise image of a word: each u_i becomes the pair map(u_i), and the
/// 2n halves are arranged per the layout.
inline RingVector extend(const ModularGrayMap& map, ExtensionLayout layout, const RingVector& word) {
    require_same_spec(map.domain(), word.spec(), "extend");
    const std::size_t n = word.size();
    std::vector<std::uint64_t> out(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        auto [a, b] = map.apply(word[i]);
        if (layout == ExtensionLayout::Blockwise) {
            out[2 * i] = a;
            out[2 * i + 1] = b;
        } else {
            out[i] = a;
            out[n + i] = b;
        }
    }
    return RingVector(map.codomain(), std::move(out));
}

inline RingMatrix map_generator_rows(const ModularGrayMap& map, ExtensionLayout layout, const LinearCode& code) {
    RingMatrix out(map.codomain(), 2 * code.length());
    for (std::size_t i = 0; i < code.generators().row_count(); ++i) {
        out.append_row(extend(map, layout, code.generators().row(i)));
    }
    return out;
}

/// Image of the full codeword set; the image has exactly |C| words since the
/// map is injective coordinatewise.
inline std::set<RingVector> map_codeword_set(const ModularGrayMap& map, ExtensionLayout layout,
                                             const LinearCode& code, std::uint64_t cap = kDefaultEnumerationCap) {
    std::set<RingVector> out;
    for_each_codeword(code, [&](const RingVector& w) { out.insert(extend(map, layout, w)); }, cap);
    return out;
}

/// Repeated staging of eta from Z_{2^s} down to Z_{2^{stop}}: the word picks
/// up blockwise pair expansions at every stage.
namespace detail {

inline RingVector stage_eta_down(unsigned s, std::uint64_t u, unsigned stop) {
    RingVector word(RingSpec(2, s), std::vector<std::uint64_t>{u});
    for (unsigned t = s; t > stop; --t) {
        word = extend(ModularGrayMap::eta(t), ExtensionLayout::Blockwise, word);
    }
    return word;
}

}  // namespace detail

/// The full product of modular maps: Z_{2^s} -> Z_2^{2^{s-1}}.
inline RingVector compose_modular(unsigned s, std::uint64_t u) {
    if (s < 2) throw std::invalid_argument("compose_modular: s must be at least 2");
    return detail::stage_eta_down(s, u, 1);
}

inline std::vector<RingVector> compose_modular_table(unsigned s) {
    std::vector<RingVector> t;
    const std::uint64_t m = std::uint64_t{1} << s;
    t.reserve(m);
    for (std::uint64_t u = 0; u < m; ++u) t.push_back(compose_modular(s, u));
    return t;
}

/// The partial product stopping at Z_4: Z_{2^s} -> Z_4^{2^{s-2}}, s >= 3.
inline RingVector vega_map(unsigned s, std::uint64_t u) {
    if (s < 3) throw std::invalid_argument("vega_map: s must be at least 3");
    return detail::stage_eta_down(s, u, 2);
}

inline std::vector<RingVector> vega_table(unsigned s) {
    std::vector<RingVector> t;
    const std::uint64_t m = std::uint64_t{1} << s;
    t.reserve(m);
    for (std::uint64_t u = 0; u < m; ++u) t.push_back(vega_map(s, u));
    return t;
}

/// True when the one-coordinate eta image {eta(u) : u in Z_{2^s}} equals the
/// span of {(1, 1), (0, 2^{s-2})} over Z_{2^{s-1}}, checked set against set.
inline bool image_is_rm2(unsigned s) {
    ModularGrayMap map = ModularGrayMap::eta(s);
    std::set<RingVector> image;
    for (std::uint64_t u = 0; u < map.domain().modulus(); ++u) {
        auto [a, b] = map.apply(u);
        image.insert(RingVector(map.codomain(), std::vector<std::uint64_t>{a, b}));
    }

    const std::uint64_t half = map.codomain().modulus() / 2;  // 2^{s-2}
    RingMatrix gen(map.codomain(), 2);
    gen.append_row(RingVector(map.codomain(), std::vector<std::uint64_t>{1, 1}));
    gen.append_row(RingVector(map.codomain(), std::vector<std::uint64_t>{0, half}));
    std::set<RingVector> rm;
    for_each_codeword(LinearCode(std::move(gen)), [&](const RingVector& w) { rm.insert(w); });

    return image == rm;
}

struct IsometryViolation {
    RingVector u;
    RingVector v;
    WeightValue source_distance;
    WeightValue image_distance;
};

struct IsometryReport {
    std::uint64_t pairs_checked = 0;
    std::vector<IsometryViolation> violations;
    bool isometric() const { return violations.empty(); }
};

/// Exhaustive distance-preservation check over all pairs of words in the
/// domain ring to the given length: source distance in `source_kind` against
/// image distance in `image_kind`.
inline IsometryReport verify_isometry(const ModularGrayMap& map, ExtensionLayout layout, WeightKind source_kind,
                                      WeightKind image_kind, std::size_t n = 1,
                                      std::uint64_t cap = kDefaultEnumerationCap) {
    if (n == 0) throw std::invalid_argument("verify_isometry: length must be positive");
    const RingSpec& R = map.domain();
    const std::uint64_t m = R.modulus();

    unsigned __int128 count = 1;
    for (std::size_t i = 0; i < n; ++i) count *= m;
    if (count * count > cap) {
        throw CapExceeded("isometry check needs " + std::to_string(static_cast<std::uint64_t>(count)) +
                          "^2 pairs, over cap " + std::to_string(cap));
    }
    const std::uint64_t words = static_cast<std::uint64_t>(count);

    std::vector<RingVector> domain_words;
    std::vector<RingVector> images;
    domain_words.reserve(words);
    images.reserve(words);
    for (std::uint64_t idx = 0; idx < words; ++idx) {
        std::uint64_t t = idx;
        std::vector<std::uint64_t> e(n);
        for (std::size_t i = 0; i < n; ++i) {
            e[i] = t % m;
            t /= m;
        }
        RingVector w(R, std::move(e));
        images.push_back(extend(map, layout, w));
        domain_words.push_back(std::move(w));
    }

    IsometryReport report;
    for (std::uint64_t i = 0; i < words; ++i) {
        for (std::uint64_t j = 0; j < words; ++j) {
            ++report.pairs_checked;
            WeightValue lhs = distance(domain_words[i], domain_words[j], source_kind);
            WeightValue rhs = distance(images[i], images[j], image_kind);
            if (!lhs.equals(rhs)) {
                report.violations.push_back(IsometryViolation{domain_words[i], domain_words[j], lhs, rhs});
            }
        }
    }
    return report;
}

enum class CompositionMatch { Exact, PermutationOnly, Unequal };

struct CompositionReport {
    CompositionMatch match = CompositionMatch::Unequal;
    std::uint64_t inputs_checked = 0;
    /// Filled for PermutationOnly: generalized-map column j equals staged
    /// column permutation[j] for every input.
    std::vector<std::size_t> permutation;
};

/// Compares the staged product of modular maps against the generalized map
/// at p = 2 for every input of Z_{2^s}. On any mismatch, falls back to
/// searching for a single global coordinate permutation relating the two
/// value tables.
inline CompositionReport verify_composition_theorem(unsigned s) {
    if (s < 2 || s > 12) throw std::invalid_argument("verify_composition_theorem: s must be in [2, 12]");
    const std::uint64_t m = std::uint64_t{1} << s;
    const std::size_t len = std::size_t{1} << (s - 1);
    CarletMap carlet(2, s);

    CompositionReport report;
    bool exact = true;
    for (std::uint64_t u = 0; u < m; ++u) {
        ++report.inputs_checked;
        if (compose_modular(s, u) != carlet.apply(u)) {
            exact = false;
            break;
        }
    }
    if (exact) {
        report.match = CompositionMatch::Exact;
        return report;
    }

    std::vector<std::vector<std::uint8_t>> staged_cols(len, std::vector<std::uint8_t>(m));
    std::vector<std::vector<std::uint8_t>> general_cols(len, std::vector<std::uint8_t>(m));
    for (std::uint64_t u = 0; u < m; ++u) {
        RingVector a = compose_modular(s, u);
        RingVector b = carlet.apply(u);
        for (std::size_t c = 0; c < len; ++c) {
            staged_cols[c][u] = static_cast<std::uint8_t>(a[c]);
            general_cols[c][u] = static_cast<std::uint8_t>(b[c]);
        }
    }
    report.inputs_checked = m;

    std::vector<std::size_t> sigma(len, SIZE_MAX);
    std::vector<bool> used(len, false);
    for (std::size_t j = 0; j < len; ++j) {
        for (std::size_t c = 0; c < len; ++c) {
            if (!used[c] && staged_cols[c] == general_cols[j]) {
                sigma[j] = c;
                used[c] = true;
                break;
            }
        }
        if (sigma[j] == SIZE_MAX) {
            report.match = CompositionMatch::Unequal;
            return report;
        }
    }
    report.match = CompositionMatch::PermutationOnly;
    report.permutation = std::move(sigma);
    return report;
}

/// Images under eta of a code's p-basis rows stay p-linearly independent in
/// the image ring; checks that for the given code and layout.
inline bool verify_mapped_basis_independence(const LinearCode& code, ExtensionLayout layout,
                                             std::uint64_t cap = kDefaultEnumerationCap) {
    const RingSpec& R = code.spec();
    if (R.p() != 2 || R.s() < 2) {
        throw std::invalid_argument("verify_mapped_basis_independence: code must live over Z_{2^s}, s >= 2");
    }
    ModularGrayMap map = ModularGrayMap::eta(R.s());
    PBasis basis = p_basis_matrix(code);
    std::vector<RingVector> images;
    images.reserve(basis.rows.row_count());
    for (std::size_t i = 0; i < basis.rows.row_count(); ++i) {
        images.push_back(extend(map, layout, basis.rows.row(i)));
    }
    return is_p_linearly_independent(images, map.codomain(), cap);
}

}  // namespace ringcode
