#pragma once

// Finite Artinian commutative rings as ordered products of local factors.
//
// A local factor is summarised by t, its number of proper ideals (zero ideal
// included). Adjacency in the regular graph of ideals depends only on whether
// a component is zero, the whole factor, or something in between, so the
// finer lattice structure inside a factor is not modelled.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "regideal/errors.hpp"

namespace regideal {

struct PrimePower {
    std::uint64_t prime = 0;
    std::uint32_t exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct LocalFactor {
    std::uint32_t t = 1;
    std::string label;
    std::optional<PrimePower> prime_power;

    bool is_field() const noexcept { return t == 1; }
    std::uint32_t nontrivial_count() const noexcept { return t - 1; }

    friend bool operator==(const LocalFactor& a, const LocalFactor& b) { return a.t == b.t; }
};

namespace detail {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d <= n / d; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
        return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

} // namespace detail

class RingSpec {
public:
    RingSpec() = default;

    explicit RingSpec(std::vector<LocalFactor> factors) : factors_(std::move(factors)) {
        if (factors_.empty()) throw SpecError("ring spec needs at least one local factor");
        for (const auto& f : factors_) {
            if (f.t < 1) throw SpecError("local factor must have t >= 1");
            if (f.prime_power) {
                if (!detail::is_prime(f.prime_power->prime) || f.prime_power->exponent < 1 ||
                    f.prime_power->exponent != f.t)
                    throw SpecError("prime-power factor must satisfy t = k with p prime");
            }
        }
    }

    static RingSpec from_t(const std::vector<std::uint32_t>& ts) {
        std::vector<LocalFactor> fs;
        fs.reserve(ts.size());
        for (auto t : ts) fs.push_back(LocalFactor{t, {}, std::nullopt});
        return RingSpec(std::move(fs));
    }

    /// Parses "t1,t2,...,tk" (positive integers, comma separated).
    static RingSpec from_profile(std::string_view text) {
        std::vector<std::uint32_t> ts;
        std::size_t pos = 0;
        if (text.empty()) throw SpecError("empty profile");
        while (pos <= text.size()) {
            auto comma = text.find(',', pos);
            auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                          : comma - pos);
            while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
            while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
            std::uint32_t value = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() || value == 0)
                throw SpecError("bad profile entry '" + std::string(token) +
                                "' (expected positive integers like 2,2,1)");
            ts.push_back(value);
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
        return from_t(ts);
    }

    std::size_t size() const noexcept { return factors_.size(); }
    const std::vector<LocalFactor>& factors() const noexcept { return factors_; }
    const LocalFactor& factor(std::size_t i) const { return factors_.at(i); }
    std::uint32_t t(std::size_t i) const { return factors_.at(i).t; }

    std::vector<std::uint32_t> t_vector() const {
        std::vector<std::uint32_t> ts;
        for (const auto& f : factors_) ts.push_back(f.t);
        return ts;
    }

    std::size_t field_count() const noexcept {
        return static_cast<std::size_t>(
            std::count_if(factors_.begin(), factors_.end(), [](const auto& f) { return f.is_field(); }));
    }

    bool is_reduced() const noexcept { return field_count() == size(); }
    bool is_local() const noexcept { return size() == 1; }

    /// (prod (t_i + 1)) - 2, saturating on overflow.
    std::uint64_t vertex_count() const noexcept {
        std::uint64_t p = 1;
        for (const auto& f : factors_) p = detail::saturating_mul(p, std::uint64_t{f.t} + 1);
        return p == std::numeric_limits<std::uint64_t>::max() ? p : p - 2;
    }

    /// t-vector sorted non-increasingly; only used for the T_i / s_i statistics.
    std::vector<std::uint32_t> sorted_t() const {
        auto ts = t_vector();
        std::sort(ts.begin(), ts.end(), std::greater<>{});
        return ts;
    }

    /// s_i = number of factors sharing the i-th largest t (index into sorted_t()).
    std::size_t multiplicity_of_sorted(std::size_t i) const {
        auto ts = sorted_t();
        return static_cast<std::size_t>(std::count(ts.begin(), ts.end(), ts.at(i)));
    }

    std::string profile_string() const {
        std::string s;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(factors_[i].t);
        }
        return s;
    }

    friend bool operator==(const RingSpec& a, const RingSpec& b) { return a.factors_ == b.factors_; }

private:
    std::vector<LocalFactor> factors_;
};

/// Component of an ideal inside one local factor.
struct IdealClass {
    enum class Kind : std::uint8_t { Zero, Nontrivial, Full };

    Kind kind = Kind::Zero;
    std::uint32_t index = 0; // 1..t-1 for Nontrivial; 1 is the maximal ideal

    static constexpr IdealClass zero() noexcept { return {Kind::Zero, 0}; }
    static constexpr IdealClass full() noexcept { return {Kind::Full, 0}; }
    static constexpr IdealClass nontrivial(std::uint32_t j) noexcept { return {Kind::Nontrivial, j}; }

    bool is_zero() const noexcept { return kind == Kind::Zero; }
    bool is_full() const noexcept { return kind == Kind::Full; }
    bool is_nontrivial() const noexcept { return kind == Kind::Nontrivial; }

    /// Position in the per-factor order Zero < Nontrivial(1) < ... < Nontrivial(t-1) < Full.
    std::uint32_t level(std::uint32_t t) const noexcept {
        switch (kind) {
        case Kind::Zero: return 0;
        case Kind::Nontrivial: return index;
        case Kind::Full: return t;
        }
        return 0;
    }

    static IdealClass from_level(std::uint32_t level, std::uint32_t t) {
        if (level == 0) return zero();
        if (level == t) return full();
        if (level > t) throw SpecError("ideal level out of range for factor");
        return nontrivial(level);
    }

    std::string to_string() const {
        switch (kind) {
        case Kind::Zero: return "0";
        case Kind::Full: return "R";
        case Kind::Nontrivial: return "I" + std::to_string(index);
        }
        return "?";
    }

    friend bool operator==(const IdealClass&, const IdealClass&) = default;
};

/// Index sets of an ideal: where it is the full factor, zero, or nontrivial.
/// Indices are 0-based factor positions, ascending.
struct IndexPartition {
    std::vector<std::size_t> full;       // Δ_I
    std::vector<std::size_t> zero;       // Υ_I
    std::vector<std::size_t> nontrivial; // Λ_I
};

class IdealVector {
public:
    IdealVector() = default;
    explicit IdealVector(std::vector<IdealClass> classes) : classes_(std::move(classes)) {}

    std::size_t size() const noexcept { return classes_.size(); }
    const IdealClass& operator[](std::size_t k) const { return classes_[k]; }
    const std::vector<IdealClass>& classes() const noexcept { return classes_; }

    bool all_zero() const {
        return std::all_of(classes_.begin(), classes_.end(), [](auto c) { return c.is_zero(); });
    }
    bool all_full() const {
        return std::all_of(classes_.begin(), classes_.end(), [](auto c) { return c.is_full(); });
    }

    /// Throws SpecError unless this is a nontrivial ideal of `spec`.
    void validate(const RingSpec& spec) const {
        if (classes_.size() != spec.size()) throw SpecError("ideal vector length does not match ring spec");
        for (std::size_t k = 0; k < classes_.size(); ++k) {
            const auto& c = classes_[k];
            if (c.is_nontrivial() && (c.index < 1 || c.index >= spec.t(k)))
                throw SpecError("nontrivial class index out of range for factor " + std::to_string(k + 1));
        }
        if (all_zero() || all_full()) throw SpecError("trivial ideal is not a vertex");
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t k = 0; k < classes_.size(); ++k) {
            if (k) s += ',';
            s += classes_[k].to_string();
        }
        return s + ")";
    }

    friend bool operator==(const IdealVector&, const IdealVector&) = default;

private:
    std::vector<IdealClass> classes_;
};

inline IndexPartition classify(const IdealVector& ideal) {
    IndexPartition p;
    for (std::size_t k = 0; k < ideal.size(); ++k) {
        switch (ideal[k].kind) {
        case IdealClass::Kind::Full: p.full.push_back(k); break;
        case IdealClass::Kind::Zero: p.zero.push_back(k); break;
        case IdealClass::Kind::Nontrivial: p.nontrivial.push_back(k); break;
        }
    }
    return p;
}

/// Position of `ideal` in enumerate_ideals(spec): the mixed-radix value of its
/// level tuple (first factor least significant) minus one.
inline std::size_t ideal_index(const RingSpec& spec, const IdealVector& ideal) {
    std::uint64_t value = 0, radix = 1;
    for (std::size_t k = 0; k < spec.size(); ++k) {
        value += radix * ideal[k].level(spec.t(k));
        radix *= std::uint64_t{spec.t(k)} + 1;
    }
    return static_cast<std::size_t>(value - 1);
}

/// All nontrivial ideals in mixed-radix order, first factor least significant,
/// so for a product of fields the order matches subset bitmasks.
inline std::vector<IdealVector> enumerate_ideals(const RingSpec& spec) {
    std::vector<IdealVector> out;
    const auto count = spec.vertex_count();
    if (count == 0) return out;
    out.reserve(static_cast<std::size_t>(count));
    std::vector<std::uint32_t> levels(spec.size(), 0);
    auto advance = [&] {
        for (std::size_t k = 0; k < spec.size(); ++k) {
            if (levels[k] < spec.t(k)) {
                ++levels[k];
                return;
            }
            levels[k] = 0;
        }
    };
    advance(); // skip the zero ideal
    for (std::uint64_t i = 0; i < count; ++i, advance()) {
        std::vector<IdealClass> cls;
        cls.reserve(spec.size());
        for (std::size_t k = 0; k < spec.size(); ++k) cls.push_back(IdealClass::from_level(levels[k], spec.t(k)));
        out.emplace_back(std::move(cls));
    }
    return out;
}

/// The ring Z_n realised through its CRT decomposition into Z_{p^k} factors.
/// Nontrivial ideals are (d) for divisors 1 < d < n.
class ZnContext {
public:
    std::uint64_t modulus() const noexcept { return n_; }
    const std::vector<PrimePower>& factorization() const noexcept { return factorization_; }
    const RingSpec& spec() const noexcept { return spec_; }

    /// Nontrivial divisors ascending.
    const std::vector<std::uint64_t>& divisors() const noexcept { return divisors_; }

    bool is_nontrivial_divisor(std::uint64_t d) const noexcept {
        return d > 1 && d < n_ && n_ % d == 0;
    }

    /// Image of the ideal (d) under the CRT decomposition.
    IdealVector ideal_of(std::uint64_t d) const {
        if (!is_nontrivial_divisor(d))
            throw SpecError(std::to_string(d) + " is not a nontrivial divisor of " + std::to_string(n_));
        std::vector<IdealClass> cls;
        for (const auto& [p, k] : factorization_) {
            std::uint32_t e = 0;
            for (auto x = d; x % p == 0 && e < k; x /= p) ++e;
            if (e == 0) cls.push_back(IdealClass::full());
            else if (e == k) cls.push_back(IdealClass::zero());
            else cls.push_back(IdealClass::nontrivial(e));
        }
        return IdealVector(std::move(cls));
    }

    std::uint64_t divisor_of(const IdealVector& ideal) const {
        ideal.validate(spec_);
        std::uint64_t d = 1;
        for (std::size_t i = 0; i < factorization_.size(); ++i) {
            const auto& [p, k] = factorization_[i];
            std::uint32_t e = ideal[i].is_full() ? 0 : ideal[i].is_zero() ? k : ideal[i].index;
            for (std::uint32_t j = 0; j < e; ++j) d *= p;
        }
        return d;
    }

    friend ZnContext factor_modulus(std::uint64_t n);

private:
    std::uint64_t n_ = 0;
    std::vector<PrimePower> factorization_;
    RingSpec spec_;
    std::vector<std::uint64_t> divisors_;
};

inline ZnContext factor_modulus(std::uint64_t n) {
    if (n < 2) throw DomainRingError("Z_" + std::to_string(n) + " is not a non-domain ring");
    if (detail::is_prime(n)) throw DomainRingError("Z_" + std::to_string(n) + " is a field");

    ZnContext ctx;
    ctx.n_ = n;
    auto rest = n;
    for (std::uint64_t p = 2; p <= rest / p; ++p) {
        if (rest % p) continue;
        std::uint32_t k = 0;
        while (rest % p == 0) {
            rest /= p;
            ++k;
        }
        ctx.factorization_.push_back({p, k});
    }
    if (rest > 1) ctx.factorization_.push_back({rest, 1});

    std::vector<LocalFactor> fs;
    for (const auto& pk : ctx.factorization_) {
        auto label = "Z_" + std::to_string(pk.prime) + (pk.exponent > 1 ? "^" + std::to_string(pk.exponent) : "");
        fs.push_back(LocalFactor{pk.exponent, std::move(label), pk});
    }
    ctx.spec_ = RingSpec(std::move(fs));

    for (std::uint64_t d = 2; d <= n / d; ++d) {
        if (n % d) continue;
        ctx.divisors_.push_back(d);
        if (d != n / d) ctx.divisors_.push_back(n / d);
    }
    std::sort(ctx.divisors_.begin(), ctx.divisors_.end());
    return ctx;
}

/// Rejects the single-field spec, the only RingSpec describing a domain.
inline void require_non_domain(const RingSpec& spec) {
    if (spec.vertex_count() == 0) throw DomainRingError("profile " + spec.profile_string() + " is a field");
}

} // namespace regideal
