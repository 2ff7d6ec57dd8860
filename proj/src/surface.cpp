#include "ruled/surface.hpp"

#include <sstream>

namespace ruled {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::ConfigMismatch: return "ConfigMismatch";
        case ErrorCode::Overflow: return "Overflow";
        case ErrorCode::ParityViolation: return "ParityViolation";
        case ErrorCode::UnsupportedSurface: return "UnsupportedSurface";
        case ErrorCode::InvalidPolarization: return "InvalidPolarization";
        case ErrorCode::SearchBoundsExceeded: return "SearchBoundsExceeded";
        case ErrorCode::NotApplicable: return "NotApplicable";
        case ErrorCode::AssumptionViolated: return "AssumptionViolated";
        case ErrorCode::BoxTooLarge: return "BoxTooLarge";
        case ErrorCode::InvalidInput: return "InvalidInput";
    }
    return "Unknown";
}

void SurfaceConfig::validate() const {
    if (genus < 0) throw Error(ErrorCode::InvalidInput, "genus must be >= 0");
    if (num_points < 0) throw Error(ErrorCode::InvalidInput, "number of points must be >= 0");
    if (genus == 0 && invariant_e < 0)
        throw Error(ErrorCode::InvalidInput, "a ruled surface over a line has e >= 0");
}

DivisorClass::DivisorClass(SurfaceConfig config, Int a, Int b, std::vector<Int> exc)
    : config_(config), a_(a), b_(b), exc_(std::move(exc)) {
    config_.validate();
    if (static_cast<Int>(exc_.size()) != config_.num_points) {
        std::ostringstream os;
        os << "divisor has " << exc_.size() << " exceptional coefficients, surface has "
           << config_.num_points << " points";
        throw Error(ErrorCode::ConfigMismatch, os.str());
    }
}

DivisorClass DivisorClass::zero(const SurfaceConfig& config) {
    return {config, 0, 0, std::vector<Int>(static_cast<std::size_t>(config.num_points), 0)};
}

DivisorClass DivisorClass::minimal_section(const SurfaceConfig& config) {
    auto d = zero(config);
    d.a_ = 1;
    return d;
}

DivisorClass DivisorClass::fiber(const SurfaceConfig& config) {
    auto d = zero(config);
    d.b_ = 1;
    return d;
}

DivisorClass DivisorClass::exceptional(const SurfaceConfig& config, std::size_t i) {
    auto d = zero(config);
    if (i < 1 || i > d.exc_.size())
        throw Error(ErrorCode::InvalidInput, "exceptional index out of range");
    d.exc_[i - 1] = 1;
    return d;
}

DivisorClass DivisorClass::strict_fiber(const SurfaceConfig& config, std::size_t i) {
    return fiber(config) - exceptional(config, i);
}

bool DivisorClass::is_zero() const {
    if (a_ != 0 || b_ != 0) return false;
    for (Int c : exc_)
        if (c != 0) return false;
    return true;
}

void require_same_config(const DivisorClass& x, const DivisorClass& y) {
    if (!(x.config() == y.config()))
        throw Error(ErrorCode::ConfigMismatch, "divisor classes live on different surfaces");
}

DivisorClass DivisorClass::operator+(const DivisorClass& other) const {
    DivisorClass r = *this;
    r += other;
    return r;
}

DivisorClass DivisorClass::operator-(const DivisorClass& other) const {
    DivisorClass r = *this;
    r -= other;
    return r;
}

DivisorClass DivisorClass::operator-() const { return zero(config_) - *this; }

DivisorClass& DivisorClass::operator+=(const DivisorClass& other) {
    require_same_config(*this, other);
    a_ = checked::add(a_, other.a_);
    b_ = checked::add(b_, other.b_);
    for (std::size_t i = 0; i < exc_.size(); ++i) exc_[i] = checked::add(exc_[i], other.exc_[i]);
    return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& other) {
    require_same_config(*this, other);
    a_ = checked::sub(a_, other.a_);
    b_ = checked::sub(b_, other.b_);
    for (std::size_t i = 0; i < exc_.size(); ++i) exc_[i] = checked::sub(exc_[i], other.exc_[i]);
    return *this;
}

DivisorClass operator*(Int s, const DivisorClass& d) {
    DivisorClass r = d;
    r.a_ = checked::mul(s, d.a_);
    r.b_ = checked::mul(s, d.b_);
    for (auto& c : r.exc_) c = checked::mul(s, c);
    return r;
}

std::strong_ordering DivisorClass::operator<=>(const DivisorClass& other) const {
    if (auto c = a_ <=> other.a_; c != 0) return c;
    if (auto c = b_ <=> other.b_; c != 0) return c;
    return exc_ <=> other.exc_;
}

std::string DivisorClass::to_string() const {
    std::ostringstream os;
    os << a_ << "C0";
    os << (b_ < 0 ? " - " : " + ") << (b_ < 0 ? -b_ : b_) << "F";
    for (std::size_t i = 0; i < exc_.size(); ++i)
        os << (exc_[i] < 0 ? " - " : " + ") << (exc_[i] < 0 ? -exc_[i] : exc_[i]) << "E" << i + 1;
    return os.str();
}

Int intersect(const DivisorClass& x, const DivisorClass& y) {
    require_same_config(x, y);
    using namespace checked;
    const Int e = x.config().invariant_e;
    // -e*a*a' + a*b' + a'*b - sum c_i c'_i
    Int r = neg(mul(e, mul(x.a(), y.a())));
    r = add(r, mul(x.a(), y.b()));
    r = add(r, mul(y.a(), x.b()));
    for (std::size_t i = 0; i < x.exc().size(); ++i) r = sub(r, mul(x.exc()[i], y.exc()[i]));
    return r;
}

DivisorClass canonical_class(const SurfaceConfig& config) {
    config.validate();
    using namespace checked;
    Int b = sub(sub(mul(2, config.genus), 2), config.invariant_e);
    return {config, -2, b, std::vector<Int>(static_cast<std::size_t>(config.num_points), 1)};
}

Int euler_char(const DivisorClass& d) {
    const auto k = canonical_class(d.config());
    const Int twice = intersect(d, d - k);
    if (twice % 2 != 0)
        throw Error(ErrorCode::ParityViolation, "D.(D-K) is odd: " + d.to_string());
    return checked::add(checked::sub(1, d.config().genus), twice / 2);
}

bool congruent_mod2(const DivisorClass& x, const DivisorClass& y) {
    require_same_config(x, y);
    auto odd = [](Int u, Int v) { return ((u - v) & 1) != 0; };
    if (odd(x.a(), y.a()) || odd(x.b(), y.b())) return false;
    for (std::size_t i = 0; i < x.exc().size(); ++i)
        if (odd(x.exc()[i], y.exc()[i])) return false;
    return true;
}

std::string_view to_string(EffectivityVerdict v) {
    switch (v) {
        case EffectivityVerdict::Effective: return "effective";
        case EffectivityVerdict::NotEffective: return "not_effective";
        case EffectivityVerdict::Unknown: return "unknown";
    }
    return "unknown";
}

Effectivity effectivity(const DivisorClass& d) {
    Effectivity out;
    const auto& cfg = d.config();

    // F is nef.
    if (d.a() < 0) {
        out.verdict = EffectivityVerdict::NotEffective;
        out.violated = "D.F = " + std::to_string(d.a()) + " < 0";
        return out;
    }

    // The pushforward aC0 + bF to the ruled surface is effective whenever D is.
    if (cfg.invariant_e >= 0 && d.b() < 0) {
        out.verdict = EffectivityVerdict::NotEffective;
        out.violated = "pushforward F-coefficient b = " + std::to_string(d.b()) + " < 0";
        return out;
    }
    if (cfg.invariant_e < 0 && checked::mul(2, d.b()) < checked::mul(d.a(), cfg.invariant_e)) {
        out.verdict = EffectivityVerdict::NotEffective;
        out.violated = "pushforward violates 2b >= a*e (e < 0)";
        return out;
    }

    // Cone spanned by C0, F, E_i, F - E_i: each negative c_i needs -c_i copies of F - E_i.
    Int needed = 0;
    for (Int c : d.exc())
        if (c < 0) needed = checked::sub(needed, c);
    if (d.b() >= needed) {
        out.verdict = EffectivityVerdict::Effective;
        if (d.a() > 0) out.decomposition["C0"] = d.a();
        if (d.b() - needed > 0) out.decomposition["F"] = d.b() - needed;
        for (std::size_t i = 0; i < d.exc().size(); ++i) {
            const Int c = d.exc()[i];
            const std::string idx = std::to_string(i + 1);
            if (c > 0) out.decomposition["E" + idx] = c;
            if (c < 0) out.decomposition["F-E" + idx] = -c;
        }
        return out;
    }

    out.verdict = EffectivityVerdict::Unknown;
    return out;
}

Int h0_hirzebruch(const DivisorClass& d) {
    const auto& cfg = d.config();
    if (cfg.genus != 0 || cfg.num_points != 0)
        throw Error(ErrorCode::UnsupportedSurface,
                    "exact section counts need a Hirzebruch surface (g = 0, m = 0)");
    if (d.a() < 0) return 0;
    // pi_* O(aC0 + bF) = sum_{k=0..a} O(b - k e) on the base line.
    Int total = 0;
    for (Int k = 0; k <= d.a(); ++k) {
        const Int deg = checked::sub(d.b(), checked::mul(k, cfg.invariant_e));
        if (deg >= 0) total = checked::add(total, checked::add(deg, 1));
    }
    return total;
}

}  // namespace ruled
