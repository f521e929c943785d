#include "uan/chaos.hpp"

#include <cmath>
#include <string>

namespace uan {

namespace {

constexpr int kMaxSpreadingLength = 1024;

// Validation scan horizon per spec'd policy: burn-in plus 10^4 orbit
// steps per chip position.
std::int64_t scan_horizon(const ChaoticCodeSpec& spec) {
    return static_cast<std::int64_t>(spec.burn_in) +
           static_cast<std::int64_t>(spec.spreading_length) * 10000;
}

void check_ranges(const ChaoticCodeSpec& spec) {
    if (!(spec.seed > 0.0 && spec.seed < 1.0))
        throw std::invalid_argument("chaos: seed must lie strictly inside (0,1)");
    if (spec.spreading_length < 1 || spec.spreading_length > kMaxSpreadingLength)
        throw std::invalid_argument("chaos: spreading length out of range [1,1024]");
    if (spec.burn_in < 0)
        throw std::invalid_argument("chaos: burn_in must be non-negative");
    if (spec.map_family == MapFamily::Logistic) {
        if (!(spec.bifurcation > 0.0 && spec.bifurcation <= 4.0))
            throw std::invalid_argument("chaos: logistic bifurcation must be in (0,4]");
        // Fixed points of r*x*(1-x): 0 and (r-1)/r.
        const double fp = (spec.bifurcation - 1.0) / spec.bifurcation;
        if (spec.seed == fp)
            throw std::invalid_argument("chaos: seed is a fixed point of the logistic map");
    }
}

}  // namespace

double map_step(double x, const ChaoticCodeSpec& spec) {
    if (!(x > 0.0 && x < 1.0))
        throw std::domain_error("chaos: map state must lie in (0,1)");
    double next = 0.0;
    switch (spec.map_family) {
        case MapFamily::Logistic:
            next = spec.bifurcation * x * (1.0 - x);
            break;
        case MapFamily::Bernoulli:
            next = 2.0 * x;
            if (next >= 1.0) next -= 1.0;
            break;
    }
    if (!(next > 0.0 && next < 1.0))
        throw DegenerateOrbitError("chaos: orbit left (0,1) at state " + std::to_string(x));
    return next;
}

ChaosOrbit::ChaosOrbit(const ChaoticCodeSpec& spec) : spec_(spec) {
    check_ranges(spec_);
    restart();
}

void ChaosOrbit::restart() {
    index_ = 0;
    if (spec_.map_family == MapFamily::Bernoulli) {
        const double scaled = spec_.seed * static_cast<double>(bernoulli_modulus());
        num_ = static_cast<std::uint64_t>(std::llround(scaled));
        if (num_ == 0) num_ = 1;
        if (num_ >= bernoulli_modulus()) num_ = bernoulli_modulus() - 1;
    } else {
        x_ = spec_.seed;
    }
}

double ChaosOrbit::step() {
    if (spec_.map_family == MapFamily::Bernoulli) {
        // Exact doubling mod an odd modulus: frac(2 * num/D) = (2*num mod D)/D.
        num_ *= 2;
        if (num_ >= bernoulli_modulus()) num_ -= bernoulli_modulus();
        if (num_ == 0)
            throw DegenerateOrbitError("chaos: bernoulli orbit collapsed to 0");
        ++index_;
        return state();
    }
    x_ = map_step(x_, spec_);
    ++index_;
    return x_;
}

void ChaosOrbit::seek(std::int64_t index) {
    if (index < 0) throw std::invalid_argument("chaos: negative orbit index");
    if (index < index_) restart();
    while (index_ < index) step();
}

double ChaosOrbit::state() const {
    if (spec_.map_family == MapFamily::Bernoulli)
        return static_cast<double>(num_) / static_cast<double>(bernoulli_modulus());
    return x_;
}

int ChaosOrbit::chip() const {
    if (spec_.map_family == MapFamily::Bernoulli)
        return 2 * num_ >= bernoulli_modulus() ? +1 : -1;
    return x_ >= 0.5 ? +1 : -1;
}

void validate_spec(const ChaoticCodeSpec& spec) {
    check_ranges(spec);
    ChaosOrbit orbit(spec);
    const std::int64_t horizon = scan_horizon(spec);
    for (std::int64_t i = 0; i < horizon; ++i) orbit.step();  // throws on collapse
}

CodeGenerator::CodeGenerator(const ChaoticCodeSpec& spec) : spec_(spec), orbit_(spec) {
    validate_spec(spec_);
}

ChipSequence CodeGenerator::code_for_bit(std::int64_t bit_index) {
    if (bit_index < 0) throw std::invalid_argument("chaos: bit_index must be >= 0");
    const int sl = spec_.spreading_length;
    ChipSequence seq;
    seq.bit_index = bit_index;
    seq.chips.resize(static_cast<size_t>(sl));
    orbit_.seek(spec_.burn_in + bit_index * sl);
    for (int i = 0; i < sl; ++i) {
        orbit_.step();
        seq.chips[static_cast<size_t>(i)] = static_cast<int8_t>(orbit_.chip());
    }
    return seq;
}

ChipSequence generate_code(const ChaoticCodeSpec& spec, std::int64_t bit_index) {
    ChaosOrbit orbit(spec);  // range checks only
    if (bit_index < 0) throw std::invalid_argument("chaos: bit_index must be >= 0");
    const int sl = spec.spreading_length;
    ChipSequence seq;
    seq.bit_index = bit_index;
    seq.chips.resize(static_cast<size_t>(sl));
    orbit.seek(spec.burn_in + bit_index * sl);
    for (int i = 0; i < sl; ++i) {
        orbit.step();
        seq.chips[static_cast<size_t>(i)] = static_cast<int8_t>(orbit.chip());
    }
    return seq;
}

double correlation(const ChipSequence& a, const ChipSequence& b, int lag) {
    if (a.chips.size() != b.chips.size())
        throw std::invalid_argument("chaos: correlation requires equal lengths");
    const int sl = static_cast<int>(a.chips.size());
    if (lag <= -sl || lag >= sl)
        throw std::invalid_argument("chaos: |lag| must be < SL");
    long sum = 0;
    for (int t = 0; t < sl; ++t) {
        const int u = t + lag;
        if (u < 0 || u >= sl) continue;
        sum += static_cast<int>(a.chips[static_cast<size_t>(t)]) *
               static_cast<int>(b.chips[static_cast<size_t>(u)]);
    }
    return static_cast<double>(sum) / static_cast<double>(sl);
}

}  // namespace uan
