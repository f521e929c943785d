// Chaotic spreading-code generation for DSSS-CDMA.
//
// A transmitter and its intended receivers share a ChaoticCodeSpec
// (map family + seed + parameters). Both sides walk the same chaotic
// orbit and quantize it into per-bit chip sequences, so the code acts
// as a shared secret: without the seed the despreader output is noise.
//
// Chip codes are consecutive, non-overlapping segments of one orbit:
// bit b uses orbit states burn_in + b*SL + 1 .. burn_in + (b+1)*SL,
// quantized at 0.5 into {-1,+1}.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace uan {

enum class MapFamily { Logistic, Bernoulli };

// Orbit collapsed onto a fixed point / exact 0 or 1; the seed is unusable.
class DegenerateOrbitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ChaoticCodeSpec {
    MapFamily map_family = MapFamily::Logistic;
    double seed = 0.37;          // strictly inside (0,1)
    double bifurcation = 3.9999; // logistic parameter r, ignored for Bernoulli
    int spreading_length = 20;   // SL, chips per data bit
    int burn_in = 1000;          // discarded initial iterations

    bool operator==(const ChaoticCodeSpec&) const = default;
};

struct ChipSequence {
    std::vector<int8_t> chips;   // each element is -1 or +1, length == SL
    std::int64_t bit_index = 0;

    bool operator==(const ChipSequence&) const = default;
};

// One iteration of the configured map. Requires x in (0,1); throws
// DegenerateOrbitError if the next state leaves the open interval.
double map_step(double x, const ChaoticCodeSpec& spec);

// Full spec validation: range checks plus an orbit scan of
// burn_in + SL*10^4 steps that rejects seeds whose orbit degenerates
// (fixed points, exact 0/1 states). Throws std::invalid_argument or
// DegenerateOrbitError. Intended for configuration load time; the
// generation path itself only performs the cheap range checks.
void validate_spec(const ChaoticCodeSpec& spec);

// Sequential walker over one orbit. For the Bernoulli map the state is
// kept in exact fixed-point form (numerator over an odd modulus) so the
// doubling map never collapses to 0 the way binary floating point does;
// see bernoulli_modulus() below.
class ChaosOrbit {
public:
    explicit ChaosOrbit(const ChaoticCodeSpec& spec);

    // Advance one iteration; returns the new state as a double.
    double step();

    // Advance to absolute orbit index (number of iterations since the
    // seed). Restarts from the seed if the target lies behind.
    void seek(std::int64_t index);

    std::int64_t position() const { return index_; }

    double state() const;

    // Chip decision for the current state: +1 if state >= 0.5 else -1.
    // Exact (integer) comparison for Bernoulli.
    int chip() const;

    // Modulus of the exact Bernoulli representation (3^39, odd, so the
    // doubling map is a permutation of nonzero residues).
    static constexpr std::uint64_t bernoulli_modulus() { return 4052555153018976267ULL; }

private:
    void restart();

    ChaoticCodeSpec spec_;
    double x_ = 0.0;           // logistic state
    std::uint64_t num_ = 0;    // bernoulli numerator, state = num_/modulus
    std::int64_t index_ = 0;
};

// Stateful generator: validates the spec once, then serves per-bit chip
// codes. Sequential bit indices cost O(SL) each; random access restarts
// the orbit when seeking backwards.
class CodeGenerator {
public:
    explicit CodeGenerator(const ChaoticCodeSpec& spec);

    ChipSequence code_for_bit(std::int64_t bit_index);

    const ChaoticCodeSpec& spec() const { return spec_; }

private:
    ChaoticCodeSpec spec_;
    ChaosOrbit orbit_;
};

// Pure one-shot form: deterministic function of (spec, bit_index).
// Performs cheap validation only; use validate_spec() at config load.
ChipSequence generate_code(const ChaoticCodeSpec& spec, std::int64_t bit_index);

// Normalized cross-correlation (1/SL) * sum a[t]*b[t+lag] over the
// overlapping range. Requires equal lengths and |lag| < SL.
double correlation(const ChipSequence& a, const ChipSequence& b, int lag);

}  // namespace uan
