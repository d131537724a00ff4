#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "crossfield/corpus.hpp"
#include "crossfield/metrics.hpp"

namespace crossfield {

// SplitMix64: the fixture generator's only randomness source. Small and
// exactly specified, so seeds reproduce byte-identical corpora across
// platforms and reimplementations.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound), rejection sampled (unbiased). bound >= 1.
    std::uint64_t below(std::uint64_t bound);

    // Uniform in [0, 1), 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  private:
    std::uint64_t state_;
};

struct CountRange {
    std::int64_t lo = 1;
    std::int64_t hi = 1;
};

struct SynthParams {
    std::uint64_t seed = 1;
    std::int64_t disciplines = 3;
    std::int64_t fields_per_discipline = 4;
    CountRange researchers_per_field{5, 30};
    std::int64_t publications = 200;
    CountRange authors_per_pub{1, 5};
    double p_cross_field = 0.4;
    // Conditional on a publication being cross-field: probability the partner
    // field sits in another discipline.
    double p_cross_discipline = 0.3;
    // Strength of the planted small-field collaboration boost: a field's
    // cross-field propensity is p_cross_field * (h_min / h_field)^bias,
    // capped at 1. Zero plants no headcount effect.
    double inverse_size_bias = 0.0;
};

// Ground truth the generator knows about what it planted.
struct SynthTruth {
    std::vector<std::string> field_codes;
    std::vector<std::int64_t> headcounts;
    std::vector<double> cross_field_prob;  // per field, after the size bias
};

// Serialized corpus in the ingestion file formats, so synthetic data always
// flows through the real loading path.
struct SynthFiles {
    std::string scheme_csv;
    std::string researchers_csv;
    std::string publications_csv;
    std::string authorships_csv;
    SynthTruth truth;
};

struct SynthResult {
    Corpus corpus;
    SynthTruth truth;
};

// Deterministic: identical params (seed included) produce byte-identical
// files. Throws DomainError on infeasible params (empty ranges, probability
// outside [0,1], author range exceeding the researcher pool).
SynthFiles generate_files(const SynthParams& params);

// generate_files + the real ingestion path.
SynthResult generate(const SynthParams& params);

// --- brute-force oracles -------------------------------------------------
// Written against the public string API only, independently of the metrics
// kernel's interned-index machinery, so agreement is a genuine cross-check.
// Guarded to corpora small enough for quadratic enumeration.

inline constexpr std::size_t kOracleMaxPublications = 10'000;

PairCountMap oracle_pair_counts(const Corpus& corpus, PairLevel level = PairLevel::field);

Ratio oracle_degree(const Corpus& corpus, std::string_view field);

FieldProfile oracle_profile(const Corpus& corpus, std::string_view field,
                            double partner_threshold = 0.10, double omit_below = 0.0);

}  // namespace crossfield
