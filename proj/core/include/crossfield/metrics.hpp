#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "crossfield/corpus.hpp"
#include "crossfield/ratio.hpp"

namespace crossfield {

// Unordered pair of distinct codes, stored lexicographically so symmetric
// counts have one canonical key. Both directed views are derivable.
struct PairKey {
    std::string first;
    std::string second;

    PairKey(std::string a, std::string b);

    friend bool operator==(const PairKey& x, const PairKey& y) {
        return x.first == y.first && x.second == y.second;
    }
    friend bool operator<(const PairKey& x, const PairKey& y) {
        if (x.first != y.first) return x.first < y.first;
        return x.second < y.second;
    }
};

// Joint publication counts keyed in canonical (lexicographic) pair order.
using PairCountMap = std::map<PairKey, std::int64_t>;

enum class PairLevel { field, discipline };

// One pair row: totals a and b, joint count c, and the exact incidence
// ratios d = c/a, e = c/b, avg = (d+e)/2.
struct PairStats {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;
    Ratio d;
    Ratio e;
    Ratio avg;
};

// One field's interdisciplinarity breakdown. The three shares partition
// exactly: cross_field = intra_discipline + cross_discipline, because a
// cross-field publication is assigned to exactly one bucket (a coauthor from
// another discipline sends it to the cross-discipline bucket, otherwise it
// is intra-discipline).
struct FieldProfile {
    std::string field;
    std::int64_t universities_active = 0;
    std::int64_t headcount = 0;
    std::int64_t total_pubs = 0;
    Ratio share_cross_field;
    Ratio share_intra_discipline;
    Ratio share_cross_discipline;
    std::int64_t partner_fields = 0;
    std::int64_t partner_fields_over_threshold = 0;
    std::int64_t partner_disciplines = 0;
    std::int64_t partner_disciplines_over_threshold = 0;
};

struct DisciplineSummary {
    std::string discipline;
    std::int64_t universities = 0;
    std::int64_t staff = 0;
    std::int64_t pubs = 0;
    Ratio share_with_other_disciplines;  // discipline set size >= 2
    Ratio share_cross_field_within;      // >= 2 distinct fields of this discipline
};

struct CorrelationResult {
    std::string discipline;
    std::size_t n = 0;
    double rho = 0.0;
};

// Deduplicated pair counting: a publication contributes at most 1 to any
// pair, no matter how many coauthors share each field. Self-pairs are never
// counted. `threads <= 0` picks automatically; any thread count yields
// identical results (partial maps merge by integer addition).
PairCountMap count_field_pairs(const Corpus& corpus, int threads = 0);
PairCountMap count_discipline_pairs(const Corpus& corpus, int threads = 0);

// Exact incidence ratios from raw counts. Requires a > 0, b > 0,
// 0 <= c <= min(a, b).
PairStats pair_incidence(std::int64_t a, std::int64_t b, std::int64_t c);

// Fraction of the field's publications co-authored with any other field.
// A field with zero publications has no degree (DomainError), which is a
// different fact from a degree of 0.
Ratio general_degree(const Corpus& corpus, std::string_view field);

// Full per-field breakdown. `partner_threshold` drives the
// partner_*_over_threshold counts (strict >). `omit_below` is the report
// layer's representativity floor: partners with incidence d < omit_below are
// excluded from all four partner counts; 0 keeps every realized partner.
FieldProfile collaboration_profile(const Corpus& corpus, std::string_view field,
                                   double partner_threshold = 0.10, double omit_below = 0.0);

// Profiles for every field with at least one publication, registry order.
// Same results as per-field collaboration_profile, computed in one pass.
std::vector<FieldProfile> all_profiles(const Corpus& corpus, double partner_threshold = 0.10,
                                       double omit_below = 0.0);

DisciplineSummary discipline_summary(const Corpus& corpus, std::string_view discipline);

// Spearman rank correlation, average ranks for ties. Tie-free inputs use the
// closed form 1 - 6*sum(d^2)/(n(n^2-1)); tied inputs use Pearson on average
// ranks (the two agree where both apply). Length mismatch, n < 2, or a
// constant vector is a DomainError: the statistic is undefined there and a
// silent 0 would corrupt downstream screens.
double spearman(std::span<const double> x, std::span<const double> y);

// Spearman of (headcount, general degree) across the discipline's publishing
// fields.
CorrelationResult headcount_degree_correlation(const Corpus& corpus, std::string_view discipline);

// Fields of the discipline with headcount strictly greater than
// min_headcount, registry order. Selection only; never recomputes any metric.
std::vector<std::string> apply_headcount_filter(const Corpus& corpus, std::string_view discipline,
                                                std::int64_t min_headcount = 100);

// Threshold comparisons shared with the report layer: is c/a >= t (resp. > t)
// for integer counts and a double threshold.
bool incidence_at_least(std::int64_t c, std::int64_t a, double t);
bool incidence_greater(std::int64_t c, std::int64_t a, double t);

}  // namespace crossfield
