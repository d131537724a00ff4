#include "crossfield/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>
#include <unordered_map>

namespace crossfield {

PairKey::PairKey(std::string a, std::string b) {
    if (a == b) throw DomainError("pair of identical codes '" + a + "'");
    if (b < a) std::swap(a, b);
    first = std::move(a);
    second = std::move(b);
}

namespace {

// c >= t*a (or strictly >) decided exactly: t's significand is an integer
// scaled by a power of two, so the comparison reduces to 128-bit integers.
// Thresholds below 2^-11 fall back to long double; they are never used as
// representativity floors in practice.
bool compare_incidence(std::int64_t c, std::int64_t a, double t, bool strict) {
    if (t < 0.0) return true;
    if (t == 0.0) return strict ? c > 0 : true;
    int exp = 0;
    double frac = std::frexp(t, &exp);
    int shift = 53 - exp;
    if (shift >= 0 && shift <= 63) {
        auto mant = static_cast<std::int64_t>(std::ldexp(frac, 53));  // exact
        __int128 lhs = static_cast<__int128>(c) << shift;
        __int128 rhs = static_cast<__int128>(mant) * a;
        return strict ? lhs > rhs : lhs >= rhs;
    }
    long double lhs = static_cast<long double>(c);
    long double rhs = static_cast<long double>(t) * static_cast<long double>(a);
    return strict ? lhs > rhs : lhs >= rhs;
}

}  // namespace

bool incidence_at_least(std::int64_t c, std::int64_t a, double t) {
    return compare_incidence(c, a, t, false);
}

bool incidence_greater(std::int64_t c, std::int64_t a, double t) {
    return compare_incidence(c, a, t, true);
}

namespace {

// Unordered pair of lex ranks packed into one key; uint64 order equals the
// canonical (lexicographic) pair order, so the final map builds in one
// ordered sweep.
inline std::uint64_t pack(int lex_lo, int lex_hi) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(lex_lo)) << 32) |
           static_cast<std::uint32_t>(lex_hi);
}

int pick_threads(int requested, std::size_t pubs) {
    if (requested > 0) return requested;
    if (pubs < 32768) return 1;
    unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::min<unsigned>(hw == 0 ? 1 : hw, 8));
}

// Counts unordered co-occurrence pairs over per-publication index sets.
// sets(i) yields the deduplicated indices; to_lex maps index -> lex rank;
// by_lex inverts. Partitioning the publications across threads and merging
// by addition is order-independent, so any thread count gives one result.
template <typename SetsOf>
PairCountMap count_pairs(std::size_t pub_count, SetsOf&& sets, const std::vector<int>& to_lex,
                         const std::vector<std::string>& codes_by_lex, int threads) {
    int n_threads = pick_threads(threads, pub_count);

    auto count_range = [&](std::size_t begin, std::size_t end,
                           std::unordered_map<std::uint64_t, std::int64_t>& acc) {
        for (std::size_t i = begin; i < end; ++i) {
            std::span<const int> s = sets(i);
            for (std::size_t x = 0; x + 1 < s.size(); ++x) {
                for (std::size_t y = x + 1; y < s.size(); ++y) {
                    int rx = to_lex[static_cast<std::size_t>(s[x])];
                    int ry = to_lex[static_cast<std::size_t>(s[y])];
                    if (ry < rx) std::swap(rx, ry);
                    ++acc[pack(rx, ry)];
                }
            }
        }
    };

    std::unordered_map<std::uint64_t, std::int64_t> total;
    if (n_threads <= 1) {
        count_range(0, pub_count, total);
    } else {
        std::vector<std::unordered_map<std::uint64_t, std::int64_t>> partials(
            static_cast<std::size_t>(n_threads));
        std::vector<std::thread> workers;
        std::size_t chunk = (pub_count + static_cast<std::size_t>(n_threads) - 1) /
                            static_cast<std::size_t>(n_threads);
        for (int t = 0; t < n_threads; ++t) {
            std::size_t begin = static_cast<std::size_t>(t) * chunk;
            std::size_t end = std::min(pub_count, begin + chunk);
            if (begin >= end) break;
            workers.emplace_back(count_range, begin, end, std::ref(partials[static_cast<std::size_t>(t)]));
        }
        for (auto& w : workers) w.join();
        for (auto& part : partials) {
            for (auto& [key, count] : part) total[key] += count;
        }
    }

    std::vector<std::pair<std::uint64_t, std::int64_t>> sorted(total.begin(), total.end());
    std::sort(sorted.begin(), sorted.end());

    PairCountMap out;
    auto hint = out.end();
    for (const auto& [key, count] : sorted) {
        const std::string& lo = codes_by_lex[static_cast<std::size_t>(key >> 32)];
        const std::string& hi = codes_by_lex[static_cast<std::size_t>(key & 0xffffffffu)];
        hint = out.emplace_hint(hint, PairKey(lo, hi), count);
    }
    return out;
}

std::vector<std::string> codes_by_lex_rank(const std::vector<int>& lex, auto&& code_of) {
    std::vector<std::string> out(lex.size());
    for (std::size_t i = 0; i < lex.size(); ++i) out[static_cast<std::size_t>(lex[i])] = code_of(i);
    return out;
}

}  // namespace

PairCountMap count_field_pairs(const Corpus& corpus, int threads) {
    const auto& scheme = corpus.scheme();
    std::vector<int> to_lex(scheme.field_count());
    for (std::size_t i = 0; i < to_lex.size(); ++i) {
        to_lex[i] = scheme.field_lex_rank(static_cast<int>(i));
    }
    auto codes = codes_by_lex_rank(to_lex, [&](std::size_t i) { return scheme.fields()[i].code; });
    return count_pairs(
        corpus.publication_count(),
        [&](std::size_t i) { return std::span<const int>(corpus.publications()[i].fields); },
        to_lex, codes, threads);
}

PairCountMap count_discipline_pairs(const Corpus& corpus, int threads) {
    const auto& scheme = corpus.scheme();
    std::vector<int> to_lex(scheme.discipline_count());
    for (std::size_t i = 0; i < to_lex.size(); ++i) {
        to_lex[i] = scheme.discipline_lex_rank(static_cast<int>(i));
    }
    auto codes =
        codes_by_lex_rank(to_lex, [&](std::size_t i) { return scheme.disciplines()[i].code; });
    return count_pairs(
        corpus.publication_count(),
        [&](std::size_t i) { return std::span<const int>(corpus.publications()[i].disciplines); },
        to_lex, codes, threads);
}

PairStats pair_incidence(std::int64_t a, std::int64_t b, std::int64_t c) {
    if (a <= 0 || b <= 0) throw DomainError("pair incidence requires positive publication counts");
    if (c < 0 || c > std::min(a, b)) {
        throw DomainError("joint count " + std::to_string(c) + " exceeds min(" +
                          std::to_string(a) + ", " + std::to_string(b) + ")");
    }
    PairStats out;
    out.a = a;
    out.b = b;
    out.c = c;
    out.d = Ratio(c, a);
    out.e = Ratio(c, b);
    out.avg = Ratio::half_sum(out.d, out.e);
    return out;
}

Ratio general_degree(const Corpus& corpus, std::string_view field) {
    int f = corpus.scheme().field_index(field);
    if (f < 0) throw LookupError("unknown field code '" + std::string(field) + "'");
    std::int64_t total = corpus.field_publications(f);
    if (total == 0) {
        throw DomainError("field '" + std::string(field) + "' has no publications; degree undefined");
    }
    std::int64_t cross = 0;
    for (int pub : corpus.field_pubs(f)) {
        if (corpus.publications()[static_cast<std::size_t>(pub)].fields.size() >= 2) ++cross;
    }
    return Ratio(cross, total);
}

namespace {

struct ProfileCounters {
    std::int64_t cross = 0;
    std::int64_t cross_discipline = 0;
    // joint counts against every co-occurring field, by field index
    std::unordered_map<int, std::int64_t> partners;
};

FieldProfile finish_profile(const Corpus& corpus, int f, const ProfileCounters& counters,
                            double partner_threshold, double omit_below) {
    const auto& scheme = corpus.scheme();
    FieldProfile out;
    out.field = scheme.fields()[static_cast<std::size_t>(f)].code;
    out.universities_active = corpus.field_universities(f);
    out.headcount = corpus.field_headcount(f);
    out.total_pubs = corpus.field_publications(f);
    out.share_cross_field = Ratio(counters.cross, out.total_pubs);
    out.share_cross_discipline = Ratio(counters.cross_discipline, out.total_pubs);
    out.share_intra_discipline = Ratio(counters.cross - counters.cross_discipline, out.total_pubs);

    const int own_disc = scheme.discipline_of_field(f);
    std::vector<bool> disc_seen(scheme.discipline_count(), false);
    std::vector<bool> disc_seen_over(scheme.discipline_count(), false);
    for (const auto& [g, joint] : counters.partners) {
        if (!incidence_at_least(joint, out.total_pubs, omit_below)) continue;
        ++out.partner_fields;
        int gd = scheme.discipline_of_field(g);
        if (gd != own_disc) disc_seen[static_cast<std::size_t>(gd)] = true;
        if (incidence_greater(joint, out.total_pubs, partner_threshold)) {
            ++out.partner_fields_over_threshold;
            if (gd != own_disc) disc_seen_over[static_cast<std::size_t>(gd)] = true;
        }
    }
    out.partner_disciplines = std::count(disc_seen.begin(), disc_seen.end(), true);
    out.partner_disciplines_over_threshold =
        std::count(disc_seen_over.begin(), disc_seen_over.end(), true);
    return out;
}

void classify_pub(const Corpus& corpus, const Corpus::Publication& pub, int f,
                  ProfileCounters& counters) {
    if (pub.fields.size() < 2) return;
    ++counters.cross;
    // Precedence rule: any coauthor from another discipline sends the
    // publication to the cross-discipline bucket.
    const int own_disc = corpus.scheme().discipline_of_field(f);
    bool other_disc = false;
    for (int g : pub.fields) {
        if (corpus.scheme().discipline_of_field(g) != own_disc) {
            other_disc = true;
            break;
        }
    }
    if (other_disc) ++counters.cross_discipline;
    for (int g : pub.fields) {
        if (g != f) ++counters.partners[g];
    }
}

}  // namespace

FieldProfile collaboration_profile(const Corpus& corpus, std::string_view field,
                                   double partner_threshold, double omit_below) {
    int f = corpus.scheme().field_index(field);
    if (f < 0) throw LookupError("unknown field code '" + std::string(field) + "'");
    if (corpus.field_publications(f) == 0) {
        throw DomainError("field '" + std::string(field) +
                          "' has no publications; profile undefined");
    }
    ProfileCounters counters;
    for (int pub : corpus.field_pubs(f)) {
        classify_pub(corpus, corpus.publications()[static_cast<std::size_t>(pub)], f, counters);
    }
    return finish_profile(corpus, f, counters, partner_threshold, omit_below);
}

std::vector<FieldProfile> all_profiles(const Corpus& corpus, double partner_threshold,
                                       double omit_below) {
    const std::size_t nf = corpus.scheme().field_count();
    std::vector<ProfileCounters> counters(nf);
    for (const auto& pub : corpus.publications()) {
        if (pub.fields.size() < 2) continue;
        for (int f : pub.fields) {
            classify_pub(corpus, pub, f, counters[static_cast<std::size_t>(f)]);
        }
    }
    std::vector<FieldProfile> out;
    for (std::size_t f = 0; f < nf; ++f) {
        if (corpus.field_publications(static_cast<int>(f)) == 0) continue;
        out.push_back(finish_profile(corpus, static_cast<int>(f), counters[f], partner_threshold,
                                     omit_below));
    }
    return out;
}

DisciplineSummary discipline_summary(const Corpus& corpus, std::string_view discipline) {
    const auto& scheme = corpus.scheme();
    int d = scheme.discipline_index(discipline);
    if (d < 0) throw LookupError("unknown discipline code '" + std::string(discipline) + "'");

    DisciplineSummary out;
    out.discipline = scheme.disciplines()[static_cast<std::size_t>(d)].code;
    out.universities = corpus.discipline_universities(d);
    out.staff = corpus.discipline_headcount(d);
    out.pubs = corpus.discipline_publications(d);
    if (out.pubs == 0) {
        out.share_with_other_disciplines = Ratio(0, 1);
        out.share_cross_field_within = Ratio(0, 1);
        return out;
    }

    // The two shares are computed independently; a publication can be in both.
    std::int64_t with_other = 0;
    std::int64_t cross_field_within = 0;
    for (int pub : corpus.discipline_pubs(d)) {
        const auto& p = corpus.publications()[static_cast<std::size_t>(pub)];
        if (p.disciplines.size() >= 2) ++with_other;
        int own_fields = 0;
        for (int f : p.fields) {
            if (scheme.discipline_of_field(f) == d && ++own_fields == 2) break;
        }
        if (own_fields >= 2) ++cross_field_within;
    }
    out.share_with_other_disciplines = Ratio(with_other, out.pubs);
    out.share_cross_field_within = Ratio(cross_field_within, out.pubs);
    return out;
}

namespace {

// Average ranks (1-based); ties share the mean of their positional ranks.
std::vector<double> average_ranks(std::span<const double> values, bool& has_ties) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(values.size());
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
        if (j > i) has_ties = true;
        double mean_rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = mean_rank;
        i = j + 1;
    }
    return ranks;
}

bool is_constant(std::span<const double> v) {
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i] != v[0]) return false;
    }
    return true;
}

}  // namespace

double spearman(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw DomainError("spearman: length mismatch");
    const std::size_t n = x.size();
    if (n < 2) throw DomainError("spearman: need at least 2 observations");
    if (is_constant(x)) throw DomainError("spearman: first vector is constant");
    if (is_constant(y)) throw DomainError("spearman: second vector is constant");

    bool ties = false;
    std::vector<double> rx = average_ranks(x, ties);
    std::vector<double> ry = average_ranks(y, ties);

    if (!ties && n <= 2'000'000) {
        // all ranks are distinct integers; d and the closed form are exact
        std::int64_t sum_d2 = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::int64_t d = static_cast<std::int64_t>(rx[i]) - static_cast<std::int64_t>(ry[i]);
            sum_d2 += d * d;
        }
        std::int64_t nn = static_cast<std::int64_t>(n);
        return 1.0 - 6.0 * static_cast<double>(sum_d2) /
                         static_cast<double>(nn * (nn * nn - 1));
    }

    double mean = (static_cast<double>(n) + 1.0) / 2.0;  // mean rank either way
    double cov = 0.0, var_x = 0.0, var_y = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double dx = rx[i] - mean;
        double dy = ry[i] - mean;
        cov += dx * dy;
        var_x += dx * dx;
        var_y += dy * dy;
    }
    return cov / std::sqrt(var_x * var_y);
}

CorrelationResult headcount_degree_correlation(const Corpus& corpus, std::string_view discipline) {
    const auto& scheme = corpus.scheme();
    int d = scheme.discipline_index(discipline);
    if (d < 0) throw LookupError("unknown discipline code '" + std::string(discipline) + "'");

    std::vector<double> headcounts, degrees;
    for (std::size_t f = 0; f < scheme.field_count(); ++f) {
        if (scheme.discipline_of_field(static_cast<int>(f)) != d) continue;
        if (corpus.field_publications(static_cast<int>(f)) == 0) continue;
        headcounts.push_back(static_cast<double>(corpus.field_headcount(static_cast<int>(f))));
        degrees.push_back(general_degree(corpus, scheme.fields()[f].code).value());
    }
    if (headcounts.size() < 2) {
        throw DomainError("discipline '" + std::string(discipline) +
                          "' has fewer than 2 publishing fields");
    }
    CorrelationResult out;
    out.discipline = scheme.disciplines()[static_cast<std::size_t>(d)].code;
    out.n = headcounts.size();
    out.rho = spearman(headcounts, degrees);
    return out;
}

std::vector<std::string> apply_headcount_filter(const Corpus& corpus, std::string_view discipline,
                                                std::int64_t min_headcount) {
    const auto& scheme = corpus.scheme();
    int d = scheme.discipline_index(discipline);
    if (d < 0) throw LookupError("unknown discipline code '" + std::string(discipline) + "'");
    std::vector<std::string> out;
    for (std::size_t f = 0; f < scheme.field_count(); ++f) {
        if (scheme.discipline_of_field(static_cast<int>(f)) != d) continue;
        if (corpus.field_headcount(static_cast<int>(f)) > min_headcount) {
            out.push_back(scheme.fields()[f].code);
        }
    }
    return out;
}

}  // namespace crossfield
