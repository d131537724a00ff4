#include "crossfield/synth.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "crossfield/csv.hpp"
#include "crossfield/field_scheme.hpp"

namespace crossfield {

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    if (bound == 0) throw DomainError("below(0)");
    // rejection keeps the draw unbiased
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        std::uint64_t r = next();
        if (r >= threshold) return r % bound;
    }
}

namespace {

std::string padded(std::int64_t value, std::size_t width) {
    std::string s = std::to_string(value);
    if (s.size() < width) s.insert(0, width - s.size(), '0');
    return s;
}

void check_params(const SynthParams& p) {
    auto bad = [](const std::string& what) { return DomainError("synth params: " + what); };
    if (p.disciplines < 1) throw bad("disciplines must be >= 1");
    if (p.fields_per_discipline < 1) throw bad("fields_per_discipline must be >= 1");
    if (p.publications < 1) throw bad("publications must be >= 1");
    if (p.researchers_per_field.lo < 1 || p.researchers_per_field.hi < p.researchers_per_field.lo) {
        throw bad("researchers_per_field range is empty");
    }
    if (p.authors_per_pub.lo < 1 || p.authors_per_pub.hi < p.authors_per_pub.lo) {
        throw bad("authors_per_pub range is empty");
    }
    for (double prob : {p.p_cross_field, p.p_cross_discipline}) {
        if (!(prob >= 0.0 && prob <= 1.0)) throw bad("probability outside [0,1]");
    }
    if (!(p.inverse_size_bias >= 0.0)) throw bad("inverse_size_bias must be >= 0");
}

// k distinct indices in [0, pool), in draw order, skipping already-taken.
void sample_distinct(SplitMix64& rng, std::int64_t pool, std::int64_t k, std::vector<std::int64_t>& taken) {
    while (k > 0) {
        std::int64_t candidate = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(pool)));
        if (std::find(taken.begin(), taken.end(), candidate) != taken.end()) continue;
        taken.push_back(candidate);
        --k;
    }
}

}  // namespace

SynthFiles generate_files(const SynthParams& params) {
    check_params(params);
    SplitMix64 rng(params.seed);

    const std::int64_t n_fields = params.disciplines * params.fields_per_discipline;
    const std::size_t field_width = std::to_string(params.fields_per_discipline).size() < 2
                                        ? 2
                                        : std::to_string(params.fields_per_discipline).size();

    SynthFiles out;
    out.truth.field_codes.reserve(static_cast<std::size_t>(n_fields));
    std::vector<int> field_disc(static_cast<std::size_t>(n_fields));
    {
        std::string csv = "field_code,field_title,discipline_code,discipline_title\n";
        for (std::int64_t d = 0; d < params.disciplines; ++d) {
            std::string disc_code = "D" + std::to_string(d + 1);
            for (std::int64_t f = 0; f < params.fields_per_discipline; ++f) {
                std::string code = disc_code + "/" + padded(f + 1, field_width);
                csv += csv_line({csv_field(code), csv_field("Synthetic field " + code),
                                 csv_field(disc_code),
                                 csv_field("Synthetic discipline " + std::to_string(d + 1))});
                field_disc[out.truth.field_codes.size()] = static_cast<int>(d);
                out.truth.field_codes.push_back(std::move(code));
            }
        }
        out.scheme_csv = std::move(csv);
    }

    // Headcounts, then the planted cross-field propensity: small fields get a
    // boost of (h_min / h)^bias on top of the base probability.
    out.truth.headcounts.resize(static_cast<std::size_t>(n_fields));
    std::int64_t total_researchers = 0;
    const std::uint64_t head_span = static_cast<std::uint64_t>(params.researchers_per_field.hi -
                                                               params.researchers_per_field.lo + 1);
    for (auto& h : out.truth.headcounts) {
        h = params.researchers_per_field.lo + static_cast<std::int64_t>(rng.below(head_span));
        total_researchers += h;
    }
    if (params.authors_per_pub.hi > total_researchers) {
        throw DomainError("synth params: authors_per_pub max exceeds total researchers");
    }
    const std::int64_t h_min =
        *std::min_element(out.truth.headcounts.begin(), out.truth.headcounts.end());
    out.truth.cross_field_prob.resize(static_cast<std::size_t>(n_fields));
    for (std::size_t f = 0; f < out.truth.cross_field_prob.size(); ++f) {
        double boost = std::pow(static_cast<double>(h_min) /
                                    static_cast<double>(out.truth.headcounts[f]),
                                params.inverse_size_bias);
        out.truth.cross_field_prob[f] = std::min(1.0, params.p_cross_field * boost);
    }

    // Researchers, grouped by field; ids are global 1-based indices.
    const std::size_t res_width = std::to_string(total_researchers).size();
    std::vector<std::int64_t> field_first(static_cast<std::size_t>(n_fields));  // first global index
    {
        std::string csv = "researcher_id,name,field_code,university_id\n";
        std::int64_t next_id = 0;
        for (std::size_t f = 0; f < out.truth.field_codes.size(); ++f) {
            field_first[f] = next_id;
            for (std::int64_t i = 0; i < out.truth.headcounts[f]; ++i) {
                std::string id = "R" + padded(next_id + 1, res_width);
                std::string uni = "U" + padded(static_cast<std::int64_t>(rng.below(10)) + 1, 2);
                csv += csv_line({csv_field(id), "", csv_field(out.truth.field_codes[f]),
                                 csv_field(uni)});
                ++next_id;
            }
        }
        out.researchers_csv = std::move(csv);
    }

    auto weighted_field_pick = [&](const std::vector<std::size_t>& eligible) {
        std::int64_t total = 0;
        for (std::size_t f : eligible) total += out.truth.headcounts[f];
        std::int64_t ticket = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(total)));
        for (std::size_t f : eligible) {
            ticket -= out.truth.headcounts[f];
            if (ticket < 0) return f;
        }
        return eligible.back();
    };

    const std::size_t pub_width = std::to_string(params.publications).size();
    const std::uint64_t author_span = static_cast<std::uint64_t>(params.authors_per_pub.hi -
                                                                 params.authors_per_pub.lo + 1);
    std::string pub_csv = "pub_id,year\n";
    std::string auth_csv = "pub_id,researcher_id\n";
    std::vector<std::size_t> eligible;
    std::vector<std::int64_t> taken;
    for (std::int64_t p = 0; p < params.publications; ++p) {
        std::string pub_id = "P" + padded(p + 1, pub_width);
        int year = 2004 + static_cast<int>(rng.below(5));
        pub_csv += csv_line({csv_field(pub_id), std::to_string(year)});

        std::int64_t home_global = static_cast<std::int64_t>(
            rng.below(static_cast<std::uint64_t>(total_researchers)));
        std::size_t home_field = 0;
        while (home_global >= field_first[home_field] + out.truth.headcounts[home_field]) {
            ++home_field;
        }

        std::int64_t n_authors = params.authors_per_pub.lo +
                                 static_cast<std::int64_t>(rng.below(author_span));
        bool want_cross = n_authors >= 2 && rng.unit() < out.truth.cross_field_prob[home_field];

        std::int64_t partner_field = -1;
        if (want_cross) {
            bool cross_disc = rng.unit() < params.p_cross_discipline;
            auto gather = [&](bool other_discipline) {
                eligible.clear();
                for (std::size_t f = 0; f < out.truth.field_codes.size(); ++f) {
                    if (f == home_field) continue;
                    bool other = field_disc[f] != field_disc[home_field];
                    if (other == other_discipline) eligible.push_back(f);
                }
            };
            gather(cross_disc);
            if (eligible.empty()) gather(!cross_disc);
            if (!eligible.empty()) partner_field = static_cast<std::int64_t>(weighted_field_pick(eligible));
        }

        taken.clear();
        if (partner_field >= 0) {
            std::int64_t pool = out.truth.headcounts[home_field] +
                                out.truth.headcounts[static_cast<std::size_t>(partner_field)];
            std::int64_t n_eff = std::min(n_authors, pool);
            // pool indices: [0, h_home) home members, rest partner members
            taken.push_back(static_cast<std::int64_t>(
                rng.below(static_cast<std::uint64_t>(out.truth.headcounts[home_field]))));
            taken.push_back(out.truth.headcounts[home_field] +
                            static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(
                                out.truth.headcounts[static_cast<std::size_t>(partner_field)]))));
            sample_distinct(rng, pool, n_eff - 2, taken);
            for (std::int64_t ix : taken) {
                std::int64_t global =
                    ix < out.truth.headcounts[home_field]
                        ? field_first[home_field] + ix
                        : field_first[static_cast<std::size_t>(partner_field)] + ix -
                              out.truth.headcounts[home_field];
                auth_csv += csv_line({csv_field(pub_id),
                                      csv_field("R" + padded(global + 1, res_width))});
            }
        } else {
            std::int64_t n_eff = std::min(n_authors, out.truth.headcounts[home_field]);
            sample_distinct(rng, out.truth.headcounts[home_field], n_eff, taken);
            for (std::int64_t ix : taken) {
                auth_csv += csv_line({csv_field(pub_id),
                                      csv_field("R" + padded(field_first[home_field] + ix + 1,
                                                             res_width))});
            }
        }
    }
    out.publications_csv = std::move(pub_csv);
    out.authorships_csv = std::move(auth_csv);
    return out;
}

SynthResult generate(const SynthParams& params) {
    SynthFiles files = generate_files(params);
    std::istringstream scheme_in(files.scheme_csv);
    std::istringstream res_in(files.researchers_csv);
    std::istringstream pub_in(files.publications_csv);
    std::istringstream auth_in(files.authorships_csv);
    FieldScheme scheme = FieldScheme::load(scheme_in, "synth-scheme");
    Corpus corpus = Corpus::load(std::move(scheme), res_in, pub_in, auth_in);
    return SynthResult{std::move(corpus), std::move(files.truth)};
}

// --- oracles ---------------------------------------------------------------
// Deliberately naive re-derivations over the public string API; they share no
// pair-enumeration or bucketing code with the metrics kernel.

namespace {

void check_oracle_guard(const Corpus& corpus) {
    if (corpus.publication_count() > kOracleMaxPublications) {
        throw DomainError("oracle refuses corpora over " +
                          std::to_string(kOracleMaxPublications) + " publications");
    }
}

}  // namespace

PairCountMap oracle_pair_counts(const Corpus& corpus, PairLevel level) {
    check_oracle_guard(corpus);
    PairCountMap counts;
    for (const auto& pub : corpus.publications()) {
        std::vector<std::string> codes = level == PairLevel::field
                                             ? corpus.field_set(pub.id)
                                             : corpus.discipline_set(pub.id);
        for (std::size_t i = 0; i < codes.size(); ++i) {
            for (std::size_t j = i + 1; j < codes.size(); ++j) {
                ++counts[PairKey(codes[i], codes[j])];
            }
        }
    }
    return counts;
}

Ratio oracle_degree(const Corpus& corpus, std::string_view field) {
    check_oracle_guard(corpus);
    std::string code(field);
    std::int64_t total = 0, cross = 0;
    for (const auto& pub : corpus.publications()) {
        std::vector<std::string> codes = corpus.field_set(pub.id);
        if (std::find(codes.begin(), codes.end(), code) == codes.end()) continue;
        ++total;
        if (codes.size() >= 2) ++cross;
    }
    if (total == 0) {
        throw DomainError("field '" + code + "' has no publications; degree undefined");
    }
    return Ratio(cross, total);
}

FieldProfile oracle_profile(const Corpus& corpus, std::string_view field, double partner_threshold,
                            double omit_below) {
    check_oracle_guard(corpus);
    const std::string code(field);
    const std::string own_disc = corpus.scheme().discipline_of(code).code;

    std::int64_t total = 0, cross = 0, cross_disc = 0;
    std::map<std::string, std::int64_t> partners;
    for (const auto& pub : corpus.publications()) {
        std::vector<std::string> codes = corpus.field_set(pub.id);
        if (std::find(codes.begin(), codes.end(), code) == codes.end()) continue;
        ++total;
        if (codes.size() < 2) continue;
        ++cross;
        bool other = false;
        for (const auto& g : codes) {
            if (g != code) ++partners[g];
            if (corpus.scheme().discipline_of(g).code != own_disc) other = true;
        }
        if (other) ++cross_disc;
    }
    if (total == 0) {
        throw DomainError("field '" + code + "' has no publications; profile undefined");
    }

    FieldProfile out;
    out.field = code;
    out.total_pubs = total;
    out.share_cross_field = Ratio(cross, total);
    out.share_cross_discipline = Ratio(cross_disc, total);
    out.share_intra_discipline = Ratio(cross - cross_disc, total);

    std::set<std::string> discs, discs_over;
    for (const auto& [g, joint] : partners) {
        long double d = static_cast<long double>(joint) / static_cast<long double>(total);
        if (d < static_cast<long double>(omit_below)) continue;
        ++out.partner_fields;
        const std::string& gd = corpus.scheme().discipline_of(g).code;
        if (gd != own_disc) discs.insert(gd);
        if (d > static_cast<long double>(partner_threshold)) {
            ++out.partner_fields_over_threshold;
            if (gd != own_disc) discs_over.insert(gd);
        }
    }
    out.partner_disciplines = static_cast<std::int64_t>(discs.size());
    out.partner_disciplines_over_threshold = static_cast<std::int64_t>(discs_over.size());

    std::set<std::string> unis;
    for (const auto& r : corpus.researchers()) {
        if (corpus.scheme().fields()[static_cast<std::size_t>(r.field)].code != code) continue;
        ++out.headcount;
        if (r.university >= 0) unis.insert(corpus.universities()[static_cast<std::size_t>(r.university)]);
    }
    out.universities_active = static_cast<std::int64_t>(unis.size());
    return out;
}

}  // namespace crossfield
