#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "crossfield/field_scheme.hpp"

namespace crossfield {

// Counts of everything the linker dropped or collapsed while ingesting.
struct LinkReport {
    std::int64_t researchers = 0;
    std::int64_t publications_seen = 0;
    std::int64_t publications_retained = 0;
    std::int64_t authorship_rows = 0;
    std::int64_t unmatched_authorships = 0;   // researcher id absent (foreign/unknown author)
    std::int64_t duplicate_authorships = 0;   // repeated (pub, researcher) rows, collapsed
    std::int64_t empty_publications = 0;      // zero matched authors, excluded
    std::int64_t year_filtered_publications = 0;

    bool clean() const { return unmatched_authorships == 0 && empty_publications == 0; }
    void write(std::ostream& out) const;
};

struct LoadOptions {
    std::optional<int> min_year;  // inclusive; pubs without a year are filtered when a bound is set
    std::optional<int> max_year;  // inclusive
    std::ostream* diagnostics = nullptr;  // link report destination, usually stderr
};

// Per-field / per-discipline whole-count aggregates.
struct GroupStats {
    std::string code;
    std::int64_t publications = 0;
    std::int64_t headcount = 0;
    std::int64_t universities = 0;
};

struct CorpusSummary {
    std::vector<GroupStats> fields;       // registry order, all registered fields
    std::vector<GroupStats> disciplines;  // canonical order, all registered disciplines
};

// Immutable linked dataset: researchers (each in exactly one field),
// publications, authorship edges. Authorships naming unknown researcher ids
// are dropped (the unmatched-coauthor rule); publications left with no
// matched author are excluded. Both are counted in the link report.
class Corpus {
  public:
    struct Researcher {
        std::string id;
        std::string name;
        int field = -1;       // scheme field index
        int university = -1;  // index into universities(), -1 when not given
    };

    struct Publication {
        std::string id;
        std::optional<int> year;
        std::vector<int> authors;      // researcher indices, authorship-row order
        std::vector<int> fields;       // deduplicated field indices, ascending
        std::vector<int> disciplines;  // deduplicated discipline indices, ascending
    };

    // Streams follow the formats in the README:
    //   researchers:  researcher_id,name,field_code[,university_id]
    //   publications: pub_id[,year]
    //   authorships:  pub_id,researcher_id
    static Corpus load(FieldScheme scheme, std::istream& researchers, std::istream& publications,
                       std::istream& authorships, const LoadOptions& options = {});
    static Corpus load_files(FieldScheme scheme, const std::filesystem::path& researchers,
                             const std::filesystem::path& publications,
                             const std::filesystem::path& authorships,
                             const LoadOptions& options = {});

    const FieldScheme& scheme() const { return scheme_; }
    const LinkReport& link_report() const { return report_; }

    const std::vector<Researcher>& researchers() const { return researchers_; }
    const std::vector<Publication>& publications() const { return publications_; }
    const std::vector<std::string>& universities() const { return universities_; }

    std::size_t publication_count() const { return publications_.size(); }
    std::size_t researcher_count() const { return researchers_.size(); }

    const Publication& publication(std::string_view pub_id) const;  // throws LookupError

    // One field code per matched author, in author order; repetitions kept.
    std::vector<std::string> field_multiset(std::string_view pub_id) const;
    // Distinct field codes, lexicographic order.
    std::vector<std::string> field_set(std::string_view pub_id) const;
    // Distinct discipline codes, lexicographic order.
    std::vector<std::string> discipline_set(std::string_view pub_id) const;

    CorpusSummary stats() const;

    // Index-level accessors for the metrics kernel.
    std::span<const int> field_pubs(int field_index) const { return field_pubs_[field_index]; }
    std::span<const int> discipline_pubs(int disc_index) const { return disc_pubs_[disc_index]; }
    std::int64_t field_publications(int field_index) const {
        return static_cast<std::int64_t>(field_pubs_[field_index].size());
    }
    std::int64_t discipline_publications(int disc_index) const {
        return static_cast<std::int64_t>(disc_pubs_[disc_index].size());
    }
    std::int64_t field_headcount(int field_index) const { return field_head_[field_index]; }
    std::int64_t discipline_headcount(int disc_index) const { return disc_head_[disc_index]; }
    std::int64_t field_universities(int field_index) const { return field_univ_[field_index]; }
    std::int64_t discipline_universities(int disc_index) const { return disc_univ_[disc_index]; }

  private:
    explicit Corpus(FieldScheme scheme) : scheme_(std::move(scheme)) {}
    void build_caches();

    FieldScheme scheme_;
    std::vector<Researcher> researchers_;
    std::vector<Publication> publications_;
    std::vector<std::string> universities_;
    std::unordered_map<std::string, int> researcher_ix_;
    std::unordered_map<std::string, int> publication_ix_;
    LinkReport report_;

    std::vector<std::vector<int>> field_pubs_;  // posting lists, pub indices ascending
    std::vector<std::vector<int>> disc_pubs_;
    std::vector<std::int64_t> field_head_, disc_head_;
    std::vector<std::int64_t> field_univ_, disc_univ_;
};

}  // namespace crossfield
