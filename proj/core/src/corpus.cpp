#include "crossfield/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <set>
#include <unordered_set>

#include "crossfield/csv.hpp"

namespace crossfield {

namespace {

bool iequals(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        char x = a[i], y = b[i];
        if (x >= 'A' && x <= 'Z') x = static_cast<char>(x - 'A' + 'a');
        if (y >= 'A' && y <= 'Z') y = static_cast<char>(y - 'A' + 'a');
        if (x != y) return false;
    }
    return true;
}

int parse_year(const std::string& text, const std::string& where) {
    try {
        std::size_t pos = 0;
        int year = std::stoi(text, &pos);
        if (pos != text.size()) throw std::invalid_argument("trailing");
        return year;
    } catch (const std::exception&) {
        throw DataError(where + ": malformed year '" + text + "'");
    }
}

}  // namespace

void LinkReport::write(std::ostream& out) const {
    out << "link report:\n"
        << "  researchers loaded:                  " << researchers << "\n"
        << "  publications read:                   " << publications_seen << "\n"
        << "  publications retained:               " << publications_retained << "\n"
        << "  authorship rows read:                " << authorship_rows << "\n"
        << "  unmatched authorships dropped:       " << unmatched_authorships << "\n"
        << "  duplicate authorships collapsed:     " << duplicate_authorships << "\n"
        << "  publications with no matched author: " << empty_publications << "\n"
        << "  publications outside year window:    " << year_filtered_publications << "\n";
}

Corpus Corpus::load(FieldScheme scheme, std::istream& researchers, std::istream& publications,
                    std::istream& authorships, const LoadOptions& options) {
    Corpus corpus(std::move(scheme));
    std::unordered_map<std::string, int> university_ix;

    {
        CsvReader reader(researchers, "researchers");
        auto header = reader.next_row();
        if (!header) throw DataError("researchers: missing header row");
        if (header->size() < 3 || header->size() > 4 || !iequals((*header)[0], "researcher_id") ||
            !iequals((*header)[1], "name") || !iequals((*header)[2], "field_code") ||
            (header->size() == 4 && !iequals((*header)[3], "university_id"))) {
            throw DataError("researchers:" + std::to_string(reader.row_line()) +
                            ": expected header researcher_id,name,field_code[,university_id]");
        }
        while (auto row = reader.next_row()) {
            const std::string where = "researchers:" + std::to_string(reader.row_line());
            if (row->size() < 3 || row->size() > 4) {
                throw DataError(where + ": expected 3 or 4 columns, got " +
                                std::to_string(row->size()));
            }
            Researcher r;
            r.id = (*row)[0];
            r.name = (*row)[1];
            if (r.id.empty()) throw DataError(where + ": empty researcher id");
            int field = corpus.scheme_.field_index((*row)[2]);
            if (field < 0) {
                throw DataError(where + ": researcher '" + r.id +
                                "' has unregistered field code '" + (*row)[2] + "'");
            }
            r.field = field;
            if (row->size() == 4 && !(*row)[3].empty()) {
                auto [it, inserted] = university_ix.emplace(
                    (*row)[3], static_cast<int>(corpus.universities_.size()));
                if (inserted) corpus.universities_.push_back((*row)[3]);
                r.university = it->second;
            }
            auto [it, inserted] =
                corpus.researcher_ix_.emplace(r.id, static_cast<int>(corpus.researchers_.size()));
            if (!inserted) throw DataError(where + ": duplicate researcher id '" + r.id + "'");
            corpus.researchers_.push_back(std::move(r));
        }
        corpus.report_.researchers = static_cast<std::int64_t>(corpus.researchers_.size());
    }

    // Publication slots; year-filtered ids stay known so authorships naming
    // them are skipped rather than treated as broken references.
    std::unordered_set<std::string> filtered_pubs;
    const bool year_window = options.min_year.has_value() || options.max_year.has_value();
    {
        CsvReader reader(publications, "publications");
        auto header = reader.next_row();
        if (!header) throw DataError("publications: missing header row");
        if (header->empty() || header->size() > 2 || !iequals((*header)[0], "pub_id") ||
            (header->size() == 2 && !iequals((*header)[1], "year"))) {
            throw DataError("publications:" + std::to_string(reader.row_line()) +
                            ": expected header pub_id[,year]");
        }
        while (auto row = reader.next_row()) {
            const std::string where = "publications:" + std::to_string(reader.row_line());
            if (row->empty() || row->size() > 2) {
                throw DataError(where + ": expected 1 or 2 columns, got " +
                                std::to_string(row->size()));
            }
            Publication p;
            p.id = (*row)[0];
            if (p.id.empty()) throw DataError(where + ": empty publication id");
            if (row->size() == 2 && !(*row)[1].empty()) {
                p.year = parse_year((*row)[1], where);
            }
            ++corpus.report_.publications_seen;
            if (corpus.publication_ix_.count(p.id) || filtered_pubs.count(p.id)) {
                throw DataError(where + ": duplicate publication id '" + p.id + "'");
            }
            if (year_window) {
                bool in_window = p.year.has_value() &&
                                 (!options.min_year || *p.year >= *options.min_year) &&
                                 (!options.max_year || *p.year <= *options.max_year);
                if (!in_window) {
                    filtered_pubs.insert(p.id);
                    ++corpus.report_.year_filtered_publications;
                    continue;
                }
            }
            corpus.publication_ix_.emplace(p.id, static_cast<int>(corpus.publications_.size()));
            corpus.publications_.push_back(std::move(p));
        }
    }

    {
        CsvReader reader(authorships, "authorships");
        auto header = reader.next_row();
        if (!header) throw DataError("authorships: missing header row");
        if (header->size() != 2 || !iequals((*header)[0], "pub_id") ||
            !iequals((*header)[1], "researcher_id")) {
            throw DataError("authorships:" + std::to_string(reader.row_line()) +
                            ": expected header pub_id,researcher_id");
        }
        while (auto row = reader.next_row()) {
            const std::string where = "authorships:" + std::to_string(reader.row_line());
            if (row->size() != 2) {
                throw DataError(where + ": expected 2 columns, got " +
                                std::to_string(row->size()));
            }
            ++corpus.report_.authorship_rows;
            const std::string& pub_id = (*row)[0];
            const std::string& researcher_id = (*row)[1];
            auto pub_it = corpus.publication_ix_.find(pub_id);
            if (pub_it == corpus.publication_ix_.end()) {
                if (filtered_pubs.count(pub_id)) continue;
                throw DataError(where + ": authorship references unknown publication id '" +
                                pub_id + "'");
            }
            auto res_it = corpus.researcher_ix_.find(researcher_id);
            if (res_it == corpus.researcher_ix_.end()) {
                ++corpus.report_.unmatched_authorships;
                continue;
            }
            auto& authors = corpus.publications_[static_cast<std::size_t>(pub_it->second)].authors;
            if (std::find(authors.begin(), authors.end(), res_it->second) != authors.end()) {
                ++corpus.report_.duplicate_authorships;
                continue;
            }
            authors.push_back(res_it->second);
        }
    }

    // Exclude publications with no matched author, keeping input order.
    {
        std::vector<Publication> kept;
        kept.reserve(corpus.publications_.size());
        for (auto& p : corpus.publications_) {
            if (p.authors.empty()) {
                ++corpus.report_.empty_publications;
            } else {
                kept.push_back(std::move(p));
            }
        }
        corpus.publications_ = std::move(kept);
        corpus.publication_ix_.clear();
        for (std::size_t i = 0; i < corpus.publications_.size(); ++i) {
            corpus.publication_ix_.emplace(corpus.publications_[i].id, static_cast<int>(i));
        }
        corpus.report_.publications_retained =
            static_cast<std::int64_t>(corpus.publications_.size());
    }

    corpus.build_caches();
    if (options.diagnostics) corpus.report_.write(*options.diagnostics);
    return corpus;
}

Corpus Corpus::load_files(FieldScheme scheme, const std::filesystem::path& researchers,
                          const std::filesystem::path& publications,
                          const std::filesystem::path& authorships, const LoadOptions& options) {
    std::ifstream r(researchers), p(publications), a(authorships);
    if (!r) throw DataError("cannot open researchers file: " + researchers.string());
    if (!p) throw DataError("cannot open publications file: " + publications.string());
    if (!a) throw DataError("cannot open authorships file: " + authorships.string());
    return load(std::move(scheme), r, p, a, options);
}

void Corpus::build_caches() {
    const std::size_t nf = scheme_.field_count();
    const std::size_t nd = scheme_.discipline_count();
    field_pubs_.assign(nf, {});
    disc_pubs_.assign(nd, {});
    field_head_.assign(nf, 0);
    disc_head_.assign(nd, 0);
    field_univ_.assign(nf, 0);
    disc_univ_.assign(nd, 0);

    for (std::size_t i = 0; i < publications_.size(); ++i) {
        auto& p = publications_[i];
        p.fields.clear();
        p.disciplines.clear();
        for (int author : p.authors) {
            p.fields.push_back(researchers_[static_cast<std::size_t>(author)].field);
        }
        std::sort(p.fields.begin(), p.fields.end());
        p.fields.erase(std::unique(p.fields.begin(), p.fields.end()), p.fields.end());
        for (int f : p.fields) {
            p.disciplines.push_back(scheme_.discipline_of_field(f));
            field_pubs_[static_cast<std::size_t>(f)].push_back(static_cast<int>(i));
        }
        std::sort(p.disciplines.begin(), p.disciplines.end());
        p.disciplines.erase(std::unique(p.disciplines.begin(), p.disciplines.end()),
                            p.disciplines.end());
        for (int d : p.disciplines) {
            disc_pubs_[static_cast<std::size_t>(d)].push_back(static_cast<int>(i));
        }
    }

    std::vector<std::set<int>> field_unis(nf), disc_unis(nd);
    for (const auto& r : researchers_) {
        int d = scheme_.discipline_of_field(r.field);
        ++field_head_[static_cast<std::size_t>(r.field)];
        ++disc_head_[static_cast<std::size_t>(d)];
        if (r.university >= 0) {
            field_unis[static_cast<std::size_t>(r.field)].insert(r.university);
            disc_unis[static_cast<std::size_t>(d)].insert(r.university);
        }
    }
    for (std::size_t f = 0; f < nf; ++f) {
        field_univ_[f] = static_cast<std::int64_t>(field_unis[f].size());
    }
    for (std::size_t d = 0; d < nd; ++d) {
        disc_univ_[d] = static_cast<std::int64_t>(disc_unis[d].size());
    }
}

const Corpus::Publication& Corpus::publication(std::string_view pub_id) const {
    auto it = publication_ix_.find(std::string(pub_id));
    if (it == publication_ix_.end()) {
        throw LookupError("unknown publication id '" + std::string(pub_id) + "'");
    }
    return publications_[static_cast<std::size_t>(it->second)];
}

std::vector<std::string> Corpus::field_multiset(std::string_view pub_id) const {
    const auto& p = publication(pub_id);
    std::vector<std::string> out;
    out.reserve(p.authors.size());
    for (int author : p.authors) {
        out.push_back(scheme_.fields()[static_cast<std::size_t>(
                                           researchers_[static_cast<std::size_t>(author)].field)]
                          .code);
    }
    return out;
}

std::vector<std::string> Corpus::field_set(std::string_view pub_id) const {
    const auto& p = publication(pub_id);
    std::vector<std::string> out;
    out.reserve(p.fields.size());
    for (int f : p.fields) out.push_back(scheme_.fields()[static_cast<std::size_t>(f)].code);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> Corpus::discipline_set(std::string_view pub_id) const {
    const auto& p = publication(pub_id);
    std::vector<std::string> out;
    out.reserve(p.disciplines.size());
    for (int d : p.disciplines) {
        out.push_back(scheme_.disciplines()[static_cast<std::size_t>(d)].code);
    }
    std::sort(out.begin(), out.end());
    return out;
}

CorpusSummary Corpus::stats() const {
    CorpusSummary out;
    out.fields.reserve(scheme_.field_count());
    out.disciplines.reserve(scheme_.discipline_count());
    for (std::size_t f = 0; f < scheme_.field_count(); ++f) {
        out.fields.push_back({scheme_.fields()[f].code, field_publications(static_cast<int>(f)),
                              field_head_[f], field_univ_[f]});
    }
    for (std::size_t d = 0; d < scheme_.discipline_count(); ++d) {
        out.disciplines.push_back({scheme_.disciplines()[d].code,
                                   discipline_publications(static_cast<int>(d)), disc_head_[d],
                                   disc_univ_[d]});
    }
    return out;
}

}  // namespace crossfield
