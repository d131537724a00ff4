#include "crossfield/field_scheme.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

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

}  // namespace

FieldScheme::Builder& FieldScheme::Builder::discipline(std::string code, std::string title,
                                                       std::size_t source_line) {
    if (code.empty()) throw DataError("empty discipline code");
    for (auto& d : scheme_.disciplines_) {
        if (d.code != code) continue;
        if (d.title.empty()) d.title = std::move(title);  // first non-empty title wins
        return *this;
    }
    scheme_.disciplines_.push_back({std::move(code), std::move(title), source_line});
    return *this;
}

FieldScheme::Builder& FieldScheme::Builder::field(std::string code, std::string title,
                                                  std::string discipline_code,
                                                  std::size_t source_line) {
    if (code.empty()) throw DataError("empty field code" +
                                      (source_line ? " at line " + std::to_string(source_line) : ""));
    if (discipline_code.empty()) {
        throw DataError("field '" + code + "' has empty discipline code" +
                        (source_line ? " at line " + std::to_string(source_line) : ""));
    }
    for (const auto& f : scheme_.fields_) {
        if (f.code == code) {
            throw DataError("duplicate field code '" + code + "'" +
                            (source_line ? " at line " + std::to_string(source_line) : ""));
        }
    }
    discipline(discipline_code, "", source_line);
    FieldCode fc;
    fc.code = std::move(code);
    fc.title = std::move(title);
    fc.discipline = std::move(discipline_code);
    fc.source_line = source_line;
    scheme_.fields_.push_back(std::move(fc));
    return *this;
}

FieldScheme FieldScheme::Builder::build() {
    FieldScheme out = std::move(scheme_);
    scheme_ = FieldScheme();
    for (auto& d : out.disciplines_) {
        if (d.title.empty()) d.title = d.code;
    }
    out.build_indexes();
    return out;
}

void FieldScheme::build_indexes() {
    disc_ix_.clear();
    field_ix_.clear();
    disc_ix_.reserve(disciplines_.size());
    field_ix_.reserve(fields_.size());
    for (std::size_t i = 0; i < disciplines_.size(); ++i) {
        disc_ix_.emplace(disciplines_[i].code, static_cast<int>(i));
    }
    for (std::size_t i = 0; i < fields_.size(); ++i) {
        auto it = disc_ix_.find(fields_[i].discipline);
        if (it == disc_ix_.end()) {
            throw DataError("field '" + fields_[i].code + "' references undeclared discipline '" +
                            fields_[i].discipline + "'");
        }
        fields_[i].discipline_index = it->second;
        field_ix_.emplace(fields_[i].code, static_cast<int>(i));
    }

    auto lex_ranks = [](auto&& codes) {
        std::vector<int> order(codes.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return codes[a] < codes[b]; });
        std::vector<int> rank(codes.size());
        for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = static_cast<int>(r);
        return rank;
    };
    std::vector<std::string> fcodes(fields_.size()), dcodes(disciplines_.size());
    for (std::size_t i = 0; i < fields_.size(); ++i) fcodes[i] = fields_[i].code;
    for (std::size_t i = 0; i < disciplines_.size(); ++i) dcodes[i] = disciplines_[i].code;
    field_lex_ = lex_ranks(fcodes);
    disc_lex_ = lex_ranks(dcodes);
}

FieldScheme FieldScheme::load(std::istream& in, std::string source_name) {
    CsvReader reader(in, source_name);
    auto header = reader.next_row();
    if (!header) throw DataError(source_name + ": missing header row");
    if (header->size() < 3 || header->size() > 4 || !iequals((*header)[0], "field_code") ||
        !iequals((*header)[1], "field_title") || !iequals((*header)[2], "discipline_code") ||
        (header->size() == 4 && !iequals((*header)[3], "discipline_title"))) {
        throw DataError(source_name + ":" + std::to_string(reader.row_line()) +
                        ": expected header field_code,field_title,discipline_code[,discipline_title]");
    }

    Builder builder;
    while (auto row = reader.next_row()) {
        if (row->size() < 3 || row->size() > 4) {
            throw DataError(source_name + ":" + std::to_string(reader.row_line()) +
                            ": expected 3 or 4 columns, got " + std::to_string(row->size()));
        }
        if (row->size() == 4 && !(*row)[3].empty()) {
            builder.discipline((*row)[2], (*row)[3], reader.row_line());
        }
        builder.field((*row)[0], (*row)[1], (*row)[2], reader.row_line());
    }
    return builder.build();
}

FieldScheme FieldScheme::load_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open registry file: " + path.string());
    return load(in, path.string());
}

const FieldCode& FieldScheme::field(std::string_view code) const {
    int ix = field_index(code);
    if (ix < 0) throw LookupError("unknown field code '" + std::string(code) + "'");
    return fields_[static_cast<std::size_t>(ix)];
}

const DisciplineCode& FieldScheme::discipline_of(std::string_view field_code) const {
    return disciplines_[static_cast<std::size_t>(field(field_code).discipline_index)];
}

int FieldScheme::field_index(std::string_view code) const {
    auto it = field_ix_.find(std::string(code));
    return it == field_ix_.end() ? -1 : it->second;
}

int FieldScheme::discipline_index(std::string_view code) const {
    auto it = disc_ix_.find(std::string(code));
    return it == disc_ix_.end() ? -1 : it->second;
}

std::vector<Violation> FieldScheme::validate() const {
    std::vector<Violation> out;
    std::vector<int> field_counts(disciplines_.size(), 0);
    for (const auto& f : fields_) {
        ++field_counts[static_cast<std::size_t>(f.discipline_index)];
        if (f.title.empty()) {
            out.push_back({Violation::Severity::warning, f.code, "field has empty title",
                           f.source_line});
        }
    }
    for (std::size_t i = 0; i < disciplines_.size(); ++i) {
        if (field_counts[i] == 0) {
            out.push_back({Violation::Severity::warning, disciplines_[i].code,
                           "discipline has no fields", disciplines_[i].source_line});
        }
    }
    return out;
}

void FieldScheme::write_registry(std::ostream& out) const {
    out << "field_code,field_title,discipline_code,discipline_title\n";
    for (const auto& f : fields_) {
        const auto& d = disciplines_[static_cast<std::size_t>(f.discipline_index)];
        out << csv_line({csv_field(f.code), csv_field(f.title), csv_field(d.code),
                         csv_field(d.title)});
    }
}

}  // namespace crossfield
