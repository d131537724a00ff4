#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "crossfield/errors.hpp"

namespace crossfield {

struct DisciplineCode {
    std::string code;
    std::string title;
    std::size_t source_line = 0;
};

struct FieldCode {
    std::string code;
    std::string title;
    std::string discipline;      // parent discipline code
    int discipline_index = -1;   // index into FieldScheme::disciplines()
    std::size_t source_line = 0;
};

struct Violation {
    enum class Severity { warning };
    Severity severity = Severity::warning;
    std::string subject;  // offending code
    std::string what;
    std::size_t source_line = 0;
};

// Immutable two-level classification: field codes grouped into discipline
// codes. Disciplines are declared implicitly by first use in the registry;
// first-appearance order is the canonical discipline order for every report.
// Codes are administrative keys: matched case-sensitively, whitespace-trimmed
// at parse time.
class FieldScheme {
  public:
    class Builder;

    // Parse the registry format:
    //   field_code,field_title,discipline_code[,discipline_title]
    // Header row mandatory; `#` comment lines ignored. Duplicate or empty
    // field codes are fatal.
    static FieldScheme load(std::istream& in, std::string source_name = "<registry>");
    static FieldScheme load_file(const std::filesystem::path& path);

    const std::vector<FieldCode>& fields() const { return fields_; }           // registry order
    const std::vector<DisciplineCode>& disciplines() const { return disciplines_; }  // first-appearance order

    bool has_field(std::string_view code) const { return field_index(code) >= 0; }
    bool has_discipline(std::string_view code) const { return discipline_index(code) >= 0; }

    const FieldCode& field(std::string_view code) const;             // throws LookupError
    const DisciplineCode& discipline_of(std::string_view field_code) const;  // throws LookupError

    // Index lookups; -1 when absent. Indices are stable handles used by the
    // corpus and metrics layers.
    int field_index(std::string_view code) const;
    int discipline_index(std::string_view code) const;
    int discipline_of_field(int field_index) const { return fields_[field_index].discipline_index; }

    // Rank of a field/discipline in lexicographic code order; pair keys are
    // canonicalized with these so serialized pair order is deterministic.
    int field_lex_rank(int field_index) const { return field_lex_[field_index]; }
    int discipline_lex_rank(int disc_index) const { return disc_lex_[disc_index]; }

    std::size_t field_count() const { return fields_.size(); }
    std::size_t discipline_count() const { return disciplines_.size(); }

    // Warn-level checks: discipline with zero fields, field with empty title.
    // Fatal problems never reach a constructed scheme.
    std::vector<Violation> validate() const;

    // Emit the registry form; load(write(s)) reproduces the scheme exactly.
    void write_registry(std::ostream& out) const;

  private:
    FieldScheme() = default;
    void build_indexes();

    std::vector<DisciplineCode> disciplines_;
    std::vector<FieldCode> fields_;
    std::unordered_map<std::string, int> field_ix_;
    std::unordered_map<std::string, int> disc_ix_;
    std::vector<int> field_lex_;
    std::vector<int> disc_lex_;
};

// Programmatic construction, used by the synthetic generator and by tests
// that need deliberately malformed schemes.
class FieldScheme::Builder {
  public:
    // Explicit declaration; optional (fields declare disciplines implicitly).
    Builder& discipline(std::string code, std::string title = "", std::size_t source_line = 0);
    Builder& field(std::string code, std::string title, std::string discipline_code,
                   std::size_t source_line = 0);
    FieldScheme build();  // throws DataError on duplicate/empty codes

  private:
    FieldScheme scheme_;
};

}  // namespace crossfield
