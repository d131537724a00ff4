#include "crossfield/csv.hpp"

#include <istream>

#include "crossfield/errors.hpp"

namespace crossfield {

namespace {

std::string trimmed(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
    return std::string(s.substr(b, e - b));
}

}  // namespace

CsvReader::CsvReader(std::istream& in, std::string source_name)
    : in_(in), source_(std::move(source_name)) {}

std::optional<std::vector<std::string>> CsvReader::next_row() {
    std::string line;
    for (;;) {
        if (!std::getline(in_, line)) return std::nullopt;
        ++line_;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') continue;
        break;
    }
    row_line_ = line_;

    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;       // current field was opened with a quote
    bool in_quotes = false;    // currently inside the quoted section
    bool field_started = false;
    std::size_t i = 0;

    auto flush = [&] {
        fields.push_back(quoted ? cur : trimmed(cur));
        cur.clear();
        quoted = false;
        field_started = false;
    };

    for (;;) {
        if (i >= line.size()) {
            if (in_quotes) {
                // quoted field continues across a line break
                if (!std::getline(in_, line)) {
                    throw DataError(source_ + ":" + std::to_string(row_line_) +
                                    ": unterminated quoted field");
                }
                ++line_;
                if (!line.empty() && line.back() == '\r') line.pop_back();
                cur += '\n';
                i = 0;
                continue;
            }
            flush();
            return fields;
        }
        char c = line[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    i += 2;
                } else {
                    in_quotes = false;
                    ++i;
                }
            } else {
                cur += c;
                ++i;
            }
            continue;
        }
        if (c == ',') {
            flush();
            ++i;
        } else if (c == '"') {
            if (field_started && !cur.empty() && trimmed(cur).empty() && !quoted) {
                // leading whitespace before an opening quote
                cur.clear();
            } else if (field_started && (quoted || !trimmed(cur).empty())) {
                throw DataError(source_ + ":" + std::to_string(line_) +
                                ": quote inside unquoted field");
            }
            quoted = true;
            in_quotes = true;
            field_started = true;
            ++i;
        } else {
            if (quoted && trimmed(std::string_view(&c, 1)).empty()) {
                // trailing whitespace after a closing quote
                ++i;
                continue;
            }
            if (quoted) {
                throw DataError(source_ + ":" + std::to_string(line_) +
                                ": characters after closing quote");
            }
            cur += c;
            field_started = true;
            ++i;
        }
    }
}

std::string csv_field(std::string_view value) {
    bool needs_quotes = value.find_first_of(",\"\n\r") != std::string_view::npos;
    if (!needs_quotes) return std::string(value);
    std::string out;
    out.reserve(value.size() + 2);
    out += '"';
    for (char c : value) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string csv_line(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += fields[i];
    }
    out += '\n';
    return out;
}

}  // namespace crossfield
