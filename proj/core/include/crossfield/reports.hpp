#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "crossfield/corpus.hpp"
#include "crossfield/metrics.hpp"

namespace crossfield {

enum class ColumnKind { count, ratio, code, text };

struct Column {
    std::string name;
    ColumnKind kind = ColumnKind::text;
};

using Cell = std::variant<std::int64_t, Ratio, std::string>;

// Ordered, typed rows plus the parameters that produced them. Every report
// is a pure function of (corpus, parameters); the provenance entries in the
// rendered output are enough to reproduce it byte for byte.
struct ReportTable {
    std::string title;
    std::vector<Column> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::pair<std::string, std::string>> provenance;

    void add_row(std::vector<Cell> row);  // throws DomainError on arity mismatch
};

enum class TableFormat { csv, markdown };

// CSV: RFC-4180 quoting, LF endings, `#` comment lines for title/provenance.
// Markdown: pipe table. Ratio cells render as percents with one decimal,
// round half away from zero; with_raw appends a full-precision column
// (six decimals) after each ratio column.
std::string render(const ReportTable& table, TableFormat format, bool with_raw = false);

// Raw material for the pair tables, so printed count fixtures can be fed
// directly.
struct PairCountRow {
    std::string first;
    std::string second;
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;
};

struct DirectedPairRow {
    std::string first;
    std::string second;
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;
    bool cross_discipline = false;
};

// All discipline pairs (zero-joint pairs included), in canonical discipline
// order. The max_first / max_second columns mark, for each discipline, the
// partner with its highest incidence; a pair marked in both directions is
// mutually maximal. Ties are all marked and noted in provenance.
ReportTable discipline_pair_table(const Corpus& corpus);
ReportTable discipline_pair_table(std::span<const PairCountRow> rows);

// Directed pairs (field, X) ordered by incidence d descending, joint count
// descending, partner code ascending; truncated to top_n.
ReportTable field_pair_ranking(const Corpus& corpus, std::string_view field, std::size_t top_n = 20);
ReportTable field_pair_ranking(std::string_view field, std::span<const PairCountRow> partners,
                               std::size_t top_n = 20);

enum class MaxMode { overall, cross_discipline };

// Per discipline, the field maximizing share_cross_field (overall) or
// share_cross_discipline (cross_discipline). Partner counts omit pairs with
// incidence below omit_below. Disciplines with no publishing field are
// omitted and listed in provenance; share ties resolve to the smallest field
// code and are noted in provenance.
ReportTable max_interdisciplinarity_report(const Corpus& corpus, MaxMode mode,
                                           double omit_below = 0.01,
                                           double partner_threshold = 0.10);

// Directed pairs with d strictly greater than min_d and the first member's
// publication count at least min_first_pubs, optionally restricted to
// cross-discipline pairs. Ordered by d descending, joint count descending,
// codes ascending.
ReportTable threshold_pair_list(const Corpus& corpus, double min_d, bool cross_discipline_only,
                                std::int64_t min_first_pubs = 100);
ReportTable threshold_pair_list(std::span<const DirectedPairRow> rows, double min_d,
                                bool cross_discipline_only, std::int64_t min_first_pubs = 100);

// Table 1 shapes: one row per discipline / per field, canonical order.
ReportTable discipline_summary_table(const Corpus& corpus);
ReportTable field_summary_table(const Corpus& corpus);

struct GraphEdge {
    std::string from;
    std::string to;
    std::int64_t joint = 0;
    Ratio d;
    Ratio e;
    Ratio avg;
};

std::vector<GraphEdge> graph_edges(const Corpus& corpus, PairLevel level, std::int64_t min_joint = 1);

// Weighted co-occurrence edge list: `from,to,joint,d,e,avg` with raw-precision
// ratios, one line per undirected pair with joint >= min_joint, canonical
// order. Feedstock for external clustering tools.
void export_graph(std::ostream& out, const Corpus& corpus, PairLevel level,
                  std::int64_t min_joint = 1);
std::string export_graph(const Corpus& corpus, PairLevel level, std::int64_t min_joint = 1);

}  // namespace crossfield
