#include "crossfield/reports.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "crossfield/csv.hpp"

namespace crossfield {

void ReportTable::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) {
        throw DomainError("report row arity " + std::to_string(row.size()) +
                          " does not match " + std::to_string(columns.size()) + " columns");
    }
    rows.push_back(std::move(row));
}

namespace {

std::string markdown_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '|') out += '\\';
        out += c;
    }
    return out;
}

std::string cell_text(const Cell& cell) {
    if (std::holds_alternative<std::int64_t>(cell)) {
        return std::to_string(std::get<std::int64_t>(cell));
    }
    if (std::holds_alternative<Ratio>(cell)) return percent_string(std::get<Ratio>(cell));
    return std::get<std::string>(cell);
}

}  // namespace

std::string render(const ReportTable& table, TableFormat format, bool with_raw) {
    std::string out;
    const bool markdown = format == TableFormat::markdown;

    if (markdown) {
        if (!table.title.empty()) out += "## " + table.title + "\n\n";
        if (!table.provenance.empty()) {
            out += "parameters:";
            for (const auto& [k, v] : table.provenance) out += " " + k + "=" + v;
            out += "\n\n";
        }
    } else {
        if (!table.title.empty()) out += "# " + table.title + "\n";
        for (const auto& [k, v] : table.provenance) out += "# " + k + "=" + v + "\n";
    }

    std::vector<std::string> header;
    for (const auto& col : table.columns) {
        header.push_back(col.name);
        if (with_raw && col.kind == ColumnKind::ratio) header.push_back(col.name + "_raw");
    }

    auto expand_row = [&](const std::vector<Cell>& row) {
        std::vector<std::string> cells;
        for (std::size_t i = 0; i < row.size(); ++i) {
            cells.push_back(cell_text(row[i]));
            if (with_raw && table.columns[i].kind == ColumnKind::ratio) {
                cells.push_back(raw_string(std::get<Ratio>(row[i])));
            }
        }
        return cells;
    };

    if (markdown) {
        auto emit = [&](const std::vector<std::string>& cells) {
            out += "|";
            for (const auto& c : cells) out += " " + markdown_escape(c) + " |";
            out += "\n";
        };
        emit(header);
        std::vector<std::string> rule(header.size(), "---");
        emit(rule);
        for (const auto& row : table.rows) emit(expand_row(row));
    } else {
        auto emit = [&](const std::vector<std::string>& cells) {
            std::vector<std::string> escaped;
            escaped.reserve(cells.size());
            for (const auto& c : cells) escaped.push_back(csv_field(c));
            out += csv_line(escaped);
        };
        emit(header);
        for (const auto& row : table.rows) emit(expand_row(row));
    }
    return out;
}

namespace {

Ratio incidence_or_zero(std::int64_t c, std::int64_t total) {
    return total > 0 ? Ratio(c, total) : Ratio(0, 1);
}

}  // namespace

ReportTable discipline_pair_table(std::span<const PairCountRow> rows) {
    // Directed maxima: for every code, the partner with the highest
    // incidence of joint publications in its own total.
    struct Best {
        Ratio best;
        bool any = false;
    };
    std::map<std::string, Best> best_of;
    auto consider = [&](const std::string& code, std::int64_t c, std::int64_t total) {
        if (total <= 0 || c <= 0) return;
        Ratio d(c, total);
        auto& slot = best_of[code];
        if (!slot.any || d > slot.best) {
            slot.best = d;
            slot.any = true;
        }
    };
    for (const auto& r : rows) {
        consider(r.first, r.c, r.a);
        consider(r.second, r.c, r.b);
    }

    ReportTable table;
    table.title = "Discipline pair incidence";
    table.provenance = {{"level", "discipline"}, {"max_marker", "*"}};
    table.columns = {{"pair", ColumnKind::code},       {"a", ColumnKind::count},
                     {"b", ColumnKind::count},         {"c", ColumnKind::count},
                     {"d", ColumnKind::ratio},         {"e", ColumnKind::ratio},
                     {"avg", ColumnKind::ratio},       {"max_for_first", ColumnKind::text},
                     {"max_for_second", ColumnKind::text}};

    std::map<std::string, int> marks;  // ties per code, for the provenance note
    for (const auto& r : rows) {
        Ratio d = incidence_or_zero(r.c, r.a);
        Ratio e = incidence_or_zero(r.c, r.b);
        Ratio avg = Ratio::half_sum(d, e);
        bool mf = false, ms = false;
        if (r.c > 0) {
            auto fit = best_of.find(r.first);
            auto sit = best_of.find(r.second);
            mf = fit != best_of.end() && fit->second.any && d == fit->second.best;
            ms = sit != best_of.end() && sit->second.any && e == sit->second.best;
        }
        if (mf) ++marks[r.first];
        if (ms) ++marks[r.second];
        table.add_row({r.first + "-" + r.second, r.a, r.b, r.c, d, e, avg,
                       std::string(mf ? "*" : ""), std::string(ms ? "*" : "")});
    }
    std::string ties;
    for (const auto& [code, n] : marks) {
        if (n > 1) ties += (ties.empty() ? "" : " ") + code;
    }
    if (!ties.empty()) table.provenance.emplace_back("max_ties", ties);
    return table;
}

ReportTable discipline_pair_table(const Corpus& corpus) {
    const auto& scheme = corpus.scheme();
    PairCountMap joint = count_discipline_pairs(corpus);
    std::vector<PairCountRow> rows;
    const std::size_t nd = scheme.discipline_count();
    for (std::size_t i = 0; i < nd; ++i) {
        for (std::size_t j = i + 1; j < nd; ++j) {
            PairCountRow row;
            row.first = scheme.disciplines()[i].code;
            row.second = scheme.disciplines()[j].code;
            row.a = corpus.discipline_publications(static_cast<int>(i));
            row.b = corpus.discipline_publications(static_cast<int>(j));
            auto it = joint.find(PairKey(row.first, row.second));
            row.c = it == joint.end() ? 0 : it->second;
            rows.push_back(std::move(row));
        }
    }
    return discipline_pair_table(rows);
}

namespace {

// d desc, joint desc, codes asc: the full chain is a total order on
// distinct directed pairs.
bool directed_less(const Ratio& da, std::int64_t ca, const std::string& fa, const std::string& sa,
                   const Ratio& db, std::int64_t cb, const std::string& fb, const std::string& sb) {
    if (da != db) return db < da;
    if (ca != cb) return cb < ca;
    if (fa != fb) return fa < fb;
    return sa < sb;
}

}  // namespace

ReportTable field_pair_ranking(std::string_view field, std::span<const PairCountRow> partners,
                               std::size_t top_n) {
    struct Entry {
        PairCountRow row;
        Ratio d, e, avg;
    };
    std::vector<Entry> entries;
    for (const auto& r : partners) {
        Entry en;
        en.row = r;
        en.d = incidence_or_zero(r.c, r.a);
        en.e = incidence_or_zero(r.c, r.b);
        en.avg = Ratio::half_sum(en.d, en.e);
        entries.push_back(std::move(en));
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
        return directed_less(x.d, x.row.c, x.row.first, x.row.second, y.d, y.row.c, y.row.first,
                             y.row.second);
    });
    if (entries.size() > top_n) entries.resize(top_n);

    ReportTable table;
    table.title = "Top pairings for " + std::string(field);
    table.provenance = {{"field", std::string(field)}, {"top_n", std::to_string(top_n)}};
    table.columns = {{"pair", ColumnKind::code}, {"a", ColumnKind::count},
                     {"b", ColumnKind::count},   {"c", ColumnKind::count},
                     {"d", ColumnKind::ratio},   {"e", ColumnKind::ratio},
                     {"avg", ColumnKind::ratio}};
    for (const auto& en : entries) {
        table.add_row({en.row.first + "_" + en.row.second, en.row.a, en.row.b, en.row.c, en.d,
                       en.e, en.avg});
    }
    return table;
}

ReportTable field_pair_ranking(const Corpus& corpus, std::string_view field, std::size_t top_n) {
    const auto& scheme = corpus.scheme();
    int f = scheme.field_index(field);
    if (f < 0) throw LookupError("unknown field code '" + std::string(field) + "'");
    std::int64_t total = corpus.field_publications(f);

    std::map<int, std::int64_t> joint;  // ordered so row construction is deterministic
    for (int pub : corpus.field_pubs(f)) {
        const auto& p = corpus.publications()[static_cast<std::size_t>(pub)];
        for (int g : p.fields) {
            if (g != f) ++joint[g];
        }
    }
    std::vector<PairCountRow> rows;
    rows.reserve(joint.size());
    for (const auto& [g, c] : joint) {
        rows.push_back({std::string(field), scheme.fields()[static_cast<std::size_t>(g)].code,
                        total, corpus.field_publications(g), c});
    }
    return field_pair_ranking(field, rows, top_n);
}

ReportTable max_interdisciplinarity_report(const Corpus& corpus, MaxMode mode, double omit_below,
                                           double partner_threshold) {
    const auto& scheme = corpus.scheme();
    std::vector<FieldProfile> profiles = all_profiles(corpus, partner_threshold, omit_below);

    ReportTable table;
    table.title = mode == MaxMode::overall
                      ? "Field with highest interdisciplinarity per discipline"
                      : "Field with highest cross-discipline interdisciplinarity per discipline";
    table.provenance = {{"mode", mode == MaxMode::overall ? "overall" : "cross_discipline"},
                        {"omit_below", std::to_string(omit_below)},
                        {"partner_threshold", std::to_string(partner_threshold)}};
    table.columns = {{"discipline", ColumnKind::code},
                     {"field", ColumnKind::code},
                     {"universities_active", ColumnKind::count},
                     {"researchers", ColumnKind::count},
                     {"publications", ColumnKind::count},
                     {"share_cross_field", ColumnKind::ratio},
                     {"share_intra_discipline", ColumnKind::ratio},
                     {"share_cross_discipline", ColumnKind::ratio},
                     {"partner_fields", ColumnKind::count},
                     {"partner_fields_over_threshold", ColumnKind::count},
                     {"partner_disciplines", ColumnKind::count},
                     {"partner_disciplines_over_threshold", ColumnKind::count}};

    std::string omitted, ties;
    for (std::size_t d = 0; d < scheme.discipline_count(); ++d) {
        const FieldProfile* best = nullptr;
        bool tie = false;
        for (const auto& prof : profiles) {
            if (scheme.discipline_of_field(scheme.field_index(prof.field)) !=
                static_cast<int>(d)) {
                continue;
            }
            const Ratio& share = mode == MaxMode::overall ? prof.share_cross_field
                                                          : prof.share_cross_discipline;
            if (!best) {
                best = &prof;
                continue;
            }
            const Ratio& best_share = mode == MaxMode::overall ? best->share_cross_field
                                                               : best->share_cross_discipline;
            if (share > best_share) {
                best = &prof;
                tie = false;
            } else if (share == best_share) {
                tie = true;
                if (prof.field < best->field) best = &prof;  // smallest code wins
            }
        }
        const std::string& disc = scheme.disciplines()[d].code;
        if (!best) {
            omitted += (omitted.empty() ? "" : " ") + disc;
            continue;
        }
        if (tie) ties += (ties.empty() ? "" : " ") + disc;
        table.add_row({disc, best->field, best->universities_active, best->headcount,
                       best->total_pubs, best->share_cross_field, best->share_intra_discipline,
                       best->share_cross_discipline, best->partner_fields,
                       best->partner_fields_over_threshold, best->partner_disciplines,
                       best->partner_disciplines_over_threshold});
    }
    if (!omitted.empty()) table.provenance.emplace_back("omitted_no_publications", omitted);
    if (!ties.empty()) table.provenance.emplace_back("share_ties", ties);
    return table;
}

ReportTable threshold_pair_list(std::span<const DirectedPairRow> rows, double min_d,
                                bool cross_discipline_only, std::int64_t min_first_pubs) {
    struct Entry {
        DirectedPairRow row;
        Ratio d, e;
    };
    std::vector<Entry> kept;
    for (const auto& r : rows) {
        if (r.a < min_first_pubs) continue;
        if (cross_discipline_only && !r.cross_discipline) continue;
        if (r.a <= 0 || r.c <= 0) continue;
        if (!incidence_greater(r.c, r.a, min_d)) continue;
        Entry en;
        en.row = r;
        en.d = Ratio(r.c, r.a);
        en.e = incidence_or_zero(r.c, r.b);
        kept.push_back(std::move(en));
    }
    std::sort(kept.begin(), kept.end(), [](const Entry& x, const Entry& y) {
        return directed_less(x.d, x.row.c, x.row.first, x.row.second, y.d, y.row.c, y.row.first,
                             y.row.second);
    });

    ReportTable table;
    table.title = "Directed pairs above incidence threshold";
    table.provenance = {{"min_d", std::to_string(min_d)},
                        {"cross_discipline_only", cross_discipline_only ? "true" : "false"},
                        {"min_first_pubs", std::to_string(min_first_pubs)}};
    table.columns = {{"pair", ColumnKind::code},
                     {"joint", ColumnKind::count},
                     {"d", ColumnKind::ratio},
                     {"e", ColumnKind::ratio}};
    for (const auto& en : kept) {
        table.add_row({en.row.first + "_" + en.row.second, en.row.c, en.d, en.e});
    }
    return table;
}

ReportTable threshold_pair_list(const Corpus& corpus, double min_d, bool cross_discipline_only,
                                std::int64_t min_first_pubs) {
    const auto& scheme = corpus.scheme();
    PairCountMap joint = count_field_pairs(corpus);
    std::vector<DirectedPairRow> rows;
    rows.reserve(joint.size() * 2);
    for (const auto& [key, c] : joint) {
        int fx = scheme.field_index(key.first);
        int fy = scheme.field_index(key.second);
        bool cross = scheme.discipline_of_field(fx) != scheme.discipline_of_field(fy);
        std::int64_t ax = corpus.field_publications(fx);
        std::int64_t ay = corpus.field_publications(fy);
        rows.push_back({key.first, key.second, ax, ay, c, cross});
        rows.push_back({key.second, key.first, ay, ax, c, cross});
    }
    return threshold_pair_list(rows, min_d, cross_discipline_only, min_first_pubs);
}

ReportTable discipline_summary_table(const Corpus& corpus) {
    const auto& scheme = corpus.scheme();
    ReportTable table;
    table.title = "Discipline summary";
    table.provenance = {{"level", "discipline"}};
    table.columns = {{"discipline", ColumnKind::code},
                     {"universities", ColumnKind::count},
                     {"staff", ColumnKind::count},
                     {"publications", ColumnKind::count},
                     {"share_with_other_disciplines", ColumnKind::ratio},
                     {"share_cross_field_within", ColumnKind::ratio}};
    for (const auto& d : scheme.disciplines()) {
        DisciplineSummary s = discipline_summary(corpus, d.code);
        table.add_row({s.discipline, s.universities, s.staff, s.pubs,
                       s.share_with_other_disciplines, s.share_cross_field_within});
    }
    return table;
}

ReportTable field_summary_table(const Corpus& corpus) {
    const auto& scheme = corpus.scheme();
    ReportTable table;
    table.title = "Field summary";
    table.provenance = {{"level", "field"}};
    table.columns = {{"field", ColumnKind::code},
                     {"discipline", ColumnKind::code},
                     {"universities", ColumnKind::count},
                     {"researchers", ColumnKind::count},
                     {"publications", ColumnKind::count}};
    for (std::size_t f = 0; f < scheme.field_count(); ++f) {
        table.add_row({scheme.fields()[f].code, scheme.fields()[f].discipline,
                       corpus.field_universities(static_cast<int>(f)),
                       corpus.field_headcount(static_cast<int>(f)),
                       corpus.field_publications(static_cast<int>(f))});
    }
    return table;
}

std::vector<GraphEdge> graph_edges(const Corpus& corpus, PairLevel level, std::int64_t min_joint) {
    const auto& scheme = corpus.scheme();
    PairCountMap joint = level == PairLevel::field ? count_field_pairs(corpus)
                                                   : count_discipline_pairs(corpus);
    std::vector<GraphEdge> out;
    for (const auto& [key, c] : joint) {
        if (c < min_joint) continue;
        std::int64_t a, b;
        if (level == PairLevel::field) {
            a = corpus.field_publications(scheme.field_index(key.first));
            b = corpus.field_publications(scheme.field_index(key.second));
        } else {
            a = corpus.discipline_publications(scheme.discipline_index(key.first));
            b = corpus.discipline_publications(scheme.discipline_index(key.second));
        }
        GraphEdge edge;
        edge.from = key.first;
        edge.to = key.second;
        edge.joint = c;
        edge.d = Ratio(c, a);
        edge.e = Ratio(c, b);
        edge.avg = Ratio::half_sum(edge.d, edge.e);
        out.push_back(std::move(edge));
    }
    return out;
}

void export_graph(std::ostream& out, const Corpus& corpus, PairLevel level,
                  std::int64_t min_joint) {
    out << "# from,to,joint,d,e,avg\n";
    for (const auto& edge : graph_edges(corpus, level, min_joint)) {
        out << csv_field(edge.from) << ',' << csv_field(edge.to) << ',' << edge.joint << ','
            << raw_string(edge.d) << ',' << raw_string(edge.e) << ',' << raw_string(edge.avg)
            << '\n';
    }
}

std::string export_graph(const Corpus& corpus, PairLevel level, std::int64_t min_joint) {
    std::ostringstream out;
    export_graph(out, corpus, level, min_joint);
    return out.str();
}

}  // namespace crossfield
