// crossfield: co-authorship interdisciplinarity metrics over a two-level
// field classification. Subcommands ingest the scheme/researchers/
// publications/authorships files, compute pair incidences, degrees and
// profiles, and emit deterministic CSV/Markdown tables or edge lists.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "crossfield/corpus.hpp"
#include "crossfield/field_scheme.hpp"
#include "crossfield/metrics.hpp"
#include "crossfield/reports.hpp"
#include "crossfield/synth.hpp"

namespace cf = crossfield;

namespace {

struct InputOptions {
    std::string scheme;
    std::string researchers;
    std::string publications;
    std::string authorships;
    std::string years;  // "A:B", inclusive
};

struct OutputOptions {
    std::string out;  // empty = stdout
    std::string format = "csv";
    bool raw = false;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
    cmd->add_option("--scheme", in.scheme, "classification registry CSV")->required();
    cmd->add_option("--researchers", in.researchers, "researchers CSV")->required();
    cmd->add_option("--publications", in.publications, "publications CSV")->required();
    cmd->add_option("--authorships", in.authorships, "authorships CSV")->required();
    cmd->add_option("--years", in.years, "inclusive year window A:B");
}

void add_output_options(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("--out", out.out, "output file (default: stdout)");
    cmd->add_option("--format", out.format, "csv or markdown")
        ->check(CLI::IsMember({"csv", "markdown"}));
    cmd->add_flag("--raw", out.raw, "append full-precision columns to CSV ratios");
}

cf::LoadOptions load_options(const InputOptions& in) {
    cf::LoadOptions opts;
    if (!in.years.empty()) {
        auto colon = in.years.find(':');
        try {
            if (colon == std::string::npos) throw std::invalid_argument("no colon");
            opts.min_year = std::stoi(in.years.substr(0, colon));
            opts.max_year = std::stoi(in.years.substr(colon + 1));
        } catch (const std::exception&) {
            throw cf::DataError("--years expects A:B, got '" + in.years + "'");
        }
    }
    opts.diagnostics = &std::cerr;
    return opts;
}

cf::Corpus load_corpus(const InputOptions& in) {
    cf::FieldScheme scheme = cf::FieldScheme::load_file(in.scheme);
    return cf::Corpus::load_files(std::move(scheme), in.researchers, in.publications,
                                  in.authorships, load_options(in));
}

void write_output(const OutputOptions& out, const std::string& text) {
    if (out.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out.out, std::ios::binary);
    if (!file) throw cf::DataError("cannot open output file: " + out.out);
    file << text;
}

cf::TableFormat table_format(const OutputOptions& out) {
    return out.format == "markdown" ? cf::TableFormat::markdown : cf::TableFormat::csv;
}

std::string render_out(const cf::ReportTable& table, const OutputOptions& out) {
    return cf::render(table, table_format(out), out.raw);
}

cf::ReportTable profile_table(const cf::FieldProfile& p, double partner_threshold,
                              double omit_below) {
    cf::ReportTable table;
    table.title = "Interdisciplinarity profile for " + p.field;
    table.provenance = {{"field", p.field},
                        {"partner_threshold", std::to_string(partner_threshold)},
                        {"omit_below", std::to_string(omit_below)}};
    table.columns = {{"field", cf::ColumnKind::code},
                     {"universities_active", cf::ColumnKind::count},
                     {"researchers", cf::ColumnKind::count},
                     {"publications", cf::ColumnKind::count},
                     {"share_cross_field", cf::ColumnKind::ratio},
                     {"share_intra_discipline", cf::ColumnKind::ratio},
                     {"share_cross_discipline", cf::ColumnKind::ratio},
                     {"partner_fields", cf::ColumnKind::count},
                     {"partner_fields_over_threshold", cf::ColumnKind::count},
                     {"partner_disciplines", cf::ColumnKind::count},
                     {"partner_disciplines_over_threshold", cf::ColumnKind::count}};
    table.add_row({p.field, p.universities_active, p.headcount, p.total_pubs, p.share_cross_field,
                   p.share_intra_discipline, p.share_cross_discipline, p.partner_fields,
                   p.partner_fields_over_threshold, p.partner_disciplines,
                   p.partner_disciplines_over_threshold});
    return table;
}

std::string format_rho(double rho) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", rho);
    return buf;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"co-authorship interdisciplinarity metrics"};
    app.set_version_flag("--version", "crossfield 1.0.0");
    app.require_subcommand(1);

    InputOptions in;
    OutputOptions out;

    auto* validate = app.add_subcommand("validate", "check scheme and corpus, print link report");
    add_input_options(validate, in);

    auto* summary = app.add_subcommand("summary", "per-discipline (or per-field) staffing and output");
    std::string summary_level = "discipline";
    add_input_options(summary, in);
    add_output_options(summary, out);
    summary->add_option("--level", summary_level, "discipline or field")
        ->check(CLI::IsMember({"discipline", "field"}));

    auto* pairs = app.add_subcommand("pairs", "pair incidence table");
    std::string pairs_level = "discipline";
    add_input_options(pairs, in);
    add_output_options(pairs, out);
    pairs->add_option("--level", pairs_level, "discipline table or full field-level dump")
        ->check(CLI::IsMember({"discipline", "field"}));

    auto* profile = app.add_subcommand("profile", "one field's profile and top pairings");
    std::string profile_field;
    std::size_t profile_top = 20;
    double profile_partner_threshold = 0.10;
    double profile_omit_below = 0.01;
    profile->add_option("field", profile_field, "field code")->required();
    add_input_options(profile, in);
    add_output_options(profile, out);
    profile->add_option("--top", profile_top, "ranking length");
    profile->add_option("--partner-threshold", profile_partner_threshold,
                        "partner share-of-production threshold (strict >)");
    profile->add_option("--omit-below", profile_omit_below,
                        "drop partners with incidence below this floor");

    auto* maxima = app.add_subcommand("maxima", "per discipline, its most interdisciplinary field");
    std::string maxima_mode = "overall";
    double maxima_omit_below = 0.01;
    double maxima_partner_threshold = 0.10;
    add_input_options(maxima, in);
    add_output_options(maxima, out);
    maxima->add_option("--mode", maxima_mode, "overall or cross")
        ->check(CLI::IsMember({"overall", "cross"}));
    maxima->add_option("--omit-below", maxima_omit_below, "partner incidence floor");
    maxima->add_option("--partner-threshold", maxima_partner_threshold,
                       "partner share-of-production threshold (strict >)");

    auto* annex = app.add_subcommand("annex", "directed pairs above an incidence threshold");
    double annex_min_d = 0.10;
    bool annex_cross_only = false;
    std::int64_t annex_min_first_pubs = 100;
    add_input_options(annex, in);
    add_output_options(annex, out);
    annex->add_option("--min-d", annex_min_d, "keep pairs with d strictly greater");
    annex->add_flag("--cross-only", annex_cross_only, "cross-discipline pairs only");
    annex->add_option("--min-first-pubs", annex_min_first_pubs,
                      "minimum publications of the first field");

    auto* correlate = app.add_subcommand("correlate",
                                         "Spearman of headcount vs general degree over a "
                                         "discipline's fields");
    std::string correlate_discipline;
    std::int64_t correlate_min_headcount = 0;
    correlate->add_option("discipline", correlate_discipline, "discipline code")->required();
    add_input_options(correlate, in);
    add_output_options(correlate, out);
    correlate->add_option("--min-headcount", correlate_min_headcount,
                          "restrict to fields with headcount strictly greater");

    auto* graph = app.add_subcommand("graph", "weighted co-occurrence edge list");
    std::string graph_level = "field";
    std::int64_t graph_min_joint = 1;
    add_input_options(graph, in);
    graph->add_option("--out", out.out, "output file (default: stdout)");
    graph->add_option("--level", graph_level, "field or discipline")
        ->check(CLI::IsMember({"field", "discipline"}));
    graph->add_option("--min-joint", graph_min_joint, "minimum joint publications per edge");

    auto* synth = app.add_subcommand("synth", "generate a reproducible synthetic corpus");
    cf::SynthParams params;
    std::string synth_dir;
    synth->add_option("--out-dir", synth_dir, "directory for the generated CSV files")->required();
    synth->add_option("--seed", params.seed, "generator seed");
    synth->add_option("--disciplines", params.disciplines, "number of disciplines");
    synth->add_option("--fields-per-discipline", params.fields_per_discipline,
                      "fields per discipline");
    synth->add_option("--researchers-min", params.researchers_per_field.lo,
                      "min researchers per field");
    synth->add_option("--researchers-max", params.researchers_per_field.hi,
                      "max researchers per field");
    synth->add_option("--publications", params.publications, "number of publications");
    synth->add_option("--authors-min", params.authors_per_pub.lo, "min authors per publication");
    synth->add_option("--authors-max", params.authors_per_pub.hi, "max authors per publication");
    synth->add_option("--p-cross-field", params.p_cross_field,
                      "base probability a publication is cross-field");
    synth->add_option("--p-cross-discipline", params.p_cross_discipline,
                      "probability a cross-field partner sits in another discipline");
    synth->add_option("--inverse-size-bias", params.inverse_size_bias,
                      "strength of the planted small-field collaboration boost");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (validate->parsed()) {
            cf::FieldScheme scheme = cf::FieldScheme::load_file(in.scheme);
            auto violations = scheme.validate();
            for (const auto& v : violations) {
                std::cerr << "warning: " << v.subject << ": " << v.what;
                if (v.source_line) std::cerr << " (line " << v.source_line << ")";
                std::cerr << "\n";
            }
            cf::Corpus corpus = cf::Corpus::load_files(std::move(scheme), in.researchers,
                                                       in.publications, in.authorships,
                                                       load_options(in));
            const auto& report = corpus.link_report();
            std::cout << "scheme: " << corpus.scheme().field_count() << " fields, "
                      << corpus.scheme().discipline_count() << " disciplines; corpus: "
                      << corpus.researcher_count() << " researchers, "
                      << corpus.publication_count() << " publications; violations: "
                      << violations.size() << "; dropped authorships: "
                      << report.unmatched_authorships << "; excluded publications: "
                      << report.empty_publications << "\n";
            return (!violations.empty() || !report.clean()) ? 1 : 0;
        }
        if (summary->parsed()) {
            cf::Corpus corpus = load_corpus(in);
            auto table = summary_level == "field" ? cf::field_summary_table(corpus)
                                                  : cf::discipline_summary_table(corpus);
            write_output(out, render_out(table, out));
            return 0;
        }
        if (pairs->parsed()) {
            cf::Corpus corpus = load_corpus(in);
            auto table = pairs_level == "discipline"
                             ? cf::discipline_pair_table(corpus)
                             : cf::threshold_pair_list(corpus, 0.0, false, 0);
            write_output(out, render_out(table, out));
            return 0;
        }
        if (profile->parsed()) {
            cf::Corpus corpus = load_corpus(in);
            cf::FieldProfile p = cf::collaboration_profile(corpus, profile_field,
                                                           profile_partner_threshold,
                                                           profile_omit_below);
            std::string text =
                render_out(profile_table(p, profile_partner_threshold, profile_omit_below), out);
            text += "\n";
            text += render_out(cf::field_pair_ranking(corpus, profile_field, profile_top), out);
            write_output(out, text);
            return 0;
        }
        if (maxima->parsed()) {
            cf::Corpus corpus = load_corpus(in);
            auto mode = maxima_mode == "cross" ? cf::MaxMode::cross_discipline
                                               : cf::MaxMode::overall;
            auto table = cf::max_interdisciplinarity_report(corpus, mode, maxima_omit_below,
                                                            maxima_partner_threshold);
            write_output(out, render_out(table, out));
            return 0;
        }
        if (annex->parsed()) {
            cf::Corpus corpus = load_corpus(in);
            auto table = cf::threshold_pair_list(corpus, annex_min_d, annex_cross_only,
                                                 annex_min_first_pubs);
            write_output(out, render_out(table, out));
            return 0;
        }
        if (correlate->parsed()) {
            cf::Corpus corpus = load_corpus(in);
            std::vector<double> headcounts, degrees;
            for (const auto& code :
                 cf::apply_headcount_filter(corpus, correlate_discipline, correlate_min_headcount)) {
                int f = corpus.scheme().field_index(code);
                if (corpus.field_publications(f) == 0) continue;
                headcounts.push_back(static_cast<double>(corpus.field_headcount(f)));
                degrees.push_back(cf::general_degree(corpus, code).value());
            }
            if (headcounts.size() < 2) {
                throw cf::DomainError("discipline '" + correlate_discipline +
                                      "' has fewer than 2 publishing fields after the filter");
            }
            cf::ReportTable table;
            table.title = "Headcount vs degree correlation";
            table.provenance = {{"discipline", correlate_discipline},
                                {"min_headcount", std::to_string(correlate_min_headcount)}};
            table.columns = {{"discipline", cf::ColumnKind::code},
                             {"n", cf::ColumnKind::count},
                             {"rho", cf::ColumnKind::text}};
            table.add_row({correlate_discipline,
                           static_cast<std::int64_t>(headcounts.size()),
                           format_rho(cf::spearman(headcounts, degrees))});
            write_output(out, render_out(table, out));
            return 0;
        }
        if (graph->parsed()) {
            cf::Corpus corpus = load_corpus(in);
            auto level = graph_level == "discipline" ? cf::PairLevel::discipline
                                                     : cf::PairLevel::field;
            write_output(out, cf::export_graph(corpus, level, graph_min_joint));
            return 0;
        }
        if (synth->parsed()) {
            cf::SynthFiles files = cf::generate_files(params);
            std::filesystem::create_directories(synth_dir);
            auto write = [&](const std::string& name, const std::string& text) {
                std::ofstream file(std::filesystem::path(synth_dir) / name, std::ios::binary);
                if (!file) throw cf::DataError("cannot write " + name + " in " + synth_dir);
                file << text;
            };
            write("scheme.csv", files.scheme_csv);
            write("researchers.csv", files.researchers_csv);
            write("publications.csv", files.publications_csv);
            write("authorships.csv", files.authorships_csv);
            std::cerr << "wrote scheme.csv, researchers.csv, publications.csv, authorships.csv to "
                      << synth_dir << "\n";
            return 0;
        }
    } catch (const cf::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
