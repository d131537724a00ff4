#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "crossfield/reports.hpp"
#include "crossfield/synth.hpp"
#include "fixtures.hpp"
#include "support.hpp"

using namespace crossfield;
using testsupport::corpus_from;

namespace {

std::string cell(const ReportTable& table, std::size_t row, const std::string& column) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (table.columns[c].name != column) continue;
        const Cell& value = table.rows.at(row).at(c);
        if (std::holds_alternative<std::int64_t>(value)) {
            return std::to_string(std::get<std::int64_t>(value));
        }
        if (std::holds_alternative<Ratio>(value)) return percent_string(std::get<Ratio>(value));
        return std::get<std::string>(value);
    }
    REQUIRE(false);
    return {};
}

double ratio_pct(const ReportTable& table, std::size_t row, const std::string& column) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (table.columns[c].name == column) {
            return std::get<Ratio>(table.rows.at(row).at(c)).value() * 100.0;
        }
    }
    REQUIRE(false);
    return 0;
}

}  // namespace

TEST_CASE("percent rendering") {
    CHECK(percent_string(Ratio(2, 3)) == "66.7%");
    CHECK(percent_string(Ratio(507, 14038)) == "3.6%");
    CHECK(percent_string(Ratio(0, 1)) == "0.0%");
    CHECK(percent_string(Ratio(1, 1)) == "100.0%");
    CHECK(percent_string(Ratio(3, 2000)) == "0.2%");  // 0.15% rounds away from zero
    CHECK(percent_string(Ratio(1, 400)) == "0.3%");   // 0.25% likewise
    CHECK(raw_string(Ratio(2, 3)) == "0.666667");
}

TEST_CASE("csv rendering quotes and stays machine-readable") {
    ReportTable table;
    table.title = "T";
    table.provenance = {{"k", "v"}};
    table.columns = {{"name", ColumnKind::text}, {"share", ColumnKind::ratio}};
    table.add_row({std::string("a,b \"x\""), Ratio(2, 3)});
    CHECK(render(table, TableFormat::csv) ==
          "# T\n# k=v\nname,share\n\"a,b \"\"x\"\"\",66.7%\n");
    CHECK(render(table, TableFormat::csv, true) ==
          "# T\n# k=v\nname,share,share_raw\n\"a,b \"\"x\"\"\",66.7%,0.666667\n");
}

TEST_CASE("markdown rendering escapes pipes") {
    ReportTable table;
    table.title = "T";
    table.columns = {{"name", ColumnKind::text}, {"n", ColumnKind::count}};
    table.add_row({std::string("a|b"), std::int64_t{3}});
    CHECK(render(table, TableFormat::markdown) ==
          "## T\n\n| name | n |\n| --- | --- |\n| a\\|b | 3 |\n");
}

TEST_CASE("empty table renders header only") {
    ReportTable table;
    table.columns = {{"x", ColumnKind::count}};
    CHECK(render(table, TableFormat::csv) == "x\n");
}

TEST_CASE("row arity is checked") {
    ReportTable table;
    table.columns = {{"x", ColumnKind::count}};
    CHECK_THROWS_AS(table.add_row({std::int64_t{1}, std::int64_t{2}}), DomainError);
}

TEST_CASE("discipline pair table from reference counts") {
    auto& rows = fixtures::discipline_pairs();
    std::vector<PairCountRow> input;
    for (const auto& r : rows) input.push_back({r.first, r.second, r.a, r.b, r.c});
    auto table = discipline_pair_table(input);
    REQUIRE(table.rows.size() == 36);

    std::size_t both = 0, both_row = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(std::abs(ratio_pct(table, i, "d") - rows[i].d_pct) <= 0.1);
        CHECK(std::abs(ratio_pct(table, i, "e") - rows[i].e_pct) <= 0.1);
        CHECK(std::abs(ratio_pct(table, i, "avg") - rows[i].avg_pct) <= 0.1);
        if (cell(table, i, "max_for_first") == "*" && cell(table, i, "max_for_second") == "*") {
            ++both;
            both_row = i;
        }
    }
    CHECK(both == 1);  // exactly one mutually-maximal pair
    CHECK(cell(table, both_row, "pair") == "BIO-MED");
}

TEST_CASE("discipline pair table covers all pairs of the scheme") {
    std::string scheme = "field_code,field_title,discipline_code\n";
    for (int d = 1; d <= 9; ++d) {
        scheme += "F" + std::to_string(d) + "/01,t,D" + std::to_string(d) + "\n";
    }
    auto corpus = corpus_from(scheme, "researcher_id,name,field_code\n", "pub_id,year\n",
                              "pub_id,researcher_id\n");
    auto table = discipline_pair_table(corpus);
    CHECK(table.rows.size() == 36);  // 9 choose 2, zero-joint pairs included
}

TEST_CASE("two disciplines with no joint publications produce one zero row") {
    auto corpus = corpus_from(testsupport::kTwoDisciplineScheme,
                              "researcher_id,name,field_code\nr1,,CHIM/01\nr2,,BIO/10\n",
                              "pub_id,year\nP1,\nP2,\n",
                              "pub_id,researcher_id\nP1,r1\nP2,r2\n");
    auto table = discipline_pair_table(corpus);
    REQUIRE(table.rows.size() == 1);
    CHECK(cell(table, 0, "pair") == "CHIM-BIO");  // canonical discipline order, not lexicographic
    CHECK(cell(table, 0, "c") == "0");
    CHECK(cell(table, 0, "d") == "0.0%");
    CHECK(cell(table, 0, "e") == "0.0%");
    CHECK(cell(table, 0, "max_for_first").empty());
}

TEST_CASE("field pair ranking follows the printed list under the total tie rule") {
    auto& rows = fixtures::chim01_pairs();
    std::vector<PairCountRow> input;
    for (const auto& r : rows) input.push_back({r.first, r.second, r.a, r.b, r.c});
    auto table = field_pair_ranking("CHIM/01", input, 20);
    REQUIRE(table.rows.size() == 20);
    CHECK(cell(table, 0, "pair") == "CHIM/01_CHIM/03");
    CHECK(std::abs(ratio_pct(table, 0, "d") - 9.4) <= 0.1);
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        CHECK(cell(table, i, "pair") ==
              "CHIM/01_" + fixtures::chim01_expected_order()[i]);
    }
}

TEST_CASE("ranking truncates and handles missing partners") {
    auto& rows = fixtures::chim01_pairs();
    std::vector<PairCountRow> input;
    for (const auto& r : rows) input.push_back({r.first, r.second, r.a, r.b, r.c});
    CHECK(field_pair_ranking("CHIM/01", input, 5).rows.size() == 5);
    CHECK(field_pair_ranking("CHIM/01", std::vector<PairCountRow>{}).rows.empty());

    auto corpus = corpus_from(testsupport::kChemScheme,
                              "researcher_id,name,field_code\nr1,,CHIM/01\n",
                              "pub_id,year\nP1,\n", "pub_id,researcher_id\nP1,r1\n");
    CHECK(field_pair_ranking(corpus, "CHIM/01").rows.empty());
    CHECK_THROWS_AS(field_pair_ranking(corpus, "XYZ/99"), LookupError);
}

TEST_CASE("equal incidence and joint break ties by code") {
    std::vector<PairCountRow> input = {
        {"F", "ZZ", 10, 7, 3},
        {"F", "AA", 10, 9, 3},
    };
    auto table = field_pair_ranking("F", input, 20);
    CHECK(cell(table, 0, "pair") == "F_AA");
    CHECK(cell(table, 1, "pair") == "F_ZZ");
}

TEST_CASE("ranking on the corpus path matches the chemistry counts") {
    auto corpus = testsupport::chem_example_corpus();
    auto table = field_pair_ranking(corpus, "CHIM/01");
    REQUIRE(table.rows.size() == 2);
    CHECK(cell(table, 0, "pair") == "CHIM/01_CHIM/02");  // both joint 2, code ascending
    CHECK(cell(table, 0, "c") == "2");
    CHECK(cell(table, 1, "pair") == "CHIM/01_CHIM/06");
    CHECK(ratio_pct(table, 0, "d") == doctest::Approx(200.0 / 3).epsilon(1e-9));
}

TEST_CASE("maxima report picks the forced maximum") {
    // F1 publishes only cross-field (intra-discipline); B1 gives D2 a field
    auto corpus = corpus_from(
        "field_code,field_title,discipline_code\nF1,t,D1\nF2,t,D1\nB1,t,D2\n",
        "researcher_id,name,field_code\nr1,,F1\nr2,,F2\nr3,,B1\n",
        "pub_id,year\nP1,\nP2,\nP3,\n",
        "pub_id,researcher_id\nP1,r1\nP1,r2\nP2,r1\nP2,r2\nP3,r3\n");
    auto table = max_interdisciplinarity_report(corpus, MaxMode::overall);
    REQUIRE(table.rows.size() == 2);
    CHECK(cell(table, 0, "discipline") == "D1");
    CHECK(cell(table, 0, "field") == "F1");  // share 1.0, tie with F2 broken by code
    CHECK(cell(table, 0, "share_cross_field") == "100.0%");

    bool tie_noted = false;
    for (const auto& [k, v] : table.provenance) tie_noted |= (k == "share_ties");
    CHECK(tie_noted);  // F1 and F2 both sit at 1.0
}

TEST_CASE("maxima mode switch selects different fields") {
    // FA: 2 cross-field pubs, both intra-discipline -> overall max
    // FB: 1 cross-discipline pub out of 2 -> cross-discipline max
    auto corpus = corpus_from(
        "field_code,field_title,discipline_code\nFA,t,D1\nFC,t,D1\nFB,t,D1\nX1,t,D2\n",
        "researcher_id,name,field_code\nr1,,FA\nr2,,FC\nr3,,FB\nr4,,X1\n",
        "pub_id,year\nP1,\nP2,\nP3,\nP4,\n",
        "pub_id,researcher_id\n"
        "P1,r1\nP1,r2\n"
        "P2,r1\nP2,r2\n"
        "P3,r3\nP3,r4\n"
        "P4,r3\n");
    auto overall = max_interdisciplinarity_report(corpus, MaxMode::overall);
    auto cross = max_interdisciplinarity_report(corpus, MaxMode::cross_discipline);
    CHECK(cell(overall, 0, "field") == "FA");  // share_cross_field 1.0 beats FB's 0.5
    CHECK(cell(cross, 0, "field") == "FB");    // share_cross_discipline 0.5 beats FA's 0
}

TEST_CASE("maxima omits disciplines without publishing fields") {
    auto corpus = corpus_from(testsupport::kTwoDisciplineScheme,
                              "researcher_id,name,field_code\nr1,,CHIM/01\nr2,,CHIM/02\n",
                              "pub_id,year\nP1,\n", "pub_id,researcher_id\nP1,r1\nP1,r2\n");
    auto table = max_interdisciplinarity_report(corpus, MaxMode::overall);
    REQUIRE(table.rows.size() == 1);
    CHECK(cell(table, 0, "discipline") == "CHIM");
    bool noted = false;
    for (const auto& [k, v] : table.provenance) {
        if (k == "omitted_no_publications") {
            noted = true;
            CHECK(v == "BIO");
        }
    }
    CHECK(noted);
}

TEST_CASE("threshold list reproduces the reconstructed reference head") {
    auto& rows = fixtures::over_10pct_head();
    std::vector<DirectedPairRow> input;
    for (const auto& r : rows) input.push_back({r.first, r.second, r.a, r.b, r.c, r.cross_discipline});
    auto table = threshold_pair_list(input, 0.10, false, 100);
    REQUIRE(table.rows.size() == rows.size());
    CHECK(cell(table, 0, "pair") == "MED/32_MED/31");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(cell(table, i, "pair") ==
              std::string(rows[i].first) + "_" + rows[i].second);
        CHECK(std::abs(ratio_pct(table, i, "d") - rows[i].d_pct) <= 0.1);
        CHECK(std::abs(ratio_pct(table, i, "e") - rows[i].e_pct) <= 0.1);
    }
}

TEST_CASE("threshold semantics are strict") {
    std::vector<DirectedPairRow> input = {{"A", "B", 10, 10, 1, false}};  // d = 10% exactly
    CHECK(threshold_pair_list(input, 0.10, false, 0).rows.empty());
    CHECK(threshold_pair_list(input, 0.0999, false, 0).rows.size() == 1);
    CHECK(threshold_pair_list(input, 1.0, false, 0).rows.empty());  // d <= 1 always
    CHECK(threshold_pair_list(input, 0.05, false, 11).rows.empty());  // first-pubs floor
}

TEST_CASE("cross-only filter on a one-discipline corpus is empty") {
    auto corpus = testsupport::chem_example_corpus();
    CHECK(threshold_pair_list(corpus, 0.0, true, 0).rows.empty());
}

TEST_CASE("zero thresholds enumerate exactly the realized directed pairs") {
    SynthParams params;
    params.seed = 11;
    params.disciplines = 2;
    params.fields_per_discipline = 3;
    params.researchers_per_field = {2, 6};
    params.publications = 120;
    params.authors_per_pub = {1, 4};
    params.p_cross_field = 0.5;
    params.p_cross_discipline = 0.5;
    auto [corpus, truth] = generate(params);

    auto table = threshold_pair_list(corpus, 0.0, false, 0);
    auto counts = count_field_pairs(corpus);
    CHECK(table.rows.size() == counts.size() * 2);
    std::set<std::string> emitted;
    for (std::size_t i = 0; i < table.rows.size(); ++i) emitted.insert(cell(table, i, "pair"));
    for (const auto& [key, c] : counts) {
        CHECK(emitted.count(key.first + "_" + key.second) == 1);
        CHECK(emitted.count(key.second + "_" + key.first) == 1);
    }
}

TEST_CASE("summary tables mirror corpus stats") {
    auto corpus = testsupport::chem_example_corpus();
    auto disc = discipline_summary_table(corpus);
    REQUIRE(disc.rows.size() == 1);
    CHECK(cell(disc, 0, "discipline") == "CHIM");
    CHECK(cell(disc, 0, "publications") == "3");
    CHECK(cell(disc, 0, "share_with_other_disciplines") == "0.0%");
    CHECK(cell(disc, 0, "share_cross_field_within") == "100.0%");

    auto fields = field_summary_table(corpus);
    REQUIRE(fields.rows.size() == 3);
    CHECK(cell(fields, 0, "field") == "CHIM/01");
    CHECK(cell(fields, 0, "researchers") == "4");
}

TEST_CASE("graph export on the chemistry example") {
    auto corpus = testsupport::chem_example_corpus();
    CHECK(export_graph(corpus, PairLevel::field) ==
          "# from,to,joint,d,e,avg\n"
          "CHIM/01,CHIM/02,2,0.666667,1.000000,0.833333\n"
          "CHIM/01,CHIM/06,2,0.666667,1.000000,0.833333\n"
          "CHIM/02,CHIM/06,1,0.500000,0.500000,0.500000\n");
    CHECK(graph_edges(corpus, PairLevel::field, 2).size() == 2);
    CHECK(graph_edges(corpus, PairLevel::discipline).empty());
}

TEST_CASE("rendering counts is lossless and ratios round-trip through raw columns") {
    ReportTable table;
    table.columns = {{"n", ColumnKind::count}, {"r", ColumnKind::ratio}};
    table.add_row({std::int64_t{987654321}, Ratio(1, 7)});
    std::string csv = render(table, TableFormat::csv, true);
    CHECK(csv.find("987654321") != std::string::npos);
    CHECK(csv.find("0.142857") != std::string::npos);
    CHECK(std::abs(std::stod("0.142857") - Ratio(1, 7).value()) < 1e-6);
}
