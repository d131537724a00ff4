#pragma once

// Reference fixtures from the published Italian-university analysis: printed
// pair counts with their printed one-decimal percent incidences. Tests assert
// our arithmetic lands within 0.1 percentage points of every printed value
// (the source tables' own rounding is not always half-up, so string equality
// is deliberately not required).

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace fixtures {

struct RefPairRow {
    const char* first;
    const char* second;
    std::int64_t a;
    std::int64_t b;
    std::int64_t c;
    double d_pct;
    double e_pct;
    double avg_pct;
};

// All 36 discipline pairs of the national corpus. The unique pair that is
// maximal in both directions is BIO-MED.
inline const std::vector<RefPairRow>& discipline_pairs() {
    static const std::vector<RefPairRow> rows = {
        {"MAT", "FIS", 14038, 22368, 507, 3.6, 2.3, 2.9},
        {"MAT", "CHIM", 14038, 24569, 193, 1.4, 0.8, 1.1},
        {"MAT", "GEO", 14038, 4639, 39, 0.3, 0.8, 0.6},
        {"MAT", "BIO", 14038, 28021, 272, 1.9, 1.0, 1.5},
        {"MAT", "MED", 14038, 50798, 493, 3.5, 1.0, 2.2},
        {"MAT", "AGR", 14038, 10309, 37, 0.3, 0.4, 0.3},
        {"MAT", "ING_CIV", 14038, 4798, 143, 1.0, 3.0, 2.0},
        {"MAT", "ING_IND", 14038, 32086, 981, 7.0, 3.1, 5.0},
        {"FIS", "CHIM", 22368, 24569, 1392, 6.2, 5.7, 5.9},
        {"FIS", "GEO", 22368, 4639, 262, 1.2, 5.6, 3.4},
        {"FIS", "BIO", 22368, 28021, 811, 3.6, 2.9, 3.3},
        {"FIS", "MED", 22368, 50798, 1034, 4.6, 2.0, 3.3},
        {"FIS", "AGR", 22368, 10309, 122, 0.5, 1.2, 0.9},
        {"FIS", "ING_CIV", 22368, 4798, 254, 1.1, 5.3, 3.2},
        {"FIS", "ING_IND", 22368, 32086, 1154, 5.2, 3.6, 4.4},
        {"CHIM", "GEO", 24569, 4639, 226, 0.9, 4.9, 2.9},
        {"CHIM", "BIO", 24569, 28021, 2717, 11.1, 9.7, 10.4},
        {"CHIM", "MED", 24569, 50798, 1759, 7.2, 3.5, 5.3},
        {"CHIM", "AGR", 24569, 10309, 504, 2.1, 4.9, 3.5},
        {"CHIM", "ING_CIV", 24569, 4798, 157, 0.6, 3.3, 2.0},
        {"CHIM", "ING_IND", 24569, 32086, 1255, 5.1, 3.9, 4.5},
        {"GEO", "BIO", 4639, 28021, 133, 2.9, 0.5, 1.7},
        {"GEO", "MED", 4639, 50798, 160, 3.4, 0.3, 1.9},
        {"GEO", "AGR", 4639, 10309, 51, 1.1, 0.5, 0.8},
        {"GEO", "ING_CIV", 4639, 4798, 80, 1.7, 1.7, 1.7},
        {"GEO", "ING_IND", 4639, 32086, 142, 3.1, 0.4, 1.8},
        {"BIO", "MED", 28021, 50798, 7670, 27.4, 15.1, 21.2},
        {"BIO", "AGR", 28021, 10309, 1250, 4.5, 12.1, 8.3},
        {"BIO", "ING_CIV", 28021, 4798, 156, 0.6, 3.3, 1.9},
        {"BIO", "ING_IND", 28021, 32086, 496, 1.8, 1.5, 1.7},
        {"MED", "AGR", 50798, 10309, 765, 1.5, 7.4, 4.5},
        {"MED", "ING_CIV", 50798, 4798, 254, 0.5, 5.3, 2.9},
        {"MED", "ING_IND", 50798, 32086, 866, 1.7, 2.7, 2.2},
        {"AGR", "ING_CIV", 10309, 4798, 53, 0.5, 1.1, 0.8},
        {"AGR", "ING_IND", 10309, 32086, 132, 1.3, 0.4, 0.8},
        {"ING_CIV", "ING_IND", 4798, 32086, 340, 7.1, 1.1, 4.1},
    };
    return rows;
}

// Top-20 pairings of CHIM/01 (total 2319 publications) with the printed
// incidences. The printed list orders equal-count partners arbitrarily; the
// expected order below applies our total tie rule (joint count descending,
// then partner code ascending).
inline constexpr std::int64_t kChim01Pubs = 2319;

inline const std::vector<RefPairRow>& chim01_pairs() {
    static const std::vector<RefPairRow> rows = {
        {"CHIM/01", "CHIM/03", kChim01Pubs, 6544, 218, 9.4, 3.3, 6.4},
        {"CHIM/01", "CHIM/12", kChim01Pubs, 554, 126, 5.4, 22.7, 14.1},
        {"CHIM/01", "CHIM/06", kChim01Pubs, 5669, 115, 5.0, 2.0, 3.5},
        {"CHIM/01", "CHIM/02", kChim01Pubs, 5231, 111, 4.8, 2.1, 3.5},
        {"CHIM/01", "CHIM/10", kChim01Pubs, 580, 99, 4.3, 17.1, 10.7},
        {"CHIM/01", "CHIM/08", kChim01Pubs, 2713, 65, 2.8, 2.4, 2.6},
        {"CHIM/01", "BIO/10", kChim01Pubs, 6161, 60, 2.6, 1.0, 1.8},
        {"CHIM/01", "CHIM/09", kChim01Pubs, 1212, 46, 2.0, 3.8, 2.9},
        {"CHIM/01", "CHIM/07", kChim01Pubs, 2133, 35, 1.5, 1.6, 1.6},
        {"CHIM/01", "FIS/01", kChim01Pubs, 8967, 31, 1.3, 0.3, 0.8},
        {"CHIM/01", "AGR/15", kChim01Pubs, 969, 31, 1.3, 3.2, 2.3},
        {"CHIM/01", "BIO/14", kChim01Pubs, 5219, 31, 1.3, 0.6, 1.0},
        {"CHIM/01", "FIS/07", kChim01Pubs, 2671, 29, 1.3, 1.1, 1.2},
        {"CHIM/01", "CHIM/04", kChim01Pubs, 1509, 23, 1.0, 1.5, 1.3},
        {"CHIM/01", "CHIM/11", kChim01Pubs, 363, 17, 0.7, 4.7, 2.7},
        {"CHIM/01", "SECS-P/13", kChim01Pubs, 139, 16, 0.7, 11.5, 6.1},
        {"CHIM/01", "ING-IND/22", kChim01Pubs, 1931, 16, 0.7, 0.8, 0.8},
        {"CHIM/01", "MED/07", kChim01Pubs, 2092, 14, 0.6, 0.7, 0.6},
        {"CHIM/01", "GEO/06", kChim01Pubs, 745, 13, 0.6, 1.7, 1.2},
        {"CHIM/01", "AGR/16", kChim01Pubs, 904, 13, 0.6, 1.4, 1.0},
    };
    return rows;
}

// chim01_pairs() partners in the order the ranking must emit them.
inline const std::vector<std::string>& chim01_expected_order() {
    static const std::vector<std::string> order = {
        "CHIM/03", "CHIM/12", "CHIM/06", "CHIM/02", "CHIM/10", "CHIM/08", "BIO/10",
        "CHIM/09", "CHIM/07", "AGR/15",  "BIO/14",  "FIS/01",  "FIS/07",  "CHIM/04",
        "CHIM/11", "ING-IND/22", "SECS-P/13", "MED/07", "AGR/16", "GEO/06",
    };
    return order;
}

// Discipline of each partner code appearing in chim01_pairs().
inline const std::map<std::string, std::string>& chim01_partner_disciplines() {
    static const std::map<std::string, std::string> map = {
        {"CHIM/02", "CHIM"}, {"CHIM/03", "CHIM"}, {"CHIM/04", "CHIM"}, {"CHIM/06", "CHIM"},
        {"CHIM/07", "CHIM"}, {"CHIM/08", "CHIM"}, {"CHIM/09", "CHIM"}, {"CHIM/10", "CHIM"},
        {"CHIM/11", "CHIM"}, {"CHIM/12", "CHIM"}, {"BIO/10", "BIO"},   {"BIO/14", "BIO"},
        {"FIS/01", "FIS"},   {"FIS/07", "FIS"},   {"AGR/15", "AGR"},   {"AGR/16", "AGR"},
        {"SECS-P/13", "SECS_P"}, {"ING-IND/22", "ING_IND"}, {"MED/07", "MED"}, {"GEO/06", "GEO"},
    };
    return map;
}

struct RefDirectedRow {
    const char* first;
    const char* second;
    std::int64_t a;  // reconstructed from the printed incidence, consistent across rows
    std::int64_t b;
    std::int64_t c;
    double d_pct;
    double e_pct;
    bool cross_discipline;
};

// Head of the >10% directed pair list. Only the joint counts and incidences
// are printed; the totals here are the unique values consistent with every
// printed percent they participate in.
inline const std::vector<RefDirectedRow>& over_10pct_head() {
    static const std::vector<RefDirectedRow> rows = {
        {"MED/32", "MED/31", 203, 818, 99, 48.8, 12.1, false},
        {"MED/37", "MED/26", 285, 4161, 129, 45.3, 3.1, false},
        {"MED/34", "MED/26", 127, 4161, 56, 44.1, 1.3, false},
        {"FIS/04", "FIS/01", 1577, 8967, 683, 43.3, 7.6, false},
        {"MED/29", "MED/28", 453, 1526, 174, 38.4, 11.4, false},
        {"ING-IND/05", "ING-IND/04", 120, 241, 42, 35.0, 17.4, false},
        {"MED/46", "MED/09", 419, 8600, 126, 30.1, 1.5, false},
        {"AGR/17", "AGR/19", 498, 842, 149, 29.9, 17.7, false},
        {"AGR/18", "AGR/19", 467, 842, 133, 28.5, 15.8, false},
        {"MED/20", "MED/38", 262, 3429, 72, 27.5, 2.1, false},
    };
    return rows;
}

// Head of the cross-discipline >5% list, same reconstruction.
inline const std::vector<RefDirectedRow>& cross_over_5pct_head() {
    static const std::vector<RefDirectedRow> rows = {
        {"BIO/15", "CHIM/06", 713, 5669, 122, 17.1, 2.2, true},
        {"MED/49", "BIO/10", 314, 6161, 53, 16.9, 0.9, true},
        {"CHIM/08", "BIO/14", 2713, 5219, 448, 16.5, 8.6, true},
        {"MED/29", "BIO/17", 453, 1321, 70, 15.5, 5.3, true},
        {"ING-IND/22", "CHIM/07", 1931, 2133, 285, 14.8, 13.4, true},
        {"BIO/12", "MED/09", 1654, 8600, 236, 14.3, 2.7, true},
        {"BIO/19", "MED/07", 627, 2092, 89, 14.2, 4.3, true},
        {"VET/07", "BIO/14", 170, 5219, 24, 14.1, 0.5, true},
    };
    return rows;
}

}  // namespace fixtures
