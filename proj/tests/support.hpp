#pragma once

// Helpers shared by the test binaries: corpora built from inline CSV so every
// fixture flows through the real ingestion path.

#include <sstream>
#include <string>

#include "crossfield/corpus.hpp"
#include "crossfield/field_scheme.hpp"

namespace testsupport {

inline crossfield::FieldScheme scheme_from(const std::string& csv) {
    std::istringstream in(csv);
    return crossfield::FieldScheme::load(in, "test-scheme");
}

inline crossfield::Corpus corpus_from(const std::string& scheme_csv,
                                      const std::string& researchers_csv,
                                      const std::string& publications_csv,
                                      const std::string& authorships_csv,
                                      const crossfield::LoadOptions& opts = {}) {
    std::istringstream r(researchers_csv), p(publications_csv), a(authorships_csv);
    return crossfield::Corpus::load(scheme_from(scheme_csv), r, p, a, opts);
}

inline const char* kChemScheme =
    "field_code,field_title,discipline_code,discipline_title\n"
    "CHIM/01,Analytical Chemistry,CHIM,Chemistry\n"
    "CHIM/02,Physical Chemistry,CHIM,Chemistry\n"
    "CHIM/06,Organic Chemistry,CHIM,Chemistry\n";

// Worked chemistry example: three publications, eight author slots.
//   P1 -> CHIM/01, CHIM/02, CHIM/01
//   P2 -> CHIM/01, CHIM/06
//   P3 -> CHIM/01, CHIM/02, CHIM/06
// Pair counts: (01,02)=2, (01,06)=2, (02,06)=1; CHIM/01 degree 1.0.
inline crossfield::Corpus chem_example_corpus(const crossfield::LoadOptions& opts = {}) {
    return corpus_from(kChemScheme,
                       "researcher_id,name,field_code,university_id\n"
                       "r1,Rossi,CHIM/01,U1\n"
                       "r2,Bianchi,CHIM/02,U1\n"
                       "r3,Verdi,CHIM/01,U2\n"
                       "r4,Russo,CHIM/01,U2\n"
                       "r5,Ferrari,CHIM/06,U1\n"
                       "r6,Esposito,CHIM/01,\n"
                       "r7,Romano,CHIM/02,U3\n"
                       "r8,Colombo,CHIM/06,\n",
                       "pub_id,year\n"
                       "P1,2004\n"
                       "P2,2006\n"
                       "P3,2008\n",
                       "pub_id,researcher_id\n"
                       "P1,r1\n"
                       "P1,r2\n"
                       "P1,r3\n"
                       "P2,r4\n"
                       "P2,r5\n"
                       "P3,r6\n"
                       "P3,r7\n"
                       "P3,r8\n",
                       opts);
}

// Same three publications expressed with one researcher per field; P1's
// repeated CHIM/01 slot collapses to a duplicate authorship.
inline crossfield::Corpus chem_example_three_researchers(
    const crossfield::LoadOptions& opts = {}) {
    return corpus_from(kChemScheme,
                       "researcher_id,name,field_code,university_id\n"
                       "r1,Rossi,CHIM/01,U1\n"
                       "r2,Bianchi,CHIM/02,U1\n"
                       "r3,Ferrari,CHIM/06,U2\n",
                       "pub_id,year\n"
                       "P1,2004\n"
                       "P2,2006\n"
                       "P3,2008\n",
                       "pub_id,researcher_id\n"
                       "P1,r1\n"
                       "P1,r2\n"
                       "P1,r1\n"
                       "P2,r1\n"
                       "P2,r3\n"
                       "P3,r1\n"
                       "P3,r2\n"
                       "P3,r3\n",
                       opts);
}

inline const char* kTwoDisciplineScheme =
    "field_code,field_title,discipline_code,discipline_title\n"
    "CHIM/01,Analytical Chemistry,CHIM,Chemistry\n"
    "CHIM/02,Physical Chemistry,CHIM,Chemistry\n"
    "BIO/10,Biochemistry,BIO,Biology\n";

}  // namespace testsupport
