#ifndef DISCO_SENSE_H_
#define DISCO_SENSE_H_

#include <string_view>

#include "disco/corpus.h"
#include "disco/lexicon.h"

namespace disco {

// Replaces the senses of an explicit relation with the single most frequent
// sense of its connective. `connective` is the lexicon key of the relation's
// connective. A connective missing from the lexicon means the matcher and the
// lexicon disagree, and is reported as Error(kLookup).
DiscourseRelation AnnotateSense(DiscourseRelation relation, const ConnectiveLexicon& lexicon,
                                std::string_view connective);

// As above, with the key read from the connective tokens in `document`.
DiscourseRelation AnnotateSense(DiscourseRelation relation, const ConnectiveLexicon& lexicon,
                                const Document& document);

}  // namespace disco

#endif  // DISCO_SENSE_H_
