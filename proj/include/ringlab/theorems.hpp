#pragma once

#include <chrono>

#include "ringlab/classify.hpp"
#include "ringlab/corpus.hpp"

namespace ringlab {

enum class Verdict { Pass, Fail, HypothesisNotMet, SkippedSize };
const char* to_string(Verdict v);

struct TheoremReport {
    std::string theorem_id;
    std::string subject;  // corpus expression
    Verdict verdict = Verdict::Pass;
    std::vector<int> witness;  // element indices reproducing a failure
    std::vector<std::string> witness_names;
    std::string note;
    std::chrono::microseconds elapsed{0};
};

struct TheoremInfo {
    std::string id;
    std::string statement;  // one-line synopsis of the checked claim
};

// All registered statement ids, in presentation order.
const std::vector<TheoremInfo>& theorem_registry();
bool is_known_theorem(const std::string& id);

// Evaluates one statement against every corpus item. Items whose hypotheses
// do not apply yield HypothesisNotMet (never a vacuous pass); skipped items
// yield SkippedSize. Unknown ids raise UsageError.
std::vector<TheoremReport> verify(const std::string& theorem_id,
                                  const std::vector<CorpusItem>& corpus,
                                  SetsProvider& sets, int jobs = 1);

// Every registered statement over the corpus, reports grouped by statement
// in registry order. jobs > 1 parallelizes over corpus items; output order
// and content are identical either way.
std::vector<TheoremReport> verify_all(const std::vector<CorpusItem>& corpus,
                                      SetsProvider& sets, int jobs = 1);

struct VerifySummary {
    int pass = 0;
    int fail = 0;
    int hypothesis_not_met = 0;
    int skipped = 0;
};
VerifySummary summarize(const std::vector<TheoremReport>& reports);

}  // namespace ringlab
