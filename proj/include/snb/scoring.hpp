#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "snb/blocking_key.hpp"
#include "snb/record.hpp"

namespace snb {

// Symmetric pair -> score map used by lookup-table heuristics and by the
// reduction constructions. Missing entries score 0.
class LookupTable {
public:
    void set(RecordId a, RecordId b, double score);
    double get(RecordId a, RecordId b) const;
    std::size_t size() const { return entries_.size(); }

    // One line per pair: "id1 id2 score"; symmetry implied.
    static LookupTable read(std::istream& in);
    static LookupTable read_file(const std::string& path);
    void write(std::ostream& out) const;

private:
    std::map<std::pair<RecordId, RecordId>, double> entries_;
};

// A symmetric, non-negative pair scorer. f(r,r) is undefined and evaluating
// it is a contract error. A local heuristic scores 0 whenever the two
// records' BKVs under local_key differ.
struct ScoringHeuristic {
    enum class Kind { TokenJaccard, CosineTf, LookupTable };
    enum class Locality { Local, Global };

    Kind kind = Kind::TokenJaccard;
    Locality locality = Locality::Global;
    std::shared_ptr<const LookupTable> table;          // Kind::LookupTable
    std::shared_ptr<const BlockingKeySpec> local_key;  // set by localize()

    bool is_local() const { return locality == Locality::Local; }
    // Identity string used to tell pass pairs apart in multi-pass specs.
    std::string fingerprint() const;

    static ScoringHeuristic token_jaccard();
    static ScoringHeuristic cosine_tf();
    static ScoringHeuristic lookup(std::shared_ptr<const LookupTable> table);
};

double score_pair(const ScoringHeuristic& f, const Record& r, const Record& s);

// Wraps f so cross-block pairs (under b) score 0. Idempotent for a heuristic
// already localized with the same key.
ScoringHeuristic localize(ScoringHeuristic f, BlockingKeySpec b);

// Lowercased whitespace-split tokens over all attributes, in order.
std::vector<std::string> record_tokens(const Record& r);

}  // namespace snb
