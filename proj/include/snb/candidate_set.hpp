#pragma once

#include <compare>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "snb/record.hpp"

namespace snb {

// Unordered record pair stored canonically as (lo, hi), lo < hi.
struct IdPair {
    RecordId lo = 0;
    RecordId hi = 0;
    auto operator<=>(const IdPair&) const = default;
};

// Canonicalizes; a == b is a contract error (no self-pairs).
IdPair make_id_pair(RecordId a, RecordId b);

// Candidate set: sorted unique pairs plus their aggregate score.
struct CandidateSet {
    std::vector<IdPair> pairs;
    double score = 0.0;

    bool contains(const IdPair& p) const;
};

// Sorts and dedupes in place.
void canonicalize_pairs(std::vector<IdPair>& pairs);

// "id1,id2" per line, ascending ids; optional third field per-pair score.
void write_pairs(std::ostream& out, std::span<const IdPair> pairs,
                 const std::function<double(const IdPair&)>* scorer = nullptr);
std::vector<IdPair> read_pairs(std::istream& in);

}  // namespace snb
