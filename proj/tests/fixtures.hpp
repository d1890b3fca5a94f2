// Shared fixtures: the running 7-record example and the GAS decline table.
#pragma once

#include <memory>
#include <vector>

#include "snb/blocking_key.hpp"
#include "snb/record.hpp"
#include "snb/scoring.hpp"

namespace fixtures {

inline snb::Dataset table1() {
    std::vector<snb::Record> records = {
        {1, {"Cathy", "Ransom", "77111"}},
        {2, {"Catherine", "Ridley", "77093"}},
        {3, {"Cathy", "Ridley", "77093"}},
        {4, {"John", "Rogers", "78751"}},
        {5, {"J.", "Rogers", "78732"}},
        {6, {"John", "Ridley", "77093"}},
        {7, {"John", "Ridley Sr.", "77093"}},
    };
    return snb::Dataset(std::move(records));
}

inline snb::BlockingKeySpec initials_key() {
    return snb::BlockingKeySpec::parse("initials");
}

// Three blocks {1..4}, {5..8}, {9,10,11} keyed by the first attribute.
// Scores are chosen so each block's unique maximum 2-ordering is the
// ascending list, polarity selection keeps the ascending direction, and the
// forward greedy-adjacent-swapping pass fires twice:
//   boundary 1: r'=2 with f(2,5)=9 against f(4,5)=7, block loss 6-5=1;
//   boundary 2: r'=5 with f(5,9)=4 against f(8,9)=1, block loss 6-4=2, which
//               destroys the fresh f(2,5)=9 straddle (f(2,8)=0).
// Original list scores 6+7+6+1+3 = 23; the post-swap list scores 16.
struct GasDecline {
    snb::Dataset dataset;
    std::shared_ptr<snb::LookupTable> table;
    snb::ScoringHeuristic heuristic;
    snb::BlockingKeySpec key;

    GasDecline()
        : dataset(make_records()),
          table(make_table()),
          heuristic(snb::ScoringHeuristic::lookup(table)),
          key(snb::BlockingKeySpec::parse("attr:0")) {}

    static snb::Dataset make_records() {
        std::vector<snb::Record> records;
        for (snb::RecordId id = 1; id <= 4; ++id) records.push_back({id, {"a"}});
        for (snb::RecordId id = 5; id <= 8; ++id) records.push_back({id, {"b"}});
        for (snb::RecordId id = 9; id <= 11; ++id) records.push_back({id, {"c"}});
        return snb::Dataset(std::move(records));
    }

    static std::shared_ptr<snb::LookupTable> make_table() {
        auto t = std::make_shared<snb::LookupTable>();
        // block 1 internals: max 2-ordering (1,2,3,4) scoring 6
        t->set(1, 2, 2); t->set(2, 3, 2); t->set(3, 4, 2); t->set(1, 4, 1);
        // block 2 internals: max 2-ordering (5,6,7,8) scoring 6
        t->set(5, 6, 1); t->set(6, 7, 4); t->set(7, 8, 1);
        // block 3 internals: max 2-ordering (9,10,11) scoring 3
        t->set(9, 10, 2); t->set(10, 11, 1);
        // straddles and swap drivers
        t->set(4, 5, 7);  // original boundary 1 straddle
        t->set(2, 5, 9);  // boundary 1 replacement straddle
        t->set(8, 9, 1);  // original boundary 2 straddle
        t->set(5, 9, 4);  // boundary 2 replacement straddle
        return t;
    }
};

}  // namespace fixtures
