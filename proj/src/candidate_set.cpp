#include "snb/candidate_set.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>

#include "snb/errors.hpp"

namespace snb {

IdPair make_id_pair(RecordId a, RecordId b) {
    if (a == b)
        throw contract_error("self-pair (" + std::to_string(a) + "," + std::to_string(b) + ")");
    return a < b ? IdPair{a, b} : IdPair{b, a};
}

bool CandidateSet::contains(const IdPair& p) const {
    return std::binary_search(pairs.begin(), pairs.end(), p);
}

void canonicalize_pairs(std::vector<IdPair>& pairs) {
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
}

namespace {

std::string format_score(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

void write_pairs(std::ostream& out, std::span<const IdPair> pairs,
                 const std::function<double(const IdPair&)>* scorer) {
    for (const IdPair& p : pairs) {
        out << p.lo << ',' << p.hi;
        if (scorer) out << ',' << format_score((*scorer)(p));
        out << '\n';
    }
}

std::vector<IdPair> read_pairs(std::istream& in) {
    std::vector<IdPair> pairs;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        RecordId a = 0, b = 0;
        const char* p = line.data();
        const char* end = p + line.size();
        auto r1 = std::from_chars(p, end, a);
        if (r1.ec != std::errc() || r1.ptr == end || *r1.ptr != ',')
            throw contract_error("bad pair line: '" + line + "'");
        auto r2 = std::from_chars(r1.ptr + 1, end, b);
        if (r2.ec != std::errc())
            throw contract_error("bad pair line: '" + line + "'");
        pairs.push_back(make_id_pair(a, b));
    }
    canonicalize_pairs(pairs);
    return pairs;
}

}  // namespace snb
