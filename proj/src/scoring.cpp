#include "snb/scoring.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "snb/errors.hpp"

namespace snb {

void LookupTable::set(RecordId a, RecordId b, double score) {
    if (a == b) throw contract_error("lookup table entry for a self-pair");
    if (score < 0.0) throw contract_error("negative score in lookup table");
    entries_[std::minmax(a, b)] = score;
}

double LookupTable::get(RecordId a, RecordId b) const {
    auto it = entries_.find(std::minmax(a, b));
    return it == entries_.end() ? 0.0 : it->second;
}

LookupTable LookupTable::read(std::istream& in) {
    LookupTable t;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        RecordId a, b;
        double s;
        if (!(ls >> a >> b >> s))
            throw contract_error("bad lookup table line: '" + line + "'");
        t.set(a, b, s);
    }
    return t;
}

LookupTable LookupTable::read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw contract_error("cannot open " + path);
    return read(in);
}

void LookupTable::write(std::ostream& out) const {
    for (const auto& [pair, v] : entries_)
        out << pair.first << ' ' << pair.second << ' ' << v << '\n';
}

ScoringHeuristic ScoringHeuristic::token_jaccard() {
    return {Kind::TokenJaccard, Locality::Global, nullptr, nullptr};
}

ScoringHeuristic ScoringHeuristic::cosine_tf() {
    return {Kind::CosineTf, Locality::Global, nullptr, nullptr};
}

ScoringHeuristic ScoringHeuristic::lookup(std::shared_ptr<const LookupTable> table) {
    return {Kind::LookupTable, Locality::Global, std::move(table), nullptr};
}

std::vector<std::string> record_tokens(const Record& r) {
    std::vector<std::string> tokens;
    for (const std::string& a : r.attributes) {
        std::string cur;
        for (unsigned char c : a) {
            if (std::isspace(c)) {
                if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
            } else {
                cur.push_back(char(std::tolower(c)));
            }
        }
        if (!cur.empty()) tokens.push_back(std::move(cur));
    }
    return tokens;
}

namespace {

double jaccard(const Record& r, const Record& s) {
    auto tr = record_tokens(r);
    auto ts = record_tokens(s);
    std::set<std::string> sr(tr.begin(), tr.end());
    std::set<std::string> ss(ts.begin(), ts.end());
    std::size_t inter = 0;
    for (const auto& t : sr) inter += ss.count(t);
    std::size_t uni = sr.size() + ss.size() - inter;
    if (uni == 0) return 0.0;  // two all-NULL records share no evidence
    return double(inter) / double(uni);
}

double cosine_tf(const Record& r, const Record& s) {
    std::map<std::string, double> fr, fs;
    for (auto& t : record_tokens(r)) fr[t] += 1.0;
    for (auto& t : record_tokens(s)) fs[t] += 1.0;
    double dot = 0.0, nr = 0.0, ns = 0.0;
    for (const auto& [t, c] : fr) {
        nr += c * c;
        auto it = fs.find(t);
        if (it != fs.end()) dot += c * it->second;
    }
    for (const auto& [t, c] : fs) ns += c * c;
    if (nr == 0.0 || ns == 0.0) return 0.0;
    return dot / (std::sqrt(nr) * std::sqrt(ns));
}

}  // namespace

double score_pair(const ScoringHeuristic& f, const Record& r, const Record& s) {
    if (r.id == s.id)
        throw contract_error("scoring heuristic undefined on a self-pair (id " +
                             std::to_string(r.id) + ")");
    if (f.local_key &&
        apply_blocking_key(r, *f.local_key) != apply_blocking_key(s, *f.local_key))
        return 0.0;
    switch (f.kind) {
        case ScoringHeuristic::Kind::TokenJaccard:
            return jaccard(r, s);
        case ScoringHeuristic::Kind::CosineTf:
            return cosine_tf(r, s);
        case ScoringHeuristic::Kind::LookupTable:
            if (!f.table) throw contract_error("lookup heuristic without a table");
            return f.table->get(r.id, s.id);
    }
    throw contract_error("unknown heuristic kind");
}

ScoringHeuristic localize(ScoringHeuristic f, BlockingKeySpec b) {
    f.locality = ScoringHeuristic::Locality::Local;
    f.local_key = std::make_shared<const BlockingKeySpec>(std::move(b));
    return f;
}

std::string ScoringHeuristic::fingerprint() const {
    std::ostringstream out;
    switch (kind) {
        case Kind::TokenJaccard: out << "token-jaccard"; break;
        case Kind::CosineTf: out << "cosine-tf"; break;
        case Kind::LookupTable: out << "lookup@" << table.get(); break;
    }
    out << '/' << (locality == Locality::Local ? "local" : "global");
    if (local_key) out << '/' << local_key->to_string();
    return out.str();
}

}  // namespace snb
