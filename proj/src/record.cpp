#include "snb/record.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "snb/errors.hpp"

namespace snb {

Dataset::Dataset(std::vector<Record> records) : records_(std::move(records)) {
    if (!records_.empty()) width_ = records_.front().attributes.size();
    index_.reserve(records_.size());
    for (std::size_t i = 0; i < records_.size(); ++i) {
        const Record& r = records_[i];
        if (r.attributes.size() != width_)
            throw contract_error("dataset schema mismatch: record " + std::to_string(r.id) +
                                 " has " + std::to_string(r.attributes.size()) +
                                 " attributes, expected " + std::to_string(width_));
        if (!index_.emplace(r.id, i).second)
            throw contract_error("duplicate record id " + std::to_string(r.id));
    }
}

const Record& Dataset::by_id(RecordId id) const {
    auto it = index_.find(id);
    if (it == index_.end())
        throw contract_error("unknown record id " + std::to_string(id));
    return records_[it->second];
}

namespace {

// One CSV row; handles quoted fields with "" escapes and embedded newlines.
// Returns false on end of input with no data consumed.
bool read_csv_row(std::istream& in, std::vector<std::string>& out) {
    out.clear();
    int c = in.get();
    if (c == EOF) return false;
    std::string field;
    bool quoted = false;
    while (true) {
        if (quoted) {
            if (c == EOF) throw contract_error("unterminated quoted CSV field");
            if (c == '"') {
                int next = in.get();
                if (next == '"') {
                    field.push_back('"');
                } else {
                    quoted = false;
                    c = next;
                    continue;
                }
            } else {
                field.push_back(char(c));
            }
        } else {
            if (c == EOF || c == '\n') {
                if (!field.empty() && field.back() == '\r') field.pop_back();
                out.push_back(std::move(field));
                return true;
            }
            if (c == ',') {
                out.push_back(std::move(field));
                field.clear();
            } else if (c == '"' && field.empty()) {
                quoted = true;
            } else {
                field.push_back(char(c));
            }
        }
        c = in.get();
    }
}

RecordId parse_id(const std::string& text) {
    RecordId id = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, id);
    if (ec != std::errc() || ptr != end)
        throw contract_error("bad record id field: '" + text + "'");
    return id;
}

}  // namespace

Dataset read_csv(std::istream& in, bool has_header) {
    std::vector<Record> records;
    std::vector<std::string> row;
    bool first = true;
    while (read_csv_row(in, row)) {
        if (row.size() == 1 && row[0].empty()) continue;  // blank line
        if (first && has_header) {
            first = false;
            continue;
        }
        first = false;
        if (row.empty()) continue;
        Record r;
        r.id = parse_id(row[0]);
        r.attributes.assign(row.begin() + 1, row.end());
        records.push_back(std::move(r));
    }
    if (records.empty()) throw contract_error("no records in CSV input");
    return Dataset(std::move(records));
}

Dataset read_csv_file(const std::string& path, bool has_header) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw contract_error("cannot open " + path);
    return read_csv(in, has_header);
}

namespace {

void write_field(std::ostream& out, const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) {
        out << field;
        return;
    }
    out << '"';
    for (char c : field) {
        if (c == '"') out << '"';
        out << c;
    }
    out << '"';
}

}  // namespace

void write_csv(std::ostream& out, const Dataset& ds) {
    for (const Record& r : ds.records()) {
        out << r.id;
        for (const std::string& a : r.attributes) {
            out << ',';
            write_field(out, a);
        }
        out << '\n';
    }
}

void write_csv_file(const std::string& path, const Dataset& ds) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw contract_error("cannot open " + path + " for writing");
    write_csv(out, ds);
}

}  // namespace snb
