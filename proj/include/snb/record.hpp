#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

namespace snb {

using RecordId = std::uint64_t;

// An identified tuple of attribute values. An empty string stands for a
// missing (NULL) value; it contributes no tokens and no initials.
struct Record {
    RecordId id = 0;
    std::vector<std::string> attributes;
};

// A set of records with unique ids and a uniform attribute count.
class Dataset {
public:
    Dataset() = default;
    explicit Dataset(std::vector<Record> records);

    const std::vector<Record>& records() const { return records_; }
    const Record& by_id(RecordId id) const;
    bool contains(RecordId id) const { return index_.count(id) != 0; }
    std::size_t size() const { return records_.size(); }
    std::size_t attribute_count() const { return width_; }
    bool empty() const { return records_.empty(); }

private:
    std::vector<Record> records_;
    std::unordered_map<RecordId, std::size_t> index_;
    std::size_t width_ = 0;
};

// CSV records: first column is the integer id, remaining columns are
// attributes. RFC-4180-style quoting ("" escapes a quote, separators and
// newlines allowed inside quoted fields).
Dataset read_csv(std::istream& in, bool has_header);
Dataset read_csv_file(const std::string& path, bool has_header);
void write_csv(std::ostream& out, const Dataset& ds);
void write_csv_file(const std::string& path, const Dataset& ds);

}  // namespace snb
