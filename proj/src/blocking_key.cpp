#include "snb/blocking_key.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "snb/errors.hpp"

namespace snb {

namespace {

void check_attr(const Record& r, std::size_t idx) {
    if (idx >= r.attributes.size())
        throw contract_error("blocking key attribute index " + std::to_string(idx) +
                             " out of range for schema width " +
                             std::to_string(r.attributes.size()));
}

void append_token_initials(const std::string& value, std::string& out) {
    bool in_token = false;
    for (unsigned char c : value) {
        if (std::isspace(c)) {
            in_token = false;
        } else if (!in_token) {
            out.push_back(char(c));
            in_token = true;
        }
    }
}

std::size_t parse_index(const std::string& text) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw contract_error("bad index in blocking key spec: '" + text + "'");
    return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

}  // namespace

std::string apply_blocking_key(const Record& record, const BlockingKeySpec& spec) {
    std::string out;
    switch (spec.kind) {
        case BlockingKeySpec::Kind::TokenInitialsConcat: {
            if (spec.attributes.empty()) {
                for (const std::string& a : record.attributes) append_token_initials(a, out);
            } else {
                for (std::size_t idx : spec.attributes) {
                    check_attr(record, idx);
                    append_token_initials(record.attributes[idx], out);
                }
            }
            break;
        }
        case BlockingKeySpec::Kind::FirstKCharsOfAttribute: {
            check_attr(record, spec.attribute);
            const std::string& a = record.attributes[spec.attribute];
            out = a.substr(0, spec.k);
            break;
        }
        case BlockingKeySpec::Kind::AttributeVerbatim: {
            check_attr(record, spec.attribute);
            out = record.attributes[spec.attribute];
            break;
        }
        case BlockingKeySpec::Kind::Composite: {
            for (const BlockingKeySpec& part : spec.parts)
                out += apply_blocking_key(record, part);
            break;
        }
    }
    return out;
}

BlockingKeySpec BlockingKeySpec::parse(const std::string& text) {
    BlockingKeySpec spec;
    if (text == "initials") {
        spec.kind = Kind::TokenInitialsConcat;
        return spec;
    }
    if (text.rfind("initials:", 0) == 0) {
        spec.kind = Kind::TokenInitialsConcat;
        for (const std::string& p : split(text.substr(9), ','))
            spec.attributes.push_back(parse_index(p));
        return spec;
    }
    if (text.rfind("prefix:", 0) == 0) {
        auto parts = split(text.substr(7), ':');
        if (parts.size() != 2)
            throw contract_error("prefix key expects prefix:ATTR:K, got '" + text + "'");
        spec.kind = Kind::FirstKCharsOfAttribute;
        spec.attribute = parse_index(parts[0]);
        spec.k = parse_index(parts[1]);
        return spec;
    }
    if (text.rfind("attr:", 0) == 0) {
        spec.kind = Kind::AttributeVerbatim;
        spec.attribute = parse_index(text.substr(5));
        return spec;
    }
    if (text.rfind("composite:", 0) == 0) {
        spec.kind = Kind::Composite;
        for (const std::string& p : split(text.substr(10), '+'))
            spec.parts.push_back(parse(p));
        if (spec.parts.empty())
            throw contract_error("composite key needs at least one part");
        return spec;
    }
    throw contract_error("unknown blocking key spec '" + text + "'");
}

std::string BlockingKeySpec::to_string() const {
    std::ostringstream out;
    switch (kind) {
        case Kind::TokenInitialsConcat:
            out << "initials";
            if (!attributes.empty()) {
                out << ':';
                for (std::size_t i = 0; i < attributes.size(); ++i) {
                    if (i) out << ',';
                    out << attributes[i];
                }
            }
            break;
        case Kind::FirstKCharsOfAttribute:
            out << "prefix:" << attribute << ':' << k;
            break;
        case Kind::AttributeVerbatim:
            out << "attr:" << attribute;
            break;
        case Kind::Composite:
            out << "composite:";
            for (std::size_t i = 0; i < parts.size(); ++i) {
                if (i) out << '+';
                out << parts[i].to_string();
            }
            break;
    }
    return out.str();
}

}  // namespace snb
