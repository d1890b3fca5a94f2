#pragma once

#include <string>
#include <vector>

#include "snb/record.hpp"

namespace snb {

// A deterministic record -> string function. The BKV total order is plain
// lexicographic over the raw bytes of the produced string.
struct BlockingKeySpec {
    enum class Kind {
        TokenInitialsConcat,    // initial character of every token, in order
        FirstKCharsOfAttribute,
        AttributeVerbatim,
        Composite,
    };

    Kind kind = Kind::TokenInitialsConcat;
    // TokenInitialsConcat: attribute subset; empty means all attributes.
    std::vector<std::size_t> attributes;
    // FirstKCharsOfAttribute / AttributeVerbatim.
    std::size_t attribute = 0;
    std::size_t k = 0;
    // Composite: concatenation of part outputs.
    std::vector<BlockingKeySpec> parts;

    // Textual forms accepted by the CLI and config files:
    //   initials            initials:0,2        prefix:ATTR:K
    //   attr:ATTR           composite:SPEC+SPEC+...
    static BlockingKeySpec parse(const std::string& text);
    std::string to_string() const;
};

std::string apply_blocking_key(const Record& record, const BlockingKeySpec& spec);

}  // namespace snb
