#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "lct/grammar.hpp"
#include "lct/syntax.hpp"
#include "lct/tokenize.hpp"

namespace lct {

struct MappingEntry {
    std::string original;
    std::string placeholder;  // equals original when kept
    Category category = Category::Expression;
    std::size_t tok_original = 0;
    std::size_t tok_placeholder = 0;
    std::size_t occurrences = 0;

    bool replaced() const { return placeholder != original; }
};

struct ReplacementMapping {
    std::string language;
    std::string tokenizer_id;
    std::vector<MappingEntry> entries;
    std::size_t delta_l = 0;

    std::vector<std::string> replaced_originals() const;
};

/// Assigns placeholder candidates id_0, id_1, ... in order. A candidate
/// colliding with `forbidden` (or with a reserved name) is skipped with the
/// index still advancing; a name is replaced iff the candidate is strictly
/// shorter in tokens, otherwise kept with placeholder == original. The
/// index is only consumed by an actual replacement.
ReplacementMapping assign_placeholders(const std::vector<std::pair<std::string, Category>>& names,
                                       const Tokenizer& tok,
                                       const std::unordered_set<std::string>& forbidden,
                                       const GrammarRules& rules);

/// Swaps each site's text for its placeholder, back to front. Sites must be
/// sorted and non-overlapping. Records occurrence counts into the mapping.
std::string apply_mapping(std::string_view code, const std::vector<Site>& sites,
                          ReplacementMapping& mapping);

struct Savings {
    std::size_t delta_l_unique = 0;
    std::size_t per_sample_saved = 0;
};

Savings savings_report(const ReplacementMapping& mapping);

struct RestoreResult {
    std::string code;
    std::vector<std::string> unresolved;
};

/// Rewrites every whole-word occurrence of a replaced placeholder back to
/// its original name. Placeholders absent from the text are reported in
/// `unresolved`. Total: never throws.
RestoreResult restore(std::string_view translated, const ReplacementMapping& mapping);

// Sidecar (.idmap.json) serialization, schema version 1.
std::string mapping_to_json(const ReplacementMapping& mapping);
ReplacementMapping mapping_from_json(std::string_view json_text);
void write_mapping(const ReplacementMapping& mapping, const std::filesystem::path& path);
ReplacementMapping read_mapping(const std::filesystem::path& path);

}  // namespace lct
