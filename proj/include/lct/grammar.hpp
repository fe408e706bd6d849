#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace lct {

/// Syntactic role of an identifier: Function, Declaration, Class,
/// Expression, or Parameter.
enum class Category { Function, Declaration, Class, Expression, Parameter };

char category_tag(Category c);
std::optional<Category> parse_category(std::string_view tag);

/// Per-language replacement rules: which parent node kinds make an
/// identifier occurrence eligible (and with which category), and which
/// names are reserved and must never be replaced.
struct GrammarRules {
    std::string language;
    std::map<std::string, Category> parent_kinds;
    std::unordered_set<std::string> reserved;
    std::string identifier_kind = "identifier";
};

const std::vector<std::string>& supported_languages();
bool is_supported_language(std::string_view language);

/// Loads the bundled rules for one of the five supported languages.
/// Throws UnsupportedLanguage or MalformedRules.
GrammarRules load_grammar(const std::string& language);

/// Loads rules from an external rule file (the `--rules` override).
GrammarRules load_grammar_file(const std::string& language, const std::filesystem::path& path);

/// Parses rule text in the line-oriented format:
///   PARENT <node_kind> <F|D|C|E|P>
///   NOT <identifier_text>
/// with `#` comments. Validates the GrammarRules invariants.
GrammarRules parse_rules(const std::string& language, std::string_view text);

std::optional<Category> classify_parent(const GrammarRules& rules, std::string_view parent_kind);

bool is_reserved(const GrammarRules& rules, std::string_view name);

}  // namespace lct
