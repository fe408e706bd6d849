#include "lct/syntax.hpp"

#include <tree_sitter/api.h>

#include <functional>
#include <memory>

#include "lct/errors.hpp"

extern "C" {
const TSLanguage* tree_sitter_c();
const TSLanguage* tree_sitter_cpp();
const TSLanguage* tree_sitter_java();
const TSLanguage* tree_sitter_go();
const TSLanguage* tree_sitter_python();
}

namespace lct {

namespace {

const TSLanguage* language_handle(const std::string& language) {
    if (language == "c") return tree_sitter_c();
    if (language == "cpp") return tree_sitter_cpp();
    if (language == "java") return tree_sitter_java();
    if (language == "go") return tree_sitter_go();
    if (language == "python") return tree_sitter_python();
    return nullptr;
}

std::string_view node_text(TSNode node, std::string_view code) {
    uint32_t start = ts_node_start_byte(node);
    uint32_t end = ts_node_end_byte(node);
    if (end > code.size() || start > end) return {};
    return code.substr(start, end - start);
}

// Pre-order walk over all nodes. `in_error` is set for descendants of
// error or missing nodes.
void walk(TSNode node, bool in_error, const std::function<void(TSNode, bool)>& fn) {
    bool erroneous = in_error || ts_node_is_error(node) || ts_node_is_missing(node);
    fn(node, erroneous);
    uint32_t count = ts_node_child_count(node);
    for (uint32_t i = 0; i < count; ++i) {
        walk(ts_node_child(node, i), erroneous, fn);
    }
}

}  // namespace

SyntaxTree::SyntaxTree(SyntaxTree&& other) noexcept : tree_(other.tree_) {
    other.tree_ = nullptr;
}

SyntaxTree& SyntaxTree::operator=(SyntaxTree&& other) noexcept {
    if (this != &other) {
        if (tree_ != nullptr) ts_tree_delete(tree_);
        tree_ = other.tree_;
        other.tree_ = nullptr;
    }
    return *this;
}

SyntaxTree::~SyntaxTree() {
    if (tree_ != nullptr) ts_tree_delete(tree_);
}

uint32_t SyntaxTree::root_start_byte() const { return ts_node_start_byte(ts_tree_root_node(tree_)); }

uint32_t SyntaxTree::root_end_byte() const { return ts_node_end_byte(ts_tree_root_node(tree_)); }

std::string SyntaxTree::root_kind() const { return ts_node_type(ts_tree_root_node(tree_)); }

bool SyntaxTree::has_error() const { return ts_node_has_error(ts_tree_root_node(tree_)); }

std::vector<std::string> SyntaxTree::kind_sequence() const {
    std::vector<std::string> kinds;
    walk(ts_tree_root_node(tree_), false, [&](TSNode node, bool) {
        if (ts_node_is_named(node)) kinds.emplace_back(ts_node_type(node));
    });
    return kinds;
}

SyntaxTree parse(std::string_view code, const std::string& language) {
    const TSLanguage* lang = language_handle(language);
    if (lang == nullptr) {
        if (!is_supported_language(language)) throw UnsupportedLanguage(language);
        throw ParserUnavailable("no parser for language: " + language);
    }
    std::unique_ptr<TSParser, decltype(&ts_parser_delete)> parser(ts_parser_new(),
                                                                  &ts_parser_delete);
    if (!ts_parser_set_language(parser.get(), lang)) {
        throw ParserUnavailable("parser/grammar version mismatch for: " + language);
    }
    TSTree* tree = ts_parser_parse_string(parser.get(), nullptr, code.data(),
                                          static_cast<uint32_t>(code.size()));
    if (tree == nullptr) throw ParserUnavailable("parse failed for language: " + language);
    return SyntaxTree(tree);
}

std::vector<IdentifierCapture> extract_identifiers(std::string_view code,
                                                   const GrammarRules& rules) {
    SyntaxTree tree = parse(code, rules.language);
    std::vector<IdentifierCapture> captures;
    walk(ts_tree_root_node(tree.raw()), false, [&](TSNode node, bool in_error) {
        if (in_error) return;
        if (rules.identifier_kind != ts_node_type(node)) return;
        TSNode parent = ts_node_parent(node);
        if (ts_node_is_null(parent)) return;
        auto category = classify_parent(rules, ts_node_type(parent));
        if (!category) return;
        std::string_view text = node_text(node, code);
        if (text.empty() || is_reserved(rules, text)) return;
        captures.push_back(IdentifierCapture{std::string(text), ts_node_start_byte(node),
                                             ts_node_end_byte(node), ts_node_type(parent),
                                             *category});
    });
    return captures;
}

std::vector<IdentifierCapture> extract_identifiers(std::string_view code,
                                                   const std::string& language) {
    return extract_identifiers(code, load_grammar(language));
}

std::vector<std::pair<std::string, Category>> unique_names(
    const std::vector<IdentifierCapture>& captures) {
    std::vector<std::pair<std::string, Category>> names;
    std::unordered_set<std::string> seen;
    for (const auto& cap : captures) {
        if (seen.insert(cap.text).second) names.emplace_back(cap.text, cap.category);
    }
    return names;
}

std::vector<Site> identifier_sites(const SyntaxTree& tree, std::string_view code,
                                   const std::set<std::string>& names,
                                   const GrammarRules& rules) {
    if (names.empty()) throw Error("identifier_sites: names must be non-empty");
    std::vector<Site> sites;
    walk(ts_tree_root_node(tree.raw()), false, [&](TSNode node, bool) {
        if (rules.identifier_kind != ts_node_type(node)) return;
        std::string_view text = node_text(node, code);
        if (names.count(std::string(text)) == 0) return;
        sites.push_back(Site{ts_node_start_byte(node), ts_node_end_byte(node), std::string(text)});
    });
    return sites;
}

std::unordered_set<std::string> all_identifier_texts(const SyntaxTree& tree, std::string_view code,
                                                     const GrammarRules& rules) {
    std::unordered_set<std::string> texts;
    walk(ts_tree_root_node(tree.raw()), false, [&](TSNode node, bool) {
        if (rules.identifier_kind != ts_node_type(node)) return;
        std::string_view text = node_text(node, code);
        if (!text.empty()) texts.insert(std::string(text));
    });
    return texts;
}

}  // namespace lct
