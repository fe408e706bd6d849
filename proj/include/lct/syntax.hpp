#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lct/grammar.hpp"

struct TSTree;
struct TSNode;

namespace lct {

/// Concrete syntax tree for one document. Owns the underlying parse tree.
class SyntaxTree {
public:
    SyntaxTree(SyntaxTree&&) noexcept;
    SyntaxTree& operator=(SyntaxTree&&) noexcept;
    ~SyntaxTree();

    uint32_t root_start_byte() const;
    uint32_t root_end_byte() const;
    std::string root_kind() const;
    bool has_error() const;

    /// Pre-order sequence of named node kinds. Two trees with equal
    /// sequences have the same shape.
    std::vector<std::string> kind_sequence() const;

    const TSTree* raw() const { return tree_; }

private:
    friend SyntaxTree parse(std::string_view code, const std::string& language);
    explicit SyntaxTree(TSTree* tree) : tree_(tree) {}
    TSTree* tree_;
};

/// One eligible identifier occurrence.
struct IdentifierCapture {
    std::string text;
    uint32_t start_byte = 0;
    uint32_t end_byte = 0;
    std::string parent_kind;
    Category category = Category::Expression;
};

/// A byte range to rewrite, with the identifier text found there.
struct Site {
    uint32_t start_byte = 0;
    uint32_t end_byte = 0;
    std::string name;
};

SyntaxTree parse(std::string_view code, const std::string& language);

/// Extracts eligible identifier occurrences in document order: identifier
/// nodes whose parent kind is acceptable and whose text is not reserved.
/// Occurrences inside error subtrees are skipped.
std::vector<IdentifierCapture> extract_identifiers(std::string_view code, const GrammarRules& rules);
std::vector<IdentifierCapture> extract_identifiers(std::string_view code, const std::string& language);

/// Distinct names in first-occurrence order, each with the category of its
/// first capture.
std::vector<std::pair<std::string, Category>> unique_names(const std::vector<IdentifierCapture>& captures);

/// Every identifier-kind node whose text is in `names`, in document order,
/// regardless of parent kind. `names` must be non-empty.
std::vector<Site> identifier_sites(const SyntaxTree& tree, std::string_view code,
                                   const std::set<std::string>& names, const GrammarRules& rules);

/// Texts of all identifier-kind nodes in the document (the forbidden set
/// for placeholder assignment).
std::unordered_set<std::string> all_identifier_texts(const SyntaxTree& tree, std::string_view code,
                                                     const GrammarRules& rules);

}  // namespace lct
