#pragma once

#include <cstddef>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace lct {

/// Pluggable token-length model.
class Tokenizer {
public:
    virtual ~Tokenizer() = default;
    virtual const std::string& id() const = 0;
    virtual std::size_t token_length(std::string_view text) const = 0;
};

/// Default deterministic model: text splits into maximal letter runs,
/// digit runs, and single other characters; a run of length n costs
/// ceil(n/4) tokens, every other character costs 1.
class RunTokenizer final : public Tokenizer {
public:
    const std::string& id() const override;
    std::size_t token_length(std::string_view text) const override;
};

/// Exact mode: byte-pair merges loaded from a user-supplied merges file
/// (lines of "left right" pairs, rank = line order, `#` comments).
/// Non-whitespace chunks are split into characters and merged greedily by
/// rank; each whitespace run costs one token.
class BpeTokenizer final : public Tokenizer {
public:
    explicit BpeTokenizer(const std::filesystem::path& merges_path);
    const std::string& id() const override;
    std::size_t token_length(std::string_view text) const override;

private:
    std::string id_;
    std::vector<std::pair<std::string, std::string>> merges_;
};

enum class LengthBucket { below_2000, ge_2000, ge_4000, ge_8000 };

/// Highest threshold bucket whose bound is <= token_length(code).
LengthBucket bucket(const Tokenizer& tok, std::string_view code);

std::string_view bucket_name(LengthBucket b);

}  // namespace lct
