#include "lct/tokenize.hpp"

#include <cctype>
#include <fstream>
#include <list>
#include <sstream>

#include "lct/errors.hpp"

namespace lct {

const std::string& RunTokenizer::id() const {
    static const std::string kId = "default";
    return kId;
}

std::size_t RunTokenizer::token_length(std::string_view text) const {
    std::size_t tokens = 0;
    std::size_t i = 0;
    while (i < text.size()) {
        unsigned char ch = static_cast<unsigned char>(text[i]);
        if (std::isalpha(ch) != 0) {
            std::size_t run = 0;
            while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i])) != 0) {
                ++i;
                ++run;
            }
            tokens += (run + 3) / 4;
        } else if (std::isdigit(ch) != 0) {
            std::size_t run = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])) != 0) {
                ++i;
                ++run;
            }
            tokens += (run + 3) / 4;
        } else {
            ++i;
            ++tokens;
        }
    }
    return tokens;
}

BpeTokenizer::BpeTokenizer(const std::filesystem::path& merges_path) {
    std::ifstream in(merges_path);
    if (!in) throw IoError("cannot open merges file: " + merges_path.string());
    id_ = "bpe:" + merges_path.filename().string();
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::string left, right;
        if (fields >> left >> right) merges_.emplace_back(left, right);
    }
}

const std::string& BpeTokenizer::id() const { return id_; }

std::size_t BpeTokenizer::token_length(std::string_view text) const {
    std::size_t tokens = 0;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i])) != 0) {
            while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])) != 0) ++i;
            ++tokens;  // one token per whitespace run
            continue;
        }
        std::size_t start = i;
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])) == 0) ++i;

        std::vector<std::string> symbols;
        for (std::size_t j = start; j < i; ++j) symbols.emplace_back(1, text[j]);
        // Apply merges in rank order until none fires.
        for (const auto& [left, right] : merges_) {
            for (std::size_t j = 0; j + 1 < symbols.size();) {
                if (symbols[j] == left && symbols[j + 1] == right) {
                    symbols[j] = left + right;
                    symbols.erase(symbols.begin() + static_cast<std::ptrdiff_t>(j) + 1);
                } else {
                    ++j;
                }
            }
        }
        tokens += symbols.size();
    }
    return tokens;
}

LengthBucket bucket(const Tokenizer& tok, std::string_view code) {
    std::size_t n = tok.token_length(code);
    if (n >= 8000) return LengthBucket::ge_8000;
    if (n >= 4000) return LengthBucket::ge_4000;
    if (n >= 2000) return LengthBucket::ge_2000;
    return LengthBucket::below_2000;
}

std::string_view bucket_name(LengthBucket b) {
    switch (b) {
        case LengthBucket::below_2000: return "below_2000";
        case LengthBucket::ge_2000: return "ge_2000";
        case LengthBucket::ge_4000: return "ge_4000";
        case LengthBucket::ge_8000: return "ge_8000";
    }
    return "?";
}

}  // namespace lct
