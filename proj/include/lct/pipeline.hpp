#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "lct/grammar.hpp"
#include "lct/rewrite.hpp"
#include "lct/tokenize.hpp"
#include "lct/translate.hpp"

namespace lct {

enum class Mode { NoRep, IdRep };

using CategorySet = std::set<Category>;

CategorySet all_categories();

struct PipelineResult {
    std::string original;
    std::string compacted;
    std::string translated;
    std::string raw_response;
    std::string restored;
    ReplacementMapping mapping;
    std::size_t tokens_norep = 0;
    std::size_t tokens_idrep = 0;
    LengthBucket bucket = LengthBucket::below_2000;
    std::vector<std::string> unresolved;
};

struct CompactResult {
    std::string compacted;
    ReplacementMapping mapping;
};

/// Replacement stage only: extract, filter by category, assign
/// placeholders, apply.
CompactResult compact(const std::string& code, const GrammarRules& rules,
                      const CategorySet& categories, const Tokenizer& tok);

/// Full pipeline: replace (in IdRep mode), translate, restore. Errors are
/// rethrown as StageError naming the failing stage.
PipelineResult run(const std::string& code, const std::string& src, const std::string& tgt,
                   Mode mode, const CategorySet& categories, const Tokenizer& tok,
                   Provider& provider);

/// One run per category subset, identical inputs otherwise.
std::vector<PipelineResult> ablate(const std::string& code, const std::string& src,
                                   const std::string& tgt,
                                   const std::vector<CategorySet>& category_sets,
                                   const Tokenizer& tok, Provider& provider);

struct CorpusRecord {
    std::string source_code;
    std::string language;
    std::string id;
};

struct CorpusLoad {
    std::vector<CorpusRecord> records;
    std::size_t malformed = 0;
};

/// Loads a directory of source files (language from extension) or a JSONL
/// file with fields source_code / lang / src_uid.
CorpusLoad ingest_corpus(const std::filesystem::path& path);

struct LanguageReport {
    std::size_t samples = 0;
    std::size_t parse_failures = 0;
    double avg_tokens_saved_per_sample = 0.0;
    double avg_delta_l_unique = 0.0;
    std::array<std::size_t, 4> bucket_histogram{};  // indexed by LengthBucket
};

/// Per-language aggregation of savings over every record (Table 3-shaped).
std::map<std::string, LanguageReport> corpus_stats(const std::vector<CorpusRecord>& records,
                                                   const Tokenizer& tok);

std::string stats_to_json(const std::map<std::string, LanguageReport>& report);

}  // namespace lct
