#include "lct/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "lct/errors.hpp"
#include "lct/syntax.hpp"

namespace lct {

CategorySet all_categories() {
    return {Category::Function, Category::Declaration, Category::Class, Category::Expression,
            Category::Parameter};
}

CompactResult compact(const std::string& code, const GrammarRules& rules,
                      const CategorySet& categories, const Tokenizer& tok) {
    auto captures = extract_identifiers(code, rules);
    std::erase_if(captures, [&](const IdentifierCapture& cap) {
        return categories.count(cap.category) == 0;
    });
    auto names = unique_names(captures);

    SyntaxTree tree = parse(code, rules.language);
    auto forbidden = all_identifier_texts(tree, code, rules);
    auto mapping = assign_placeholders(names, tok, forbidden, rules);

    std::set<std::string> replaced;
    for (const auto& n : mapping.replaced_originals()) replaced.insert(n);

    CompactResult result;
    if (replaced.empty()) {
        result.compacted = code;
    } else {
        auto sites = identifier_sites(tree, code, replaced, rules);
        result.compacted = apply_mapping(code, sites, mapping);
    }
    result.mapping = std::move(mapping);
    return result;
}

namespace {

template <typename Fn>
auto staged(const char* stage, Fn&& fn) {
    try {
        return fn();
    } catch (const StageError&) {
        throw;
    } catch (const Error& e) {
        throw StageError(stage, e.what());
    } catch (const std::exception& e) {
        throw StageError(stage, e.what());
    }
}

}  // namespace

PipelineResult run(const std::string& code, const std::string& src, const std::string& tgt,
                   Mode mode, const CategorySet& categories, const Tokenizer& tok,
                   Provider& provider) {
    PipelineResult result;
    result.original = code;
    result.tokens_norep = tok.token_length(code);
    result.bucket = bucket(tok, code);

    if (mode == Mode::IdRep) {
        auto compacted = staged("replace", [&] {
            GrammarRules rules = load_grammar(src);
            return compact(code, rules, categories, tok);
        });
        result.compacted = std::move(compacted.compacted);
        result.mapping = std::move(compacted.mapping);
    } else {
        result.compacted = code;
        result.mapping.language = src;
        result.mapping.tokenizer_id = tok.id();
    }
    result.tokens_idrep = tok.token_length(result.compacted);

    staged("translate", [&] {
        TranslationRequest req;
        req.source_language = src;
        req.target_language = tgt;
        req.code = result.compacted;
        req.prompt = build_prompt(result.compacted, src, tgt);
        auto tr = provider.translate(req);
        result.translated = std::move(tr.code);
        result.raw_response = std::move(tr.raw_response);
        return 0;
    });

    staged("restore", [&] {
        auto restored = restore(result.translated, result.mapping);
        result.restored = std::move(restored.code);
        result.unresolved = std::move(restored.unresolved);
        return 0;
    });

    return result;
}

std::vector<PipelineResult> ablate(const std::string& code, const std::string& src,
                                   const std::string& tgt,
                                   const std::vector<CategorySet>& category_sets,
                                   const Tokenizer& tok, Provider& provider) {
    if (category_sets.empty()) throw Error("ablate: category_sets must be non-empty");
    std::vector<PipelineResult> results;
    results.reserve(category_sets.size());
    for (const auto& cats : category_sets) {
        Mode mode = cats.empty() ? Mode::NoRep : Mode::IdRep;
        results.push_back(run(code, src, tgt, mode, cats, tok, provider));
    }
    return results;
}

namespace {

const std::unordered_map<std::string, std::string>& extension_languages() {
    static const std::unordered_map<std::string, std::string> map = {
        {".c", "c"},     {".h", "c"},      {".cpp", "cpp"}, {".cc", "cpp"}, {".cxx", "cpp"},
        {".hpp", "cpp"}, {".java", "java"}, {".go", "go"},  {".py", "python"},
    };
    return map;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

CorpusLoad ingest_corpus(const std::filesystem::path& path) {
    if (!std::filesystem::exists(path)) throw IoError("no such path: " + path.string());

    CorpusLoad load;
    if (std::filesystem::is_directory(path)) {
        std::vector<std::filesystem::path> files;
        for (const auto& entry : std::filesystem::recursive_directory_iterator(path)) {
            if (entry.is_regular_file()) files.push_back(entry.path());
        }
        std::sort(files.begin(), files.end());
        for (const auto& file : files) {
            auto it = extension_languages().find(file.extension().string());
            if (it == extension_languages().end()) continue;
            load.records.push_back(CorpusRecord{
                read_file(file), it->second,
                std::filesystem::relative(file, path).generic_string()});
        }
        return load;
    }

    // JSON-lines: one record per line with source_code / lang / src_uid.
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read: " + path.string());
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            auto j = nlohmann::json::parse(line);
            CorpusRecord rec;
            rec.source_code = j.at("source_code").get<std::string>();
            rec.language = j.at("lang").get<std::string>();
            rec.id = j.value("src_uid", "line_" + std::to_string(lineno));
            if (!is_supported_language(rec.language)) {
                ++load.malformed;
                continue;
            }
            load.records.push_back(std::move(rec));
        } catch (const nlohmann::json::exception&) {
            ++load.malformed;
        }
    }
    return load;
}

std::map<std::string, LanguageReport> corpus_stats(const std::vector<CorpusRecord>& records,
                                                   const Tokenizer& tok) {
    if (records.empty()) throw EmptyCorpus("no records to aggregate");

    std::map<std::string, LanguageReport> report;
    std::map<std::string, std::size_t> saved_total;
    std::map<std::string, std::size_t> delta_total;
    std::unordered_map<std::string, GrammarRules> rules_cache;

    for (const auto& rec : records) {
        auto& lang_report = report[rec.language];
        try {
            auto rit = rules_cache.find(rec.language);
            if (rit == rules_cache.end()) {
                rit = rules_cache.emplace(rec.language, load_grammar(rec.language)).first;
            }
            auto compacted = compact(rec.source_code, rit->second, all_categories(), tok);
            auto savings = savings_report(compacted.mapping);
            lang_report.samples += 1;
            lang_report.bucket_histogram[static_cast<std::size_t>(bucket(tok, rec.source_code))] += 1;
            saved_total[rec.language] += savings.per_sample_saved;
            delta_total[rec.language] += savings.delta_l_unique;
        } catch (const Error&) {
            lang_report.parse_failures += 1;
        }
    }

    for (auto& [lang, r] : report) {
        if (r.samples > 0) {
            r.avg_tokens_saved_per_sample =
                static_cast<double>(saved_total[lang]) / static_cast<double>(r.samples);
            r.avg_delta_l_unique =
                static_cast<double>(delta_total[lang]) / static_cast<double>(r.samples);
        }
    }
    return report;
}

std::string stats_to_json(const std::map<std::string, LanguageReport>& report) {
    nlohmann::ordered_json j;
    for (const auto& [lang, r] : report) {
        j[lang] = {
            {"samples", r.samples},
            {"parse_failures", r.parse_failures},
            {"avg_tokens_saved_per_sample", r.avg_tokens_saved_per_sample},
            {"avg_delta_l_unique", r.avg_delta_l_unique},
            {"buckets",
             {{"below_2000", r.bucket_histogram[0]},
              {"ge_2000", r.bucket_histogram[1]},
              {"ge_4000", r.bucket_histogram[2]},
              {"ge_8000", r.bucket_histogram[3]}}},
        };
    }
    return j.dump(2) + "\n";
}

}  // namespace lct
