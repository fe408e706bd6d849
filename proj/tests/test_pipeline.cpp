#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <string>

#include "lct/errors.hpp"
#include "lct/pipeline.hpp"

using namespace lct;

namespace {

const std::filesystem::path kRepoDir = LCT_REPO_DIR;

RunTokenizer tok;

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

// Keeps placeholders but reorders lines, like a provider emitting
// declarations in a different order.
struct ReorderingProvider final : Provider {
    TranslationResult translate(const TranslationRequest& req) override {
        std::vector<std::string> lines;
        std::string line;
        for (char ch : req.code) {
            if (ch == '\n') {
                lines.push_back(line);
                line.clear();
            } else {
                line.push_back(ch);
            }
        }
        if (!line.empty()) lines.push_back(line);
        std::reverse(lines.begin(), lines.end());
        TranslationResult result;
        for (const auto& l : lines) result.code += l + "\n";
        result.raw_response = "```\n" + result.code + "```";
        return result;
    }
};

}  // namespace

TEST_CASE("IdRep with the identity mock roundtrips byte-exact") {
    MockProvider mock;
    std::string code = read_file(kRepoDir / "corpus/python/sample_00_matrix_rotation.py");
    auto result = run(code, "python", "go", Mode::IdRep, all_categories(), tok, mock);
    CHECK(result.restored == code);
    CHECK(result.unresolved.empty());
    CHECK(result.tokens_idrep < result.tokens_norep);
    CHECK(result.compacted != code);
}

TEST_CASE("NoRep skips the replacement stage") {
    MockProvider mock;
    std::string code = read_file(kRepoDir / "corpus/c/sample_01_inventory_report.c");
    auto result = run(code, "c", "go", Mode::NoRep, all_categories(), tok, mock);
    CHECK(result.compacted == code);
    CHECK(result.mapping.entries.empty());
    CHECK(result.tokens_idrep == result.tokens_norep);
    CHECK(result.restored == code);
}

TEST_CASE("category restriction narrows eligibility") {
    MockProvider mock;
    std::string code = read_file(kRepoDir / "corpus/cpp/sample_02_temperature_series.cpp");
    auto params_only = run(code, "cpp", "go", Mode::IdRep, {Category::Parameter}, tok, mock);
    auto rules = load_grammar("cpp");
    for (const auto& entry : params_only.mapping.entries) {
        CHECK(entry.category == Category::Parameter);
    }
    CHECK_FALSE(params_only.mapping.replaced_originals().empty());

    auto full = run(code, "cpp", "go", Mode::IdRep, all_categories(), tok, mock);
    CHECK(params_only.mapping.entries.size() < full.mapping.entries.size());
}

TEST_CASE("a provider that reorders lines still restores fully") {
    ReorderingProvider provider;
    std::string code = read_file(kRepoDir / "corpus/go/sample_03_prime_window.go");
    auto result = run(code, "go", "python", Mode::IdRep, all_categories(), tok, provider);
    CHECK(result.unresolved.empty());
    for (const auto& name : result.mapping.replaced_originals()) {
        CHECK(result.restored.find(name) != std::string::npos);
    }
}

TEST_CASE("ablate covers each subset independently") {
    MockProvider mock;
    std::string code = read_file(kRepoDir / "corpus/java/sample_04_ledger_balance.java");

    SUBCASE("empty set behaves as NoRep") {
        auto results = ablate(code, "java", "python", {CategorySet{}}, tok, mock);
        REQUIRE(results.size() == 1);
        CHECK(results[0].compacted == code);
        CHECK(results[0].mapping.entries.empty());
    }

    SUBCASE("the full set matches a plain IdRep run") {
        auto results = ablate(code, "java", "python", {all_categories()}, tok, mock);
        auto direct = run(code, "java", "python", Mode::IdRep, all_categories(), tok, mock);
        REQUIRE(results.size() == 1);
        CHECK(results[0].compacted == direct.compacted);
        CHECK(mapping_to_json(results[0].mapping) == mapping_to_json(direct.mapping));
    }

    SUBCASE("four singleton sets produce four results") {
        std::vector<CategorySet> sets = {{Category::Function},
                                         {Category::Declaration},
                                         {Category::Parameter},
                                         {Category::Expression}};
        auto results = ablate(code, "java", "python", sets, tok, mock);
        CHECK(results.size() == 4);
    }

    CHECK_THROWS_AS(ablate(code, "java", "python", {}, tok, mock), Error);
}

TEST_CASE("ablation is monotone in the category set") {
    MockProvider mock;
    std::string code = read_file(kRepoDir / "corpus/java/sample_05_route_distance.java");
    auto small = run(code, "java", "python", Mode::IdRep, {Category::Function}, tok, mock);
    auto large = run(code, "java", "python", Mode::IdRep,
                     {Category::Function, Category::Parameter}, tok, mock);
    auto small_set = small.mapping.replaced_originals();
    auto large_set = large.mapping.replaced_originals();
    for (const auto& name : small_set) {
        CHECK(std::find(large_set.begin(), large_set.end(), name) != large_set.end());
    }
}

TEST_CASE("stage failures carry stage attribution") {
    MockProvider mock;
    try {
        run("x = 1", "python", "python", Mode::IdRep, all_categories(), tok, mock);
        FAIL("expected StageError");
    } catch (const StageError& e) {
        CHECK(e.stage() == "translate");
    }
}

TEST_CASE("ingest_corpus reads a directory with extension-mapped languages") {
    auto load = ingest_corpus(kRepoDir / "corpus");
    CHECK(load.malformed == 0);
    CHECK(load.records.size() == 50);
    std::map<std::string, int> counts;
    for (const auto& rec : load.records) counts[rec.language] += 1;
    for (const auto& lang : supported_languages()) {
        CHECK(counts[lang] == 10);
    }
}

TEST_CASE("ingest_corpus reads jsonl and counts malformed lines") {
    auto path = std::filesystem::temp_directory_path() / "lct_test_corpus.jsonl";
    {
        std::ofstream out(path);
        out << R"({"source_code": "x = 1", "lang": "python", "src_uid": "a"})" << "\n";
        out << R"({"source_code": "int x;"})" << "\n";  // missing lang
        out << "not json\n";
        out << R"({"source_code": "int x;", "lang": "cobol", "src_uid": "b"})" << "\n";
    }
    auto load = ingest_corpus(path);
    CHECK(load.records.size() == 1);
    CHECK(load.malformed == 3);
    CHECK(load.records[0].id == "a");
    std::filesystem::remove(path);

    CHECK_THROWS_AS(ingest_corpus(kRepoDir / "no_such_dir"), IoError);
}

TEST_CASE("corpus_stats aggregates per language") {
    auto load = ingest_corpus(kRepoDir / "corpus");
    auto report = corpus_stats(load.records, tok);
    REQUIRE(report.size() == 5);
    for (const auto& [lang, r] : report) {
        CHECK(r.samples == 10);
        CHECK(r.parse_failures == 0);
        CHECK(r.avg_tokens_saved_per_sample > 0.0);
        CHECK(r.avg_delta_l_unique > 0.0);
        CHECK(r.bucket_histogram[0] == 10);  // desk-scale samples are all short
    }
    CHECK_THROWS_AS(corpus_stats({}, tok), EmptyCorpus);

    auto json = stats_to_json(report);
    CHECK(json.find("avg_tokens_saved_per_sample") != std::string::npos);
}

TEST_CASE("savings accounting matches the token-count difference") {
    auto load = ingest_corpus(kRepoDir / "corpus");
    for (const auto& rec : load.records) {
        auto rules = load_grammar(rec.language);
        auto result = compact(rec.source_code, rules, all_categories(), tok);
        auto savings = savings_report(result.mapping);
        std::size_t before = tok.token_length(rec.source_code);
        std::size_t after = tok.token_length(result.compacted);
        CHECK(before - after == savings.per_sample_saved);
    }
}

TEST_CASE("identical pipeline runs serialize identically") {
    MockProvider mock;
    std::string code = read_file(kRepoDir / "corpus/c/sample_06_histogram_merge.c");
    auto a = run(code, "c", "python", Mode::IdRep, all_categories(), tok, mock);
    auto b = run(code, "c", "python", Mode::IdRep, all_categories(), tok, mock);
    CHECK(a.compacted == b.compacted);
    CHECK(a.restored == b.restored);
    CHECK(mapping_to_json(a.mapping) == mapping_to_json(b.mapping));
}
