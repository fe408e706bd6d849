// Acceptance suite: one test case per criterion, one pass/fail line each.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "lct/errors.hpp"
#include "lct/pipeline.hpp"
#include "lct/syntax.hpp"

using namespace lct;

namespace {

const std::filesystem::path kRepoDir = LCT_REPO_DIR;
const std::string kLctBin = LCT_BIN_PATH;

RunTokenizer tok;

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

std::vector<CorpusRecord> corpus() {
    static std::vector<CorpusRecord> records = ingest_corpus(kRepoDir / "corpus").records;
    return records;
}

struct Criterion {
    int number;
    const char* title;
    bool ok = true;

    void expect(bool condition) {
        ok = ok && condition;
        CHECK(condition);
    }

    ~Criterion() {
        std::cout << "criterion " << number << (ok ? ": PASS — " : ": FAIL — ") << title
                  << std::endl;
    }
};

int run_command(const std::string& cmd) { return std::system(cmd.c_str()); }

}  // namespace

TEST_CASE("1 roundtrip identity over the mini-corpus") {
    Criterion crit{1, "roundtrip identity, zero unresolved, < 10 s"};
    auto start = std::chrono::steady_clock::now();
    MockProvider mock;
    for (const auto& rec : corpus()) {
        auto result = run(rec.source_code, rec.language,
                          rec.language == "go" ? "python" : "go", Mode::IdRep, all_categories(),
                          tok, mock);
        crit.expect(result.restored == rec.source_code);
        crit.expect(result.unresolved.empty());
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    crit.expect(elapsed < 10000);
}

TEST_CASE("2 structure preservation") {
    Criterion crit{2, "compacted code parses to the same node-kind sequence"};
    for (const auto& rec : corpus()) {
        auto rules = load_grammar(rec.language);
        auto result = compact(rec.source_code, rules, all_categories(), tok);
        auto before = parse(rec.source_code, rec.language).kind_sequence();
        auto after = parse(result.compacted, rec.language).kind_sequence();
        crit.expect(before == after);
    }
}

TEST_CASE("3 delta_l accounting") {
    Criterion crit{3, "delta_l equals the recomputed sum, strict improvement on every entry"};
    for (const auto& rec : corpus()) {
        auto rules = load_grammar(rec.language);
        auto result = compact(rec.source_code, rules, all_categories(), tok);
        std::size_t recomputed = 0;
        for (const auto& entry : result.mapping.entries) {
            if (!entry.replaced()) continue;
            crit.expect(entry.tok_placeholder < entry.tok_original);
            recomputed += entry.tok_original - entry.tok_placeholder;
        }
        crit.expect(result.mapping.delta_l == recomputed);
    }
}

TEST_CASE("4 token-savings direction via lct stats") {
    Criterion crit{4, "avg_tokens_saved_per_sample > 0 for all five languages"};
    auto out_path = std::filesystem::temp_directory_path() / "lct_stats_out.json";
    std::string cmd = kLctBin + " stats " + (kRepoDir / "corpus").string() + " > " +
                      out_path.string();
    crit.expect(run_command(cmd) == 0);
    auto report = nlohmann::json::parse(read_file(out_path));
    for (const auto& lang : supported_languages()) {
        crit.expect(report.contains(lang));
        crit.expect(report[lang]["avg_tokens_saved_per_sample"].get<double>() > 0.0);
    }
    std::filesystem::remove(out_path);
}

TEST_CASE("5 reserved-identifier safety") {
    Criterion crit{5, "no reserved name ever enters the mapping"};
    const std::map<std::string, std::pair<std::string, std::vector<std::string>>> adversarial = {
        {"python",
         {"class Widget:\n"
          "    def update_widget_counter(self, widget_increment_amount=1):\n"
          "        print(True, False, None)\n"
          "        accumulated_widget_count = widget_increment_amount\n"
          "        return super().__init__()\n",
          {"self", "super", "print", "True", "False", "None", "return", "class"}}},
        {"java",
         {"class Tracker {\n"
          "    static int totalTrackedEventCount = 0;\n"
          "    int bump(int trackedEventIncrement) {\n"
          "        boolean flag = true && !false;\n"
          "        Object nothing = null;\n"
          "        this.hashCode();\n"
          "        super.toString();\n"
          "        return totalTrackedEventCount + trackedEventIncrement;\n"
          "    }\n"
          "}\n",
          {"this", "super", "null", "true", "false", "return", "class", "static"}}},
        {"c",
         {"#include <stdbool.h>\n"
          "static bool check_sensor_threshold(double sensor_reading_value) {\n"
          "    bool sensor_is_active = true;\n"
          "    if (sensor_reading_value < 0) sensor_is_active = false;\n"
          "    return sensor_is_active;\n"
          "}\n",
          {"true", "false", "return", "static"}}},
        {"cpp",
         {"class Counter {\n"
          "  public:\n"
          "    static int incrementStoredCounter(int counter_increment_step) {\n"
          "        bool counter_enabled_flag = true;\n"
          "        if (!counter_enabled_flag) return 0;\n"
          "        int* nothing = nullptr;\n"
          "        return counter_increment_step;\n"
          "    }\n"
          "};\n",
          {"this", "true", "false", "return", "class", "static", "nullptr"}}},
        {"go",
         {"package main\n"
          "func computeRollingChecksum(checksumSeedValue int) int {\n"
          "    var checksumAccumulator = checksumSeedValue\n"
          "    var isChecksumReady = true\n"
          "    if !isChecksumReady {\n"
          "        return 0\n"
          "    }\n"
          "    _ = false\n"
          "    return checksumAccumulator\n"
          "}\n",
          {"true", "false", "return", "nil"}}},
    };

    for (const auto& [lang, sample] : adversarial) {
        auto rules = load_grammar(lang);
        for (const auto& word : sample.second) crit.expect(is_reserved(rules, word));
        auto result = compact(sample.first, rules, all_categories(), tok);
        for (const auto& entry : result.mapping.entries) {
            crit.expect(!is_reserved(rules, entry.original));
            for (const auto& word : sample.second) crit.expect(entry.original != word);
        }
        crit.expect(!result.mapping.replaced_originals().empty());
    }
}

TEST_CASE("6 ablation subset property over all 32 category subsets") {
    Criterion crit{6, "S ⊆ S' implies replaced(S) ⊆ replaced(S'), full set equals IdRep"};
    const Category cats[] = {Category::Function, Category::Declaration, Category::Class,
                             Category::Expression, Category::Parameter};
    for (const auto& rec : corpus()) {
        auto rules = load_grammar(rec.language);

        std::vector<std::set<std::string>> replaced_by_mask(32);
        for (unsigned mask = 0; mask < 32; ++mask) {
            CategorySet set;
            for (int bit = 0; bit < 5; ++bit) {
                if ((mask >> bit) & 1u) set.insert(cats[bit]);
            }
            auto result = compact(rec.source_code, rules, set, tok);
            auto names = result.mapping.replaced_originals();
            replaced_by_mask[mask] = std::set<std::string>(names.begin(), names.end());
        }

        for (unsigned a = 0; a < 32; ++a) {
            for (unsigned b = 0; b < 32; ++b) {
                if ((a & b) != a) continue;  // a ⊆ b
                bool subset = std::includes(replaced_by_mask[b].begin(),
                                            replaced_by_mask[b].end(),
                                            replaced_by_mask[a].begin(),
                                            replaced_by_mask[a].end());
                if (!subset) crit.expect(false);
            }
        }

        auto full_run = compact(rec.source_code, rules, all_categories(), tok);
        auto full_names = full_run.mapping.replaced_originals();
        crit.expect(replaced_by_mask[31] ==
                    std::set<std::string>(full_names.begin(), full_names.end()));
    }
}

TEST_CASE("7 collision handling starts past source-defined placeholders") {
    Criterion crit{7, "source defining id_0..id_4 yields placeholders from id_5"};
    std::string code =
        "def occupied_placeholder_sample(extremely_long_parameter_name):\n"
        "    id_0 = 0\n"
        "    id_1 = 1\n"
        "    id_2 = 2\n"
        "    id_3 = 3\n"
        "    id_4 = 4\n"
        "    return extremely_long_parameter_name + id_0 + id_1 + id_2 + id_3 + id_4\n";
    auto rules = load_grammar("python");
    auto result = compact(code, rules, all_categories(), tok);
    std::set<std::string> used;
    for (const auto& entry : result.mapping.entries) {
        if (entry.replaced()) used.insert(entry.placeholder);
    }
    crit.expect(!used.empty());
    for (int k = 0; k < 5; ++k) {
        crit.expect(used.count("id_" + std::to_string(k)) == 0);
    }
    crit.expect(used.count("id_5") == 1);

    MockProvider mock;
    auto pipeline = run(code, "python", "go", Mode::IdRep, all_categories(), tok, mock);
    crit.expect(pipeline.restored == code);
    crit.expect(pipeline.unresolved.empty());
}

TEST_CASE("8 bucketing thresholds") {
    Criterion crit{8, "lengths 1999/2000/4000/8000 land in the four buckets"};
    crit.expect(bucket(tok, std::string(1999, '+')) == LengthBucket::below_2000);
    crit.expect(bucket(tok, std::string(2000, '+')) == LengthBucket::ge_2000);
    crit.expect(bucket(tok, std::string(4000, '+')) == LengthBucket::ge_4000);
    crit.expect(bucket(tok, std::string(8000, '+')) == LengthBucket::ge_8000);
}

TEST_CASE("9 determinism of consecutive CLI runs") {
    Criterion crit{9, "lct replace and lct translate --provider mock are byte-identical"};
    auto tmp = std::filesystem::temp_directory_path() / "lct_determinism";
    std::filesystem::create_directories(tmp);

    const std::map<std::string, std::string> flags = {
        {"c", "--lang c"},     {"cpp", "--lang cpp"},   {"java", "--lang java"},
        {"go", "--lang go"},   {"python", "--lang python"},
    };
    const std::map<std::string, std::string> exts = {
        {"c", ".c"}, {"cpp", ".cpp"}, {"java", ".java"}, {"go", ".go"}, {"python", ".py"}};

    for (const auto& rec : corpus()) {
        auto src = tmp / ("in" + exts.at(rec.language));
        {
            std::ofstream out(src, std::ios::binary);
            out << rec.source_code;
        }
        std::string out1 = (tmp / "r1.out").string();
        std::string out2 = (tmp / "r2.out").string();
        std::string map1 = (tmp / "r1.idmap.json").string();
        std::string map2 = (tmp / "r2.idmap.json").string();
        std::string base = kLctBin + " replace " + src.string() + " " + flags.at(rec.language);
        crit.expect(run_command(base + " --map " + map1 + " > " + out1) == 0);
        crit.expect(run_command(base + " --map " + map2 + " > " + out2) == 0);
        crit.expect(read_file(out1) == read_file(out2));
        crit.expect(read_file(map1) == read_file(map2));

        std::string tgt = rec.language == "go" ? "python" : "go";
        std::string tcmd = kLctBin + " translate " + src.string() + " --from " + rec.language +
                           " --to " + tgt + " --provider mock > ";
        crit.expect(run_command(tcmd + out1) == 0);
        std::string sidecar1 = read_file(src.string() + ".idmap.json");
        crit.expect(run_command(tcmd + out2) == 0);
        std::string sidecar2 = read_file(src.string() + ".idmap.json");
        crit.expect(read_file(out1) == read_file(out2));
        crit.expect(sidecar1 == sidecar2);
    }
    std::filesystem::remove_all(tmp);
}

TEST_CASE("10 provider robustness against a stub server") {
    Criterion crit{10, "retries on 429/5xx, distinct ContextOverflow, 3 response shapes, < 5 s"};
    auto start = std::chrono::steady_clock::now();

    auto make_body = [](const std::string& content) {
        nlohmann::json j = {{"choices", nlohmann::json::array({{{"message",
                                                                {{"role", "assistant"},
                                                                 {"content", content}}}}})}};
        return j.dump();
    };

    std::atomic<int> calls{0};
    std::string scenario = "retry";
    httplib::Server server;
    server.Post("/v1/chat/completions", [&](const httplib::Request&, httplib::Response& res) {
        int n = ++calls;
        if (scenario == "retry" && n <= 2) {
            res.status = n == 1 ? 429 : 503;
            res.set_content("busy", "text/plain");
        } else if (scenario == "overflow") {
            res.status = 400;
            res.set_content(R"({"error":{"code":"context_length_exceeded"}})",
                            "application/json");
        } else if (scenario == "fenced_lang") {
            res.set_content(make_body("```go\nfunc main() {}\n```"), "application/json");
        } else if (scenario == "fenced_bare") {
            res.set_content(make_body("```\nx = 1\n```"), "application/json");
        } else {
            res.set_content(make_body("已 plain code, no fence "), "application/json");
        }
    });
    int port = server.bind_to_any_port("127.0.0.1");
    std::thread server_thread([&] { server.listen_after_bind(); });
    server.wait_until_ready();

    ProviderConfig cfg;
    cfg.provider = "http";
    cfg.endpoint = "http://127.0.0.1:" + std::to_string(port);
    cfg.max_attempts = 4;
    cfg.backoff_base_ms = 5;
    cfg.timeout_sec = 3;
    HttpProvider provider(cfg);

    TranslationRequest req;
    req.source_language = "c";
    req.target_language = "go";
    req.code = "int id_0;";
    req.prompt = build_prompt(req.code, "c", "go");

    // 429 then 503 then success.
    auto retried = provider.translate(req);
    crit.expect(retried.attempts == 3);
    crit.expect(retried.code == "func main() {}" || !retried.code.empty());

    scenario = "overflow";
    bool overflow_distinct = false;
    try {
        provider.translate(req);
    } catch (const ContextOverflow&) {
        overflow_distinct = true;
    } catch (const std::exception&) {
        overflow_distinct = false;
    }
    crit.expect(overflow_distinct);

    scenario = "fenced_lang";
    crit.expect(provider.translate(req).code == "func main() {}");
    scenario = "fenced_bare";
    crit.expect(provider.translate(req).code == "x = 1");
    scenario = "bare";
    crit.expect(provider.translate(req).code == "已 plain code, no fence");

    server.stop();
    server_thread.join();

    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    crit.expect(elapsed < 5000);
}
