#pragma once

#include <memory>
#include <string>
#include <string_view>

namespace lct {

struct ProviderConfig {
    std::string provider = "mock";  // "mock" or "http"
    std::string endpoint = "http://localhost:8080";
    std::string model = "gpt-4o-mini";
    double temperature = 0.0;
    int max_output_tokens = 4096;
    std::string auth_env = "LCT_API_KEY";
    int max_attempts = 3;
    int backoff_base_ms = 250;
    int timeout_sec = 30;
};

struct TranslationRequest {
    std::string source_language;
    std::string target_language;
    std::string code;    // compacted source
    std::string prompt;  // rendered prompt
};

struct TranslationResult {
    std::string raw_response;
    std::string code;  // extracted translated code
    long prompt_tokens = -1;
    long completion_tokens = -1;
    int attempts = 1;
};

/// Deterministic zero-shot prompt: translate src -> tgt, keep id_<digits>
/// placeholders verbatim, answer with a single fenced code block.
std::string build_prompt(std::string_view code, const std::string& src, const std::string& tgt);

/// Contents of the first fenced code block, or the whole response trimmed
/// when no fence is present. Throws EmptyResponse when blank.
std::string extract_code_block(std::string_view response);

class Provider {
public:
    virtual ~Provider() = default;
    virtual TranslationResult translate(const TranslationRequest& req) = 0;
};

/// Echoes the request code back unchanged.
class MockProvider final : public Provider {
public:
    TranslationResult translate(const TranslationRequest& req) override;
};

/// Chat-completions-style JSON client with retry and exponential backoff
/// on 429/5xx. Context-window rejections surface as ContextOverflow.
class HttpProvider final : public Provider {
public:
    explicit HttpProvider(ProviderConfig cfg) : cfg_(std::move(cfg)) {}
    TranslationResult translate(const TranslationRequest& req) override;

private:
    ProviderConfig cfg_;
};

std::unique_ptr<Provider> make_provider(const ProviderConfig& cfg);

}  // namespace lct
