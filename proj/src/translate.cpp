#include "lct/translate.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "lct/errors.hpp"

namespace lct {

std::string build_prompt(std::string_view code, const std::string& src, const std::string& tgt) {
    if (src == tgt) throw Error("source and target language must differ");
    std::string prompt;
    prompt += "Translate the following " + src + " code to " + tgt + ".\n";
    prompt += "Preserve every identifier of the form id_<digits> verbatim; do not rename them.\n";
    prompt += "Reply with only one fenced code block containing the translated code.\n\n";
    prompt += "```" + src + "\n";
    prompt += std::string(code);
    if (!code.empty() && code.back() != '\n') prompt += "\n";
    prompt += "```\n";
    return prompt;
}

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])) != 0) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])) != 0) --e;
    return std::string(s.substr(b, e - b));
}

}  // namespace

std::string extract_code_block(std::string_view response) {
    std::string extracted;
    std::size_t open = response.find("```");
    if (open == std::string_view::npos) {
        extracted = trim(response);
    } else {
        std::size_t content = response.find('\n', open + 3);
        if (content == std::string_view::npos) {
            extracted = trim(response);
        } else {
            ++content;
            std::size_t close = response.find("```", content);
            std::string_view body = close == std::string_view::npos
                                        ? response.substr(content)
                                        : response.substr(content, close - content);
            // Strip at most one trailing newline so code bytes stay intact.
            if (!body.empty() && body.back() == '\n') body.remove_suffix(1);
            extracted = std::string(body);
        }
    }
    if (trim(extracted).empty()) throw EmptyResponse("no code in provider response");
    return extracted;
}

TranslationResult MockProvider::translate(const TranslationRequest& req) {
    TranslationResult result;
    result.raw_response = "```\n" + req.code + "\n```";
    result.code = req.code;
    return result;
}

namespace {

struct ParsedEndpoint {
    std::string base;  // scheme://host:port
    std::string path;
};

ParsedEndpoint split_endpoint(const std::string& endpoint) {
    std::size_t scheme = endpoint.find("://");
    std::size_t host_start = scheme == std::string::npos ? 0 : scheme + 3;
    std::size_t slash = endpoint.find('/', host_start);
    if (slash == std::string::npos) return {endpoint, "/v1/chat/completions"};
    std::string path = endpoint.substr(slash);
    if (path == "/") path = "/v1/chat/completions";
    return {endpoint.substr(0, slash), path};
}

bool looks_like_context_overflow(int status, const std::string& body) {
    if (status != 400 && status != 413) return false;
    std::string lower(body);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return lower.find("context_length_exceeded") != std::string::npos ||
           lower.find("context length") != std::string::npos ||
           lower.find("maximum context") != std::string::npos ||
           lower.find("too many tokens") != std::string::npos;
}

}  // namespace

TranslationResult HttpProvider::translate(const TranslationRequest& req) {
    ParsedEndpoint ep = split_endpoint(cfg_.endpoint);
    httplib::Client client(ep.base);
    client.set_connection_timeout(cfg_.timeout_sec, 0);
    client.set_read_timeout(cfg_.timeout_sec, 0);

    httplib::Headers headers;
    if (const char* key = std::getenv(cfg_.auth_env.c_str()); key != nullptr && *key != '\0') {
        headers.emplace("Authorization", std::string("Bearer ") + key);
    }

    nlohmann::json body = {
        {"model", cfg_.model},
        {"messages", nlohmann::json::array({{{"role", "user"}, {"content", req.prompt}}})},
        {"temperature", cfg_.temperature},
        {"max_tokens", cfg_.max_output_tokens},
    };
    const std::string payload = body.dump();

    TranslationResult result;
    for (int attempt = 1; attempt <= cfg_.max_attempts; ++attempt) {
        result.attempts = attempt;
        auto res = client.Post(ep.path, headers, payload, "application/json");

        bool transient = false;
        if (!res) {
            if (res.error() == httplib::Error::ConnectionTimeout ||
                res.error() == httplib::Error::Read || res.error() == httplib::Error::Write) {
                transient = true;
            } else if (attempt == cfg_.max_attempts) {
                throw HttpError(0, httplib::to_string(res.error()));
            } else {
                transient = true;
            }
        } else if (res->status == 429 || res->status >= 500) {
            transient = true;
        } else if (res->status != 200) {
            if (looks_like_context_overflow(res->status, res->body)) {
                throw ContextOverflow("provider rejected input as too long: " + res->body);
            }
            throw HttpError(res->status, res->body);
        }

        if (transient) {
            if (attempt == cfg_.max_attempts) {
                if (!res) throw TimeoutError("provider unreachable after retries");
                throw HttpError(res->status, res->body);
            }
            int delay = cfg_.backoff_base_ms * (1 << (attempt - 1));
            std::this_thread::sleep_for(std::chrono::milliseconds(delay));
            continue;
        }

        result.raw_response = res->body;
        nlohmann::json parsed;
        try {
            parsed = nlohmann::json::parse(res->body);
        } catch (const nlohmann::json::exception& e) {
            throw HttpError(res->status, std::string("unparseable response: ") + e.what());
        }
        std::string content;
        try {
            content = parsed.at("choices").at(0).at("message").at("content").get<std::string>();
        } catch (const nlohmann::json::exception&) {
            throw EmptyResponse("response carries no message content");
        }
        if (parsed.contains("usage")) {
            result.prompt_tokens = parsed["usage"].value("prompt_tokens", -1);
            result.completion_tokens = parsed["usage"].value("completion_tokens", -1);
        }
        result.code = extract_code_block(content);
        return result;
    }
    throw HttpError(0, "retries exhausted");
}

std::unique_ptr<Provider> make_provider(const ProviderConfig& cfg) {
    if (cfg.provider == "mock") return std::make_unique<MockProvider>();
    if (cfg.provider == "http") return std::make_unique<HttpProvider>(cfg);
    throw Error("unknown provider: " + cfg.provider);
}

}  // namespace lct
