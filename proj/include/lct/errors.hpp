#pragma once

#include <stdexcept>
#include <string>

namespace lct {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

class UnsupportedLanguage : public Error {
public:
    explicit UnsupportedLanguage(const std::string& language)
        : Error("unsupported language: " + language) {}
};

class MalformedRules : public Error {
public:
    using Error::Error;
};

class ParserUnavailable : public Error {
public:
    using Error::Error;
};

class OverlappingSites : public Error {
public:
    using Error::Error;
};

class HttpError : public Error {
public:
    HttpError(int status, const std::string& body)
        : Error("http error " + std::to_string(status) + ": " + body), status_(status) {}
    int status() const { return status_; }

private:
    int status_;
};

class TimeoutError : public Error {
public:
    using Error::Error;
};

// The provider rejected the request because the input exceeded its context
// window. Surfaced distinctly from other HTTP failures.
class ContextOverflow : public Error {
public:
    using Error::Error;
};

class EmptyResponse : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

class EmptyCorpus : public Error {
public:
    using Error::Error;
};

// Wraps a failure with the pipeline stage it occurred in.
class StageError : public Error {
public:
    StageError(const std::string& stage, const std::string& message)
        : Error("[" + stage + "] " + message), stage_(stage) {}
    const std::string& stage() const { return stage_; }

private:
    std::string stage_;
};

}  // namespace lct
