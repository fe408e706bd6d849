#include "lct/grammar.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "lct/errors.hpp"
#include "rules_embedded.hpp"

namespace lct {

char category_tag(Category c) {
    switch (c) {
        case Category::Function: return 'F';
        case Category::Declaration: return 'D';
        case Category::Class: return 'C';
        case Category::Expression: return 'E';
        case Category::Parameter: return 'P';
    }
    return '?';
}

std::optional<Category> parse_category(std::string_view tag) {
    if (tag.size() != 1) return std::nullopt;
    switch (tag[0]) {
        case 'F': return Category::Function;
        case 'D': return Category::Declaration;
        case 'C': return Category::Class;
        case 'E': return Category::Expression;
        case 'P': return Category::Parameter;
        default: return std::nullopt;
    }
}

const std::vector<std::string>& supported_languages() {
    static const std::vector<std::string> langs = {"c", "cpp", "java", "go", "python"};
    return langs;
}

bool is_supported_language(std::string_view language) {
    const auto& langs = supported_languages();
    return std::find(langs.begin(), langs.end(), language) != langs.end();
}

namespace {

// Matches the generated placeholder shape id_<digits>.
bool is_placeholder_shaped(std::string_view name) {
    if (name.size() < 4 || name.substr(0, 3) != "id_") return false;
    return std::all_of(name.begin() + 3, name.end(),
                       [](unsigned char ch) { return std::isdigit(ch) != 0; });
}

}  // namespace

GrammarRules parse_rules(const std::string& language, std::string_view text) {
    GrammarRules rules;
    rules.language = language;

    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);

        std::istringstream fields(line);
        std::string directive;
        if (!(fields >> directive)) continue;

        if (directive == "PARENT") {
            std::string kind, tag;
            if (!(fields >> kind >> tag)) {
                throw MalformedRules(language + " rules line " + std::to_string(lineno) +
                                     ": PARENT needs <node_kind> <F|D|C|E|P>");
            }
            auto cat = parse_category(tag);
            if (!cat) {
                throw MalformedRules(language + " rules line " + std::to_string(lineno) +
                                     ": unknown category tag '" + tag + "'");
            }
            auto [it, inserted] = rules.parent_kinds.emplace(kind, *cat);
            if (!inserted && it->second != *cat) {
                throw MalformedRules(language + " rules: node kind '" + kind +
                                     "' mapped to two categories");
            }
        } else if (directive == "NOT") {
            std::string name;
            if (!(fields >> name)) {
                throw MalformedRules(language + " rules line " + std::to_string(lineno) +
                                     ": NOT needs an identifier");
            }
            if (is_placeholder_shaped(name)) {
                throw MalformedRules(language + " rules: reserved name '" + name +
                                     "' collides with the placeholder scheme");
            }
            rules.reserved.insert(name);
        } else {
            throw MalformedRules(language + " rules line " + std::to_string(lineno) +
                                 ": unknown directive '" + directive + "'");
        }
    }

    if (rules.parent_kinds.empty()) {
        throw MalformedRules(language + " rules: no PARENT entries");
    }
    return rules;
}

GrammarRules load_grammar(const std::string& language) {
    if (!is_supported_language(language)) throw UnsupportedLanguage(language);
    const char* text = detail::embedded_rules(language);
    if (text == nullptr) throw UnsupportedLanguage(language);
    return parse_rules(language, text);
}

GrammarRules load_grammar_file(const std::string& language, const std::filesystem::path& path) {
    if (!is_supported_language(language)) throw UnsupportedLanguage(language);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MalformedRules("cannot open rule file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_rules(language, buf.str());
}

std::optional<Category> classify_parent(const GrammarRules& rules, std::string_view parent_kind) {
    auto it = rules.parent_kinds.find(std::string(parent_kind));
    if (it == rules.parent_kinds.end()) return std::nullopt;
    return it->second;
}

bool is_reserved(const GrammarRules& rules, std::string_view name) {
    return rules.reserved.count(std::string(name)) != 0;
}

}  // namespace lct
