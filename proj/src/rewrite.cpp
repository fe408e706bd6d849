#include "lct/rewrite.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "lct/errors.hpp"

namespace lct {

std::vector<std::string> ReplacementMapping::replaced_originals() const {
    std::vector<std::string> out;
    for (const auto& e : entries) {
        if (e.replaced()) out.push_back(e.original);
    }
    return out;
}

ReplacementMapping assign_placeholders(const std::vector<std::pair<std::string, Category>>& names,
                                       const Tokenizer& tok,
                                       const std::unordered_set<std::string>& forbidden,
                                       const GrammarRules& rules) {
    ReplacementMapping mapping;
    mapping.language = rules.language;
    mapping.tokenizer_id = tok.id();

    std::size_t next_index = 0;
    for (const auto& [name, category] : names) {
        std::string candidate;
        for (;;) {
            candidate = "id_" + std::to_string(next_index);
            if (forbidden.count(candidate) == 0 && !is_reserved(rules, candidate)) break;
            ++next_index;
        }

        MappingEntry entry;
        entry.original = name;
        entry.category = category;
        entry.tok_original = tok.token_length(name);
        std::size_t tok_candidate = tok.token_length(candidate);
        if (tok_candidate < entry.tok_original) {
            entry.placeholder = candidate;
            entry.tok_placeholder = tok_candidate;
            mapping.delta_l += entry.tok_original - tok_candidate;
            ++next_index;  // index consumed only by an actual replacement
        } else {
            entry.placeholder = name;
            entry.tok_placeholder = entry.tok_original;
        }
        mapping.entries.push_back(std::move(entry));
    }
    return mapping;
}

std::string apply_mapping(std::string_view code, const std::vector<Site>& sites,
                          ReplacementMapping& mapping) {
    std::unordered_map<std::string, MappingEntry*> replaced;
    for (auto& entry : mapping.entries) {
        if (entry.replaced()) replaced[entry.original] = &entry;
    }

    std::string out;
    out.reserve(code.size());
    std::size_t cursor = 0;
    for (std::size_t i = 0; i < sites.size(); ++i) {
        const Site& site = sites[i];
        if (site.start_byte < cursor || site.end_byte < site.start_byte ||
            site.end_byte > code.size()) {
            throw OverlappingSites("site [" + std::to_string(site.start_byte) + "," +
                                   std::to_string(site.end_byte) + ") overlaps or is out of range");
        }
        auto it = replaced.find(site.name);
        if (it == replaced.end()) {
            // Site over a kept name: leave the bytes alone.
            continue;
        }
        out.append(code.substr(cursor, site.start_byte - cursor));
        out.append(it->second->placeholder);
        it->second->occurrences += 1;
        cursor = site.end_byte;
    }
    out.append(code.substr(cursor));
    return out;
}

Savings savings_report(const ReplacementMapping& mapping) {
    Savings s;
    for (const auto& entry : mapping.entries) {
        if (!entry.replaced()) continue;
        std::size_t saved = entry.tok_original - entry.tok_placeholder;
        s.delta_l_unique += saved;
        s.per_sample_saved += saved * entry.occurrences;
    }
    return s;
}

namespace {

bool is_word_byte(char ch) {
    unsigned char c = static_cast<unsigned char>(ch);
    return std::isalnum(c) != 0 || c == '_';
}

}  // namespace

RestoreResult restore(std::string_view translated, const ReplacementMapping& mapping) {
    std::unordered_map<std::string, const MappingEntry*> by_placeholder;
    for (const auto& entry : mapping.entries) {
        if (entry.replaced()) by_placeholder[entry.placeholder] = &entry;
    }

    RestoreResult result;
    result.code.reserve(translated.size());
    std::unordered_set<std::string> resolved;

    std::size_t i = 0;
    while (i < translated.size()) {
        // Scan for a whole-word id_<digits> token.
        if (translated[i] == 'i' && i + 3 < translated.size() &&
            translated.compare(i, 3, "id_") == 0 &&
            (i == 0 || !is_word_byte(translated[i - 1]))) {
            std::size_t j = i + 3;
            while (j < translated.size() &&
                   std::isdigit(static_cast<unsigned char>(translated[j])) != 0) {
                ++j;
            }
            bool word_end = j == translated.size() || !is_word_byte(translated[j]);
            if (j > i + 3 && word_end) {
                std::string placeholder(translated.substr(i, j - i));
                auto it = by_placeholder.find(placeholder);
                if (it != by_placeholder.end()) {
                    result.code.append(it->second->original);
                    resolved.insert(placeholder);
                    i = j;
                    continue;
                }
            }
        }
        result.code.push_back(translated[i]);
        ++i;
    }

    for (const auto& entry : mapping.entries) {
        if (entry.replaced() && resolved.count(entry.placeholder) == 0) {
            result.unresolved.push_back(entry.placeholder);
        }
    }
    return result;
}

std::string mapping_to_json(const ReplacementMapping& mapping) {
    nlohmann::ordered_json j;
    j["version"] = 1;
    j["language"] = mapping.language;
    j["tokenizer_id"] = mapping.tokenizer_id;
    j["delta_l"] = mapping.delta_l;
    j["entries"] = nlohmann::ordered_json::array();
    for (const auto& e : mapping.entries) {
        j["entries"].push_back({{"original", e.original},
                                {"placeholder", e.placeholder},
                                {"category", std::string(1, category_tag(e.category))},
                                {"tok_original", e.tok_original},
                                {"tok_placeholder", e.tok_placeholder},
                                {"occurrences", e.occurrences}});
    }
    return j.dump(2) + "\n";
}

ReplacementMapping mapping_from_json(std::string_view json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("malformed mapping json: ") + e.what());
    }
    if (!j.contains("version") || j["version"].get<int>() != 1) {
        throw IoError("unsupported mapping schema version");
    }
    ReplacementMapping mapping;
    try {
        mapping.language = j.at("language").get<std::string>();
        mapping.tokenizer_id = j.at("tokenizer_id").get<std::string>();
        mapping.delta_l = j.at("delta_l").get<std::size_t>();
        for (const auto& je : j.at("entries")) {
            MappingEntry e;
            e.original = je.at("original").get<std::string>();
            e.placeholder = je.at("placeholder").get<std::string>();
            auto cat = parse_category(je.at("category").get<std::string>());
            if (!cat) throw IoError("bad category tag in mapping json");
            e.category = *cat;
            e.tok_original = je.at("tok_original").get<std::size_t>();
            e.tok_placeholder = je.at("tok_placeholder").get<std::size_t>();
            e.occurrences = je.at("occurrences").get<std::size_t>();
            mapping.entries.push_back(std::move(e));
        }
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("malformed mapping json: ") + e.what());
    }
    return mapping;
}

void write_mapping(const ReplacementMapping& mapping, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write mapping: " + path.string());
    out << mapping_to_json(mapping);
}

ReplacementMapping read_mapping(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read mapping: " + path.string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return mapping_from_json(text);
}

}  // namespace lct
