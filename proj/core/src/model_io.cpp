// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 maildelta contributors

#include "maildelta/model_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "maildelta/errors.hpp"

namespace maildelta {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kMagic = "maildelta-model";
constexpr int kFormatVersion = 1;

std::string fnv1a_hex(std::string_view data) {
    std::uint64_t hash = 1469598103934665603ull;
    for (unsigned char byte : data) {
        hash ^= byte;
        hash *= 1099511628211ull;
    }
    char out[17];
    std::snprintf(out, sizeof(out), "%016llx", static_cast<unsigned long long>(hash));
    return out;
}

// Content fields in a fixed order; the checksum covers this serialization.
json content_json(const HybridModel& model) {
    json content;
    content["vocabulary"] = model.features.features;
    content["requested_dimension"] = model.features.requested_dimension;
    content["class_priors"] = {{"spam", model.nb.prior.spam},
                               {"legitimate", model.nb.prior.legitimate}};
    content["feature_counts"] = {{"spam", model.nb.spam_feature_count},
                                 {"legitimate", model.nb.legit_feature_count}};
    content["class_token_totals"] = {{"spam", model.nb.spam_token_total},
                                     {"legitimate", model.nb.legit_token_total}};
    content["smoothing"] = model.nb.smoothing;
    json vectors = json::array();
    for (const TrainingVector& tv : model.training_vectors) {
        json entries = json::array();
        for (const auto& [index, count] : tv.vec.entries) {
            entries.push_back(json::array({index, count}));
        }
        vectors.push_back(json{{"label", to_string(tv.label)}, {"counts", std::move(entries)}});
    }
    content["training_vectors"] = std::move(vectors);
    return content;
}

Label label_from_string(const std::string& name) {
    if (name == "spam") {
        return Label::Spam;
    }
    if (name == "legitimate") {
        return Label::Legitimate;
    }
    throw PersistenceError("model file holds an unknown label: " + name);
}

} // namespace

void save_model(const HybridModel& model, const std::filesystem::path& path) {
    json content = content_json(model);
    json doc;
    doc["magic"] = kMagic;
    doc["format_version"] = kFormatVersion;
    doc["checksum"] = fnv1a_hex(content.dump());
    for (auto& [key, value] : content.items()) {
        doc[key] = std::move(value);
    }

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw PersistenceError("cannot open model file for writing: " + path.string());
    }
    out << doc.dump();
    out.flush();
    if (!out) {
        throw PersistenceError("failed writing model file: " + path.string());
    }
}

HybridModel load_model(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw PersistenceError("cannot open model file: " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw PersistenceError("failed reading model file: " + path.string());
    }

    json doc;
    try {
        doc = json::parse(buf.str());
    } catch (const json::parse_error& e) {
        throw PersistenceError("model file is truncated or not valid JSON: " +
                               std::string(e.what()));
    }

    try {
        if (!doc.contains("magic") || doc["magic"] != kMagic) {
            throw FormatError("not a model file (bad magic header): " + path.string());
        }
        const int version = doc.at("format_version").get<int>();
        if (version != kFormatVersion) {
            throw VersionError("unsupported model format version " + std::to_string(version) +
                               " (expected " + std::to_string(kFormatVersion) + ")");
        }

        HybridModel model;
        model.features = FeatureSet::from_ordered_tokens(
            doc.at("vocabulary").get<std::vector<std::string>>(),
            doc.at("requested_dimension").get<std::uint32_t>());
        if (model.features.index.size() != model.features.features.size()) {
            throw PersistenceError("model vocabulary holds duplicate tokens");
        }

        model.nb.dimension = model.features.dimension();
        model.nb.smoothing = doc.at("smoothing").get<double>();
        model.nb.prior.spam = doc.at("class_priors").at("spam").get<double>();
        model.nb.prior.legitimate = doc.at("class_priors").at("legitimate").get<double>();
        model.nb.spam_feature_count =
            doc.at("feature_counts").at("spam").get<std::vector<std::uint64_t>>();
        model.nb.legit_feature_count =
            doc.at("feature_counts").at("legitimate").get<std::vector<std::uint64_t>>();
        model.nb.spam_token_total = doc.at("class_token_totals").at("spam").get<std::uint64_t>();
        model.nb.legit_token_total =
            doc.at("class_token_totals").at("legitimate").get<std::uint64_t>();
        if (model.nb.spam_feature_count.size() != model.nb.dimension ||
            model.nb.legit_feature_count.size() != model.nb.dimension) {
            throw PersistenceError("feature count arrays do not match the vocabulary size");
        }

        std::uint32_t next_id = 0;
        for (const json& entry : doc.at("training_vectors")) {
            TrainingVector tv;
            tv.label = label_from_string(entry.at("label").get<std::string>());
            tv.doc_id = next_id++; // stored order is ascending doc-id order
            std::uint32_t previous_index = 0;
            bool first = true;
            for (const json& pair : entry.at("counts")) {
                const auto index = pair.at(0).get<std::uint32_t>();
                const auto count = pair.at(1).get<std::uint32_t>();
                if (index >= model.nb.dimension || count == 0 ||
                    (!first && index <= previous_index)) {
                    throw PersistenceError("training vector entries are not a sparse vector");
                }
                first = false;
                previous_index = index;
                tv.vec.entries.emplace_back(index, count);
            }
            model.training_vectors.push_back(std::move(tv));
        }

        // verify the checksum against a canonical re-serialization
        const std::string expected = doc.at("checksum").get<std::string>();
        if (fnv1a_hex(content_json(model).dump()) != expected) {
            throw PersistenceError("model file checksum mismatch: " + path.string());
        }
        return model;
    } catch (const json::exception& e) {
        throw PersistenceError("model file is malformed: " + std::string(e.what()));
    }
}

} // namespace maildelta
