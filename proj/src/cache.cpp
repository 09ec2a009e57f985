#include "qrlab/cache.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qrlab {

using nlohmann::json;

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
}

std::filesystem::path ResultCache::file_for(const LinearCode& code,
                                            const std::string& op) const {
    std::ostringstream name;
    name << std::hex << matrix_hash(code.generator) << "-" << op << ".json";
    return dir_ / name.str();
}

namespace {

std::optional<json> load_entry(const std::filesystem::path& file, uint64_t hash,
                               const std::string& op) {
    std::ifstream in(file);
    if (!in) return std::nullopt;
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) return std::nullopt;
    if (!j.contains("version") || j["version"] != ResultCache::kFormatVersion)
        return std::nullopt;
    if (!j.contains("hash") || j["hash"] != hash) return std::nullopt;
    if (!j.contains("op") || j["op"] != op) return std::nullopt;
    return j;
}

json entry_header(const LinearCode& code, const std::string& op) {
    return json{{"version", ResultCache::kFormatVersion},
                {"hash", matrix_hash(code.generator)},
                {"op", op},
                {"n", code.n},
                {"k", code.k}};
}

}  // namespace

std::optional<WeightDistribution> ResultCache::load_weights(const LinearCode& code) const {
    auto j = load_entry(file_for(code, "weights"), matrix_hash(code.generator), "weights");
    if (!j) return std::nullopt;
    WeightDistribution wd;
    wd.n = code.n;
    for (auto& [w, c] : (*j)["counts"].items())
        wd.counts[std::stoi(w)] = c.get<uint64_t>();
    return wd;
}

void ResultCache::store_weights(const LinearCode& code, const WeightDistribution& wd) const {
    json j = entry_header(code, "weights");
    json counts = json::object();
    for (auto& [w, c] : wd.counts) counts[std::to_string(w)] = c;
    j["counts"] = counts;
    std::ofstream(file_for(code, "weights")) << j.dump(2) << "\n";
}

std::optional<CodewordSet> ResultCache::load_words(const LinearCode& code, int w) const {
    std::string op = "words-" + std::to_string(w);
    auto j = load_entry(file_for(code, op), matrix_hash(code.generator), op);
    if (!j) return std::nullopt;
    CodewordSet set;
    set.weight = w;
    for (auto& word : (*j)["words"]) {
        BitVector v(code.n);
        std::size_t i = 0;
        for (auto& limb : word) v.limbs()[i++] = limb.get<uint64_t>();
        set.words.push_back(std::move(v));
    }
    return set;
}

void ResultCache::store_words(const LinearCode& code, const CodewordSet& set) const {
    std::string op = "words-" + std::to_string(set.weight);
    json j = entry_header(code, op);
    j["weight"] = set.weight;
    json words = json::array();
    for (const auto& v : set.words) words.push_back(v.limbs());
    j["words"] = words;
    std::ofstream(file_for(code, op)) << j.dump() << "\n";
}

}  // namespace qrlab
