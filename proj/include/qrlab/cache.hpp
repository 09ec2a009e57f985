#ifndef QRLAB_CACHE_HPP
#define QRLAB_CACHE_HPP

#include <filesystem>
#include <optional>
#include <string>

#include "qrlab/codes.hpp"

namespace qrlab {

// On-disk cache for enumeration results, one JSON file per
// (generator-hash, operation) pair. Entries with a stale version tag or a
// non-matching hash are treated as misses.
class ResultCache {
   public:
    explicit ResultCache(std::filesystem::path dir);

    std::optional<WeightDistribution> load_weights(const LinearCode& code) const;
    void store_weights(const LinearCode& code, const WeightDistribution& wd) const;

    std::optional<CodewordSet> load_words(const LinearCode& code, int w) const;
    void store_words(const LinearCode& code, const CodewordSet& set) const;

    static constexpr int kFormatVersion = 1;

   private:
    std::filesystem::path dir_;
    std::filesystem::path file_for(const LinearCode& code, const std::string& op) const;
};

}  // namespace qrlab

#endif
