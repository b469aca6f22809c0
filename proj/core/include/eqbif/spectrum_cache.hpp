#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "eqbif/spectrum.hpp"

namespace eqbif {

/// Environment variable naming the cache directory.
inline constexpr const char* kCacheDirEnv = "EQBIF_CACHE_DIR";

/// On-disk cache of assembled spectra, one JSON file per key
/// (n, gamma rounded to 12 digits, lambda_max, tolerance signature).
class SpectrumCache {
 public:
  explicit SpectrumCache(std::filesystem::path directory) : dir_(std::move(directory)) {}

  /// $EQBIF_CACHE_DIR, else $XDG_CACHE_HOME/eqbif, else $HOME/.cache/eqbif.
  static std::optional<std::filesystem::path> default_directory();

  const std::filesystem::path& directory() const noexcept { return dir_; }

  std::filesystem::path path_for(int n, const BallRadius& radius, double lambda_max,
                                 const Tolerances& tol) const;

  /// A missing file is a silent miss; a corrupt or mismatching file is a miss
  /// with a warning.
  std::optional<Spectrum> load(int n, const BallRadius& radius, double lambda_max,
                               const Tolerances& tol, std::vector<std::string>& warnings) const;

  /// Returns false (with a warning) when the file cannot be written.
  bool store(const Spectrum& spectrum, std::vector<std::string>& warnings) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace eqbif
