#include "eqbif/spectrum_cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include <nlohmann/json.hpp>

#include "eqbif/json_io.hpp"

namespace eqbif {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kFormatVersion = 1;

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string radius_key(const BallRadius& r) {
  if (r.is_hemisphere()) return "hemisphere";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", r.value());
  return buf;
}

json key_json(int n, const BallRadius& radius, double lambda_max, const Tolerances& tol) {
  return json{{"format", kFormatVersion},
              {"n", n},
              {"radius", radius},
              {"lambda_max", lambda_max},
              {"tolerances", tol}};
}

}  // namespace

std::optional<fs::path> SpectrumCache::default_directory() {
  if (const char* dir = std::getenv(kCacheDirEnv); dir && *dir) return fs::path(dir);
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "eqbif";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "eqbif";
  return std::nullopt;
}

fs::path SpectrumCache::path_for(int n, const BallRadius& radius, double lambda_max, const Tolerances& tol) const {
  char name[160];
  std::snprintf(name, sizeof name, "spectrum-n%d-g%s-L%.12g-%016llx.json", n, radius_key(radius).c_str(),
                lambda_max, static_cast<unsigned long long>(fnv1a(tol.signature())));
  return dir_ / name;
}

std::optional<Spectrum> SpectrumCache::load(int n, const BallRadius& radius, double lambda_max,
                                            const Tolerances& tol, std::vector<std::string>& warnings) const {
  const fs::path path = path_for(n, radius, lambda_max, tol);
  std::error_code ec;
  if (!fs::exists(path, ec)) return std::nullopt;

  std::ifstream in(path);
  if (!in) {
    warnings.push_back("cannot read cache file " + path.string() + "; recomputing");
    return std::nullopt;
  }
  try {
    const json doc = json::parse(in);
    if (doc.at("key") != key_json(n, radius, lambda_max, tol)) {
      warnings.push_back("cache file " + path.string() + " was written for a different key; recomputing");
      return std::nullopt;
    }
    Spectrum s = doc.at("spectrum").get<Spectrum>();
    if (s.n != n || !(s.radius == radius) || s.lambda_max != lambda_max || !(s.tolerances == tol)) {
      warnings.push_back("cache file " + path.string() + " does not match its key; recomputing");
      return std::nullopt;
    }
    return s;
  } catch (const std::exception& e) {
    warnings.push_back("corrupt cache file " + path.string() + " (" + e.what() + "); recomputing");
    return std::nullopt;
  }
}

bool SpectrumCache::store(const Spectrum& spectrum, std::vector<std::string>& warnings) const {
  const fs::path path = path_for(spectrum.n, spectrum.radius, spectrum.lambda_max, spectrum.tolerances);
  const json doc = {{"key", key_json(spectrum.n, spectrum.radius, spectrum.lambda_max, spectrum.tolerances)},
                    {"spectrum", spectrum}};
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) {
    warnings.push_back("cannot create cache directory " + dir_.string() + ": " + ec.message());
    return false;
  }
  // Write to a sibling file and rename so readers never see a partial file.
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) {
      warnings.push_back("cannot write cache file " + tmp.string());
      return false;
    }
    out << doc.dump(2) << '\n';
    if (!out) {
      warnings.push_back("short write to cache file " + tmp.string());
      return false;
    }
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    warnings.push_back("cannot move cache file into place: " + ec.message());
    fs::remove(tmp, ec);
    return false;
  }
  return true;
}

}  // namespace eqbif
