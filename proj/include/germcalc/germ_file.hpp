#ifndef GERMCALC_GERM_FILE_HPP
#define GERMCALC_GERM_FILE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "germcalc/germ.hpp"

namespace germcalc {

/// Parsed form of a .germ document: "key = value" lines, a trailing
/// "components:" section with one polynomial per line, and '#' comments.
struct GermFile {
  std::vector<std::string> source_vars;
  std::vector<std::string> target_vars;
  std::vector<std::uint32_t> weights;
  std::vector<std::uint32_t> degrees;
  std::vector<std::string> components;
  std::uint32_t characteristic = kDefaultCharacteristic;
  std::optional<long long> mu_image;
  std::optional<long long> family_k;
};

GermFile parse_germ_file(std::string_view text);

GermFile read_germ_file(const std::string& path);

/// Builds the germ, applying the optional characteristic override and
/// validating primality and arities.
MapGerm load_germ(const GermFile& file,
                  std::optional<std::uint32_t> char_override = std::nullopt);

/// The mu_I source encoded in the file: mu_image wins over family_k.
/// Auto-detection from weights and degrees is left to the pipeline.
std::optional<long long> file_mu(const GermFile& file);

}  // namespace germcalc

#endif
