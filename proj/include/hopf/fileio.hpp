#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "hopf/hopf.hpp"

namespace hopf {

class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Canonical JSON text: sorted keys, sorted sparse triples, scalars as strings.
std::string to_json(const HopfData& h);
/// Parses the JSON format. With `verify`, throws FileError when the Hopf
/// axioms fail, naming the first failing axiom.
HopfData from_json(const std::string& text, bool verify = true);

HopfData load_algebra(const std::filesystem::path& p, bool verify = true);
void save_algebra(const HopfData& h, const std::filesystem::path& p);

}  // namespace hopf
