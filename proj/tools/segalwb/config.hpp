#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "segal/barmachine.hpp"

namespace segalwb {

// Bad input: unreadable file, malformed JSON, unknown keys, out-of-range bounds. Exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DiagramSpec {
  std::string kind = "R";               // R | unit | point | free
  std::vector<long long> factors{2};    // R: cyclic factor orders
  std::vector<std::vector<std::vector<long long>>> action;  // R: one matrix per group element
  int sphere = 0;                       // free: F₁ of the trivial k-sphere
};

// An entry of the sphere list: a trivial representation of that dimension, or the regular one.
using SphereSpec = std::variant<int, std::string>;

struct RunConfig {
  std::optional<segal::GroupPtr> group;
  std::string group_name;
  std::optional<DiagramSpec> diagram;
  std::optional<segal::MachineTag> tag;
  std::optional<int> truncation, pair_truncation, qmax, dmax;
  std::optional<std::vector<SphereSpec>> spheres;
  std::optional<std::vector<std::string>> suite;
  std::string output;
};

// "e", "C3", "S3", "C2xS2".
segal::GroupPtr parse_group_name(const std::string& s);
segal::MachineTag parse_machine_tag(const std::string& s);

RunConfig load_config(const std::string& path);
RunConfig parse_config(const std::string& text);

}  // namespace segalwb
