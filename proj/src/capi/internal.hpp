#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "og10/error.hpp"
#include "og10/io.hpp"
#include "og10/og10.h"

namespace og10::capi {

// Failures that belong to the front end rather than the core.
class FrontEndError : public std::runtime_error {
 public:
  FrontEndError(og10_status status, const std::string& detail)
      : std::runtime_error(detail), status_(status) {}
  og10_status status() const noexcept { return status_; }

 private:
  og10_status status_;
};

og10_status status_of(ErrorCode code);

// Renders the command result in the requested format.
std::string run_command(const std::string& name, const Json& request, const std::string& format);

Lattice named_lattice(const std::string& name);
Lattice resolve_lattice(const Json& spec);
ConeContext named_context(const std::string& name);
ConeContext resolve_context(const Json& request);

const std::vector<std::string>& preset_names();

struct PresetResult {
  Json json;
  // Set for presets whose output is a chamber structure.
  std::optional<ConeContext> context;
  std::optional<ChamberStructure> chambers;
};
PresetResult run_preset(const std::string& name);

std::string class_label(const ConeContext& ctx, const Pair& c);
// "b" for a rational boundary ray, "(T-b)⊥" for a wall ray.
std::string ray_label(const ConeContext& ctx, const Ray& r);
std::string render_svg(const ConeContext& ctx, const ChamberStructure& cs, const std::string& title);
std::string render_csv(const ConeContext& ctx, const ChamberStructure& cs);

}  // namespace og10::capi
