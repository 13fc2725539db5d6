#pragma once

#include <optional>
#include <string>

#include "blk/brieskorn.hpp"
#include "blk/hodge.hpp"
#include "blk/parse.hpp"
#include "blk/saturation.hpp"

namespace blk {

struct Audit {
  int degree = 0;            // checked modulo s^(degree + 1)
  int exponent = 0;          // final basis = m s^-exponent P
  SeriesMatrix P;            // composed basis change from the monomial basis
  bool conjugation_ok = false;
  bool s2_zero = false;
  std::vector<std::string> steps;
};

struct PipelineResult {
  ParsedPoly input;
  int n = 0;  // number of variables minus one
  MilnorData md;
  SaturationResult sat;
  EigenDecomposition ed;  // A_1 in the c-basis
  VState v;               // after the canonical V-splitting
  HodgeFiltration hf;
  SaitoBasisResult sb;
  SpectralData sd;
  std::optional<Audit> audit;  // always set by run_pipeline
};

struct PipelineOptions {
  std::optional<int> max_saturation_steps;  // default: environment or mu (n + 1)
  FOrder order = FOrder::LambdaAscKDesc;
};

// Parses, checks the singularity and builds the Milnor data.
ParsedPoly parse_input(std::string_view src);

PipelineResult run_pipeline(std::string_view src, const PipelineOptions& opt = {});

// Everything up to the saturated, transported jet (for the CLI prefixes).
struct SaturationStage {
  MilnorData md;
  SaturationResult sat;
  SeriesMatrix A_h;  // t-matrix of the saturated basis
};
SaturationStage run_saturation(const ParsedPoly& p, const PipelineOptions& opt, int extra_degree);

}  // namespace blk
