#pragma once

#include "ambc/codebook.hpp"
#include "ambc/detector.hpp"
#include "ambc/metrics.hpp"
#include "ambc/params.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ambc {

enum class Variant { ScDmpa, ScPlainMpa, Td };

std::string variant_name(Variant v);
std::optional<Variant> variant_from_name(const std::string& s);

// Normalized energy per backscatter symbol, beta = D * sigma_b^2.
double beta_of(Variant v, const SimParams& p);

// One sweep: a single swept parameter, optional modulation-order curve
// family, and a set of detector variants evaluated at every point.
struct Scenario {
  std::string name = "custom";
  SimParams base;
  std::string sweep_var = "alpha";  // alpha | M | K | L_plus
  std::vector<double> sweep_values = {0.25, 0.5, 0.75, 1.0};
  std::vector<int> mod_orders;      // curve family; empty = {base.M}
  std::vector<Variant> variants = {Variant::ScDmpa, Variant::Td};
  std::int64_t trials = 1000;
  std::uint64_t seed = 1;
  VnUpdate vn_update = VnUpdate::SumProduct;

  std::vector<std::string> validate() const;
};

// Builds the named scenario family with its figure defaults applied on top
// of `base`: mod-order, multipath, timeslots, throughput, or custom.
Scenario make_scenario(const std::string& name, const SimParams& base);

// Precomputed per-point context shared by all trials.
struct TrialContext {
  SimParams params;
  Variant variant = Variant::ScDmpa;
  Codebook codebook;        // SC codebook (detector-side L~)
  FactorGraph graph;
  DetectorOptions detector;
  int num_tags = 0;         // N for SC, K for TD
  double beta = 0.0;
  double theta = 0.0;
  std::optional<std::vector<std::uint8_t>> force_active;  // testing hook

  static TrialContext make(const SimParams& p, Variant v, VnUpdate vn = VnUpdate::SumProduct);
};

// Full chain for one trial: channels -> activation -> encoding -> uplink ->
// SIC -> channel recovery -> detection -> bit tallies. Deterministic given
// (master_seed, trial_index) alone.
TrialOutcome run_trial(const TrialContext& ctx, std::uint64_t master_seed,
                       std::int64_t trial_index);

// Runs every (sweep value x curve x variant) point of the scenario and
// aggregates per point. Trials are distributed over a worker pool
// (AMBSCATTER_THREADS caps it); aggregation order is fixed by trial index,
// so output is byte-stable across thread counts.
std::vector<MetricsRecord> run_sweep(const Scenario& sc,
                                     const std::function<void(const std::string&)>& progress = {});

int worker_count();

}  // namespace ambc
