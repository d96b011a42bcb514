#pragma once

#include <string>

#include "isr/algebraic.hpp"
#include "isr/bench.hpp"
#include "isr/forge.hpp"

/* File formats. Matrices, fields, and experiment configs are JSON;
   measurements are plain decimals one per line. Integer matrix files
   carry {m, d, k, entries (row-major), certificate?}; rational files use
   "p/q" strings for non-integer entries; algebraic files store the
   certified wide matrix and minimal polynomial they were built from plus
   the complex entries as (re, im) pairs, which loading recomputes and
   cross-checks so a stale cache cannot slip through. */

namespace isr {

void save_sensing_matrix(const SensingMatrix& a, const std::string& path);
SensingMatrix load_sensing_matrix(const std::string& path);

void save_rational_matrix(const RatMat& a, const std::string& path);
RatMat load_rational_matrix(const std::string& path);

void save_field(const NumberFieldSpec& field, const std::string& path);
NumberFieldSpec load_field(const std::string& path);

void save_algebraic_matrix(const AlgebraicSensingMatrix& a, const std::string& path);
AlgebraicSensingMatrix load_algebraic_matrix(const std::string& path);

// True when the file holds an algebraic matrix rather than an integer or
// rational one (decode/bench accept either and realify the former).
bool is_algebraic_matrix_file(const std::string& path);

void save_measurement(const Eigen::VectorXd& v, const std::string& path);
Eigen::VectorXd load_measurement(const std::string& path);

// Experiment config: {"matrix": path-or-genspec, "signal": {...}, "s",
// "sigmas", "methods", "trials", "master_seed"}. A genspec object
// {"model","m","d","k","seed"} generates and certifies in place. When the
// optional "threads" field is absent the ISR_THREADS environment variable
// supplies the default worker count (1 if unset).
ExperimentConfig load_experiment_config(const std::string& path);

}  // namespace isr
