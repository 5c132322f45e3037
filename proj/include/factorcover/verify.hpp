#ifndef FACTORCOVER_VERIFY_HPP
#define FACTORCOVER_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "factorcover/extremal.hpp"
#include "factorcover/graph.hpp"
#include "factorcover/spectra.hpp"

namespace fcover {

enum class Target {
  Thm1,
  Thm2,
  Thm3,
  Thm4,
  LemmaSP,
  LemmaGE,
  LemmaEquit,
  LemmaInequit,
  EquivalenceA,
  EquivalenceB,
  Audit,  // transcription audit of one lemma polynomial
  Scan,   // maximizer scan of one lemma over its grid
};

enum class SweepMode { Exhaustive, Sampled };

struct SweepConfig {
  Target target = Target::Thm1;
  std::optional<Lemma> lemma;  // for Audit and Scan
  int n = 0;
  int k = 0;
  SweepMode mode = SweepMode::Exhaustive;
  long sample_count = 100000;
  std::uint64_t seed = 1;
  int trials = 1000;
  int n_max = 7;
  std::vector<int> k_set;  // equivalence sweeps; empty means the default set
  double tolerance = 1e-9;
  int jobs = 1;
};

/// "thm1", "lemma-SP", "equivalence-A", "audit-h4", "scan-h2", ...
SweepConfig parse_target(const std::string& tag);
std::string target_tag(const SweepConfig& config);
std::string to_string(SweepMode mode);

struct Violation {
  std::string graph6;
  std::string detail;
};

/// A printed polynomial that differs from the quotient-derived one.
struct Erratum {
  Lemma lemma = Lemma::H1;
  FamilyParams params;
  CubicCoeffs printed;
  CubicCoeffs derived;
};

struct SweepReport {
  SweepConfig config;
  std::string evidence;  // exhaustive | sampled | property-trials | grid
  long graphs_checked = 0;
  long condition_hits = 0;
  long skipped = 0;  // graphs outside the theorem's class (isolated vertices)
  std::optional<double> threshold;  // dense radius of the extremal graph
  double threshold_residual = 0.0;
  std::vector<Violation> violations;
  /// Graphs meeting the threshold and lacking the property that are
  /// isomorphic to the extremal graph.
  std::vector<std::string> exempt;
  std::optional<bool> extremal_confirmed;
  std::vector<Erratum> errata;
  std::vector<std::string> notes;
  bool outside_hypothesis = false;  // n below the theorem's bound; still swept

  bool passed() const { return violations.empty(); }
};

/// Theorem sweeps. kind selects the spectral radius (A) or q (Q).
SweepReport verify_matching_theorem(MatrixKind kind, const SweepConfig& config);
SweepReport verify_star_theorem(MatrixKind kind, const SweepConfig& config);

/// Property trials for the lemmas on Perron ordering, edge rotation,
/// equitable quotients and edge addition.
SweepReport verify_lemma(Target target, int trials, std::uint64_t seed);

/// Criterion versus direct decider, exhaustively over orders 1..n_max.
SweepReport verify_equivalence(Target which, int n_max, const std::vector<int>& k_set);

/// Printed versus quotient-derived coefficients over the lemma grid.
SweepReport audit_polynomials(Lemma which);

/// scan_maximizer over the lemma grid.
SweepReport scan_lemma(Lemma which);

SweepReport run_sweep(const SweepConfig& config);

/// Erdos-Renyi sample number `index` of the seeded stream; the edge
/// probability is drawn from {0.3, 0.5, 0.7, 0.9}.
Graph sample_graph(int n, std::uint64_t seed, std::uint64_t index);

/// The k-grid of the audits and scans: 0..4 for h1/h2, 2..4 otherwise.
std::vector<int> lemma_k_grid(Lemma which);

}  // namespace fcover

#endif  // FACTORCOVER_VERIFY_HPP
