#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ncprob/indep.hpp"

namespace ncprob {

enum class Model {
    WEAK_BPRIME,  // conjugated mains, fixed finite-rank perturbations
    BPRIME,       // perturbations conjugated by independent unitaries per group
    MINOR,        // one corner projection q -> diag(0,...,0,1) as the perturbation
};

/// One generator of the ensemble. Mains are diagonal matrices built from an
/// atomic spectrum (value, weight); perturbations are fixed-rank diagonals.
/// Every generator gets its own independent Haar unitary (its group is its id).
struct GeneratorSpec {
    std::string id;
    bool perturbation = false;
    std::vector<std::pair<Rat, Rat>> atoms;  // mains: spectrum, weights sum to 1
    std::vector<Rat> pert_eigs;              // perturbations: nonzero eigenvalues
};

struct EnsembleSpec {
    int N = 64;
    int samples = 100;
    std::uint64_t seed = 1;
    Model model = Model::WEAK_BPRIME;
    std::vector<GeneratorSpec> gens;
    bool checks = true;  // per-sample unitarity assertions
};

struct WordResult {
    std::string word;
    double emp_tr_mean = 0, emp_tr_stderr = 0;
    double pred_phi = 0;
    double emp_trdiff_mean = 0, emp_trdiff_stderr = 0;
    double pred_phi_prime = 0;
    double abs_err_phi = 0, abs_err_phi_prime = 0;
};

struct SimResult {
    int N = 0;
    int samples = 0;
    std::vector<WordResult> rows;
};

/// Haar-distributed unitary: QR of an i.i.d. complex Gaussian matrix with the
/// R-diagonal phase correction.
Eigen::MatrixXcd sample_haar(int N, std::mt19937_64& rng);

/// The symbolic prediction scenario of an ensemble: mains become free groups
/// with the atomic moments, the perturbation side carries the exact
/// nonnormalized traces (jointly for WEAK_BPRIME/MINOR, per group with
/// trivial independence across groups for BPRIME).
Scenario prediction_scenario(const EnsembleSpec& spec);

/// Monte Carlo run. Each word is a list of generator ids; per sample fresh
/// unitaries are drawn, tr_N of the word and Tr_N of (word - word with
/// perturbations zeroed) are accumulated, and engine predictions phi/phi'
/// are attached. Deterministic for a fixed seed, independent of the thread
/// count (NCPROB_THREADS, default 1).
SimResult run(const EnsembleSpec& spec, const std::vector<std::vector<std::string>>& words);

/// |empirical - predicted| per word per N; `anomalies` lists words whose
/// error grew between consecutive sizes by more than the noise allows.
struct ConvergenceRow {
    int N = 0;
    std::string word;
    double abs_err_phi = 0, abs_err_phi_prime = 0;
};
struct ConvergenceTable {
    std::vector<ConvergenceRow> rows;
    std::vector<std::string> anomalies;
};
ConvergenceTable convergence_study(EnsembleSpec spec, const std::vector<int>& sizes,
                                   const std::vector<std::vector<std::string>>& words);

/// CSV with the columns word,N,samples,emp_tr_mean,emp_tr_stderr,pred_phi,
/// emp_Trdiff_mean,emp_Trdiff_stderr,pred_phi_prime,abs_err_phi,
/// abs_err_phi_prime.
std::string to_csv(const SimResult& r);

}  // namespace ncprob
