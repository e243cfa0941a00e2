#pragma once

#include <string>
#include <vector>

#include "ncprob/ncpart.hpp"
#include "ncprob/rational.hpp"
#include "ncprob/rmt.hpp"

namespace ncprob {

/// Sequence file: {"order": K, "moments": ["m0", ..., "mK"], "inf": [...],
/// "psi": [...]}. Values may be strings ("3", "1/2", "-0.25"), integers, or
/// floating-point numbers; "order", "inf", and "psi" are optional, and
/// "order" must match the list length when present. Throws
/// std::invalid_argument on malformed input.
struct SequenceFile {
    std::vector<Rat> moments;
    std::vector<Rat> inf;  // empty when absent
    std::vector<Rat> psi;  // empty when absent
};

SequenceFile sequence_from_json(const std::string& text);
std::string sequence_to_json(const std::vector<Rat>& moments,
                             const std::vector<Rat>& inf = {});

/// Partition literal like [[1,2],[3]]; n is the largest element. Validation
/// (coverage of {1,...,n}, noncrossing) is the NcPartition constructor's.
NcPartition partition_from_json(const std::string& text);
std::string partition_to_json(const NcPartition& pi);
std::string partitions_to_json(int n, const std::vector<NcPartition>& parts);

/// Simulation config:
/// {"N": 64, "samples": 200, "seed": 1, "model": "weak_bprime",
///  "generators": [{"id": "x", "atoms": [["-1","1/2"],["1","1/2"]]},
///                 {"id": "f", "perturbation": true, "pert_eigs": ["1"]}],
///  "words": [["x","f","x"]], "sizes": [64, 128]}
/// model in {weak_bprime, bprime, minor}; "sizes" (optional) requests a run
/// per size instead of the single N.
struct RmtConfig {
    EnsembleSpec spec;
    std::vector<std::vector<std::string>> words;
    std::vector<int> sizes;  // empty: run at spec.N only
};

RmtConfig rmt_config_from_json(const std::string& text);

/// Whole-file read; throws std::invalid_argument when the file cannot be
/// opened.
std::string read_text_file(const std::string& path);

}  // namespace ncprob
