#include "ncprob/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ncprob {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
}

Rat rat_of(const json& v) {
    if (v.is_string()) return parse_rat(v.get<std::string>());
    if (v.is_number_integer()) return Rat(v.get<long long>());
    if (v.is_number_float()) return rat_from_double(v.get<double>());
    throw std::invalid_argument("expected a rational value, got " + v.dump());
}

std::vector<Rat> rat_list(const json& v, const std::string& field) {
    if (!v.is_array()) throw std::invalid_argument("field '" + field + "' must be a list");
    std::vector<Rat> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(rat_of(x));
    return out;
}

json rat_json(const Rat& r) { return rat_to_string(r); }

}  // namespace

SequenceFile sequence_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.is_object() || !j.contains("moments"))
        throw std::invalid_argument("expected an object with a 'moments' list");
    SequenceFile f;
    f.moments = rat_list(j["moments"], "moments");
    if (f.moments.empty()) throw std::invalid_argument("'moments' must be nonempty");
    if (j.contains("order") &&
        j["order"].get<long long>() != static_cast<long long>(f.moments.size()) - 1)
        throw std::invalid_argument("'order' does not match the length of 'moments'");
    if (j.contains("inf")) f.inf = rat_list(j["inf"], "inf");
    if (j.contains("psi")) f.psi = rat_list(j["psi"], "psi");
    return f;
}

std::string sequence_to_json(const std::vector<Rat>& moments, const std::vector<Rat>& inf) {
    json j;
    j["order"] = moments.size() - 1;
    j["moments"] = json::array();
    for (const Rat& m : moments) j["moments"].push_back(rat_json(m));
    if (!inf.empty()) {
        j["inf"] = json::array();
        for (const Rat& m : inf) j["inf"].push_back(rat_json(m));
    }
    return j.dump(2);
}

NcPartition partition_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.is_array()) throw std::invalid_argument("expected a list of blocks");
    std::vector<std::vector<int>> blocks;
    int n = 0;
    for (const auto& b : j) {
        if (!b.is_array()) throw std::invalid_argument("each block must be a list");
        std::vector<int> blk;
        for (const auto& e : b) {
            if (!e.is_number_integer()) throw std::invalid_argument("elements must be integers");
            blk.push_back(e.get<int>());
            n = std::max(n, blk.back());
        }
        blocks.push_back(std::move(blk));
    }
    return NcPartition(n, blocks);
}

std::string partition_to_json(const NcPartition& pi) {
    json j = json::array();
    for (const auto& blk : pi.blocks()) j.push_back(blk);
    return j.dump();
}

std::string partitions_to_json(int n, const std::vector<NcPartition>& parts) {
    // assembled by hand to keep each partition on a single line
    std::ostringstream os;
    os << "{\n  \"n\": " << n << ",\n  \"count\": " << parts.size()
       << ",\n  \"partitions\": [";
    for (std::size_t i = 0; i < parts.size(); ++i)
        os << (i ? ",\n    " : "\n    ") << partition_to_json(parts[i]);
    os << "\n  ]\n}";
    return os.str();
}

RmtConfig rmt_config_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.is_object()) throw std::invalid_argument("expected a config object");
    RmtConfig cfg;
    if (j.contains("N")) cfg.spec.N = j["N"].get<int>();
    if (j.contains("samples")) cfg.spec.samples = j["samples"].get<int>();
    if (j.contains("seed")) cfg.spec.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("model")) {
        std::string m = j["model"].get<std::string>();
        if (m == "weak_bprime")
            cfg.spec.model = Model::WEAK_BPRIME;
        else if (m == "bprime")
            cfg.spec.model = Model::BPRIME;
        else if (m == "minor")
            cfg.spec.model = Model::MINOR;
        else
            throw std::invalid_argument("unknown model: " + m);
    }
    if (!j.contains("generators") || !j["generators"].is_array())
        throw std::invalid_argument("config needs a 'generators' list");
    for (const auto& g : j["generators"]) {
        GeneratorSpec gs;
        gs.id = g.at("id").get<std::string>();
        if (g.contains("perturbation")) gs.perturbation = g["perturbation"].get<bool>();
        if (g.contains("atoms")) {
            for (const auto& a : g["atoms"]) {
                if (!a.is_array() || a.size() != 2)
                    throw std::invalid_argument("each atom must be a [value, weight] pair");
                gs.atoms.emplace_back(rat_of(a[0]), rat_of(a[1]));
            }
        }
        if (g.contains("pert_eigs")) gs.pert_eigs = rat_list(g["pert_eigs"], "pert_eigs");
        cfg.spec.gens.push_back(std::move(gs));
    }
    if (!j.contains("words") || !j["words"].is_array() || j["words"].empty())
        throw std::invalid_argument("config needs a nonempty 'words' list");
    for (const auto& w : j["words"]) {
        if (!w.is_array()) throw std::invalid_argument("each word must be a list of ids");
        std::vector<std::string> word;
        for (const auto& l : w) word.push_back(l.get<std::string>());
        cfg.words.push_back(std::move(word));
    }
    if (j.contains("sizes"))
        for (const auto& s : j["sizes"]) cfg.sizes.push_back(s.get<int>());
    return cfg;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace ncprob
