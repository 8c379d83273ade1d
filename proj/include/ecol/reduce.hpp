#pragma once

#include "ecol/configs.hpp"
#include "ecol/gadget.hpp"
#include "ecol/listcolor.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ecol {

// Variant tags of a configuration's gadgets; the first one is the default.
std::vector<std::string> gadget_variants(ConfigId id);
// An empty variant selects the default.
Gadget build_gadget(ConfigId id, const std::string& variant = "");

// Check that the gadget matches its declared degrees and labels.
void validate_gadget(const Gadget& g);

// Edge graph of the edges the check colors: uncolored, then recolorable.
EdgeGraph working_graph(const Gadget& g);

Verdict check_reducible_exhaustive(const Gadget& g, const ExhaustiveOptions& options = {});

struct SampleOptions {
    std::uint64_t samples = 10000;
    std::uint64_t seed = 42;
    int threads = 1;
};

// Random list assignments at the worst-case profile. When the gadget has
// recolorable edges, assignments under which those edges admit no coloring
// are redrawn: the rest of the graph is colorable by minimality, so they do
// not arise.
Verdict check_reducible_sampled(const Gadget& g, const SampleOptions& options = {});

// Sampled check of an explicit edge graph and size profile.
Verdict check_profile_sampled(const EdgeGraph& eg, const std::vector<int>& sizes, const SampleOptions& options = {});

struct RecolorClaim {
    std::string name;
    std::vector<std::string> labels;
    std::vector<int> bounds;
    std::vector<bool> targets;
};

// Recoloring checks for C3, C4 and C6, with list bounds read off their gadgets.
std::vector<RecolorClaim> recolor_claims();

// Random instance of a star of edges with the given list-size bounds.
RecolorInstance random_recolor_instance(const std::vector<int>& bounds, const std::vector<bool>& targets,
                                        std::uint64_t seed, std::uint64_t index);

struct RecolorCheck {
    std::string claim;
    std::vector<int> bounds;
    bool weakened = false;
    std::uint64_t instances = 0;
    std::uint64_t failures = 0;
    // Instances where procedure and brute-force oracle disagree.
    std::uint64_t disagreements = 0;
    std::optional<RecolorInstance> failure;
};

// Each claim at its bounds, then controls with the non-target bounds lowered
// by one and set to one.
std::vector<RecolorCheck> check_recoloring_claims(std::uint64_t samples, std::uint64_t seed);

// Procedure against the brute-force oracle on random stars of 2 to 6 edges.
RecolorCheck check_recolor_agreement(std::uint64_t samples, std::uint64_t seed);

struct ClaimReport {
    std::string claim;
    std::string variant;
    std::string tier;
    Verdict verdict;
    std::vector<std::string> witness_labels;
};

enum class Tier { Exhaustive, Sampled, Both };

struct RunOptions {
    Tier tier = Tier::Both;
    std::uint64_t seed = 42;
    std::uint64_t samples = 10000;
    std::uint64_t recolor_samples = 1000;
    int threads = 1;
};

std::vector<ClaimReport> run_all(const RunOptions& options);
bool all_pass(const std::vector<ClaimReport>& reports);

} // namespace ecol
