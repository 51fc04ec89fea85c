#pragma once

#include "tcr/regions.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tcr {

struct RegistryEntry {
    std::string id;
    Rational rating;  // in (-1, 1]
};

enum class EquilibriumChoice { AllAccept, AllReject };

std::string to_string(EquilibriumChoice choice);

/// One sequential-admission decision, as recorded in traces.
struct OutcomeRecord {
    std::string candidate_id;
    Rational v0;
    Rational vr;
    Rational gamma;
    bool challenged = false;
    RegionLabel region;
    std::optional<EquilibriumChoice> selected;  // set when a policy resolved a selection problem
    Outcome final_outcome = Outcome::Rejected;
};

struct RegistryState {
    std::vector<RegistryEntry> entries;
    std::size_t step_index = 0;
    std::vector<OutcomeRecord> history;

    Rational mean_rating() const;  // 0 for an empty registry
};

/// Valuation of one token without (v0) and with (vr) the candidate.
/// vr must be nondecreasing in the rating at fixed state, both positive.
class ValuationModel {
  public:
    virtual ~ValuationModel() = default;
    virtual Rational v0(const RegistryState& state) const = 0;
    virtual Rational vr(const RegistryState& state, const Rational& rating) const = 0;
    virtual std::string name() const = 0;
};

/// v0 = 1 + mean rating of entries, vr = 1 + mean of entries plus the
/// candidate. A candidate's relative pull shrinks as the registry improves,
/// which is what makes admission order matter.
class ReferenceValuationModel final : public ValuationModel {
  public:
    Rational v0(const RegistryState& state) const override;
    Rational vr(const RegistryState& state, const Rational& rating) const override;
    std::string name() const override { return "reference"; }
};

/// State-independent control model: v0 = 1, vr = 1 + rating. gamma depends
/// only on the candidate, so composition is order-invariant.
class StaticValuationModel final : public ValuationModel {
  public:
    Rational v0(const RegistryState& state) const override;
    Rational vr(const RegistryState& state, const Rational& rating) const override;
    std::string name() const override { return "static"; }
};

std::unique_ptr<ValuationModel> make_valuation_model(const std::string& name);

/// Resolves selection problems (both unanimous profiles are equilibria).
/// Deterministic given kind, seed and step index.
struct SelectionPolicy {
    enum class Kind { PayoffDominant, AlwaysReject, AlwaysAccept, SeededRandom };

    Kind kind = Kind::PayoffDominant;
    std::uint64_t seed = 0;
    // gamma == 1 under PayoffDominant: both equilibria pay identically; the
    // conservative default curates by rejecting.
    EquilibriumChoice tie_break = EquilibriumChoice::AllReject;

    EquilibriumChoice resolve(const Rational& gamma, std::size_t step_index) const;
};

std::string to_string(SelectionPolicy::Kind kind);
SelectionPolicy::Kind policy_kind_from_string(const std::string& text);

struct Electorate {
    std::vector<Rational> voter_tokens;
    Rational challenger_tokens;
};

/// One admission round: value the candidate, decide the challenge, derive
/// the equilibrium set by enumeration when challenged, resolve any selection
/// problem through the policy, append on acceptance.
std::pair<RegistryState, OutcomeRecord> step(RegistryState state, const RegistryEntry& candidate,
                                             const ValuationModel& model,
                                             const SelectionPolicy& policy, const TcrParams& params,
                                             const Electorate& electorate);

struct RunTrace {
    RegistryState final_state;
    std::vector<OutcomeRecord> records;

    std::vector<std::string> composition() const;  // accepted ids, admission order
};

RunTrace run_sequence(std::span<const RegistryEntry> candidates, const ValuationModel& model,
                      const SelectionPolicy& policy, const TcrParams& params,
                      const Electorate& electorate);

/// Exhaustive permutation probe of order dependence.
struct OrderingReport {
    struct Composition {
        std::vector<std::string> entries;         // sorted ids
        std::size_t permutations = 0;             // how many orders produce it
        std::vector<std::string> example_order;   // first producing order
    };
    struct Witness {
        std::vector<std::string> order_a;
        std::vector<std::string> order_b;
        std::vector<std::string> composition_a;
        std::vector<std::string> composition_b;
    };

    std::size_t permutation_count = 0;
    std::vector<Composition> compositions;  // deterministic first-seen order
    std::optional<Witness> witness;         // present iff compositions differ
};

/// Runs run_sequence over every permutation of the pool (bound: 8 candidates)
/// and reports the distinct final compositions plus one witness pair of
/// orderings that diverge, when any does. Permutations may be evaluated in
/// parallel; aggregation order is deterministic.
OrderingReport ordering_experiment(std::span<const RegistryEntry> pool,
                                   const ValuationModel& model, const SelectionPolicy& policy,
                                   const TcrParams& params, const Electorate& electorate,
                                   int parallelism = 1);

}  // namespace tcr
