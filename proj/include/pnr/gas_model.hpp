#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "pnr/errors.hpp"
#include "pnr/rational.hpp"

namespace pnr {

enum class OpKind {
  AuthMint,
  PrivMint,
  BatchUpdate,
  Vote,
  ProposalCreate,
  DealCreate,
  Confirm,
  Dispute,
  BridgeLock,
  BridgeMint,
};

std::string_view to_string(OpKind kind);
Outcome<OpKind> parse_op_kind(std::string_view text);

struct BatchProfile {
  std::uint64_t fixed_gas = 0;
  std::uint64_t marginal_gas = 0;  // per element; must undercut the base op
};

// Parametric gas table. The defaults are model parameters, not
// measurements: authentication is pinned at 45,000 gas and the remaining
// entries are calibrated so the default network profile reproduces the
// target cost figures (see configs/default_gas.json).
struct GasTable {
  std::map<OpKind, std::uint64_t> base_gas;
  std::map<OpKind, BatchProfile> batch;
  std::uint64_t org_overhead_gas = 0;

  static GasTable defaults();
  Outcome<void> validate() const;

  nlohmann::json to_json() const;
  static Outcome<GasTable> from_json(const nlohmann::json& doc);
};

enum class Layer { L1, L2 };

std::string_view to_string(Layer layer);

struct NetworkParams {
  std::uint64_t gas_price_wei = 0;
  Rat native_token_usd;
  Layer layer = Layer::L1;

  static NetworkParams l1_defaults();
  static NetworkParams l2_defaults();

  nlohmann::json to_json() const;
  static Outcome<NetworkParams> from_json(const nlohmann::json& doc);
};

// ((individual * n) - batch) / (individual * n) * 100, exact.
Outcome<Rat> batch_efficiency(std::uint64_t gas_individual, std::uint64_t n,
                              std::uint64_t gas_batch);

struct CostResult {
  std::uint64_t gas = 0;
  Rat usd;
};

Outcome<CostResult> cost_of(OpKind op, std::uint64_t n,
                            const NetworkParams& params,
                            const GasTable& table);

// Affine in members: base + members * (auth mint + one vote).
Rat total_org_cost(std::uint64_t members, const NetworkParams& params,
                   const GasTable& table);

// (1 - usd_l2 / usd_l1) * 100.
Rat l1_l2_reduction(OpKind op, const NetworkParams& l1,
                    const NetworkParams& l2, const GasTable& table);

Rat usd_cost(std::uint64_t gas, const NetworkParams& params);

}  // namespace pnr
