#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pnr/bridge.hpp"
#include "pnr/bytes.hpp"
#include "pnr/errors.hpp"
#include "pnr/gas_model.hpp"
#include "pnr/rational.hpp"
#include "pnr/token_ledger.hpp"

namespace pnr {

enum class BehaviorKind { Honest, Cheater, Sybil };

struct Behavior {
  BehaviorKind kind = BehaviorKind::Honest;
  std::string strategy;       // cheater: never_complete | never_fund
  std::uint64_t clones = 0;   // sybil clone count
};

struct AgentSpec {
  std::string name;
  std::string identity;
  bool dkyc_verified = false;
  std::uint64_t initial_balance = 0;
  Behavior behavior;
};

enum class ActionKind {
  Onboard,
  CreateDeal,
  Fund,
  Complete,
  Confirm,
  Dispute,
  ProposeRemoval,
  Vote,
  BridgeTransfer,
  AdvanceClock,
};

std::string_view to_string(ActionKind kind);

struct Action {
  Time time = 0;
  ActionKind kind = ActionKind::AdvanceClock;
  std::string agent;  // acting agent for onboard/fund/complete/confirm/dispute/vote/bridge
  // create_deal
  std::string buyer;
  std::string provider;
  TokenType token_type = TokenType::T1;
  std::uint64_t amount = 0;
  Time deadline = 0;
  std::string payment;
  // deal-scoped actions reference deals by creation index
  std::uint64_t deal_index = 0;
  std::string evidence;
  // propose_removal
  std::string proposer;
  std::string target;
  Rat quorum;
  Time period = 0;
  // vote
  std::uint64_t proposal_index = 0;
  std::int64_t vote_value = 0;
  // bridge_transfer
  std::string asset;
  std::string recipient;
  ChainId to_chain = ChainId::Settlement;
};

struct DeterrenceConfig {
  std::uint64_t value_per_point = 100;
  std::uint64_t cheating_gain = 300;
  Rat factor = make_rat(23, 10);
};

struct ScenarioConfig {
  std::vector<Rat> quorums = {make_rat(1, 2), make_rat(13, 20)};
  Time mediation_window = 10;
  Time vote_period = 100;
  DeterrenceConfig deterrence;
  GasTable gas_table = GasTable::defaults();
  NetworkParams l1 = NetworkParams::l1_defaults();
  NetworkParams l2 = NetworkParams::l2_defaults();
  std::string default_asset = "USD";
};

struct Scenario {
  std::uint64_t seed = 0;
  std::vector<AgentSpec> agents;
  std::vector<Action> script;
  ScenarioConfig config;
};

// Parses and validates a scenario document (see schemas/scenario.schema.json).
// Structural failures are reported with the offending field path; value-level
// rule violations are left to the engine so scenarios can script them
// deliberately.
Outcome<Scenario> load_scenario(const std::string& text);
Outcome<Scenario> load_scenario_file(const std::string& path);

}  // namespace pnr
