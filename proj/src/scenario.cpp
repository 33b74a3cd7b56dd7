#include "pnr/scenario.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace pnr {

namespace {

using nlohmann::json;

Failure schema_error(const std::string& field) {
  return Failure{Err::SchemaViolation, -1, field};
}

bool is_uint(const json& v) {
  return v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0);
}

Outcome<Rat> rational_field(const json& v, const std::string& field) {
  if (is_uint(v)) return Rat(BigInt(v.get<std::uint64_t>()));
  if (v.is_string()) {
    if (auto parsed = parse_rational(v.get<std::string>())) return *parsed;
  }
  return schema_error(field);
}

Outcome<Behavior> parse_behavior(const json& v, const std::string& field) {
  if (!v.is_object() || !v.contains("kind") || !v["kind"].is_string()) {
    return schema_error(field + ".kind");
  }
  Behavior behavior;
  std::string kind = v["kind"].get<std::string>();
  if (kind == "honest") {
    behavior.kind = BehaviorKind::Honest;
  } else if (kind == "cheater") {
    behavior.kind = BehaviorKind::Cheater;
    if (!v.contains("strategy") || !v["strategy"].is_string()) {
      return schema_error(field + ".strategy");
    }
    behavior.strategy = v["strategy"].get<std::string>();
    if (behavior.strategy != "never_complete" &&
        behavior.strategy != "never_fund") {
      return schema_error(field + ".strategy");
    }
  } else if (kind == "sybil") {
    behavior.kind = BehaviorKind::Sybil;
    if (!v.contains("clones") || !is_uint(v["clones"]) ||
        v["clones"].get<std::uint64_t>() == 0) {
      return schema_error(field + ".clones");
    }
    behavior.clones = v["clones"].get<std::uint64_t>();
  } else {
    return schema_error(field + ".kind");
  }
  return behavior;
}

Outcome<std::string> agent_ref(const json& action, const char* key,
                               const std::set<std::string>& names,
                               const std::string& field) {
  if (!action.contains(key) || !action[key].is_string()) {
    return schema_error(field);
  }
  std::string name = action[key].get<std::string>();
  if (!names.contains(name)) {
    return Failure{Err::UnknownAgentReference, -1, field + "=" + name};
  }
  return name;
}

Outcome<std::uint64_t> uint_field(const json& action, const char* key,
                                  const std::string& field) {
  if (!action.contains(key) || !is_uint(action[key])) {
    return schema_error(field);
  }
  return action[key].get<std::uint64_t>();
}

}  // namespace

std::string_view to_string(ActionKind kind) {
  switch (kind) {
    case ActionKind::Onboard: return "onboard";
    case ActionKind::CreateDeal: return "create_deal";
    case ActionKind::Fund: return "fund";
    case ActionKind::Complete: return "complete";
    case ActionKind::Confirm: return "confirm";
    case ActionKind::Dispute: return "dispute";
    case ActionKind::ProposeRemoval: return "propose_removal";
    case ActionKind::Vote: return "vote";
    case ActionKind::BridgeTransfer: return "bridge_transfer";
    case ActionKind::AdvanceClock: return "advance_clock";
  }
  return "?";
}

Outcome<Scenario> load_scenario(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) {
    return Failure{Err::ParseError, -1, "invalid JSON"};
  }
  if (!doc.is_object()) return schema_error("$");

  Scenario scenario;
  if (!doc.contains("seed") || !is_uint(doc["seed"])) {
    return schema_error("seed");
  }
  scenario.seed = doc["seed"].get<std::uint64_t>();

  if (!doc.contains("agents") || !doc["agents"].is_array()) {
    return schema_error("agents");
  }
  std::set<std::string> names;
  std::size_t agent_index = 0;
  for (const json& a : doc["agents"]) {
    std::string field = "agents[" + std::to_string(agent_index) + "]";
    if (!a.is_object()) return schema_error(field);
    AgentSpec spec;
    if (!a.contains("name") || !a["name"].is_string()) {
      return schema_error(field + ".name");
    }
    spec.name = a["name"].get<std::string>();
    if (spec.name.empty() || !names.insert(spec.name).second) {
      return schema_error(field + ".name");
    }
    if (!a.contains("identity") || !a["identity"].is_string()) {
      return schema_error(field + ".identity");
    }
    spec.identity = a["identity"].get<std::string>();
    if (!a.contains("dkyc_verified") || !a["dkyc_verified"].is_boolean()) {
      return schema_error(field + ".dkyc_verified");
    }
    spec.dkyc_verified = a["dkyc_verified"].get<bool>();
    if (!a.contains("initial_balance") || !is_uint(a["initial_balance"])) {
      return schema_error(field + ".initial_balance");
    }
    spec.initial_balance = a["initial_balance"].get<std::uint64_t>();
    auto behavior = parse_behavior(a.value("behavior", json::object({{"kind", "honest"}})),
                                   field + ".behavior");
    if (!behavior.ok()) return behavior.failure();
    spec.behavior = behavior.value();
    scenario.agents.push_back(std::move(spec));
    ++agent_index;
  }

  if (!doc.contains("script") || !doc["script"].is_array()) {
    return schema_error("script");
  }
  Time last_time = 0;
  std::size_t index = 0;
  for (const json& a : doc["script"]) {
    std::string field = "script[" + std::to_string(index) + "]";
    if (!a.is_object()) return schema_error(field);
    Action action;
    if (!a.contains("time") || !is_uint(a["time"])) {
      return schema_error(field + ".time");
    }
    action.time = a["time"].get<Time>();
    if (index > 0 && action.time < last_time) {
      return schema_error("script");  // times must be non-decreasing
    }
    last_time = action.time;

    if (!a.contains("action") || !a["action"].is_string()) {
      return schema_error(field + ".action");
    }
    std::string name = a["action"].get<std::string>();

    if (name == "onboard") {
      action.kind = ActionKind::Onboard;
      auto agent = agent_ref(a, "agent", names, field + ".agent");
      if (!agent.ok()) return agent.failure();
      action.agent = agent.value();
    } else if (name == "create_deal") {
      action.kind = ActionKind::CreateDeal;
      auto buyer = agent_ref(a, "buyer", names, field + ".buyer");
      if (!buyer.ok()) return buyer.failure();
      action.buyer = buyer.value();
      auto provider = agent_ref(a, "provider", names, field + ".provider");
      if (!provider.ok()) return provider.failure();
      action.provider = provider.value();
      if (!a.contains("token_type") || !a["token_type"].is_string()) {
        return schema_error(field + ".token_type");
      }
      auto type = parse_token_type(a["token_type"].get<std::string>());
      if (!type.ok()) return schema_error(field + ".token_type");
      action.token_type = type.value();
      auto amount = uint_field(a, "amount", field + ".amount");
      if (!amount.ok()) return amount.failure();
      action.amount = amount.value();
      auto deadline = uint_field(a, "deadline", field + ".deadline");
      if (!deadline.ok()) return deadline.failure();
      action.deadline = deadline.value();
      action.payment = a.value("payment", std::string());
    } else if (name == "fund" || name == "complete" || name == "confirm") {
      action.kind = name == "fund"      ? ActionKind::Fund
                    : name == "complete" ? ActionKind::Complete
                                         : ActionKind::Confirm;
      auto agent = agent_ref(a, "agent", names, field + ".agent");
      if (!agent.ok()) return agent.failure();
      action.agent = agent.value();
      auto deal = uint_field(a, "deal", field + ".deal");
      if (!deal.ok()) return deal.failure();
      action.deal_index = deal.value();
    } else if (name == "dispute") {
      action.kind = ActionKind::Dispute;
      auto agent = agent_ref(a, "agent", names, field + ".agent");
      if (!agent.ok()) return agent.failure();
      action.agent = agent.value();
      auto deal = uint_field(a, "deal", field + ".deal");
      if (!deal.ok()) return deal.failure();
      action.deal_index = deal.value();
      action.evidence = a.value("evidence", std::string());
    } else if (name == "propose_removal") {
      action.kind = ActionKind::ProposeRemoval;
      auto proposer = agent_ref(a, "proposer", names, field + ".proposer");
      if (!proposer.ok()) return proposer.failure();
      action.proposer = proposer.value();
      auto target = agent_ref(a, "target", names, field + ".target");
      if (!target.ok()) return target.failure();
      action.target = target.value();
      if (!a.contains("quorum")) return schema_error(field + ".quorum");
      auto quorum = rational_field(a["quorum"], field + ".quorum");
      if (!quorum.ok()) return quorum.failure();
      action.quorum = quorum.value();
      auto period = uint_field(a, "period", field + ".period");
      if (!period.ok()) return period.failure();
      action.period = period.value();
    } else if (name == "vote") {
      action.kind = ActionKind::Vote;
      auto agent = agent_ref(a, "agent", names, field + ".agent");
      if (!agent.ok()) return agent.failure();
      action.agent = agent.value();
      auto proposal = uint_field(a, "proposal", field + ".proposal");
      if (!proposal.ok()) return proposal.failure();
      action.proposal_index = proposal.value();
      if (!a.contains("vote") || !a["vote"].is_number_integer()) {
        return schema_error(field + ".vote");
      }
      action.vote_value = a["vote"].get<std::int64_t>();
    } else if (name == "bridge_transfer") {
      action.kind = ActionKind::BridgeTransfer;
      auto agent = agent_ref(a, "agent", names, field + ".agent");
      if (!agent.ok()) return agent.failure();
      action.agent = agent.value();
      auto recipient = agent_ref(a, "recipient", names, field + ".recipient");
      if (!recipient.ok()) return recipient.failure();
      action.recipient = recipient.value();
      if (!a.contains("asset") || !a["asset"].is_string()) {
        return schema_error(field + ".asset");
      }
      action.asset = a["asset"].get<std::string>();
      auto amount = uint_field(a, "amount", field + ".amount");
      if (!amount.ok()) return amount.failure();
      action.amount = amount.value();
      if (!a.contains("to_chain") || !a["to_chain"].is_string()) {
        return schema_error(field + ".to_chain");
      }
      std::string chain = a["to_chain"].get<std::string>();
      if (chain == "settlement") {
        action.to_chain = ChainId::Settlement;
      } else if (chain == "execution") {
        action.to_chain = ChainId::Execution;
      } else {
        return schema_error(field + ".to_chain");
      }
    } else if (name == "advance_clock") {
      action.kind = ActionKind::AdvanceClock;
    } else {
      return schema_error(field + ".action");
    }
    scenario.script.push_back(std::move(action));
    ++index;
  }

  if (doc.contains("config")) {
    const json& c = doc["config"];
    if (!c.is_object()) return schema_error("config");
    if (c.contains("quorums")) {
      if (!c["quorums"].is_array() || c["quorums"].empty()) {
        return schema_error("config.quorums");
      }
      scenario.config.quorums.clear();
      for (const json& q : c["quorums"]) {
        auto parsed = rational_field(q, "config.quorums");
        if (!parsed.ok()) return parsed.failure();
        scenario.config.quorums.push_back(parsed.value());
      }
    }
    if (c.contains("mediation_window")) {
      auto v = uint_field(c, "mediation_window", "config.mediation_window");
      if (!v.ok() || v.value() == 0) {
        return schema_error("config.mediation_window");
      }
      scenario.config.mediation_window = v.value();
    }
    if (c.contains("vote_period")) {
      auto v = uint_field(c, "vote_period", "config.vote_period");
      if (!v.ok() || v.value() == 0) return schema_error("config.vote_period");
      scenario.config.vote_period = v.value();
    }
    if (c.contains("deterrence")) {
      const json& d = c["deterrence"];
      if (!d.is_object()) return schema_error("config.deterrence");
      if (d.contains("value_per_point")) {
        auto v = uint_field(d, "value_per_point",
                            "config.deterrence.value_per_point");
        if (!v.ok()) return v.failure();
        scenario.config.deterrence.value_per_point = v.value();
      }
      if (d.contains("cheating_gain")) {
        auto v =
            uint_field(d, "cheating_gain", "config.deterrence.cheating_gain");
        if (!v.ok()) return v.failure();
        scenario.config.deterrence.cheating_gain = v.value();
      }
      if (d.contains("factor")) {
        auto v = rational_field(d["factor"], "config.deterrence.factor");
        if (!v.ok()) return v.failure();
        if (v.value() <= make_rat(0)) {
          return schema_error("config.deterrence.factor");
        }
        scenario.config.deterrence.factor = v.value();
      }
    }
    if (c.contains("gas_table")) {
      auto table = GasTable::from_json(c["gas_table"]);
      if (!table.ok()) return table.failure();
      scenario.config.gas_table = table.value();
    }
    if (c.contains("network")) {
      const json& n = c["network"];
      if (!n.is_object()) return schema_error("config.network");
      if (n.contains("l1")) {
        auto params = NetworkParams::from_json(n["l1"]);
        if (!params.ok()) return params.failure();
        scenario.config.l1 = params.value();
      }
      if (n.contains("l2")) {
        auto params = NetworkParams::from_json(n["l2"]);
        if (!params.ok()) return params.failure();
        scenario.config.l2 = params.value();
      }
    }
    if (c.contains("default_asset")) {
      if (!c["default_asset"].is_string()) {
        return schema_error("config.default_asset");
      }
      scenario.config.default_asset = c["default_asset"].get<std::string>();
    }
  }

  return scenario;
}

Outcome<Scenario> load_scenario_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return Failure{Err::ParseError, -1, "cannot open " + path};
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_scenario(buf.str());
}

}  // namespace pnr
