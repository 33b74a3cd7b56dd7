#include "pnr/gas_model.hpp"

namespace pnr {

std::string_view to_string(OpKind kind) {
  switch (kind) {
    case OpKind::AuthMint: return "auth_mint";
    case OpKind::PrivMint: return "priv_mint";
    case OpKind::BatchUpdate: return "batch_update";
    case OpKind::Vote: return "vote";
    case OpKind::ProposalCreate: return "proposal_create";
    case OpKind::DealCreate: return "deal_create";
    case OpKind::Confirm: return "confirm";
    case OpKind::Dispute: return "dispute";
    case OpKind::BridgeLock: return "bridge_lock";
    case OpKind::BridgeMint: return "bridge_mint";
  }
  return "?";
}

namespace {
constexpr OpKind kAllOps[] = {
    OpKind::AuthMint, OpKind::PrivMint,   OpKind::BatchUpdate,
    OpKind::Vote,     OpKind::ProposalCreate, OpKind::DealCreate,
    OpKind::Confirm,  OpKind::Dispute,    OpKind::BridgeLock,
    OpKind::BridgeMint};
}  // namespace

Outcome<OpKind> parse_op_kind(std::string_view text) {
  for (OpKind op : kAllOps) {
    if (text == to_string(op)) return op;
  }
  return Err::UnknownOp;
}

std::string_view to_string(Layer layer) {
  return layer == Layer::L1 ? "L1" : "L2";
}

GasTable GasTable::defaults() {
  GasTable table;
  table.base_gas = {
      {OpKind::AuthMint, 45'000},
      {OpKind::PrivMint, 32'000},
      {OpKind::BatchUpdate, 28'000},  // one reputation update in its own tx
      {OpKind::Vote, 11'000},
      {OpKind::ProposalCreate, 95'000},
      {OpKind::DealCreate, 120'000},
      {OpKind::Confirm, 60'000},
      {OpKind::Dispute, 85'000},
      {OpKind::BridgeLock, 70'000},
      {OpKind::BridgeMint, 55'000},
  };
  table.batch = {{OpKind::BatchUpdate, {24'000, 8'000}}};
  table.org_overhead_gas = 150'000;
  return table;
}

Outcome<void> GasTable::validate() const {
  for (const auto& [op, gas] : base_gas) {
    if (gas == 0) {
      return Failure{Err::SchemaViolation, -1,
                     "gas_table." + std::string(to_string(op))};
    }
  }
  for (const auto& [op, profile] : batch) {
    auto base = base_gas.find(op);
    if (base == base_gas.end() || profile.fixed_gas == 0 ||
        profile.marginal_gas == 0 || profile.marginal_gas >= base->second) {
      return Failure{Err::SchemaViolation, -1,
                     "gas_table.batch." + std::string(to_string(op))};
    }
  }
  return ok();
}

nlohmann::json GasTable::to_json() const {
  nlohmann::json doc;
  for (const auto& [op, gas] : base_gas) {
    doc["base"][std::string(to_string(op))] = gas;
  }
  for (const auto& [op, profile] : batch) {
    doc["batch"][std::string(to_string(op))] = {
        {"fixed", profile.fixed_gas}, {"marginal", profile.marginal_gas}};
  }
  doc["org_overhead"] = org_overhead_gas;
  return doc;
}

Outcome<GasTable> GasTable::from_json(const nlohmann::json& doc) {
  GasTable table;
  try {
    for (const auto& [name, value] : doc.at("base").items()) {
      auto op = parse_op_kind(name);
      if (!op.ok()) {
        return Failure{Err::SchemaViolation, -1, "gas_table.base." + name};
      }
      table.base_gas[op.value()] = value.get<std::uint64_t>();
    }
    if (doc.contains("batch")) {
      for (const auto& [name, value] : doc.at("batch").items()) {
        auto op = parse_op_kind(name);
        if (!op.ok()) {
          return Failure{Err::SchemaViolation, -1, "gas_table.batch." + name};
        }
        table.batch[op.value()] = {value.at("fixed").get<std::uint64_t>(),
                                   value.at("marginal").get<std::uint64_t>()};
      }
    }
    table.org_overhead_gas = doc.value("org_overhead", std::uint64_t{0});
  } catch (const nlohmann::json::exception& e) {
    return Failure{Err::ParseError, -1, e.what()};
  }
  if (auto valid = table.validate(); !valid.ok()) return valid.failure();
  return table;
}

NetworkParams NetworkParams::l1_defaults() {
  NetworkParams params;
  params.gas_price_wei = 25'000'000'000;  // 25 gwei
  params.native_token_usd = make_rat(3485);
  params.layer = Layer::L1;
  return params;
}

NetworkParams NetworkParams::l2_defaults() {
  NetworkParams params;
  params.gas_price_wei = 909'000'000'000;
  params.native_token_usd = make_rat(7, 10);
  params.layer = Layer::L2;
  return params;
}

nlohmann::json NetworkParams::to_json() const {
  return {{"gas_price_wei", gas_price_wei},
          {"native_token_usd",
           rat_to_decimal(native_token_usd, 6)},
          {"layer", std::string(to_string(layer))}};
}

Outcome<NetworkParams> NetworkParams::from_json(const nlohmann::json& doc) {
  NetworkParams params;
  try {
    params.gas_price_wei = doc.at("gas_price_wei").get<std::uint64_t>();
    auto usd = parse_rational(doc.at("native_token_usd").get<std::string>());
    if (!usd) {
      return Failure{Err::SchemaViolation, -1, "network.native_token_usd"};
    }
    params.native_token_usd = *usd;
    std::string layer = doc.at("layer").get<std::string>();
    if (layer == "L1") {
      params.layer = Layer::L1;
    } else if (layer == "L2") {
      params.layer = Layer::L2;
    } else {
      return Failure{Err::SchemaViolation, -1, "network.layer"};
    }
  } catch (const nlohmann::json::exception& e) {
    return Failure{Err::ParseError, -1, e.what()};
  }
  if (params.gas_price_wei == 0 || params.native_token_usd <= make_rat(0)) {
    return Failure{Err::SchemaViolation, -1, "network"};
  }
  return params;
}

Outcome<Rat> batch_efficiency(std::uint64_t gas_individual, std::uint64_t n,
                              std::uint64_t gas_batch) {
  if (n == 0) return Err::ZeroN;
  BigInt individual_total = BigInt(gas_individual) * BigInt(n);
  Rat saving(individual_total - BigInt(gas_batch), individual_total);
  return saving * make_rat(100);
}

Rat usd_cost(std::uint64_t gas, const NetworkParams& params) {
  BigInt wei = BigInt(gas) * BigInt(params.gas_price_wei);
  BigInt scale = BigInt("1000000000000000000");  // wei per native token
  return Rat(wei) * params.native_token_usd / Rat(scale);
}

Outcome<CostResult> cost_of(OpKind op, std::uint64_t n,
                            const NetworkParams& params,
                            const GasTable& table) {
  if (n == 0) return Err::ZeroN;
  auto base = table.base_gas.find(op);
  if (base == table.base_gas.end()) return Err::UnknownOp;

  CostResult result;
  auto profile = table.batch.find(op);
  if (profile != table.batch.end()) {
    result.gas = profile->second.fixed_gas + profile->second.marginal_gas * n;
  } else {
    result.gas = base->second * n;
  }
  result.usd = usd_cost(result.gas, params);
  return result;
}

Rat total_org_cost(std::uint64_t members, const NetworkParams& params,
                   const GasTable& table) {
  std::uint64_t base_gas =
      table.base_gas.at(OpKind::ProposalCreate) + table.org_overhead_gas;
  std::uint64_t member_gas =
      table.base_gas.at(OpKind::AuthMint) + table.base_gas.at(OpKind::Vote);
  BigInt total = BigInt(base_gas) + BigInt(member_gas) * BigInt(members);
  return Rat(total * BigInt(params.gas_price_wei)) * params.native_token_usd /
         Rat(BigInt("1000000000000000000"));
}

Rat l1_l2_reduction(OpKind op, const NetworkParams& l1,
                    const NetworkParams& l2, const GasTable& table) {
  auto cost_l1 = cost_of(op, 1, l1, table);
  auto cost_l2 = cost_of(op, 1, l2, table);
  if (!cost_l1.ok() || !cost_l2.ok() ||
      cost_l1.value().usd == make_rat(0)) {
    return make_rat(0);
  }
  return (make_rat(1) - cost_l2.value().usd / cost_l1.value().usd) *
         make_rat(100);
}

}  // namespace pnr
