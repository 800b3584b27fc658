// ssi: wallet, ledger and credential utilities plus the scenario runners.
//
// Exit codes: 0 ok/accept, 1 usage or configuration, 2 verification or
// validation failure, 3 I/O or parse error. JSON goes to stdout,
// diagnostics to stderr.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ssi/agent/wallet.hpp"
#include "ssi/credential/credential_json.hpp"
#include "ssi/credential/engine.hpp"
#include "ssi/ledger/ledger_json.hpp"
#include "ssi/pki/compromise.hpp"
#include "ssi/scenario/government.hpp"
#include "ssi/scenario/healthcare.hpp"

namespace {

using namespace ssi;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kFailed = 2;
constexpr int kIoParse = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string ledger = "ledger.json";
  std::string wallet = "wallet.json";
  std::string seed_hex;
  std::uint64_t clock_start = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !out.write(content.data(), static_cast<std::streamsize>(content.size()))) {
    throw Error(ErrorCode::Io, "cannot write " + path);
  }
}

void print(const json::Json& value) { std::cout << json::dump_canonical(value); }

std::optional<Seed> seed_option(const Globals& g) {
  if (g.seed_hex.empty()) return std::nullopt;
  try {
    return fixed_from_hex<Seed>(g.seed_hex);
  } catch (const Error&) {
    throw UsageError("--seed must be 64 lowercase hex digits");
  }
}

Seed seed_or_fresh(const Globals& g) {
  if (auto seed = seed_option(g)) return *seed;
  Seed seed = SystemRandom().draw<Seed>();
  std::cerr << "seed: " << to_hex(seed) << "\n";
  return seed;
}

std::unique_ptr<RandomSource> make_rng(const Globals& g) {
  if (auto seed = seed_option(g)) return std::make_unique<SeededRandom>(*seed);
  return std::make_unique<SystemRandom>();
}

Challenge parse_challenge(const std::string& hex) {
  try {
    return fixed_from_hex<Challenge>(hex);
  } catch (const Error&) {
    throw UsageError("--challenge must be 64 lowercase hex digits");
  }
}

Hash256 parse_hash(const std::string& hex, const char* flag) {
  try {
    return fixed_from_hex<Hash256>(hex);
  } catch (const Error&) {
    throw UsageError(std::string(flag) + " must be 64 lowercase hex digits");
  }
}

std::pair<std::string, std::string> split_pair(const std::string& text, const char* flag) {
  auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw UsageError(std::string(flag) + " expects name=value, got '" + text + "'");
  }
  return {text.substr(0, eq), text.substr(eq + 1)};
}

Wallet load_wallet(const std::string& path) { return wallet_load(read_file(path)); }

/// Ledger file plus a clock that never runs behind the chain tip.
struct LedgerFile {
  std::string path;
  Ledger ledger;
  LogicalClock clock;

  LedgerFile(const Globals& g)
      : path(g.ledger), ledger(import_ledger(read_file(g.ledger))), clock([&] {
          return std::max(g.clock_start, ledger.blocks().back().timestamp);
        }()) {}

  void save() const { write_file(path, export_ledger(ledger)); }
};

int cmd_wallet_init(const Globals& g) {
  Wallet wallet = Wallet::create(seed_or_fresh(g));
  write_file(g.wallet, wallet_save(wallet));
  print({{"did", wallet.did().str()}, {"wallet", g.wallet}});
  return kOk;
}

int cmd_ledger_init(const Globals& g, const std::vector<std::string>& writer_paths,
                    const std::string& mode_text) {
  LedgerMode mode;
  if (mode_text == "public") {
    mode = LedgerMode::PublicPermissioned;
  } else if (mode_text == "private") {
    mode = LedgerMode::PrivatePermissioned;
  } else {
    throw UsageError("--mode must be public or private");
  }
  LogicalClock clock(g.clock_start);
  std::vector<Writer> writers;
  json::Json dids = json::Json::array();
  for (const auto& path : writer_paths) {
    Identity id = load_wallet(path).identity();
    DidDocument doc = make_did_document(id, {}, clock.now());
    dids.push_back(id.did.str());
    writers.push_back(Writer{std::move(id), std::move(doc)});
  }
  Ledger ledger = Ledger::genesis(writers, clock, mode);
  write_file(g.ledger, export_ledger(ledger));
  print({{"ledger", g.ledger}, {"mode", to_string(mode)}, {"writers", dids}});
  return kOk;
}

int cmd_did_register(const Globals& g, const std::string& writer_path,
                     const std::vector<std::string>& endpoints) {
  LedgerFile lf(g);
  Identity writer = load_wallet(writer_path).identity();
  Identity subject = load_wallet(g.wallet).identity();
  std::vector<ServiceEndpoint> eps;
  for (const auto& e : endpoints) {
    auto [name, uri] = split_pair(e, "--endpoint");
    eps.push_back({name, uri});
  }
  DidDocument doc = make_did_document(subject, std::move(eps), lf.clock.tick());
  LedgerSession session(lf.ledger, writer, lf.clock);
  session.submit(make_register_did(subject, doc));
  lf.save();
  print(to_json(doc));
  return kOk;
}

int cmd_schema_define(const Globals& g, const std::string& writer_path, const std::string& name,
                      std::uint64_t version, const std::vector<std::string>& attributes) {
  LedgerFile lf(g);
  LedgerSession session(lf.ledger, load_wallet(writer_path).identity(), lf.clock);
  CredentialSchema schema =
      define_schema(load_wallet(g.wallet).identity(), name, version, attributes, session);
  lf.save();
  print(to_json(schema));
  return kOk;
}

int cmd_issue(const Globals& g, const std::string& writer_path, const std::string& schema_hex,
              const std::string& holder, const std::vector<std::string>& attrs,
              const std::string& out) {
  LedgerFile lf(g);
  LedgerSession session(lf.ledger, load_wallet(writer_path).identity(), lf.clock);
  Did holder_did = [&] {
    try {
      return Did::parse(holder);
    } catch (const Error&) {
      throw UsageError("--holder is not a valid did:sim identifier");
    }
  }();
  std::vector<Attribute> values;
  for (const auto& a : attrs) {
    auto [name, value] = split_pair(a, "--attr");
    values.push_back({name, value});
  }
  CredentialSchema schema = session.view().lookup_schema(parse_hash(schema_hex, "--schema-id"));
  auto rng = make_rng(g);
  Credential credential =
      issue_credential(load_wallet(g.wallet).identity(), holder_did, schema, values, session, *rng);
  lf.save();
  std::string text = serialize_credential(credential);
  if (out.empty()) {
    std::cout << text;
  } else {
    write_file(out, text);
    print({{"credential_id", to_hex(credential.credential_id)}, {"out", out}});
  }
  return kOk;
}

int cmd_present(const Globals& g, const std::string& credential_path,
                const std::vector<std::string>& reveal, const std::string& challenge_hex,
                const std::string& out) {
  Wallet holder = load_wallet(g.wallet);
  Credential credential = parse_credential(read_file(credential_path));
  Presentation p = create_presentation(credential, {reveal.begin(), reveal.end()},
                                       parse_challenge(challenge_hex), holder.keypair());
  std::string text = serialize_presentation(p);
  if (out.empty()) {
    std::cout << text;
  } else {
    write_file(out, text);
    print({{"credential_id", to_hex(p.credential_id)}, {"out", out}});
  }
  return kOk;
}

int cmd_verify(const Globals& g, const std::string& presentation_path,
               const std::string& credential_path, const std::string& challenge_hex,
               const std::string& reader_path) {
  if (presentation_path.empty() == credential_path.empty()) {
    throw UsageError("give exactly one of --presentation or --credential");
  }
  if (!presentation_path.empty() && challenge_hex.empty()) {
    throw UsageError("--presentation requires --challenge");
  }
  Ledger ledger = import_ledger(read_file(g.ledger));
  std::optional<Did> reader;
  if (!reader_path.empty()) reader = load_wallet(reader_path).did();
  RegistryView view = ledger.view(reader);

  VerificationReport report =
      presentation_path.empty()
          ? verify_credential(view, parse_credential(read_file(credential_path)))
          : verify_presentation(view, parse_presentation(read_file(presentation_path)),
                                parse_challenge(challenge_hex));
  print(to_json(report));
  return report.accepted() ? kOk : kFailed;
}

int cmd_revoke(const Globals& g, const std::string& writer_path, const std::string& id_hex) {
  LedgerFile lf(g);
  LedgerSession session(lf.ledger, load_wallet(writer_path).identity(), lf.clock);
  Hash256 id = parse_hash(id_hex, "--credential-id");
  revoke_credential(load_wallet(g.wallet).identity(), id, session);
  lf.save();
  print({{"credential_id", id_hex}, {"status", to_string(lf.ledger.credential_status(id))}});
  return kOk;
}

int cmd_ledger_validate(const Globals& g, const std::string& positional) {
  const std::string& path = positional.empty() ? g.ledger : positional;
  std::string text = read_file(path);
  try {
    Ledger ledger = import_ledger(text);
    print({{"valid", true}, {"blocks", ledger.blocks().size()}});
    return kOk;
  } catch (const ChainValidationError& e) {
    const FirstInvalid& f = e.failure();
    print({{"valid", false},
           {"first_invalid",
            {{"index", f.index}, {"cause", to_string(f.cause)}, {"detail", f.detail}}}});
    return kFailed;
  }
}

int emit_transcript(const ScenarioTranscript& t, const std::string& out) {
  std::string text = serialize_transcript(t);
  if (!out.empty()) write_file(out, text);
  std::cout << text;
  return t.final_verdict.accepted ? kOk : kFailed;
}

int cmd_healthcare(const Globals& g, bool revoke, const std::string& tamper,
                   const std::vector<std::string>& reveal, const std::string& out) {
  HealthcareConfig config{
      .seed = seed_or_fresh(g),
      .clock_start = g.clock_start,
      .reveal = {reveal.begin(), reveal.end()},
      .revoke_before_presentation = revoke,
      .tamper_attribute = tamper.empty() ? std::nullopt : std::optional<std::string>(tamper),
  };
  return emit_transcript(run_healthcare_scenario(config), out);
}

int cmd_government(const Globals& g, const std::vector<std::string>& reveal,
                   const std::string& out) {
  GovernmentConfig config{.seed = seed_or_fresh(g), .clock_start = g.clock_start, .reveal = {}};
  if (reveal.size() == 1 && reveal.front() == "all") {
    config.reveal.insert(government_attributes().begin(), government_attributes().end());
  } else {
    config.reveal.insert(reveal.begin(), reveal.end());
  }
  return emit_transcript(run_government_scenario(config), out);
}

int cmd_compare(const Globals& g, const std::string& scenario, std::uint64_t forgeries,
                std::uint64_t writers, std::uint64_t compromised) {
  CompromiseConfig config{
      .scenario = parse_compromise_scenario(scenario),
      .forgeries = forgeries,
      .writers = writers,
      .compromised = compromised,
      .seed = seed_option(g).value_or(Seed{}),
  };
  print(to_json(run_compromise_experiment(config)));
  return kOk;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::BadConfig:
    case ErrorCode::ConfigError:
      return kUsage;
    case ErrorCode::ParseError:
    case ErrorCode::Io:
      return kIoParse;
    default:
      return kFailed;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Self-sovereign identity toolkit: wallets, ledger, credentials, scenarios"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--ledger", g.ledger, "Ledger file")->capture_default_str();
  app.add_option("--wallet", g.wallet, "Wallet file of the acting party")->capture_default_str();
  app.add_option("--seed", g.seed_hex, "32-byte hex seed for every random draw");
  app.add_option("--clock-start", g.clock_start, "Initial logical clock value");

  std::vector<std::string> writer_paths, endpoints, attributes, attrs, reveal;
  std::string writer_path, mode = "public", name, schema_id, holder, out, credential_path,
                           presentation_path, challenge, reader_path, credential_id, positional,
                           tamper, scenario = "ca";
  std::uint64_t version = 1, forgeries = 20, writers = 3, compromised = 1;
  bool revoke_first = false;

  auto* wallet_init = app.add_subcommand("wallet-init", "Create a wallet from --seed");

  auto* ledger_init = app.add_subcommand("ledger-init", "Create a ledger with a writer set");
  ledger_init->add_option("--writer", writer_paths, "Writer wallet (repeatable)")->required();
  ledger_init->add_option("--mode", mode, "public or private")->capture_default_str();

  auto* did_register = app.add_subcommand("did-register", "Register the wallet's DID document");
  did_register->add_option("--writer", writer_path, "Writer wallet")->required();
  did_register->add_option("--endpoint", endpoints, "Service endpoint name=uri (repeatable)");

  auto* schema_define = app.add_subcommand("schema-define", "Anchor a credential schema");
  schema_define->add_option("--writer", writer_path, "Writer wallet")->required();
  schema_define->add_option("--name", name, "Schema name")->required();
  schema_define->add_option("--version", version, "Schema version")->capture_default_str();
  schema_define->add_option("--attributes", attributes, "Attribute names")
      ->required()
      ->delimiter(',');

  auto* issue = app.add_subcommand("issue", "Issue a credential and anchor its commitment");
  issue->add_option("--writer", writer_path, "Writer wallet")->required();
  issue->add_option("--schema-id", schema_id, "Schema id (hex)")->required();
  issue->add_option("--holder", holder, "Holder DID")->required();
  issue->add_option("--attr", attrs, "Attribute name=value (repeatable)")->required();
  issue->add_option("--out", out, "Write the credential here instead of stdout");

  auto* present = app.add_subcommand("present", "Build a selective-disclosure presentation");
  present->add_option("--credential", credential_path, "Credential file")->required();
  present->add_option("--reveal", reveal, "Attributes to reveal")->delimiter(',');
  present->add_option("--challenge", challenge, "Verifier challenge (hex)")->required();
  present->add_option("--out", out, "Write the presentation here instead of stdout");

  auto* verify_cmd = app.add_subcommand("verify", "Verify a presentation or credential");
  verify_cmd->add_option("--presentation", presentation_path, "Presentation file");
  verify_cmd->add_option("--credential", credential_path, "Credential file");
  verify_cmd->add_option("--challenge", challenge, "Expected challenge (hex)");
  verify_cmd->add_option("--reader", reader_path, "Reader wallet for private ledgers");

  auto* revoke = app.add_subcommand("revoke", "Revoke a credential the wallet issued");
  revoke->add_option("--writer", writer_path, "Writer wallet")->required();
  revoke->add_option("--credential-id", credential_id, "Credential id (hex)")->required();

  auto* ledger_validate = app.add_subcommand("ledger-validate", "Validate a ledger file");
  ledger_validate->add_option("file", positional, "Ledger file (defaults to --ledger)");

  auto* healthcare = app.add_subcommand("healthcare", "Run the patient/provider scenario");
  healthcare->add_flag("--revoke-before-presentation", revoke_first,
                       "Revoke the credential before the patient presents it");
  healthcare->add_option("--tamper-attribute", tamper, "Alter this revealed value in transit");
  healthcare->add_option("--reveal", reveal, "Attributes to reveal")->delimiter(',');
  healthcare->add_option("--out", out, "Also write the transcript here");

  auto* government = app.add_subcommand("government", "Run the national identity scenario");
  government->add_option("--reveal", reveal, "Attributes to reveal, or 'all'")->delimiter(',');
  government->add_option("--out", out, "Also write the transcript here");

  auto* compare = app.add_subcommand("compare", "CA versus ledger-writer compromise");
  compare->add_option("--scenario", scenario, "ca or ledger")->capture_default_str();
  compare->add_option("--forgeries", forgeries, "Forgery attempts")->capture_default_str();
  compare->add_option("--writers", writers, "Ledger writer-set size")->capture_default_str();
  compare->add_option("--compromised", compromised, "Compromised writers")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*wallet_init) return cmd_wallet_init(g);
    if (*ledger_init) return cmd_ledger_init(g, writer_paths, mode);
    if (*did_register) return cmd_did_register(g, writer_path, endpoints);
    if (*schema_define) return cmd_schema_define(g, writer_path, name, version, attributes);
    if (*issue) return cmd_issue(g, writer_path, schema_id, holder, attrs, out);
    if (*present) return cmd_present(g, credential_path, reveal, challenge, out);
    if (*verify_cmd) return cmd_verify(g, presentation_path, credential_path, challenge, reader_path);
    if (*revoke) return cmd_revoke(g, writer_path, credential_id);
    if (*ledger_validate) return cmd_ledger_validate(g, positional);
    if (*healthcare) return cmd_healthcare(g, revoke_first, tamper, reveal, out);
    if (*government) return cmd_government(g, reveal, out);
    if (*compare) return cmd_compare(g, scenario, forgeries, writers, compromised);
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
