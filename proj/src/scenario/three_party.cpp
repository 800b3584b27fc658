#include "three_party.hpp"

#include "ssi/agent/agent.hpp"
#include "ssi/credential/credential_json.hpp"
#include "ssi/ledger/ledger_json.hpp"

namespace ssi::detail {
namespace {

Bytes dump_bytes(const json::Json& value) {
  std::string text = json::dump_canonical(value);
  return Bytes(text.begin(), text.end());
}

Message take_next(Agent& agent) {
  auto message = agent.next_message();
  if (!message) throw Error(ErrorCode::Undeliverable, "expected a message for " + agent.did().str());
  return std::move(*message);
}

void register_agent(const Agent& agent, LedgerSession& session) {
  const Identity& id = agent.wallet().identity();
  session.submit(make_register_did(id, make_did_document(id, {}, session.clock().now())));
}

}  // namespace

ScenarioTranscript run_three_party(const ThreePartySpec& spec) {
  if (spec.tamper_attribute) {
    bool known = false;
    for (const auto& a : spec.attributes) known = known || a.name == *spec.tamper_attribute;
    if (!known) {
      throw Error(ErrorCode::ConfigError,
                  "cannot tamper with unknown attribute '" + *spec.tamper_attribute + "'");
    }
    if (!spec.reveal.count(*spec.tamper_attribute)) {
      throw Error(ErrorCode::ConfigError,
                  "tampered attribute '" + *spec.tamper_attribute + "' must be revealed");
    }
  }

  SeededRandom rng(derive_actor_seed(spec.seed, "rng"));
  LogicalClock clock(spec.clock_start);

  Writer writer = Writer::create(derive_actor_seed(spec.seed, "registry-writer"), clock.now());
  Ledger ledger = Ledger::genesis(std::span<const Writer>(&writer, 1), clock);
  LedgerSession session(ledger, writer.identity, clock);

  Agent holder(Wallet::create(derive_actor_seed(spec.seed, spec.holder_role)), ledger);
  Agent issuer(Wallet::create(derive_actor_seed(spec.seed, spec.issuer_role)), ledger);
  Agent verifier(Wallet::create(derive_actor_seed(spec.seed, spec.verifier_role)), ledger);
  for (const Agent* a : {&holder, &issuer, &verifier}) register_agent(*a, session);

  MessageBus bus;
  bus.attach(holder);
  bus.attach(issuer);
  bus.attach(verifier);

  ScenarioTranscript t;
  t.scenario_name = spec.scenario_name;
  t.revealed.assign(spec.reveal.begin(), spec.reveal.end());

  // (1) holder asks the issuer for a credential.
  json::Json request = {{"schema", spec.schema_name}, {"holder_did", holder.did().str()}};
  Bytes request_bytes = dump_bytes(request);
  holder.send_sealed(issuer.did(), MessageKind::CredentialRequest, request_bytes, bus, rng);
  issuer.open_sealed(take_next(issuer));
  t.append(spec.holder_role, holder.did(), "request-credential", request_bytes, "delivered");

  // (2) issuer anchors the schema and the credential's commitment root.
  const Identity& issuer_id = issuer.wallet().identity();
  std::vector<std::string> names;
  for (const auto& a : spec.attributes) names.push_back(a.name);
  std::size_t first_new_block = ledger.blocks().size();
  CredentialSchema schema = define_schema(issuer_id, spec.schema_name, 1, names, session);
  Credential credential =
      issue_credential(issuer_id, holder.did(), schema, spec.attributes, session, rng);
  json::Json anchored = json::Json::array();
  for (std::size_t i = first_new_block; i < ledger.blocks().size(); ++i) {
    anchored.push_back(to_json(ledger.blocks()[i]));
  }
  t.append(spec.issuer_role, issuer.did(), "anchor-credential", dump_bytes(anchored), "anchored");

  // (3) issuer delivers the credential into the holder's wallet.
  issuer.send_credential(holder.did(), credential, bus, rng);
  ReceivedCredential received = holder.receive_credential(take_next(holder));
  std::string credential_text = serialize_credential(credential);
  t.append(spec.issuer_role, issuer.did(), "issue-credential",
           Bytes(credential_text.begin(), credential_text.end()),
           received.stored ? "stored" : "rejected");

  if (spec.revoke_before_presentation) {
    revoke_credential(issuer_id, credential.credential_id, session);
  }

  // (4) holder presents a selective disclosure bound to the verifier's
  // challenge.
  Challenge challenge = rng.draw<Challenge>();
  json::Json challenge_msg = {{"challenge", to_hex(challenge)}, {"schema_id", to_hex(schema.schema_id)}};
  verifier.send_sealed(holder.did(), MessageKind::PresentationRequest, dump_bytes(challenge_msg),
                       bus, rng);
  holder.open_sealed(take_next(holder));

  const Credential& held = received.stored
                               ? *holder.wallet().find_credential(credential.credential_id)
                               : received.credential;
  Presentation presentation =
      create_presentation(held, spec.reveal, challenge, holder.wallet().keypair());
  if (spec.tamper_attribute) {
    for (auto& r : presentation.revealed) {
      if (r.name == *spec.tamper_attribute) r.value += "-tampered";
    }
  }
  holder.send_presentation(verifier.did(), presentation, bus, rng);
  std::string presentation_text = serialize_presentation(presentation);
  t.append(spec.holder_role, holder.did(), spec.present_action,
           Bytes(presentation_text.begin(), presentation_text.end()), "delivered");

  // (5) verifier checks the presentation against the registry.
  Presentation opened = verifier.open_presentation(take_next(verifier));
  VerificationReport report = verify_presentation(verifier.registry(), opened, challenge);
  Verdict verdict = report.accepted() ? Verdict::accept()
                                      : Verdict::reject(std::string(to_string(*report.reject_cause())));
  t.append(spec.verifier_role, verifier.did(), "verify-credential", dump_bytes(to_json(report)),
           verdict.str());

  // (6) verifier answers the holder.
  json::Json answer = {{"access", verdict.accepted ? "granted" : "denied"},
                       {"credential_id", to_hex(opened.credential_id)}};
  Bytes answer_bytes = dump_bytes(answer);
  verifier.send_sealed(holder.did(), MessageKind::AccessGrant, answer_bytes, bus, rng);
  holder.open_sealed(take_next(holder));
  t.append(spec.verifier_role, verifier.did(),
           verdict.accepted ? spec.grant_action : spec.deny_action, answer_bytes,
           verdict.accepted ? "granted" : "denied");

  t.final_verdict = verdict;
  return t;
}

}  // namespace ssi::detail
