#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "ssi/agent/agent.hpp"
#include "ssi/core/json_codec.hpp"
#include "ssi/credential/credential_json.hpp"

namespace ssi {
namespace {

using test::seed_of;
using test::World;

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::Io;
}

std::string text_of(const Bytes& b) { return std::string(b.begin(), b.end()); }

TEST(Wallet, SaveLoadIsStable) {
  Wallet w = Wallet::create(seed_of(3));
  w.add_other_data("token", {1, 2, 3});
  std::string saved = wallet_save(w);
  Wallet loaded = wallet_load(saved);
  EXPECT_EQ(loaded.did(), w.did());
  EXPECT_EQ(loaded.other_data(), w.other_data());
  EXPECT_EQ(wallet_save(loaded), saved);
  EXPECT_EQ(wallet_save(Wallet::create(seed_of(3))), wallet_save(Wallet::create(seed_of(3))));
  EXPECT_NE(wallet_save(Wallet::create(seed_of(3))), wallet_save(Wallet::create(seed_of(4))));
}

TEST(Wallet, LoadRejectsEditedKeysAndGarbage) {
  json::Json doc = json::parse(wallet_save(Wallet::create(seed_of(3))));
  std::string other_vk = to_hex(Identity::from_seed(seed_of(4)).keys.public_key);
  std::string other_ka = to_hex(Identity::from_seed(seed_of(4)).keys.agreement_public_key);

  auto edited = [&](auto mutate) {
    json::Json copy = doc;
    mutate(copy);
    return copy.dump();
  };
  EXPECT_EQ(code_of([&] {
              wallet_load(edited([&](json::Json& j) { j["did"] = Identity::from_seed(seed_of(4)).did.str(); }));
            }),
            ErrorCode::KeyMismatch);
  EXPECT_EQ(code_of([&] {
              wallet_load(edited([&](json::Json& j) { j["keys"]["verification_key"] = other_vk; }));
            }),
            ErrorCode::KeyMismatch);
  EXPECT_EQ(code_of([&] {
              wallet_load(edited([&](json::Json& j) { j["keys"]["key_agreement_key"] = other_ka; }));
            }),
            ErrorCode::KeyMismatch);
  EXPECT_EQ(code_of([&] {
              wallet_load(edited([&](json::Json& j) { j["keys"]["key_id"] = "0000000000000000"; }));
            }),
            ErrorCode::KeyMismatch);
  EXPECT_EQ(code_of([&] {
              wallet_load(edited([&](json::Json& j) { j["keys"]["seed"] = to_hex(seed_of(4)); }));
            }),
            ErrorCode::KeyMismatch);
  EXPECT_EQ(code_of([&] { wallet_load(edited([&](json::Json& j) { j["format"] = "x"; })); }),
            ErrorCode::ParseError);
  EXPECT_EQ(code_of([&] { wallet_load(edited([&](json::Json& j) { j.erase("credentials"); })); }),
            ErrorCode::ParseError);
  EXPECT_EQ(code_of([&] { wallet_load(edited([&](json::Json& j) { j["keys"]["seed"] = "zz"; })); }),
            ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { wallet_load("{"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { wallet_load(""); }), ErrorCode::ParseError);
}

/// Issuer 1, holder 2 and verifier 3 registered on one ledger, each behind
/// an agent attached to a shared bus.
struct Network : World {
  Network()
      : World(21),
        issuer_id(enroll(1)),
        holder_id(enroll(2)),
        verifier_id(enroll(3)),
        schema(define_schema(issuer_id, "membership", 1, {"member", "tier"}, session)),
        issuer(Wallet::create(seed_of(1)), ledger),
        holder(Wallet::create(seed_of(2)), ledger),
        verifier(Wallet::create(seed_of(3)), ledger) {
    bus.attach(issuer);
    bus.attach(holder);
    bus.attach(verifier);
  }

  Credential issue() {
    return issue_credential(issuer_id, holder_id.did, schema, {{"member", "M-17"}, {"tier", "gold"}},
                            session, rng);
  }

  Identity issuer_id, holder_id, verifier_id;
  CredentialSchema schema;
  SeededRandom rng{9};
  Agent issuer, holder, verifier;
  MessageBus bus;
};

TEST(Agent, CredentialDeliveryStoresInHolderWallet) {
  Network n;
  Credential c = n.issue();
  n.issuer.send_credential(n.holder.did(), c, n.bus, n.rng);
  EXPECT_EQ(n.holder.inbox_size(), 1u);
  EXPECT_EQ(n.bus.transcript().size(), 1u);
  EXPECT_EQ(n.bus.transcript()[0].kind, MessageKind::Credential);
  EXPECT_EQ(n.bus.transcript()[0].payload_hash, sha256(n.bus.log()[0].payload));

  Message m = *n.holder.next_message();
  EXPECT_EQ(n.holder.inbox_size(), 0u);
  ReceivedCredential r = n.holder.receive_credential(m);
  EXPECT_TRUE(r.report.accepted());
  EXPECT_TRUE(r.stored);
  EXPECT_EQ(r.sender, n.issuer.did());
  ASSERT_EQ(n.holder.wallet().credentials().size(), 1u);
  EXPECT_EQ(n.holder.wallet().credentials()[0], c);
  EXPECT_FALSE(n.holder.receive_credential(m).stored);  // already held
  EXPECT_EQ(n.holder.wallet().credentials().size(), 1u);
}

TEST(Agent, UnknownRecipientSendsNothing) {
  Network n;
  Credential c = n.issue();
  Did stranger = Identity::from_seed(seed_of(40)).did;
  EXPECT_EQ(code_of([&] { n.issuer.send_credential(stranger, c, n.bus, n.rng); }),
            ErrorCode::UnknownDid);
  EXPECT_TRUE(n.bus.log().empty());
  EXPECT_TRUE(n.bus.transcript().empty());
}

TEST(Agent, OnlyTheAddresseeCanOpen) {
  Network n;
  Credential c = n.issue();
  n.issuer.send_credential(n.holder.did(), c, n.bus, n.rng);
  Message m = *n.holder.next_message();
  EXPECT_EQ(code_of([&] { n.verifier.receive_credential(m); }), ErrorCode::AuthFailure);
  Message redirected = m;
  redirected.to = n.verifier.did();
  EXPECT_EQ(code_of([&] { n.verifier.receive_credential(redirected); }), ErrorCode::AuthFailure);
  Message reflected = m;
  reflected.from = n.holder.did();
  EXPECT_EQ(code_of([&] { n.issuer.open_sealed(reflected); }), ErrorCode::AuthFailure);
  Message spoofed = m;
  spoofed.from = n.verifier.did();
  EXPECT_EQ(code_of([&] { n.holder.receive_credential(spoofed); }), ErrorCode::AuthFailure);
  Message flipped = m;
  flipped.payload.back() ^= 1;
  EXPECT_EQ(code_of([&] { n.holder.receive_credential(flipped); }), ErrorCode::AuthFailure);
}

TEST(Agent, RevokedOrForgedCredentialIsNotStored) {
  Network n;
  Credential c = n.issue();
  revoke_credential(n.issuer_id, c.credential_id, n.session);
  n.issuer.send_credential(n.holder.did(), c, n.bus, n.rng);
  ReceivedCredential r = n.holder.receive_credential(*n.holder.next_message());
  EXPECT_EQ(*r.report.reject_cause(), Check::StatusActive);
  EXPECT_FALSE(r.stored);
  EXPECT_TRUE(n.holder.wallet().credentials().empty());

  Credential forged = n.issue();
  forged.attributes[1].value = "platinum";
  n.issuer.send_credential(n.holder.did(), forged, n.bus, n.rng);
  r = n.holder.receive_credential(*n.holder.next_message());
  EXPECT_EQ(*r.report.reject_cause(), Check::MerkleProofs);
  EXPECT_FALSE(r.stored);
}

TEST(Agent, MalformedPlaintextOrWrongKindIsParseError) {
  Network n;
  n.issuer.send_sealed(n.holder.did(), MessageKind::Credential, as_bytes(std::string_view("hi")),
                       n.bus, n.rng);
  EXPECT_EQ(code_of([&] { n.holder.receive_credential(*n.holder.next_message()); }),
            ErrorCode::ParseError);
  n.issuer.send_credential(n.holder.did(), n.issue(), n.bus, n.rng);
  Message m = *n.holder.next_message();
  m.kind = MessageKind::AccessGrant;
  EXPECT_EQ(code_of([&] { n.holder.receive_credential(m); }), ErrorCode::ParseError);
  m.kind = MessageKind::Credential;
  m.payload.resize(10);
  EXPECT_EQ(code_of([&] { n.holder.receive_credential(m); }), ErrorCode::ParseError);
}

TEST(Agent, InboxIsFifoAndUndeliverableThrows) {
  Network n;
  for (std::uint8_t i = 0; i < 5; ++i) {
    n.issuer.send_sealed(n.holder.did(), MessageKind::AccessGrant, Bytes{i}, n.bus, n.rng);
  }
  for (std::uint8_t i = 0; i < 5; ++i) {
    EXPECT_EQ(n.holder.open_sealed(*n.holder.next_message()), Bytes{i});
  }
  EXPECT_FALSE(n.holder.next_message());
  for (std::size_t i = 0; i < n.bus.transcript().size(); ++i) {
    EXPECT_EQ(n.bus.transcript()[i].step, i + 1);
  }
  n.bus.detach(n.holder.did());
  EXPECT_EQ(code_of([&] {
              n.issuer.send_sealed(n.holder.did(), MessageKind::AccessGrant, Bytes{}, n.bus, n.rng);
            }),
            ErrorCode::Undeliverable);
}

TEST(Agent, PresentationRoundTrip) {
  Network n;
  Credential c = n.issue();
  Challenge ch = n.rng.draw<Challenge>();
  Presentation p = create_presentation(c, {"tier"}, ch, n.holder.wallet().keypair());
  n.holder.send_presentation(n.verifier.did(), p, n.bus, n.rng);
  Presentation got = n.verifier.open_presentation(*n.verifier.next_message());
  EXPECT_EQ(got, p);
  EXPECT_TRUE(verify_presentation(n.verifier.registry(), got, ch).accepted());
}

TEST(DidAuth, HonestReplayAndImpostor) {
  Network n;
  LogicalClock& clock = n.clock;
  AuthChallenge ch = n.verifier.did_auth_challenge(n.holder.did(), n.rng, clock);
  AuthResponse resp = n.holder.did_auth_respond(ch);
  EXPECT_TRUE(n.verifier.did_auth_check(resp, clock));
  EXPECT_FALSE(n.verifier.did_auth_check(resp, clock));  // nonce consumed

  ch = n.verifier.did_auth_challenge(n.holder.did(), n.rng, clock);
  AuthResponse impostor = did_auth_respond(n.issuer_id, ch);
  impostor.subject_did = n.holder.did();
  EXPECT_FALSE(n.verifier.did_auth_check(impostor, clock));
  // The failed attempt consumed the nonce, so the honest answer is now late.
  EXPECT_FALSE(n.verifier.did_auth_check(n.holder.did_auth_respond(ch), clock));

  ch = n.verifier.did_auth_challenge(n.holder.did(), n.rng, clock);
  AuthResponse self_named = did_auth_respond(n.issuer_id, ch);
  EXPECT_FALSE(n.verifier.did_auth_check(self_named, clock));  // not the challenged subject

  ch = n.verifier.did_auth_challenge(n.holder.did(), n.rng, clock);
  resp = n.holder.did_auth_respond(ch);
  resp.verifier_did = n.issuer.did();
  EXPECT_FALSE(n.verifier.did_auth_check(resp, clock));

  // A response addressed to another verifier cannot be replayed here.
  AuthChallenge for_issuer = n.issuer.did_auth_challenge(n.holder.did(), n.rng, clock);
  EXPECT_FALSE(n.verifier.did_auth_check(n.holder.did_auth_respond(for_issuer), clock));
  EXPECT_TRUE(n.issuer.did_auth_check(n.holder.did_auth_respond(for_issuer), clock));
}

TEST(DidAuth, StaleAndUnregistered) {
  Network n;
  LogicalClock clock(1000);
  AuthChallenge ch = n.verifier.did_auth_challenge(n.holder.did(), n.rng, clock);
  clock.advance(DidAuthVerifier::kDefaultTtl);
  EXPECT_TRUE(n.verifier.did_auth_check(n.holder.did_auth_respond(ch), clock));

  ch = n.verifier.did_auth_challenge(n.holder.did(), n.rng, clock);
  clock.advance(DidAuthVerifier::kDefaultTtl + 1);
  EXPECT_EQ(code_of([&] { n.verifier.did_auth_check(n.holder.did_auth_respond(ch), clock); }),
            ErrorCode::StaleChallenge);

  Identity stranger = Identity::from_seed(seed_of(41));
  ch = n.verifier.did_auth_challenge(stranger.did, n.rng, clock);
  EXPECT_EQ(code_of([&] { n.verifier.did_auth_check(did_auth_respond(stranger, ch), clock); }),
            ErrorCode::UnknownDid);
}

TEST(DidAuth, EveryOrderedPairAuthenticates) {
  Network n;
  Agent* agents[] = {&n.issuer, &n.holder, &n.verifier};
  for (Agent* v : agents) {
    for (Agent* s : agents) {
      if (v == s) continue;
      AuthChallenge ch = v->did_auth_challenge(s->did(), n.rng, n.clock);
      EXPECT_TRUE(v->did_auth_check(s->did_auth_respond(ch), n.clock));
      for (Agent* other : agents) {
        if (other == s) continue;
        ch = v->did_auth_challenge(s->did(), n.rng, n.clock);
        AuthResponse forged = other->did_auth_respond(ch);
        forged.subject_did = s->did();
        EXPECT_FALSE(v->did_auth_check(forged, n.clock));
      }
    }
  }
}

TEST(DidAuth, JsonRoundTrip) {
  Network n;
  AuthChallenge ch = n.verifier.did_auth_challenge(n.holder.did(), n.rng, n.clock);
  EXPECT_EQ(auth_challenge_from_json(to_json(ch)), ch);
  AuthResponse r = n.holder.did_auth_respond(ch);
  EXPECT_EQ(auth_response_from_json(to_json(r)), r);
}

TEST(Agent, NoSecretKeyMaterialLeavesAnAgent) {
  Network n;
  Credential c = n.issue();
  n.issuer.send_credential(n.holder.did(), c, n.bus, n.rng);
  n.holder.receive_credential(*n.holder.next_message());
  Challenge ch = n.rng.draw<Challenge>();
  n.holder.send_presentation(n.verifier.did(),
                             create_presentation(c, {"member"}, ch, n.holder.wallet().keypair()),
                             n.bus, n.rng);
  AuthChallenge ac = n.verifier.did_auth_challenge(n.holder.did(), n.rng, n.clock);
  std::string ac_text = to_json(ac).dump();
  n.verifier.send_sealed(n.holder.did(), MessageKind::AuthChallenge, as_bytes(ac_text), n.bus, n.rng);
  std::string resp_text = to_json(n.holder.did_auth_respond(ac)).dump();
  n.holder.send_sealed(n.verifier.did(), MessageKind::AuthResponse, as_bytes(resp_text), n.bus, n.rng);

  // Check both the wire bytes and what each recipient decrypts.
  std::vector<Bytes> observed;
  for (const Message& m : n.bus.log()) {
    observed.push_back(m.payload);
    Agent* to = m.to == n.holder.did() ? &n.holder : m.to == n.verifier.did() ? &n.verifier : &n.issuer;
    observed.push_back(to->open_sealed(m));
  }
  std::string jsonl = n.bus.transcript_jsonl();
  observed.emplace_back(jsonl.begin(), jsonl.end());
  ASSERT_EQ(n.bus.log().size(), 4u);

  for (const Agent* a : {&n.issuer, &n.holder, &n.verifier}) {
    const SecretKey& sk = a->wallet().keypair().private_key;
    const Bytes secrets[] = {Bytes(sk.seed().bytes.begin(), sk.seed().bytes.end()),
                             Bytes(sk.signing_key().begin(), sk.signing_key().begin() + 32),
                             Bytes(sk.agreement_key().begin(), sk.agreement_key().end())};
    for (const Bytes& secret : secrets) {
      std::string hex = to_hex(secret), b64 = to_base64(secret);
      for (const Bytes& o : observed) {
        EXPECT_FALSE(contains_subsequence(o, secret));
        EXPECT_EQ(text_of(o).find(hex), std::string::npos);
        EXPECT_EQ(text_of(o).find(b64), std::string::npos);
      }
    }
  }
}

}  // namespace
}  // namespace ssi
