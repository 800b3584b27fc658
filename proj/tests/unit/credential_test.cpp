#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
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

std::vector<Hash256> random_leaves(std::size_t n, std::uint64_t seed) {
  SeededRandom rng(seed);
  std::vector<Hash256> leaves(n);
  for (auto& l : leaves) l = rng.draw<Hash256>();
  return leaves;
}

TEST(Merkle, CommitmentMatchesIndependentEncoding) {
  SeededRandom rng(1);
  for (int i = 0; i < 20; ++i) {
    Salt salt = rng.draw<Salt>();
    std::string name = "attr" + std::to_string(i), value(static_cast<std::size_t>(i), 'v');
    EXPECT_EQ(attribute_commitment(name, value, salt), test::oracle_commitment(name, value, salt));
  }
  Salt s{};
  // Field boundaries are length-delimited, so shifting a character between
  // name and value changes the commitment.
  EXPECT_NE(attribute_commitment("ab", "c", s), attribute_commitment("a", "bc", s));
}

TEST(Merkle, RootMatchesRecursiveOracle) {
  for (std::size_t n = 1; n <= 17; ++n) {
    auto leaves = random_leaves(n, n);
    MerkleTree tree(leaves);
    EXPECT_EQ(tree.root(), test::oracle_merkle_root(leaves)) << n;
    EXPECT_EQ(tree.leaf_count(), n);
  }
  auto one = random_leaves(1, 99);
  EXPECT_EQ(MerkleTree(one).root(), one[0]);
}

TEST(Merkle, Depth) {
  const std::pair<std::size_t, std::size_t> cases[] = {{1, 0}, {2, 1}, {3, 2}, {4, 2},
                                                       {5, 3}, {8, 3}, {9, 4}};
  for (auto [n, d] : cases) EXPECT_EQ(merkle_depth(n), d) << n;
}

TEST(Merkle, EveryPathVerifiesAndWrongInputsFail) {
  for (std::size_t n = 1; n <= 9; ++n) {
    auto leaves = random_leaves(n, 100 + n);
    MerkleTree tree(leaves);
    for (std::size_t i = 0; i < n; ++i) {
      MerklePath p = tree.path(i);
      EXPECT_EQ(p.leaf_index, i);
      EXPECT_EQ(p.siblings.size(), merkle_depth(n));
      EXPECT_TRUE(verify_merkle_path(leaves[i], p, tree.root(), n));
      if (n > 1) {
        EXPECT_FALSE(verify_merkle_path(leaves[(i + 1) % n], p, tree.root(), n));
        MerklePath moved = p;
        moved.leaf_index = (i + 1) % n;
        EXPECT_FALSE(verify_merkle_path(leaves[i], moved, tree.root(), n));
      }
      for (std::size_t s = 0; s < p.siblings.size(); ++s) {
        MerklePath q = p;
        q.siblings[s].bytes[0] ^= 1;
        EXPECT_FALSE(verify_merkle_path(leaves[i], q, tree.root(), n));
      }
      MerklePath outside = p;
      outside.leaf_index = n;
      EXPECT_FALSE(verify_merkle_path(leaves[i], outside, tree.root(), n));
      MerklePath longer = p;
      longer.siblings.push_back(Hash256{});
      EXPECT_FALSE(verify_merkle_path(leaves[i], longer, tree.root(), n));
    }
  }
}

TEST(Schema, AttributeListValidation) {
  Did d = Identity::from_seed(seed_of(1)).did;
  EXPECT_EQ(code_of([&] { make_schema(d, "s", 1, {}); }), ErrorCode::DuplicateAttribute);
  EXPECT_EQ(code_of([&] { make_schema(d, "s", 1, {"a", "b", "a"}); }),
            ErrorCode::DuplicateAttribute);
  CredentialSchema s = make_schema(d, "s", 1, {"a", "b"});
  EXPECT_TRUE(s.well_formed());
  EXPECT_NE(s.schema_id, make_schema(Identity::from_seed(seed_of(2)).did, "s", 1, {"a", "b"}).schema_id);
  EXPECT_NE(s.schema_id, make_schema(d, "s", 2, {"a", "b"}).schema_id);
  EXPECT_NE(s.schema_id, make_schema(d, "s", 1, {"b", "a"}).schema_id);
  EXPECT_EQ(schema_from_json(to_json(s)), s);
}

struct Issued : World {
  Issued()
      : World(11),
        issuer(enroll(1)),
        holder(enroll(2)),
        rng(5),
        schema(define_schema(issuer, "id-card", 1, {"name", "dob", "city"}, session)),
        credential(issue_credential(
            issuer, holder.did, schema,
            {{"city", "Springfield"}, {"name", "Lisa"}, {"dob", "1982-05-09"}}, session, rng)) {}
  Presentation present(std::set<std::string> reveal, const Challenge& c) {
    return create_presentation(credential, reveal, c, holder.keys);
  }

  Identity issuer, holder;
  SeededRandom rng;
  CredentialSchema schema;
  Credential credential;
  Challenge challenge = SeededRandom(77).draw<Challenge>();
};

TEST(Issue, AnchorsOnlyTheCommitmentRoot) {
  Issued f;
  const Credential& c = f.credential;
  EXPECT_EQ(c.attributes[0].name, "name");
  EXPECT_EQ(c.attributes[2].value, "Springfield");
  EXPECT_EQ(c.salts.size(), 3u);
  EXPECT_EQ(c.commitment_root, test::oracle_merkle_root(c.commitments()));
  EXPECT_TRUE(c.internally_consistent());
  EXPECT_TRUE(tamper_check(c, f.issuer.keys.public_key));
  EXPECT_TRUE(tamper_check(c, f.ledger.view()));
  EXPECT_EQ(f.ledger.credential_status(c.credential_id), CredentialStatus::Active);

  auto anchor = std::get<AnchorCredential>(f.ledger.blocks().back().transactions[0].body);
  EXPECT_EQ(anchor.commitment_root, c.commitment_root);
  std::string ledger_text = to_json(f.ledger.blocks().back()).dump();
  for (const auto& a : c.attributes) EXPECT_EQ(ledger_text.find(a.value), std::string::npos);
}

TEST(Issue, RefusesBadRequests) {
  Issued f;
  Identity stranger = Identity::from_seed(seed_of(50));
  std::vector<Attribute> values{{"name", "x"}, {"dob", "y"}, {"city", "z"}};
  EXPECT_EQ(code_of([&] { issue_credential(stranger, f.holder.did, f.schema, values, f.session, f.rng); }),
            ErrorCode::UnknownDid);
  EXPECT_EQ(code_of([&] { issue_credential(f.holder, f.holder.did, f.schema, values, f.session, f.rng); }),
            ErrorCode::NotSchemaOwner);
  CredentialSchema unanchored = make_schema(f.issuer.did, "other", 1, {"a"});
  EXPECT_EQ(code_of([&] {
              issue_credential(f.issuer, f.holder.did, unanchored, {{"a", "1"}}, f.session, f.rng);
            }),
            ErrorCode::UnknownSchema);
  for (const std::vector<Attribute>& bad : std::vector<std::vector<Attribute>>{
           {{"name", "x"}, {"dob", "y"}},
           {{"name", "x"}, {"dob", "y"}, {"city", "z"}, {"zip", "1"}},
           {{"name", "x"}, {"name", "y"}, {"city", "z"}},
           {{"name", "x"}, {"dob", "y"}, {"town", "z"}}}) {
    EXPECT_EQ(code_of([&] { issue_credential(f.issuer, f.holder.did, f.schema, bad, f.session, f.rng); }),
              ErrorCode::SchemaMismatch);
  }
  EXPECT_EQ(code_of([&] { define_schema(stranger, "s", 1, {"a"}, f.session); }), ErrorCode::UnknownDid);
  EXPECT_EQ(code_of([&] { define_schema(f.issuer, "id-card", 1, {"name", "dob", "city"}, f.session); }),
            ErrorCode::DuplicateSchema);
}

TEST(Present, RevealsExactlyTheChosenSubset) {
  Issued f;
  Presentation p = f.present({"city", "name"}, f.challenge);
  ASSERT_EQ(p.revealed.size(), 2u);
  EXPECT_EQ(p.revealed[0].name, "name");
  EXPECT_EQ(p.revealed[1].name, "city");
  std::string text = serialize_presentation(p);
  EXPECT_EQ(text.find("1982-05-09"), std::string::npos);
  EXPECT_EQ(text.find(to_hex(f.credential.salts[1])), std::string::npos);
  EXPECT_TRUE(verify_presentation(f.ledger.view(), p, f.challenge).accepted());
}

TEST(Present, RefusesUnknownAttributeAndForeignKey) {
  Issued f;
  EXPECT_EQ(code_of([&] { f.present({"name", "blood_type"}, f.challenge); }),
            ErrorCode::UnknownAttribute);
  EXPECT_EQ(code_of([&] {
              create_presentation(f.credential, {"name"}, f.challenge, f.issuer.keys);
            }),
            ErrorCode::WrongHolderKey);
}

TEST(Verify, HonestPresentationPassesEveryCheck) {
  Issued f;
  VerificationReport r = verify_presentation(f.ledger.view(), f.present({"dob"}, f.challenge), f.challenge);
  EXPECT_TRUE(r.accepted());
  EXPECT_EQ(r.checks.size(), 6u);
  EXPECT_FALSE(r.reject_cause());
  json::Json j = to_json(r);
  EXPECT_EQ(j["verdict"], "accept");
  EXPECT_TRUE(j["cause"].is_null());
  EXPECT_TRUE(verify_presentation(f.ledger.view(), f.present({}, f.challenge), f.challenge).accepted());
}

TEST(Verify, EachDefectNamesItsCheck) {
  Issued f;
  Presentation good = f.present({"name", "dob"}, f.challenge);
  auto cause = [&](const Presentation& p, const Challenge& expected) {
    auto c = verify_presentation(f.ledger.view(), p, expected).reject_cause();
    return c ? std::string(to_string(*c)) : std::string("accept");
  };

  Challenge other = SeededRandom(78).draw<Challenge>();
  EXPECT_EQ(cause(good, other), "challenge_match");

  Presentation p = good;
  p.revealed[0].value = "Bart";
  EXPECT_EQ(cause(p, f.challenge), "merkle_proofs");

  p = good;
  p.revealed[1].salt.bytes[0] ^= 1;
  EXPECT_EQ(cause(p, f.challenge), "merkle_proofs");

  p = good;
  p.issuer_signature.bytes[0] ^= 1;
  EXPECT_EQ(cause(p, f.challenge), "issuer_signature");

  p = good;
  p.holder_signature.bytes[0] ^= 1;
  EXPECT_EQ(cause(p, f.challenge), "holder_signature");

  p = good;
  p.revealed.pop_back();  // dropping a disclosed attribute breaks the holder's signature
  EXPECT_EQ(cause(p, f.challenge), "holder_signature");

  p = good;
  p.schema_id.bytes[0] ^= 1;
  EXPECT_EQ(cause(p, f.challenge), "schema_known");

  p = good;
  p.revealed[0].name = "city";
  EXPECT_EQ(cause(p, f.challenge), "merkle_proofs");

  // Earlier checks win when several fail.
  p = good;
  p.revealed[0].value = "Bart";
  p.holder_signature.bytes[0] ^= 1;
  EXPECT_EQ(cause(p, other), "challenge_match");

  revoke_credential(f.issuer, f.credential.credential_id, f.session);
  EXPECT_EQ(cause(good, f.challenge), "status_active");
}

TEST(Verify, CredentialChecksAgainstRegistry) {
  Issued f;
  EXPECT_TRUE(verify_credential(f.ledger.view(), f.credential).accepted());
  Credential c = f.credential;
  c.attributes[1].value = "2000-01-01";
  EXPECT_EQ(*verify_credential(f.ledger.view(), c).reject_cause(), Check::MerkleProofs);
  EXPECT_FALSE(tamper_check(c, f.issuer.keys.public_key));
  c = f.credential;
  c.issuer_signature.bytes[9] ^= 4;
  EXPECT_EQ(*verify_credential(f.ledger.view(), c).reject_cause(), Check::IssuerSignature);
  EXPECT_FALSE(verify_credential(f.ledger.view(), c).passed(Check::HolderSignature));
  revoke_credential(f.issuer, f.credential.credential_id, f.session);
  EXPECT_EQ(*verify_credential(f.ledger.view(), f.credential).reject_cause(), Check::StatusActive);
}

TEST(Revoke, OnlyOnceAndOnlyByIssuer) {
  Issued f;
  EXPECT_EQ(code_of([&] { revoke_credential(f.issuer, Hash256{}, f.session); }),
            ErrorCode::UnknownCredential);
  EXPECT_EQ(code_of([&] { revoke_credential(f.holder, f.credential.credential_id, f.session); }),
            ErrorCode::NotIssuer);
  revoke_credential(f.issuer, f.credential.credential_id, f.session);
  EXPECT_EQ(code_of([&] { revoke_credential(f.issuer, f.credential.credential_id, f.session); }),
            ErrorCode::AlreadyRevoked);
  EXPECT_EQ(f.ledger.credential_status(f.credential.credential_id), CredentialStatus::Revoked);
}

TEST(CredentialJson, RoundTripsAndRejectsGarbage) {
  Issued f;
  std::string text = serialize_credential(f.credential);
  EXPECT_EQ(parse_credential(text), f.credential);
  EXPECT_EQ(serialize_credential(parse_credential(text)), text);
  Presentation p = f.present({"name"}, f.challenge);
  EXPECT_EQ(parse_presentation(serialize_presentation(p)), p);
  EXPECT_EQ(code_of([] { parse_credential("not json"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_presentation("{\"format\": \"x\"}"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([&] { parse_presentation(text); }), ErrorCode::ParseError);
}

}  // namespace
}  // namespace ssi
