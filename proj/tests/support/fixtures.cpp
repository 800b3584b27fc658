#include "fixtures.hpp"

namespace ssi::test {

Seed seed_of(std::uint64_t n) { return SeededRandom(n).draw<Seed>(); }

World::World(std::uint64_t seed, LedgerMode mode)
    : clock(0),
      writer(Writer::create(seed_of(seed * 7919 + 17), clock.now())),
      ledger(Ledger::genesis(std::span<const Writer>(&writer, 1), clock, mode)),
      session(ledger, writer.identity, clock) {}

Identity World::enroll(std::uint64_t seed) {
  Identity id = Identity::from_seed(seed_of(seed));
  session.submit(make_register_did(id, make_did_document(id, {}, clock.now())));
  return id;
}

RandomLedger build_random_ledger(std::uint64_t seed, std::size_t operations) {
  SeededRandom rng(seed);
  RandomLedger out;
  out.world = std::make_unique<World>(seed + 1);
  World& w = *out.world;

  std::vector<Identity> people;
  std::vector<CredentialSchema> schemas;
  std::vector<Credential> credentials;
  // Unregistered identities make some operations fail admission.
  std::vector<Identity> strangers;
  for (int i = 0; i < 2; ++i) strangers.push_back(Identity::from_seed(rng.draw<Seed>()));

  auto attempt = [&](auto&& op) {
    try {
      op();
    } catch (const Error&) {
      ++out.refused;
    }
  };

  for (std::size_t step = 0; step < operations; ++step) {
    switch (people.empty() ? 0 : rng.uniform(7)) {
      case 0: {
        Identity id = Identity::from_seed(rng.draw<Seed>());
        w.session.submit(make_register_did(id, make_did_document(id, {}, w.clock.now())));
        out.dids.push_back(id.did);
        people.push_back(std::move(id));
        break;
      }
      case 1: {
        // Re-registration: newer documents win, replayed ones are stale.
        const Identity& id = people[rng.uniform(people.size())];
        bool fresh = rng.uniform(2) == 0;
        std::uint64_t created = fresh ? w.clock.now() + 1 : 0;
        DidDocument doc = make_did_document(
            id, {{"agent", "https://agent.example/" + std::to_string(step)}}, created);
        attempt([&] { w.session.submit(make_register_did(id, doc)); });
        break;
      }
      case 2: {
        const Identity& issuer = rng.uniform(5) == 0 ? strangers[rng.uniform(2)]
                                                     : people[rng.uniform(people.size())];
        std::vector<std::string> attrs{"a", "b"};
        for (std::uint64_t i = 0, extra = rng.uniform(3); i < extra; ++i) {
          attrs.push_back("x" + std::to_string(i));
        }
        attempt([&] {
          schemas.push_back(
              define_schema(issuer, "schema-" + std::to_string(rng.uniform(4)), 1, attrs, w.session));
          out.schema_ids.push_back(schemas.back().schema_id);
        });
        break;
      }
      case 3:
      case 4: {
        if (schemas.empty()) break;
        const CredentialSchema& schema = schemas[rng.uniform(schemas.size())];
        const Identity* issuer = nullptr;
        for (const auto& p : people) {
          if (p.did == schema.issuer_did) issuer = &p;
        }
        if (!issuer) break;
        std::vector<Attribute> values;
        for (const auto& name : schema.attribute_names) {
          values.push_back({name, "v" + std::to_string(rng.uniform(1000))});
        }
        const Did& holder = people[rng.uniform(people.size())].did;
        credentials.push_back(issue_credential(*issuer, holder, schema, values, w.session, rng));
        out.credential_ids.push_back(credentials.back().credential_id);
        break;
      }
      case 5:
      case 6: {
        if (credentials.empty()) break;
        const Credential& c = credentials[rng.uniform(credentials.size())];
        // Sometimes the wrong party tries; sometimes it is a second revoke.
        const Identity* revoker = &people[rng.uniform(people.size())];
        if (rng.uniform(3) != 0) {
          for (const auto& p : people) {
            if (p.did == c.issuer_did) revoker = &p;
          }
        }
        attempt([&] { revoke_credential(*revoker, c.credential_id, w.session); });
        break;
      }
    }
  }
  return out;
}

}  // namespace ssi::test
