#ifndef FANOCOEFF_VERIFY_HPP
#define FANOCOEFF_VERIFY_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fanocoeff/coefficients.hpp"
#include "fanocoeff/sequences.hpp"

namespace fanocoeff {

// One counterexample to a checked claim. For claims not indexed by a triple,
// i/j/k carry the nearest meaningful indices (documented per identity) and
// the reason string spells out the rest.
struct Witness {
  long i = 0;
  long j = 0;
  long k = 0;
  std::string value;
  std::string reason;
};

// Machine-checkable record of an exhaustively checked finite claim.
// Invariants: pass <=> witnesses empty; checked_count = cardinality of the
// declared index range. Byte-identical across runs except for produced_at.
struct Certificate {
  std::string property;
  nlohmann::json params;
  bool pass = true;
  std::uint64_t checked_count = 0;
  std::vector<Witness> witnesses;
  std::string produced_at;
  std::string tool_version;

  nlohmann::json to_json() const;
  // File name stem, e.g. "certify-N100-closed" for the positivity run.
  std::string file_stem() const;
};

Certificate make_certificate(std::string property, nlohmann::json params,
                             std::uint64_t checked_count, std::vector<Witness> witnesses);

// Checks b_(i,j,k) > 0 strictly for all 1 <= i < N, j in {1,2}, 1 <= k <= i+j
// with the given method. The index range is split into `shards` contiguous
// chunks processed on separate threads, each with a private engine; the
// shared SequenceCache is pre-warmed for the closed form so shard threads
// only read it. Witnesses merge in index order, so the certificate does not
// depend on the shard count.
Certificate certify_positivity(SequenceCache& seq, long n, Method method,
                               unsigned shards = 1);

// Wraps CoefficientEngine::cross_validate in certificate form.
Certificate cross_validate_certificate(SequenceCache& seq, long i_max, long j_max);

// Bounds for the identity regression suite; defaults match the ranges the
// acceptance checks pin down.
struct IdentityBounds {
  long vanishing_i = 10, vanishing_j = 10, vanishing_slack = 3;
  long daehee_q = 12, daehee_k = 6;
  long hob_i = 8, hob_j = 8;
  long corlog_k = 6, corlog_q = 10;
  long endpoint_i = 200;
  long laurent_k = 4, laurent_span = 5;
  long agreement_i = 10, agreement_j = 6;
  long egf_order = 32;
  unsigned ring_trials = 40;
};

const std::vector<std::string>& identity_names();

// Runs one named identity over the bounds; throws std::invalid_argument for
// an unknown name.
Certificate run_identity(SequenceCache& seq, std::string_view name,
                         const IdentityBounds& bounds);

// Every identity, in registry order.
std::vector<Certificate> verify_identities(SequenceCache& seq, const IdentityBounds& bounds);

}  // namespace fanocoeff

#endif
