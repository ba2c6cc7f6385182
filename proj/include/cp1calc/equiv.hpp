#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cp1calc/sixfold.hpp"

namespace cp1 {

/// Matrix A (columns = images of the left basis in right coordinates) with
/// |det A| = 1 carrying mu, p1, w2 (and optionally c1) of one system onto
/// another.
struct IsomorphismWitness {
  IntMatrix matrix;
  bool preserves_c1 = false;

  friend bool operator==(const IsomorphismWitness&, const IsomorphismWitness&) = default;
};

struct FingerprintEntry {
  std::int64_t cubic = 0;  // mu(x,x,x) mod p
  std::int64_t p1 = 0;     // p1 . x mod p
  std::int64_t w2 = 0;     // mu(w,x,x) mod 2, only at p = 2
  std::uint64_t count = 0;

  friend bool operator==(const FingerprintEntry&, const FingerprintEntry&) = default;
};

/// Sorted multiset of (cubic, p1, w2) values over all x in (F_p)^r, stored
/// as value triples with multiplicities.
///
/// The w2 component mu(w,x,x) mod 2 depends only on x mod 2, so it is
/// recorded for p = 2 only; at odd p it would depend on the integer lift of
/// x and is fixed to 0.
struct Fingerprint {
  int prime = 0;
  std::size_t rank = 0;
  std::vector<FingerprintEntry> entries;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

enum class CertificateKind { Rank, B3, Fingerprint };

struct DistinctnessCertificate {
  CertificateKind kind = CertificateKind::Rank;
  std::optional<int> prime;
  // Rank / b3 values, or the two fingerprints.
  std::int64_t left_value = 0;
  std::int64_t right_value = 0;
  std::optional<Fingerprint> left_fingerprint;
  std::optional<Fingerprint> right_fingerprint;
};

struct SearchOptions {
  int bound = 3;
  bool check_c1 = false;
  std::uint64_t budget = 1'000'000'000ULL;
  int threads = 0;  // 0: OpenMP default
};

struct SearchStats {
  std::uint64_t nodes = 0;
};

/// Step budget from CP1CALC_STEP_BUDGET, else 1e9.
std::uint64_t default_step_budget();

/// Entry order used by the search: 0, 1, -1, 2, -2, ..., bound, -bound.
std::vector<std::int64_t> entry_order(int bound);

bool verify_witness(const InvariantSystem& left, const InvariantSystem& right, const IntMatrix& a, bool check_c1);

/// Bounded exhaustive search for a witness; columns are chosen left to
/// right, each from the vectors in [-bound, bound]^r in lexicographic
/// entry order. Returns the first verified witness in that order. Partial
/// column sets are pruned against every mu equation they determine, and
/// each candidate column must already match mu(e_i,e_i,e_i) and p1[i] and
/// be primitive. An empty result does not prove distinctness.
///
/// Work is split across OpenMP threads by first-column candidate; the
/// reducer keeps the first candidate (in order) that succeeds, so the
/// result does not depend on the thread count.
///
/// Throws DimensionError on rank mismatch, BudgetExceeded when more than
/// options.budget nodes would be visited before the answer is settled.
std::optional<IsomorphismWitness> find_isomorphism(const InvariantSystem& left, const InvariantSystem& right,
                                                   const SearchOptions& options = {}, SearchStats* stats = nullptr);

/// Single-threaded reference for find_isomorphism: same order, same node
/// accounting, but evaluates every constraint directly from the tensors.
std::optional<IsomorphismWitness> find_isomorphism_serial(const InvariantSystem& left, const InvariantSystem& right,
                                                          const SearchOptions& options = {},
                                                          SearchStats* stats = nullptr);

constexpr std::size_t kMaxFingerprintRank = 6;

/// Requires p in {2, 3, 5, 7} and rank <= 6.
Fingerprint fingerprint(const InvariantSystem& s, int p);
Fingerprint fingerprint_serial(const InvariantSystem& s, int p);

/// Certificate when rank, b3, or a fingerprint at one of `primes` differs.
/// Fingerprints are skipped when either rank exceeds kMaxFingerprintRank.
std::optional<DistinctnessCertificate> certify_distinct(const InvariantSystem& left, const InvariantSystem& right,
                                                        const std::vector<int>& primes = {2, 3, 5});

/// Recomputes the invariant a certificate names and confirms the mismatch.
bool recheck(const DistinctnessCertificate& cert, const InvariantSystem& left, const InvariantSystem& right);

/// Inverse of an integer matrix with determinant +-1.
IntMatrix inverse_unimodular(const IntMatrix& a);

/// The system s' for which `a` is a witness s -> s'.
InvariantSystem transport(const InvariantSystem& s, const IntMatrix& a);

}  // namespace cp1
