#pragma once

#include <cstdint>
#include <string>

#include "permstat/word.hpp"

namespace permstat {

/// The recursive ground-set transport map.  For a permutation pi of an
/// n-element set with minimum at position i (pi = pi' min pi''), split the
/// sorted target set T into T1 (the n-i smallest), T2 (the next i-1) and its
/// maximum t_max, and return
///
///     phi(pi, T) = phi(pi'', T1) t_max phi(pi', T2).
///
/// The result is a 231-avoiding permutation of T for every input pi.
/// Requires |T| = |pi|; throws std::domain_error on size mismatch.
/// Implemented with an explicit work stack, so words of length up to ~10^4
/// are fine.
Word phi(const Word& pi, const GroundSet& target);

/// The inverse transport.  For a permutation sigma of an n-element set with
/// maximum at position j (sigma = sigma' max sigma''), split the sorted
/// target set S into its minimum s_min, S2 = elements 2..j, and
/// S1 = elements j+1..n, and return
///
///     varphi(sigma, S) = varphi(sigma'', S1) s_min varphi(sigma', S2).
///
/// The result is a 213-avoiding permutation of S for every input sigma, and
/// varphi(phi(pi, T), S) = pi whenever pi is a 213-avoiding permutation
/// of S.  Requires |S| = |sigma|.
Word varphi(const Word& sigma, const GroundSet& target);

/// The bijection from S_n(213) to S_n(231).  With k the first letter and
/// pi = k pi' pi'' (pi' over {k+1,...,n}, pi'' over {1,...,k-1}):
///
///     alpha(pi) = k phi(pi'', {1,...,k-1}) phi(pi', {k+1,...,n}).
///
/// Validates that pi is a nonempty 213-avoiding permutation of {1,...,n}
/// and throws std::domain_error otherwise; pass validate = false to skip the
/// avoidance check (benchmarking only; the image is meaningless on
/// non-avoiders).
Word alpha(const Word& pi, bool validate = true);

/// The inverse of alpha, from S_n(231) to S_n(213).  With f the first
/// letter and sigma = f sigma' sigma'' (sigma' over {1,...,f-1}, sigma''
/// over {f+1,...,n}):
///
///     beta(sigma) = f varphi(sigma'', {f+1,...,n}) varphi(sigma', {1,...,f-1}).
Word beta(const Word& sigma, bool validate = true);

/// The quintuple (F, maj, stat, des, ides) of one permutation of {1,...,n}.
struct StatProfile {
  std::int64_t first = 0;
  std::int64_t maj = 0;
  std::int64_t stat = 0;
  std::int64_t des = 0;
  std::int64_t ides = 0;

  friend bool operator==(const StatProfile&, const StatProfile&) = default;
  std::string str() const;
};

StatProfile stat_profile(const Word& p);

}  // namespace permstat
