#pragma once

// Orbit representatives and the explicit group elements attached to them.

#include <optional>
#include <string>

#include "pvs/matrix.hpp"
#include "pvs/multilinear.hpp"
#include "pvs/scalars.hpp"

namespace pvs {

enum class RepKind { case1_w, case1_w1, case1_walpha, case2_w, case2_wprime, case2_w1, case3_w };

struct RepName {
  RepKind kind;
  long param = 0;  // d for case1_walpha, n for case3_w
};

/// "case1_walpha" etc.; d and n are required exactly for the tags that use them.
RepName parse_rep_name(const std::string& tag, std::optional<long> d, std::optional<long> n);
std::string to_string(const RepName& name);

///   case1_w       e123 + e456
///   case1_w1      e123 - e156 + e246 - e345
///   case1_walpha  e123 + d (e156 - e246 + e345)
///   case2_w       e234 + e567 + e125 + e136 + e147
///   case2_wprime  e234 + e346 + e127 - e145
///   case2_w1      -2 (e145 - e167 + e347 - e356 + e123 + e246 + e257)
///   case3_w       e_{1,n+1} + ... + e_{n,2n}
AlternatingForm<Rational> make_rep(const RepName& name);

/// g_alpha for alpha = sqrt(d): g e_j = (e_j + alpha e_{j+3}) and
/// g e_{j+3} = (e_j - alpha e_{j+3}) for j = 1,2,3, with columns 1 and 4 halved.
/// Maps w to w_alpha; g^sigma = g tau.
Matrix<QuadExt> g_alpha(long d);

/// tau: e_i <-> e_{i+3}.
Matrix<Rational> tau_case1();

/// Entry-wise Galois conjugation.
Matrix<QuadExt> galois_conj(const Matrix<QuadExt>& m);

/// g_alpha d(A, A^sigma) g_alpha^{-1}, checked to be rational. Throws
/// DomainError unless det A = 1, std::logic_error if the result is not rational.
Matrix<Rational> stabilizer_witness_case1(const Matrix<QuadExt>& a, long d);

}  // namespace pvs
