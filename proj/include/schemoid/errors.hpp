#ifndef SCHEMOID_ERRORS_HPP
#define SCHEMOID_ERRORS_HPP

#include <sstream>
#include <stdexcept>
#include <string>

namespace schemoid {

// Failure kinds raised by validators, parsers and searches.  Messages carry
// the offending indices; kind() lets callers dispatch without matching text.
enum class errc {
  dangling_index,
  src_tgt_violation,
  missing_composite,
  conflicting_composite,
  associativity_violation,
  identity_violation,
  inverse_missing,
  functor_violation,
  partition_violation,
  empty_block,
  regularity_violation,
  diagonal_not_single_relation,
  transpose_missing,
  non_constant_count,
  block_split,
  source_target_mismatch,
  universe_too_large,
  search_cap_exceeded,
  universe_mismatch,
  endpoint_mismatch,
  boundary_mismatch,
  not_thin_schemoid,
  not_automorphism,
  not_contravariant,
  not_involutive,
  block_split_under_t,
  not_equivariant,
  parse_error,
};

const char* errc_name(errc k);

class error : public std::runtime_error {
 public:
  error(errc kind, const std::string& msg)
      : std::runtime_error(std::string(errc_name(kind)) + ": " + msg),
        kind_(kind) {}
  errc kind() const { return kind_; }

 private:
  errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& msg) {
  throw error(kind, msg);
}

namespace detail {

inline void cat_into(std::ostringstream&) {}

template <typename T, typename... Rest>
void cat_into(std::ostringstream& os, const T& head, const Rest&... rest) {
  os << head;
  cat_into(os, rest...);
}

// cat("fiber over f=", f, " has size ", n) -> std::string
template <typename... Args>
std::string cat(const Args&... args) {
  std::ostringstream os;
  cat_into(os, args...);
  return os.str();
}

}  // namespace detail

}  // namespace schemoid

#endif  // SCHEMOID_ERRORS_HPP
