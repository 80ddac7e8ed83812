#pragma once

#include <stdexcept>
#include <string>

namespace tilebeta {

enum class Errc {
  not_monic,
  reducible,
  not_squarefree,
  no_perron_root,
  degree_cap_exceeded,
  field_mismatch,
  division_by_zero,
  bad_index,
  empty_word,
  no_perron_eigenvalue,
  alphabet_mismatch,
  out_of_domain,
  not_pisot,
  not_expanding,
  incommensurate_segment,
  invalid_rule,
  not_on_edge_interior,
  parse_error,
  internal,
};

const char* errc_name(Errc c);

/// Library-wide exception; carries a machine-readable code next to the message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace tilebeta
