#pragma once

#include <stdexcept>
#include <string>

namespace focal {

enum class Errc {
  division_by_zero,
  order_mismatch,
  bad_order,
  dimension_mismatch,
  shape_mismatch,
  not_monic,
  not_associative,
  unit_fails,
  not_a_monoid,
  not_independent,
  identity_missing,
  not_closed,
  index_out_of_range,
  table_not_entire,
  not_well_defined,
  empty_seed,
  not_subalgebra,
  not_a_group,
  not_an_action,
  field_too_small,
  incomplete_characters,
  size_cap_exceeded,
  unknown_name,
  invalid_document,
  unknown_command,
  internal
};

const char* errc_name(Errc c);

// All engine failures are thrown as Error; the C API maps them to
// status codes and the `where` field to a JSON-pointer-ish location.
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string what, std::string where = {})
      : std::runtime_error(std::move(what)), code_(code), where_(std::move(where)) {}

  Errc code() const { return code_; }
  const std::string& where() const { return where_; }

 private:
  Errc code_;
  std::string where_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what, const std::string& where = {}) {
  throw Error(code, what, where);
}

}  // namespace focal
