#pragma once

#include <cassert>
#include <string>
#include <utility>
#include <variant>

namespace syl {

// Error codes for every fallible operation in the library. The names are
// stable API: they appear verbatim in CLI diagnostics and serialized reports.
enum class Errc {
  too_many_terms,
  malformed_structure,
  degenerate_proposition,
  illegitimate_conversion,
  illegitimate_contraposition,
  empty_input,
  not_standard_form,
  untranslatable,
  irreducible_terms,
  structure_mismatch,
  no_valid_chain,
  limit_exceeded,
  invalid_triple,
  schema_error,
  missing_annotation,
  unknown_id,
  missing_gold,
  io_error,
};

const char* errc_name(Errc code);

struct Error {
  Errc code;
  std::string message;
  int position = -1;  // token index for parse errors, -1 otherwise

  std::string describe() const;
};

inline Error make_error(Errc code, std::string message, int position = -1) {
  return Error{code, std::move(message), position};
}

// Minimal expected-like carrier: either a value or an Error.
template <typename T>
class [[nodiscard]] Result {
 public:
  Result(T value) : v_(std::in_place_index<0>, std::move(value)) {}
  Result(Error error) : v_(std::in_place_index<1>, std::move(error)) {}

  bool ok() const { return v_.index() == 0; }
  explicit operator bool() const { return ok(); }

  const T& value() const& {
    assert(ok());
    return std::get<0>(v_);
  }
  T& value() & {
    assert(ok());
    return std::get<0>(v_);
  }
  T&& value() && {
    assert(ok());
    return std::get<0>(std::move(v_));
  }

  const Error& error() const {
    assert(!ok());
    return std::get<1>(v_);
  }

  const T& operator*() const& { return value(); }
  const T* operator->() const { return &value(); }

 private:
  std::variant<T, Error> v_;
};

}  // namespace syl
