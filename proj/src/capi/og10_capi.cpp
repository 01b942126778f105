#include <cstdlib>
#include <cstring>
#include <memory>

#include "internal.hpp"
#include "og10/error.hpp"

struct og10_lattice {
  og10::Lattice lattice;
};

namespace {

using og10::capi::FrontEndError;

thread_local std::string last_error;

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

og10_status fail(og10_status status, const std::string& detail) {
  last_error = detail;
  return status;
}

// Runs f, translating exceptions into status codes.
template <class F>
og10_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return OG10_OK;
  } catch (const og10::Error& e) {
    return fail(og10::capi::status_of(e.code()), e.what());
  } catch (const FrontEndError& e) {
    return fail(e.status(), e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(OG10_ERR_PARSE, e.what());
  } catch (const std::exception& e) {
    return fail(OG10_ERR_INTERNAL, e.what());
  }
}

og10::IntVec to_vec(const long long* v, size_t n) {
  og10::IntVec out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) out.emplace_back(std::to_string(v[i]));
  return out;
}

og10_status check_out(const void* p) {
  return p ? OG10_OK : fail(OG10_ERR_INVALID_ARGUMENT, "null pointer argument");
}

int wall_code(const std::optional<og10::WallType>& t) { return t ? static_cast<int>(*t) : OG10_NOT_A_WALL; }

}  // namespace

extern "C" {

const char* og10_status_name(og10_status status) {
  switch (status) {
    case OG10_OK: return "Ok";
    case OG10_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case OG10_ERR_DIMENSION_MISMATCH: return "DimensionMismatch";
    case OG10_ERR_NOT_SYMMETRIC: return "NotSymmetric";
    case OG10_ERR_NOT_EVEN: return "NotEven";
    case OG10_ERR_DEGENERATE: return "Degenerate";
    case OG10_ERR_ZERO_VECTOR: return "ZeroVector";
    case OG10_ERR_NOT_PRIMITIVE: return "NotPrimitive";
    case OG10_ERR_NON_NEGATIVE_SQUARE: return "NonNegativeSquare";
    case OG10_ERR_NO_U2_WITNESS: return "NoU2Witness";
    case OG10_ERR_RANK_TOO_LARGE: return "RankTooLarge";
    case OG10_ERR_NOT_APPLICABLE: return "NotApplicable";
    case OG10_ERR_NO_AMBIENT_EMBEDDING: return "NoAmbientEmbedding";
    case OG10_ERR_NOT_HALF_INTEGRAL: return "NotHalfIntegral";
    case OG10_ERR_NOT_OG10_VECTOR: return "NotOG10Vector";
    case OG10_ERR_INCONSISTENT: return "Inconsistent";
    case OG10_ERR_NOT_PROPORTIONAL_TO_WALL: return "NotProportionalToWall";
    case OG10_ERR_EMBEDDING_NOT_FOUND: return "EmbeddingNotFound";
    case OG10_ERR_ON_WALL: return "OnWall";
    case OG10_ERR_NOT_CUBIC_GRAM: return "NotCubicGram";
    case OG10_ERR_PARSE: return "ParseError";
    case OG10_ERR_UNKNOWN_COMMAND: return "UnknownCommand";
    case OG10_ERR_UNKNOWN_PRESET: return "UnknownPreset";
    case OG10_ERR_INTERNAL: return "Internal";
  }
  return "Internal";
}

int og10_status_exit_code(og10_status status) {
  switch (status) {
    case OG10_OK: return 0;
    case OG10_ERR_PARSE:
    case OG10_ERR_INVALID_ARGUMENT:
    case OG10_ERR_DIMENSION_MISMATCH:
    case OG10_ERR_NOT_SYMMETRIC:
    case OG10_ERR_NOT_EVEN:
    case OG10_ERR_DEGENERATE:
    case OG10_ERR_ZERO_VECTOR:
    case OG10_ERR_NOT_PRIMITIVE:
    case OG10_ERR_NON_NEGATIVE_SQUARE:
    case OG10_ERR_NOT_OG10_VECTOR:
    case OG10_ERR_NOT_CUBIC_GRAM:
    case OG10_ERR_UNKNOWN_COMMAND:
    case OG10_ERR_UNKNOWN_PRESET:
      return 2;
    default:
      return 1;
  }
}

const char* og10_last_error(void) { return last_error.c_str(); }

void og10_string_free(char* s) { std::free(s); }

og10_status og10_lattice_from_gram(const long long* entries, size_t rank, og10_lattice** out) {
  if (check_out(out) != OG10_OK || (rank > 0 && check_out(entries) != OG10_OK)) return OG10_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    og10::IntMatrix g(rank, rank);
    for (size_t i = 0; i < rank; ++i)
      for (size_t j = 0; j < rank; ++j) g(i, j) = og10::Integer(std::to_string(entries[i * rank + j]));
    *out = new og10_lattice{og10::Lattice::make(std::move(g))};
  });
}

og10_status og10_lattice_named(const char* name, og10_lattice** out) {
  if (check_out(out) != OG10_OK || check_out(name) != OG10_OK) return OG10_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = new og10_lattice{og10::capi::named_lattice(name)}; });
}

og10_status og10_lattice_from_json(const char* json, og10_lattice** out) {
  if (check_out(out) != OG10_OK || check_out(json) != OG10_OK) return OG10_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = new og10_lattice{og10::capi::resolve_lattice(og10::Json::parse(json))}; });
}

void og10_lattice_free(og10_lattice* lattice) { delete lattice; }

size_t og10_lattice_rank(const og10_lattice* lattice) { return lattice ? lattice->lattice.rank() : 0; }

og10_status og10_lattice_signature(const og10_lattice* lattice, size_t* positive, size_t* negative) {
  if (check_out(lattice) != OG10_OK || check_out(positive) != OG10_OK || check_out(negative) != OG10_OK)
    return OG10_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const og10::Signature s = lattice->lattice.signature();
    *positive = s.positive;
    *negative = s.negative;
  });
}

og10_status og10_lattice_pair(const og10_lattice* lattice, const long long* u, const long long* v, size_t n,
                              char** out_decimal) {
  if (check_out(lattice) != OG10_OK || check_out(out_decimal) != OG10_OK) return OG10_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const og10::IntVec a = to_vec(u, n), b = to_vec(v, n);
    lattice->lattice.check_coords(a);
    lattice->lattice.check_coords(b);
    *out_decimal = duplicate(lattice->lattice.pair(a, b).get_str());
  });
}

og10_status og10_lattice_divisibility(const og10_lattice* lattice, const long long* v, size_t n,
                                      char** out_decimal) {
  if (check_out(lattice) != OG10_OK || check_out(out_decimal) != OG10_OK) return OG10_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const og10::IntVec a = to_vec(v, n);
    lattice->lattice.check_coords(a);
    *out_decimal = duplicate(lattice->lattice.divisibility(a).get_str());
  });
}

og10_status og10_lattice_discriminant_order(const og10_lattice* lattice, char** out_decimal) {
  if (check_out(lattice) != OG10_OK || check_out(out_decimal) != OG10_OK) return OG10_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out_decimal = duplicate(og10::discriminant_group(lattice->lattice).order().get_str());
  });
}

og10_status og10_wall_type(const og10_lattice* lattice, const long long* v, size_t n, int* out_type) {
  if (check_out(lattice) != OG10_OK || check_out(out_type) != OG10_OK) return OG10_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const og10::IntVec a = to_vec(v, n);
    lattice->lattice.check_coords(a);
    *out_type = wall_code(og10::wall_type(lattice->lattice, a));
  });
}

og10_status og10_pex_type(const og10_lattice* lattice, const long long* v, size_t n, int* out_type) {
  if (check_out(lattice) != OG10_OK || check_out(out_type) != OG10_OK) return OG10_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const og10::IntVec a = to_vec(v, n);
    lattice->lattice.check_coords(a);
    auto t = og10::stably_prime_exceptional(lattice->lattice, a);
    *out_type = !t ? OG10_NOT_A_WALL : *t == og10::PexType::NegTwoDivOne ? OG10_WALL_NEG2_DIV1 : OG10_WALL_NEG6_DIV3;
  });
}

og10_status og10_run(const char* command, const char* request_json, const char* format, char** output,
                     char** error_json) {
  if (output) *output = nullptr;
  if (error_json) *error_json = nullptr;
  og10_status st;
  if (!command) {
    st = fail(OG10_ERR_INVALID_ARGUMENT, "null command");
  } else {
    std::string rendered;
    st = guarded([&] {
      og10::Json request = og10::Json::object();
      if (request_json && *request_json) {
        try {
          request = og10::Json::parse(request_json);
        } catch (const nlohmann::json::parse_error& e) {
          throw FrontEndError(OG10_ERR_PARSE, std::string("malformed request JSON: ") + e.what());
        }
      }
      rendered = og10::capi::run_command(command, request, format ? format : "json");
    });
    if (st == OG10_OK) {
      if (output) *output = duplicate(rendered);
      return st;
    }
  }
  if (error_json) {
    og10::Json e;
    e["error"] = og10_status_name(st);
    e["detail"] = last_error;
    *error_json = duplicate(e.dump());
  }
  return st;
}

}  // extern "C"
