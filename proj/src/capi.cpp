#include "alcovewalks/alcovewalks.h"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <cstring>
#include <string>

#include "alcovewalks/json_io.hpp"
#include "alcovewalks/svg.hpp"
#include "alcovewalks/verify.hpp"

using namespace aw;

struct aw_datum {
  RootDatum R;
  std::string name;
};

namespace {

thread_local std::string g_last_error;

aw_status set_error(const Error& e) {
  g_last_error = e.what();
  switch (e.code()) {
    case Errc::Internal: return AW_ERR_INTERNAL;
    case Errc::CapExceeded: return AW_ERR_RANGE;
    default: return AW_ERR_INVALID;
  }
}

template <typename F>
aw_status guarded(F&& f) {
  try {
    f();
    return AW_OK;
  } catch (const Error& e) {
    return set_error(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return AW_ERR_INTERNAL;
  }
}

Vec to_vec(const aw_datum* d, const long long* v) {
  if (!v) fail(Errc::InvalidArgument, "null vector argument");
  return Vec(v, v + d->R.rank);
}

std::vector<int> to_levi(const aw_datum* d, const int* levi, int levi_len) {
  std::vector<int> J;
  for (int i = 0; i < levi_len; ++i) {
    int idx = levi[i] - 1;
    check(0 <= idx && idx < d->R.nsimple, Errc::InvalidArgument, "Levi index out of range");
    J.push_back(idx);
  }
  std::sort(J.begin(), J.end());
  J.erase(std::unique(J.begin(), J.end()), J.end());
  return J;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) fail(Errc::Internal, "out of memory");
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* aw_last_error(void) { return g_last_error.c_str(); }

void aw_string_free(char* s) { std::free(s); }

aw_status aw_datum_new_preset(const char* name, aw_datum** out) {
  return guarded([&] {
    check(name && out, Errc::InvalidArgument, "null argument");
    auto d = new aw_datum{build_root_datum(preset_spec(name)), name};
    *out = d;
  });
}

aw_status aw_datum_new_config(const char* config_text, aw_datum** out) {
  return guarded([&] {
    check(config_text && out, Errc::InvalidArgument, "null argument");
    RootDatumSpec spec = parse_datum_config(config_text);
    auto d = new aw_datum{build_root_datum(spec), spec.name.empty() ? "custom" : spec.name};
    *out = d;
  });
}

aw_status aw_datum_new(int rank, int num_simple, const long long* simple_roots,
                       const long long* simple_coroots, aw_datum** out) {
  return guarded([&] {
    check(simple_roots && simple_coroots && out, Errc::InvalidArgument, "null argument");
    RootDatumSpec spec;
    spec.rank = rank;
    for (int i = 0; i < num_simple; ++i) {
      spec.simple_roots.emplace_back(simple_roots + static_cast<std::ptrdiff_t>(i) * rank,
                                     simple_roots + static_cast<std::ptrdiff_t>(i + 1) * rank);
      spec.simple_coroots.emplace_back(simple_coroots + static_cast<std::ptrdiff_t>(i) * rank,
                                       simple_coroots + static_cast<std::ptrdiff_t>(i + 1) * rank);
    }
    *out = new aw_datum{build_root_datum(spec), "custom"};
  });
}

void aw_datum_free(aw_datum* d) { delete d; }

int aw_datum_rank(const aw_datum* d) { return d ? d->R.rank : 0; }
int aw_datum_num_simple(const aw_datum* d) { return d ? d->R.nsimple : 0; }
long long aw_datum_num_positive_roots(const aw_datum* d) {
  return d ? static_cast<long long>(d->R.pos_roots.size()) : 0;
}
long long aw_datum_weyl_order(const aw_datum* d) {
  return d ? static_cast<long long>(d->R.weyl.size()) : 0;
}

aw_status aw_weight_multiplicity(const aw_datum* d, const long long* mu, const long long* lambda,
                                 long long* out) {
  return guarded([&] {
    check(d && out, Errc::InvalidArgument, "null argument");
    *out = weight_multiplicity(d->R, to_vec(d, mu), to_vec(d, lambda));
  });
}

aw_status aw_branching_multiplicity(const aw_datum* d, const long long* mu, const long long* lambda,
                                    const int* levi, int levi_len, long long* out) {
  return guarded([&] {
    check(d && out, Errc::InvalidArgument, "null argument");
    *out = branching_multiplicity(d->R, to_levi(d, levi, levi_len), to_vec(d, mu), to_vec(d, lambda));
  });
}

aw_status aw_tensor_multiplicity(const aw_datum* d, const long long* mu, const long long* lambda,
                                 const long long* nu, long long* out) {
  return guarded([&] {
    check(d && out, Errc::InvalidArgument, "null argument");
    *out = tensor_multiplicity(d->R, to_vec(d, mu), to_vec(d, lambda), to_vec(d, nu));
  });
}

aw_status aw_report_weight(const aw_datum* d, const long long* mu, const long long* lambda,
                           char** json_out) {
  return guarded([&] {
    check(d && json_out, Errc::InvalidArgument, "null argument");
    *json_out = dup_string(branching_report_json(d->R, d->name, {}, to_vec(d, mu), to_vec(d, lambda), true));
  });
}

aw_status aw_report_branch(const aw_datum* d, const long long* mu, const long long* lambda,
                           const int* levi, int levi_len, char** json_out) {
  return guarded([&] {
    check(d && json_out, Errc::InvalidArgument, "null argument");
    *json_out = dup_string(branching_report_json(d->R, d->name, to_levi(d, levi, levi_len), to_vec(d, mu),
                                                 to_vec(d, lambda), false));
  });
}

aw_status aw_report_tensor(const aw_datum* d, const long long* mu, const long long* lambda,
                           const long long* nu, char** json_out) {
  return guarded([&] {
    check(d && json_out, Errc::InvalidArgument, "null argument");
    *json_out = dup_string(tensor_report_json(d->R, d->name, to_vec(d, mu), to_vec(d, lambda), to_vec(d, nu)));
  });
}

aw_status aw_report_paving(const aw_datum* d, const long long* mu, const long long* lambda,
                           const long long* nu, const int* levi, int levi_len, char** json_out) {
  return guarded([&] {
    check(d && json_out, Errc::InvalidArgument, "null argument");
    Vec nu_vec;
    if (nu) nu_vec = to_vec(d, nu);
    *json_out = dup_string(paving_report_json(d->R, d->name, to_levi(d, levi, levi_len), to_vec(d, mu),
                                              to_vec(d, lambda), nu ? &nu_vec : nullptr));
  });
}

aw_status aw_walks_enumerate(const aw_datum* d, const long long* type_of, const char* word,
                             const int* levi, int levi_len, const long long* end_vertex,
                             int max_dim_only, char** json_out) {
  return guarded([&] {
    check(d && json_out, Errc::InvalidArgument, "null argument");
    check(type_of != nullptr, Errc::InvalidArgument, "type vector required");
    const RootDatum& R = d->R;
    AffElt type_elt = right_w0_minimal(R, translation_of(R, to_vec(d, type_of)));
    ReducedWord rw;
    if (word && *word) {
      std::vector<int> letters;
      std::string cur;
      for (char c : std::string(word) + ",") {
        if (c == ',') {
          if (!cur.empty()) letters.push_back(parse_letter(R, cur));
          cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
          cur += c;
        }
      }
      AffElt prod = evaluate_word(R, letters, aff_identity(R));
      check(aff_length(R, prod) == static_cast<Int>(letters.size()), Errc::PreconditionViolated,
            "given word is not reduced");
      rw.letters = letters;
      rw.omega = aff_mul(R, aff_inverse(R, prod), type_elt);
      check(aff_length(R, rw.omega) == 0, Errc::PreconditionViolated,
            "given word is not a word for the requested type");
    } else {
      rw = reduced_word(R, type_elt);
    }
    Orientation o = orientation_for_levi(R, to_levi(d, levi, levi_len));
    WalkConstraints cons;
    if (end_vertex) cons.end_vertex = to_vec(d, end_vertex);
    if (max_dim_only) {
      int best = 0;
      for (const LabeledWalk& w : enumerate_folded_walks(R, aff_identity(R), rw, o, cons))
        best = std::max(best, w.dimension());
      cons.min_dim = best;
    }
    *json_out = dup_string(walks_report_json(R, d->name, aff_identity(R), rw, o, cons));
  });
}

aw_status aw_render_walks_svg(const aw_datum* d, const long long* mu, const long long* lambda,
                              char** svg_out) {
  return guarded([&] {
    check(d && svg_out, Errc::InvalidArgument, "null argument");
    Vec lambda_vec;
    if (lambda) lambda_vec = to_vec(d, lambda);
    *svg_out = dup_string(render_walks_svg(d->R, to_vec(d, mu), lambda ? &lambda_vec : nullptr));
  });
}

aw_status aw_verify(const aw_datum* d, int max_len, char** report_out, int* ok_out) {
  return guarded([&] {
    check(d && report_out && ok_out, Errc::InvalidArgument, "null argument");
    VerifyResult res = run_verification(d->R, max_len);
    *report_out = dup_string(res.report);
    *ok_out = res.ok ? 1 : 0;
  });
}

}  // extern "C"
