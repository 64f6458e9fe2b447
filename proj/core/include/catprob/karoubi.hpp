// Copyright 2026 The catprob Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The normalised Karoubi envelope over a theory backend: objects are systems
// paired with a normalised idempotent, morphisms are the processes left
// invariant by the idempotents. Sharp preparation/observation pairs generate
// the decoherence idempotents, and the decohered systems they define are
// equivalent to classical systems.

#pragma once

#include <string>
#include <vector>

#include "catprob/backend.hpp"
#include "catprob/error.hpp"

namespace catprob::karoubi {

template <TheoryBackend B>
struct KaroubiObject {
  typename B::Object base;
  typename B::Arrow idem;
};

// A preparation X -> H and an observation H -> X on a classical X.
template <TheoryBackend B>
struct SpoPair {
  matcat::ClassicalObject classical;
  typename B::Arrow prep;
  typename B::Arrow obs;
};

struct SpoReport {
  bool sharp = false;
  bool obs_normalised = false;
  bool prep_normalised = false;
  std::vector<std::string> notes;

  bool normalised() const { return obs_normalised && prep_normalised; }
};

namespace internal {

template <TheoryBackend B>
void require_type(const B& b, const typename B::Arrow& f,
                  const typename B::Object& dom, const typename B::Object& cod,
                  const char* what) {
  if (!b.same_object(b.dom(f), dom) || !b.same_object(b.cod(f), cod)) {
    fail(ErrorCode::kShapeMismatch,
         std::string(what) + " has type " + b.describe(b.dom(f)) + " -> " +
             b.describe(b.cod(f)) + ", expected " + b.describe(dom) + " -> " +
             b.describe(cod));
  }
}

}  // namespace internal

template <TheoryBackend B>
KaroubiObject<B> make_object(const B& b, typename B::Object base,
                             typename B::Arrow idem) {
  internal::require_type(b, idem, base, base, "idempotent");
  if (!b.equal(b.compose(idem, idem), idem)) {
    fail(ErrorCode::kNotIdempotent, "h . h != h on " + b.describe(base));
  }
  if (!b.is_normalised(idem)) {
    fail(ErrorCode::kNotNormalised,
         "discard . h != discard on " + b.describe(base));
  }
  return {std::move(base), std::move(idem)};
}

// (H (x) G, h (x) g), re-verified.
template <TheoryBackend B>
KaroubiObject<B> tensor(const B& b, const KaroubiObject<B>& x,
                        const KaroubiObject<B>& y) {
  return make_object(b, b.tensor(x.base, y.base), b.tensor(x.idem, y.idem));
}

// f = dst.idem . f . src.idem.
template <TheoryBackend B>
bool is_hom(const B& b, const typename B::Arrow& f, const KaroubiObject<B>& src,
            const KaroubiObject<B>& dst) {
  internal::require_type(b, f, src.base, dst.base, "morphism");
  return b.equal(b.compose(dst.idem, b.compose(f, src.idem)), f);
}

template <TheoryBackend B>
SpoReport spo_validate(const B& b, const SpoPair<B>& pair) {
  const auto x = b.classical(pair.classical);
  const auto h = b.cod(pair.prep);
  internal::require_type(b, pair.prep, x, h, "preparation");
  internal::require_type(b, pair.obs, h, x, "observation");
  SpoReport report;
  report.sharp = b.equal(b.compose(pair.obs, pair.prep), b.identity(x));
  if (!report.sharp) {
    fail(ErrorCode::kInvalidSpo, "m . p != id on " + b.describe(x));
  }
  report.obs_normalised = b.is_normalised(pair.obs);
  report.prep_normalised = b.is_normalised(pair.prep);
  if (report.obs_normalised) {
    // discard_H . p = discard_X . m . p = discard_X.
    report.notes.push_back("p normalised: follows from m normalised and m . p = id");
    if (!report.prep_normalised) {
      fail(ErrorCode::kInvalidSpo,
           "m is normalised and sharp but p is not; backend equality is "
           "inconsistent");
    }
  } else {
    report.notes.push_back("m not normalised: pair is sharp but not normalised");
  }
  return report;
}

template <TheoryBackend B>
typename B::Arrow decoherence_map(const B& b, const SpoPair<B>& pair) {
  const SpoReport report = spo_validate(b, pair);
  if (!report.normalised()) {
    fail(ErrorCode::kNotNormalised,
         "decoherence needs a normalised pair; " + report.notes.back());
  }
  auto d = b.compose(pair.prep, pair.obs);
  // p.m.p.m = p.(m.p).m = p.m, and discard.p.m = discard.m = discard.
  if (!b.equal(b.compose(d, d), d) || !b.is_normalised(d)) {
    fail(ErrorCode::kNotIdempotent, "p . m is not a normalised idempotent");
  }
  return d;
}

template <TheoryBackend B>
KaroubiObject<B> decohered_object(const B& b, const SpoPair<B>& pair) {
  return make_object(b, b.cod(pair.prep), decoherence_map(b, pair));
}

// F = n . f . p as a classical process between the two classical systems.
template <TheoryBackend B>
matcat::Morphism classicalise(const B& b, const typename B::Arrow& f,
                              const SpoPair<B>& src, const SpoPair<B>& dst) {
  const KaroubiObject<B> a = decohered_object(b, src);
  const KaroubiObject<B> c = decohered_object(b, dst);
  if (!is_hom(b, f, a, c)) {
    fail(ErrorCode::kNotAHom,
         "morphism is not invariant under the decoherence idempotents");
  }
  return b.extract(b.compose(dst.obs, b.compose(f, src.prep)));
}

// f = q . F . m, invariant by construction.
template <TheoryBackend B>
typename B::Arrow declassicalise(const B& b, const matcat::Morphism& big_f,
                                 const SpoPair<B>& src, const SpoPair<B>& dst) {
  if (!(big_f.dom() == src.classical) || !(big_f.cod() == dst.classical)) {
    fail(ErrorCode::kShapeMismatch,
         "classical process " + big_f.dom().to_string() + " -> " +
             big_f.cod().to_string() + " does not match " +
             src.classical.to_string() + " -> " + dst.classical.to_string());
  }
  return b.compose(dst.prep, b.compose(b.embed(big_f), src.obs));
}

}  // namespace catprob::karoubi
