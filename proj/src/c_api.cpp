/******************************************************************************
 * Copyright 2026 The dsbelief Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *****************************************************************************/
#include "dsbelief/dsbelief.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "dsbelief/belief.hpp"
#include "dsbelief/casebook.hpp"
#include "dsbelief/error.hpp"
#include "dsbelief/estimate.hpp"
#include "dsbelief/io.hpp"
#include "dsbelief/population.hpp"
#include "dsbelief/relabel.hpp"

struct dsb_frame {
  dsb::Frame frame;
};

struct dsb_mass {
  dsb::MassFunction mass;
};

struct dsb_population {
  dsb::Population population;
};

namespace {

thread_local std::string g_last_error;

dsb_status ToStatus(dsb::ErrorCode code) {
  using dsb::ErrorCode;
  switch (code) {
    case ErrorCode::kInvalidArgument: return DSB_E_INVALID_ARGUMENT;
    case ErrorCode::kParse: return DSB_E_PARSE;
    case ErrorCode::kUnknownAtom: return DSB_E_UNKNOWN_ATOM;
    case ErrorCode::kFrameMismatch: return DSB_E_FRAME_MISMATCH;
    case ErrorCode::kSizeOverflow: return DSB_E_SIZE_OVERFLOW;
    case ErrorCode::kTotalConflict: return DSB_E_TOTAL_CONFLICT;
    case ErrorCode::kInvalidLabeling: return DSB_E_INVALID_LABELING;
    case ErrorCode::kAllDiscarded: return DSB_E_ALL_DISCARDED;
    case ErrorCode::kNotABeliefFunction: return DSB_E_NOT_BELIEF;
    case ErrorCode::kUnknownCase: return DSB_E_UNKNOWN_CASE;
    case ErrorCode::kIo: return DSB_E_IO;
  }
  return DSB_E_INTERNAL;
}

dsb_status Fail(dsb_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class Body>
dsb_status Guard(Body&& body) {
  try {
    body();
    g_last_error.clear();
    return DSB_OK;
  } catch (const dsb::Error& e) {
    return Fail(ToStatus(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(DSB_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(DSB_E_INTERNAL, e.what());
  }
}

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void Require(bool ok, const char* what) {
  if (!ok) throw dsb::Error(dsb::ErrorCode::kInvalidArgument, what);
}

std::vector<std::string> Names(const char* const* names, std::size_t count) {
  Require(count == 0 || names != nullptr, "null name array");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) {
    Require(names[i] != nullptr, "null name");
    out.emplace_back(names[i]);
  }
  return out;
}

template <class Query>
dsb_status QuerySet(const dsb_mass* m, const char* const* atoms, std::size_t count,
                    double* value, char** exact_out, Query query) {
  return Guard([&] {
    Require(m && value, "null argument");
    const auto names = Names(atoms, count);
    const dsb::Scalar result = query(m->mass, m->mass.frame().Encode(names));
    char* text = exact_out ? CopyString(result.ToString()) : nullptr;
    *value = result.to_double();
    if (exact_out) *exact_out = text;
  });
}

}  // namespace

extern "C" {

const char* dsb_version(void) { return "1.0.0"; }

const char* dsb_last_error(void) { return g_last_error.c_str(); }

const char* dsb_status_name(dsb_status status) {
  switch (status) {
    case DSB_OK: return "ok";
    case DSB_E_INVALID_ARGUMENT: return "invalid_argument";
    case DSB_E_PARSE: return "parse_error";
    case DSB_E_UNKNOWN_ATOM: return "unknown_atom";
    case DSB_E_FRAME_MISMATCH: return "frame_mismatch";
    case DSB_E_SIZE_OVERFLOW: return "size_overflow";
    case DSB_E_TOTAL_CONFLICT: return "total_conflict";
    case DSB_E_INVALID_LABELING: return "invalid_labeling";
    case DSB_E_ALL_DISCARDED: return "all_discarded";
    case DSB_E_NOT_BELIEF: return "not_a_belief_function";
    case DSB_E_UNKNOWN_CASE: return "unknown_case";
    case DSB_E_IO: return "io_error";
    case DSB_E_INTERNAL: return "internal_error";
  }
  return "unknown";
}

int dsb_status_is_domain_error(dsb_status status) {
  return status == DSB_E_TOTAL_CONFLICT || status == DSB_E_INVALID_LABELING ||
         status == DSB_E_ALL_DISCARDED;
}

void dsb_string_free(char* s) { std::free(s); }

dsb_status dsb_set_max_frame_size(size_t n) {
  return Guard([&] { dsb::SetMaxFrameSize(n); });
}

size_t dsb_max_frame_size(void) { return dsb::MaxFrameSize(); }

dsb_status dsb_frame_create(const char* const* names, size_t count, dsb_frame** out) {
  return Guard([&] {
    Require(out != nullptr, "null output");
    *out = new dsb_frame{dsb::Frame::Make(Names(names, count))};
  });
}

dsb_status dsb_frame_product(const dsb_frame* a, const dsb_frame* b, dsb_frame** out) {
  return Guard([&] {
    Require(a && b && out, "null argument");
    *out = new dsb_frame{dsb::Frame::Product(a->frame, b->frame)};
  });
}

size_t dsb_frame_size(const dsb_frame* frame) { return frame ? frame->frame.size() : 0; }

const char* dsb_frame_atom(const dsb_frame* frame, size_t index) {
  if (!frame || index >= frame->frame.size()) return nullptr;
  return frame->frame.atom(index).c_str();
}

void dsb_frame_free(dsb_frame* frame) { delete frame; }

dsb_status dsb_population_from_csv(const char* csv_text, const char* frame_decl,
                                   dsb_population** out) {
  return Guard([&] {
    Require(csv_text && frame_decl && out, "null argument");
    const auto decl = dsb::ParseFrameDecl(frame_decl);
    *out = new dsb_population{dsb::ParsePopulationCsv(csv_text, decl)};
  });
}

uint64_t dsb_population_total_weight(const dsb_population* p) {
  return p ? p->population.total_weight() : 0;
}

dsb_status dsb_population_frame(const dsb_population* p, dsb_frame** out) {
  return Guard([&] {
    Require(p && out, "null argument");
    *out = new dsb_frame{p->population.frame()};
  });
}

dsb_status dsb_population_freq_mass(const dsb_population* p, dsb_mass** out) {
  return Guard([&] {
    Require(p && out, "null argument");
    *out = new dsb_mass{dsb::FreqMass(p->population)};
  });
}

void dsb_population_free(dsb_population* p) { delete p; }

dsb_status dsb_mass_from_json(const char* json_text, dsb_mass** out) {
  return Guard([&] {
    Require(json_text && out, "null argument");
    *out = new dsb_mass{dsb::MassFromJson(json_text)};
  });
}

dsb_status dsb_mass_to_json(const dsb_mass* m, char** out) {
  return Guard([&] {
    Require(m && out, "null argument");
    *out = CopyString(dsb::MassToJson(m->mass));
  });
}

dsb_status dsb_mass_render_table(const dsb_mass* m, int rational, int as_json, char** out) {
  return Guard([&] {
    Require(m && out, "null argument");
    *out = CopyString(as_json ? dsb::RenderMassTableJson(m->mass, rational != 0)
                              : dsb::RenderMassTable(m->mass, rational != 0));
  });
}

int dsb_mass_is_exact(const dsb_mass* m) { return m && m->mass.is_exact(); }

size_t dsb_mass_focal_count(const dsb_mass* m) { return m ? m->mass.focal_count() : 0; }

dsb_status dsb_mass_bel(const dsb_mass* m, const char* const* atoms, size_t count,
                        double* value, char** exact_out) {
  return QuerySet(m, atoms, count, value, exact_out,
                  [](const dsb::MassFunction& mf, const dsb::Subset& a) { return dsb::Bel(mf, a); });
}

dsb_status dsb_mass_pl(const dsb_mass* m, const char* const* atoms, size_t count,
                       double* value, char** exact_out) {
  return QuerySet(m, atoms, count, value, exact_out,
                  [](const dsb::MassFunction& mf, const dsb::Subset& a) { return dsb::Pl(mf, a); });
}

dsb_status dsb_mass_equal(const dsb_mass* a, const dsb_mass* b, int* equal) {
  return Guard([&] {
    Require(a && b && equal, "null argument");
    *equal = a->mass == b->mass ? 1 : 0;
  });
}

void dsb_mass_free(dsb_mass* m) { delete m; }

dsb_status dsb_combine(const dsb_mass* a, const dsb_mass* b, dsb_mass** out,
                       double* conflict, char** conflict_text) {
  return Guard([&] {
    Require(a && b && out, "null argument");
    auto report = dsb::CombineDempster(a->mass, b->mass);
    char* text = conflict_text ? CopyString(report.conflict_mass.ToString()) : nullptr;
    if (conflict) *conflict = report.conflict_mass.to_double();
    if (conflict_text) *conflict_text = text;
    *out = new dsb_mass{std::move(report.result)};
  });
}

dsb_status dsb_relabel_exact(const dsb_mass* population_mass, const dsb_mass* labels,
                             dsb_mass** out) {
  return Guard([&] {
    Require(population_mass && labels && out, "null argument");
    *out = new dsb_mass{dsb::RelabelExact(population_mass->mass, {labels->mass})};
  });
}

dsb_status dsb_relabel_simulate(const dsb_population* p, const dsb_mass* labels,
                                uint64_t n_draws, uint64_t seed, uint32_t chunks,
                                dsb_mass** out, char** report_json) {
  return Guard([&] {
    Require(p && labels && out, "null argument");
    auto report = dsb::RelabelSimulate(p->population, {labels->mass}, n_draws, seed, chunks);
    char* text = report_json ? CopyString(dsb::SimulationReportToJson(report)) : nullptr;
    if (report_json) *report_json = text;
    *out = new dsb_mass{std::move(report.empirical)};
  });
}

dsb_status dsb_estimate(const dsb_population* p, double alpha, int bonferroni, dsb_mass** out) {
  return Guard([&] {
    Require(p && out, "null argument");
    *out = new dsb_mass{dsb::EstimateWithConfidence(
        dsb::CountTable::FromPopulation(p->population), alpha, bonferroni != 0)};
  });
}

dsb_status dsb_casebook_list(const char* dir, char** names_out) {
  return Guard([&] {
    Require(names_out != nullptr, "null output");
    std::string joined;
    for (const auto& n : dsb::ListCases(dir ? dir : dsb::DefaultCasebookDir())) {
      joined += n + "\n";
    }
    *names_out = CopyString(joined);
  });
}

dsb_status dsb_casebook_run(const char* dir, const char* name, char** report_out,
                            size_t* failures) {
  return Guard([&] {
    Require(name && report_out, "null argument");
    const auto report = dsb::RunCase(dir ? dir : dsb::DefaultCasebookDir(), name);
    char* text = CopyString(report.Render());
    if (failures) *failures = report.failures();
    *report_out = text;
  });
}

}  // extern "C"
