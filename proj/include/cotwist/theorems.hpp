#pragma once

#include "cotwist/catalog.hpp"

namespace cotwist {

/// Scripted per-theorem verification scenarios. Each runs the full chain of
/// constructions for one statement on a named catalog instance and reports
/// every asserted identity. Report ordering is deterministic.
const std::vector<std::string>& theorem_ids();

/// instance = "" picks the theorem's default instance.
CheckReport verify_theorem(const std::string& id, const std::string& instance,
                           FieldSpec field);

/// A data-driven suite: one theorem, a list of (instance, field) runs. The
/// canonical suites are shipped as one JSON file per theorem under suites/.
struct SuiteRun {
  std::string instance;
  FieldSpec field;
};
struct SuiteSpec {
  std::string theorem;
  std::vector<SuiteRun> runs;
};

SuiteSpec default_suite(const std::string& theorem_id);
SuiteSpec suite_from_json(const std::string& text);  // throws MalformedDoc
std::string suite_to_json(const SuiteSpec& s);

CheckReport run_suite(const SuiteSpec& s);

std::string field_name(const FieldSpec& f);            // "Q" or "F<p>"
FieldSpec field_by_name(const std::string& name);      // throws MalformedDoc

}  // namespace cotwist
