// Copyright 2026 The arrtwist Authors
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


#include "arrtwist/arrtwist.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "arrtwist/driver/jobs.hpp"

using arrtwist::Error;
using arrtwist::driver::json;

struct at_arrangement {
    arrtwist::arrangement::Arrangement value;
};
struct at_presentation {
    arrtwist::fox::GroupPresentation value;
};
struct at_complex {
    arrtwist::chain::FreeChainComplex value;
};

namespace {

thread_local std::string last_error;

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

at_status fail(at_status status, const std::string& message) {
    last_error = message;
    return status;
}

// Runs f, translating exceptions into status codes and the thread's last error.
template <class F>
at_status guarded(F&& f) {
    last_error.clear();
    try {
        f();
        return AT_OK;
    } catch (const Error& e) {
        return fail(static_cast<at_status>(arrtwist::driver::exit_code(arrtwist::classify(e.code()))), e.what());
    } catch (const json::exception& e) {
        return fail(AT_ERR_INPUT, std::string("malformed JSON: ") + e.what());
    } catch (const std::exception& e) {
        return fail(AT_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(AT_ERR_INTERNAL, "unknown failure");
    }
}

at_status null_argument() { return fail(AT_ERR_INPUT, "null argument"); }

}  // namespace

extern "C" {

const char* at_version(void) {
    static const std::string v = arrtwist::driver::version_string();
    return v.c_str();
}

const char* at_last_error(void) { return last_error.c_str(); }

void at_string_free(char* s) { std::free(s); }

at_status at_run_job(const char* job_json, char** report_json) {
    if (!job_json || !report_json) return null_argument();
    last_error.clear();
    arrtwist::driver::JobOutcome out;
    try {
        out = arrtwist::driver::run_job(json::parse(job_json));
    } catch (const json::exception& e) {
        out.report = json{{"format", arrtwist::driver::kReportFormat},
                          {"command", ""},
                          {"error", {{"code", "InvalidInput"}, {"class", "input"}, {"message", e.what()}}}};
        out.exit_code = 1;
    }
    if (out.report.contains("error")) last_error = out.report["error"]["message"].get<std::string>();
    *report_json = copy_string(out.report.dump(2));
    if (!*report_json) return fail(AT_ERR_INTERNAL, "out of memory");
    return static_cast<at_status>(out.exit_code);
}

at_status at_arrangement_from_json(const char* text, at_arrangement** out) {
    if (!text || !out) return null_argument();
    return guarded([&] {
        *out = new at_arrangement{arrtwist::driver::arrangement_from_json(json::parse(text))};
    });
}

void at_arrangement_free(at_arrangement* a) { delete a; }

size_t at_arrangement_size(const at_arrangement* a) { return a ? a->value.size() : 0; }

at_status at_arrangement_girth(const at_arrangement* a, int* girth) {
    if (!a || !girth) return null_argument();
    return guarded([&] {
        auto g = arrtwist::arrangement::girth(a->value);
        *girth = g ? *g : -1;
    });
}

at_status at_arrangement_betti(const at_arrangement* a, long* betti, size_t capacity, size_t* count,
                               long* euler_characteristic) {
    if (!a || !count) return null_argument();
    return guarded([&] {
        auto b = arrtwist::arrangement::betti_data(a->value);
        *count = b.betti.size();
        for (size_t i = 0; i < b.betti.size() && i < capacity && betti; ++i) betti[i] = b.betti[i];
        if (euler_characteristic) *euler_characteristic = b.euler_characteristic;
    });
}

at_status at_presentation_from_json(const char* text, at_presentation** out) {
    if (!text || !out) return null_argument();
    return guarded([&] {
        *out = new at_presentation{arrtwist::driver::presentation_from_json(json::parse(text))};
    });
}

void at_presentation_free(at_presentation* p) { delete p; }

at_status at_presentation_milnor_spectrum(const at_presentation* p, long* values, size_t capacity, size_t* count) {
    if (!p || !count) return null_argument();
    return guarded([&] {
        auto s = arrtwist::milnor::spectrum_from_presentation(p->value);
        *count = s.values.size();
        for (size_t i = 0; i < s.values.size() && i < capacity && values; ++i) values[i] = s.values[i];
    });
}

at_status at_milnor_obstruct(size_t n, const long* values, size_t count, int* obstructed, long* b1_total) {
    if ((!values && count) || !obstructed) return null_argument();
    return guarded([&] {
        auto s = arrtwist::milnor::MilnorSpectrum::create(n, std::vector<long>(values, values + count));
        auto r = arrtwist::milnor::obstruction_report(s);
        *obstructed = r.obstructed ? 1 : 0;
        if (b1_total) *b1_total = r.b1_total;
    });
}

at_status at_complex_from_json(const char* text, at_complex** out) {
    if (!text || !out) return null_argument();
    return guarded([&] { *out = new at_complex{arrtwist::driver::complex_from_json(json::parse(text))}; });
}

void at_complex_free(at_complex* c) { delete c; }

at_status at_complex_homology(const at_complex* c, char** groups_json) {
    if (!c || !groups_json) return null_argument();
    return guarded([&] {
        *groups_json = copy_string(arrtwist::driver::to_json(arrtwist::chain::homology_all(c->value)).dump());
    });
}

at_status at_complex_isomorphic(const at_complex* a, const at_complex* b, int* isomorphic) {
    if (!a || !b || !isomorphic) return null_argument();
    return guarded([&] { *isomorphic = arrtwist::chain::decide_isomorphic(a->value, b->value).isomorphic ? 1 : 0; });
}

}  // extern "C"
