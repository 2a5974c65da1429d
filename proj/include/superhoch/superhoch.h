/*
   Copyright 2026 The superhoch Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/*
 * C interface to libsuperhoch. Every handle is opaque and owned by the
 * caller; strings returned through char** must be released with
 * shc_free_string. On a non-OK status shc_last_error() describes the
 * problem (per thread, valid until the next call).
 */

#ifndef SUPERHOCH_H
#define SUPERHOCH_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct shc_algebra shc_algebra;
typedef struct shc_module shc_module;
typedef struct shc_cochain shc_cochain;
typedef struct shc_deformation shc_deformation;

typedef enum shc_status {
    SHC_OK = 0,
    SHC_FAILED = 1,      /* computation ran, answer is negative (invalid, obstructed, identity failed) */
    SHC_PARSE_ERROR = 2, /* malformed input text */
    SHC_INPUT_ERROR = 3, /* well-formed input with bad content, or unsupported request */
    SHC_INTERNAL = 4
} shc_status;

const char* shc_version(void);
const char* shc_last_error(void);
void shc_free_string(char* s);

/* Algebras. field_tag is "Q" or "Fp:<p>". */
shc_status shc_algebra_parse(const char* json, shc_algebra** out);
shc_status shc_algebra_named(const char* spec, shc_algebra** out);
shc_status shc_algebra_set_field(shc_algebra* a, const char* field_tag);
shc_status shc_algebra_field(const shc_algebra* a, char** field_tag);
shc_status shc_algebra_serialize(const shc_algebra* a, char** json);
/* SHC_FAILED when an axiom is violated; the report names the first witness. */
shc_status shc_algebra_validate(const shc_algebra* a, char** report);
unsigned shc_algebra_dim(const shc_algebra* a);
void shc_algebra_free(shc_algebra* a);

/* Bimodules. A null module argument elsewhere means A as a module over itself. */
shc_status shc_module_parse(const shc_algebra* a, const char* json, shc_module** out);
shc_status shc_module_self(const shc_algebra* a, shc_module** out);
shc_status shc_module_serialize(const shc_module* p, char** json);
shc_status shc_module_validate(const shc_algebra* a, const shc_module* p, char** report);
void shc_module_free(shc_module* p);

/* Cochains. */
shc_status shc_cochain_parse(const shc_algebra* a, const shc_module* p, const char* json, shc_cochain** out);
/* As above, but a file without a "target" key is read as module-valued. */
shc_status shc_cochain_parse_module(const shc_algebra* a, const shc_module* p, const char* json, shc_cochain** out);
shc_status shc_cochain_serialize(const shc_algebra* a, const shc_cochain* f, char** json);
void shc_cochain_free(shc_cochain* f);

shc_status shc_delta(const shc_algebra* a, const shc_module* p, const shc_cochain* f, shc_cochain** out);
shc_status shc_cup(const shc_algebra* a, const shc_module* p, const shc_cochain* f, const shc_cochain* g,
                   shc_cochain** out);
/* slot < 0 gives the full composition f o g, otherwise f o_slot g (0-based). */
shc_status shc_circ(const shc_algebra* a, const shc_module* p, const shc_cochain* f, const shc_cochain* g, int slot,
                    shc_cochain** out);
shc_status shc_bracket(const shc_algebra* a, const shc_module* p, const shc_cochain* f, const shc_cochain* g,
                       shc_cochain** out);

/* parity: 0, 1, or -1 for both. as_json = 0 gives a text table. */
shc_status shc_cohomology(const shc_algebra* a, const shc_module* p, unsigned max_arity, int parity, int as_json,
                          int representatives, char** report);

/* SHC_FAILED when some identity fails. */
shc_status shc_audit(const shc_algebra* a, const shc_module* p, uint64_t seed, unsigned trials, char** report);

/* Deformations. */
shc_status shc_deformation_parse(const shc_algebra* a, const char* json, shc_deformation** out);
shc_status shc_deformation_serialize(const shc_algebra* a, const shc_deformation* d, char** json);
void shc_deformation_free(shc_deformation* d);
shc_status shc_deform_check(const shc_algebra* a, const shc_deformation* d, char** report);
shc_status shc_deform_obstruct(const shc_algebra* a, const shc_deformation* d, char** report);
/* On success *out holds the order N+1 deformation; SHC_FAILED with *out null when obstructed. */
shc_status shc_deform_extend(const shc_algebra* a, const shc_deformation* d, shc_deformation** out, char** report);

/* Extensions of A by P along an even 2-cochain h. */
shc_status shc_extension_build(const shc_algebra* a, const shc_module* p, const shc_cochain* h, shc_algebra** out);
/* SHC_FAILED with *witness null when h and h2 give inequivalent extensions. */
shc_status shc_extension_equiv(const shc_algebra* a, const shc_module* p, const shc_cochain* h, const shc_cochain* h2,
                               shc_cochain** witness);

#ifdef __cplusplus
}
#endif

#endif /* SUPERHOCH_H */
