// Copyright 2026 The Fermikit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Frozen reference tables for the phase kernels and the few-mode reduced
// density matrices. Glyph strings are in the exact shape the table emitter
// prints (rows of space-separated +/- glyphs).

#ifndef FERMIKIT_TESTS_GOLDEN_TABLES_HPP
#define FERMIKIT_TESTS_GOLDEN_TABLES_HPP

#include <string>
#include <utility>
#include <vector>

namespace fermikit::golden {

struct TableCase {
    const char* kind;      // "f", "h", "l", "u"
    const char* argument;  // ModeSet / partition / ordered partition text
    const char* glyphs;
};

inline const std::vector<TableCase>& phase_tables() {
    static const std::vector<TableCase> cases = {
        {"f", "{1,2}",
         "+ + + -\n"
         "+ + - +\n"
         "+ + + -\n"
         "+ + - +\n"},
        {"f", "{1,2,3}",
         "+ + + - + - - -\n"
         "+ + - + - + - -\n"
         "+ + + - - + + +\n"
         "+ + - + + - + +\n"
         "+ + + - + - - -\n"
         "+ + - + - + - -\n"
         "+ + + - - + + +\n"
         "+ + - + + - + +\n"},
        {"f", "{1,2,3,4}",
         "+ + + - + - - - + - - - - - - +\n"
         "+ + - + - + - - - + - - - - + -\n"
         "+ + + - - + + + - + + + - - - +\n"
         "+ + - + + - + + + - + + - - + -\n"
         "+ + + - + - - - - + + + + + + -\n"
         "+ + - + - + - - + - + + + + - +\n"
         "+ + + - - + + + + - - - + + + -\n"
         "+ + - + + - + + - + - - + + - +\n"
         "+ + + - + - - - + - - - - - - +\n"
         "+ + - + - + - - - + - - - - + -\n"
         "+ + + - - + + + - + + + - - - +\n"
         "+ + - + + - + + + - + + - - + -\n"
         "+ + + - + - - - - + + + + + + -\n"
         "+ + - + - + - - + - + + + + - +\n"
         "+ + + - - + + + + - - - + + + -\n"
         "+ + - + + - + + - + - - + + - +\n"},
        {"h", "{1}|{2}",
         "+ + + -\n"
         "+ + - +\n"
         "+ + + -\n"
         "+ + - +\n"},
        {"h", "{1,2}|{3}",
         "+ + + - + - + +\n"
         "+ + - + - + + +\n"
         "+ + + - + - + +\n"
         "+ + - + - + + +\n"
         "+ + + - + - + +\n"
         "+ + - + - + + +\n"
         "+ + + - + - + +\n"
         "+ + - + - + + +\n"},
        {"h", "{1,3}|{2}",
         "+ + + - + + - +\n"
         "+ + - + + + + -\n"
         "+ + + - - - + -\n"
         "+ + - + - - - +\n"
         "+ + + - + + - +\n"
         "+ + - + + + + -\n"
         "+ + + - - - + -\n"
         "+ + - + - - - +\n"},
        {"h", "{1}|{2,3}",
         "+ + + + + - - +\n"
         "+ + + + - + + -\n"
         "+ + + + - + + -\n"
         "+ + + + + - - +\n"
         "+ + + + + - - +\n"
         "+ + + + - + + -\n"
         "+ + + + - + + -\n"
         "+ + + + + - - +\n"},
        {"h", "{1}|{2}|{3}",
         "+ + + - + - - -\n"
         "+ + - + - + - -\n"
         "+ + + - - + + +\n"
         "+ + - + + - + +\n"
         "+ + + - + - - -\n"
         "+ + - + - + - -\n"
         "+ + + - - + + +\n"
         "+ + - + + - + +\n"},
        {"l", "{1}|{2}",
         "+ + + +\n"
         "+ + + +\n"
         "+ + + +\n"
         "+ + + +\n"},
        {"l", "{2}|{1}",
         "+ + + -\n"
         "+ + - +\n"
         "+ - + +\n"
         "- + + +\n"},
        {"l", "{1}|{2,3}",
         "+ + + + + + + +\n"
         "+ + + + + + + +\n"
         "+ + + + + + + +\n"
         "+ + + + + + + +\n"
         "+ + + + + + + +\n"
         "+ + + + + + + +\n"
         "+ + + + + + + +\n"
         "+ + + + + + + +\n"},
        {"l", "{1,2}|{3}",
         "+ + + + + + + +\n"
         "+ + + + + + + +\n"
         "+ + + + + + + +\n"
         "+ + + + + + + +\n"
         "+ + + + + + + +\n"
         "+ + + + + + + +\n"
         "+ + + + + + + +\n"
         "+ + + + + + + +\n"},
        {"l", "{2}|{1,3}",
         "+ + + + + + - -\n"
         "+ + + + + + - -\n"
         "+ + + + - - + +\n"
         "+ + + + - - + +\n"
         "+ + - - + + + +\n"
         "+ + - - + + + +\n"
         "- - + + + + + +\n"
         "- - + + + + + +\n"},
        {"l", "{1,3}|{2}",
         "+ + + - + + + -\n"
         "+ + - + + + - +\n"
         "+ - + + + - + +\n"
         "- + + + - + + +\n"
         "+ + + - + + + -\n"
         "+ + - + + + - +\n"
         "+ - + + + - + +\n"
         "- + + + - + + +\n"},
        {"l", "{3}|{1,2}",
         "+ + + - + - + +\n"
         "+ + - + - + + +\n"
         "+ - + + + + + -\n"
         "- + + + + + - +\n"
         "+ - + + + + + -\n"
         "- + + + + + - +\n"
         "+ + + - + - + +\n"
         "+ + - + - + + +\n"},
        {"l", "{2,3}|{1}",
         "+ + + + + - - +\n"
         "+ + + + - + + -\n"
         "+ + + + - + + -\n"
         "+ + + + + - - +\n"
         "+ - - + + + + +\n"
         "- + + - + + + +\n"
         "- + + - + + + +\n"
         "+ - - + + + + +\n"},
        {"l", "{1}|{2}|{3}",
         "+ + + + + + + +\n"
         "+ + + + + + + +\n"
         "+ + + + + + + +\n"
         "+ + + + + + + +\n"
         "+ + + + + + + +\n"
         "+ + + + + + + +\n"
         "+ + + + + + + +\n"
         "+ + + + + + + +\n"},
        {"l", "{1}|{3}|{2}",
         "+ + + - + + + -\n"
         "+ + - + + + - +\n"
         "+ - + + + - + +\n"
         "- + + + - + + +\n"
         "+ + + - + + + -\n"
         "+ + - + + + - +\n"
         "+ - + + + - + +\n"
         "- + + + - + + +\n"},
        {"l", "{2}|{1}|{3}",
         "+ + + + + + - -\n"
         "+ + + + + + - -\n"
         "+ + + + - - + +\n"
         "+ + + + - - + +\n"
         "+ + - - + + + +\n"
         "+ + - - + + + +\n"
         "- - + + + + + +\n"
         "- - + + + + + +\n"},
        {"l", "{3}|{1}|{2}",
         "+ + + - + - + +\n"
         "+ + - + - + + +\n"
         "+ - + + + + + -\n"
         "- + + + + + - +\n"
         "+ - + + + + + -\n"
         "- + + + + + - +\n"
         "+ + + - + - + +\n"
         "+ + - + - + + +\n"},
        {"l", "{2}|{3}|{1}",
         "+ + + + + - - +\n"
         "+ + + + - + + -\n"
         "+ + + + - + + -\n"
         "+ + + + + - - +\n"
         "+ - - + + + + +\n"
         "- + + - + + + +\n"
         "- + + - + + + +\n"
         "+ - - + + + + +\n"},
        {"l", "{3}|{2}|{1}",
         "+ + + - + - - -\n"
         "+ + - + - + - -\n"
         "+ - + + - - + -\n"
         "- + + + - - - +\n"
         "+ - - - + + + -\n"
         "- + - - + + - +\n"
         "- - + - + - + +\n"
         "- - - + - + + +\n"},
        {"u", "{1}|{2}", "+ + + +\n"},
        {"u", "{2}|{1}", "+ + + -\n"},
        {"u", "{1}|{2,3}", "+ + + + + + + +\n"},
        {"u", "{2,3}|{1}", "+ + + + + - - +\n"},
        {"u", "{2}|{1,3}", "+ + + + + + - -\n"},
        {"u", "{1,3}|{2}", "+ + + - + + + -\n"},
        {"u", "{3}|{1,2}", "+ + + - + - + +\n"},
        {"u", "{1,2}|{3}", "+ + + + + + + +\n"},
        {"u", "{1}|{2}|{3}", "+ + + + + + + +\n"},
        {"u", "{1}|{3}|{2}", "+ + + - + + + -\n"},
        {"u", "{2}|{1}|{3}", "+ + + + + + - -\n"},
        {"u", "{3}|{1}|{2}", "+ + + - + - + +\n"},
        {"u", "{2}|{3}|{1}", "+ + + + + - - +\n"},
        {"u", "{3}|{2}|{1}", "+ + + - + - - -\n"},
    };
    return cases;
}

// Reduced-density-matrix sign patterns: each entry of the
// reduced matrix is a signed sum of entries of the full matrix. Terms are
// written "<sign><nu>,<nu'>" with bitstrings over the full ModeSet.

struct RdmPattern {
    const char* full_modes;  // e.g. "{1,2,3}"
    const char* kept_modes;  // e.g. "{2}"
    std::vector<std::vector<const char*>> entries;  // [row][col] term list
};

inline const std::vector<RdmPattern>& rdm_patterns() {
    static const std::vector<RdmPattern> patterns = {
        {"{1,2}", "{1}",
         {{"+00,00 +01,01", "+00,10 +01,11"},
          {"+10,00 +11,01", "+10,10 +11,11"}}},
        {"{1,2}", "{2}",
         {{"+00,00 +10,10", "+00,01 -10,11"},
          {"+01,00 -11,10", "+01,01 +11,11"}}},
        {"{1,2,3}", "{2,3}",
         {{"+000,000 +100,100", "+000,001 -100,101", "+000,010 -100,110", "+000,011 +100,111"},
          {"+001,000 -101,100", "+001,001 +101,101", "+001,010 +101,110", "+001,011 -101,111"},
          {"+010,000 -110,100", "+010,001 +110,101", "+010,010 +110,110", "+010,011 -110,111"},
          {"+011,000 +111,100", "+011,001 -111,101", "+011,010 -111,110", "+011,011 +111,111"}}},
        {"{1,2,3}", "{1,3}",
         {{"+000,000 +010,010", "+000,001 -010,011", "+000,100 +010,110", "+000,101 -010,111"},
          {"+001,000 -011,010", "+001,001 +011,011", "+001,100 -011,110", "+001,101 +011,111"},
          {"+100,000 +110,010", "+100,001 -110,011", "+100,100 +110,110", "+100,101 -110,111"},
          {"+101,000 -111,010", "+101,001 +111,011", "+101,100 -111,110", "+101,101 +111,111"}}},
        {"{1,2,3}", "{1,2}",
         {{"+000,000 +001,001", "+000,010 +001,011", "+000,100 +001,101", "+000,110 +001,111"},
          {"+010,000 +011,001", "+010,010 +011,011", "+010,100 +011,101", "+010,110 +011,111"},
          {"+100,000 +101,001", "+100,010 +101,011", "+100,100 +101,101", "+100,110 +101,111"},
          {"+110,000 +111,001", "+110,010 +111,011", "+110,100 +111,101", "+110,110 +111,111"}}},
        {"{1,2,3}", "{1}",
         {{"+000,000 +001,001 +010,010 +011,011", "+000,100 +001,101 +010,110 +011,111"},
          {"+100,000 +101,001 +110,010 +111,011", "+100,100 +101,101 +110,110 +111,111"}}},
        {"{1,2,3}", "{2}",
         {{"+000,000 +001,001 +100,100 +101,101", "+000,010 +001,011 -100,110 -101,111"},
          {"+010,000 +011,001 -110,100 -111,101", "+010,010 +011,011 +110,110 +111,111"}}},
        {"{1,2,3}", "{3}",
         {{"+000,000 +010,010 +100,100 +110,110", "+000,001 -010,011 -100,101 +110,111"},
          {"+001,000 -011,010 -101,100 +111,110", "+001,001 +011,011 +101,101 +111,111"}}},
    };
    return patterns;
}

}  // namespace fermikit::golden

#endif
