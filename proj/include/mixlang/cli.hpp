// include/mixlang/cli.hpp

// Copyright 2026  The mixlang authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef MIXLANG_CLI_HPP_
#define MIXLANG_CLI_HPP_

namespace mixlang {

/// Entry point behind the mixlang binary. Subcommands: segment, identify,
/// transcribe, run, export-eaf, import-eaf, export-tsv, train-sli,
/// train-lm, eval-sli, eval-asr, triage. Exit codes: 0 success,
/// 1 validation/usage error, 2 I/O error. Data goes to files or stdout,
/// diagnostics to stderr.
int cli_main(int argc, const char *const *argv);

}  // namespace mixlang

#endif  // MIXLANG_CLI_HPP_
