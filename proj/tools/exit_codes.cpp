/*
 * Copyright 2026 The privlogit Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "exit_codes.hpp"

#include "privlogit/errors.hpp"
#include "privlogit/protocol/transport.hpp"

namespace privlogit::cli {

ExitCode exit_code_for(const std::exception_ptr& e) {
  try {
    std::rethrow_exception(e);
  } catch (const protocol::PeerAborted& ex) {
    switch (ex.info().code) {
      case protocol::AbortCode::kDiverged: return kDivergence;
      case protocol::AbortCode::kConfig: return kConfig;
      default: return kAbort;
    }
  } catch (const Diverged&) {
    return kDivergence;
  } catch (const ProtocolAbort&) {
    return kAbort;
  } catch (const NotPositiveDefinite&) {
    return kAbort;
  } catch (const ParseError&) {
    return kConfig;
  } catch (const ConfigError&) {
    return kConfig;
  } catch (const EmptyInput&) {
    return kConfig;
  } catch (const PartitionError&) {
    return kConfig;
  } catch (const ParameterError&) {
    return kConfig;
  } catch (...) {
    return kFailure;
  }
}

}  // namespace privlogit::cli
