#include "tripleline/cli/config.hpp"

#include <string>

#include "tripleline/diagram/enumerate.hpp"
#include "tripleline/errors.hpp"

namespace tripleline::cli {

void RunConfig::validate() const {
  if (!(eps > 0.0)) throw ValidationError("--eps must be positive");
  if (threads < 1) throw ValidationError("--threads must be at least 1");
  if (kmax < 0) throw ValidationError("--kmax must be non-negative");
  if (N < 1 || d < 1) throw ValidationError("--N and --d must be at least 1");
  if (cap < 1 || cap > diagram::kMaxOrder) {
    throw ValidationError("--cap must lie in [1, " + std::to_string(diagram::kMaxOrder) + "]");
  }
  if (kmax > cap) {
    throw ResourceLimitError("--kmax " + std::to_string(kmax) + " exceeds the enumeration cap " +
                             std::to_string(cap) + " (raise --cap up to " + std::to_string(diagram::kMaxOrder) +
                             ")");
  }
}

series::AssembleOptions RunConfig::assemble_options() const {
  series::AssembleOptions o;
  o.convention = convention;
  o.action = action;
  o.threads = threads;
  o.max_k = cap;
  return o;
}

}  // namespace tripleline::cli
