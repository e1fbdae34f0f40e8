#pragma once

// Subcommand implementations behind the `milnor` executable. Each returns the
// rendered output and the process exit code so tests can drive them in-process.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "milnor/operations.hpp"
#include "milnor/ring.hpp"

namespace milnor::cli {

// Exit-code contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

enum class Format { Human, Json };

struct CommandResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

CommandResult cmd_apply(std::uint32_t prime, std::uint32_t rank, const std::string& word,
                        const std::string& expr, Format format);

enum class Suite { Identities, Properties, All };

struct VerifyOptions {
  Suite suite = Suite::All;
  // Primes 2, 3 and 5 when absent.
  std::optional<std::uint32_t> prime;
  std::uint32_t rank = 3;
  int max_degree = 12;
  std::uint64_t seed = 1;
  Format format = Format::Human;
};

CommandResult cmd_verify(const VerifyOptions& options);

struct GroupDescriptor {
  std::string name;
  std::uint32_t prime;
};

/// The exceptional groups with a rank-3 non-toral elementary abelian l-subgroup.
const std::vector<GroupDescriptor>& certified_groups();
std::optional<GroupDescriptor> find_group(const std::string& name);

/// Q0(x1*x2*x3) in the rank-3 ring at the group's prime.
Element restriction_class(const GroupDescriptor& group);

struct CertificateReport {
  GroupDescriptor group;
  std::string witness_class;
  std::string q1_value;
  std::string q1_oracle_value;
  bool nonzero = false;
  bool implementations_agree = false;
  std::string conclusion;
};

CertificateReport certify(const GroupDescriptor& group);

/// Rejects names outside the table and primes that do not match the table.
CommandResult cmd_certify(const std::string& group, std::optional<std::uint32_t> prime, Format format);

struct ScanReport {
  std::uint32_t prime = 0;
  std::uint32_t rank = 0;
  Bidegree bidegree;
  std::string word;
  std::vector<std::string> basis;
  std::size_t image_rank = 0;
  std::vector<std::string> kernel_basis;
};

ScanReport scan(const RingContext& ctx, Bidegree bidegree, const OperationWord& word);

CommandResult cmd_scan(std::uint32_t prime, std::uint32_t rank, Bidegree bidegree, const std::string& word,
                       Format format);

} // namespace milnor::cli
