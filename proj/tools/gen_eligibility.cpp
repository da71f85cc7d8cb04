// Enumerates (a,b,c,d,e) over (Z/27)^5 and records which (I, J) residues occur.
//
// usage: gen_eligibility <this-source-file> <out.inc> <out.csv>

#include <openssl/sha.h>

#include <array>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

namespace {

constexpr int kMod = 27;
constexpr const char* kVersion = "1";

std::string sha256_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  const std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  unsigned char digest[SHA256_DIGEST_LENGTH];
  SHA256(reinterpret_cast<const unsigned char*>(body.data()), body.size(), digest);
  std::ostringstream os;
  for (unsigned char ch : digest) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(ch);
  return os.str();
}

int md(long v) { return static_cast<int>(((v % kMod) + kMod) % kMod); }

}  // namespace

int main(int argc, char** argv) {
  if (argc != 4) {
    std::cerr << "usage: gen_eligibility <source> <out.inc> <out.csv>\n";
    return 2;
  }
  std::array<std::uint32_t, kMod> rows{};
  for (long a = 0; a < kMod; ++a)
    for (long b = 0; b < kMod; ++b)
      for (long c = 0; c < kMod; ++c)
        for (long d = 0; d < kMod; ++d)
          for (long e = 0; e < kMod; ++e) {
            const int I = md(12 * a * e - 3 * b * d + c * c);
            const int J = md(72 * a * c * e + 9 * b * c * d - 27 * a * d * d - 27 * e * b * b - 2 * c * c * c);
            rows[I] |= 1u << J;
          }

  const std::string hash = sha256_file(argv[1]);
  std::ofstream inc(argv[2]);
  inc << "// Generated by tools/gen_eligibility.cpp; do not edit.\n";
  inc << "// Bit J of row I is set when (I mod 27, J mod 27) is attained.\n";
  inc << "inline constexpr const char* kEligibilityVersion = \"" << kVersion << "\";\n";
  inc << "inline constexpr const char* kEligibilityGeneratorSha256 = \"" << hash << "\";\n";
  inc << "inline constexpr std::uint32_t kEligibleMod27[27] = {\n";
  for (int i = 0; i < kMod; ++i) inc << "    0x" << std::hex << std::setw(7) << std::setfill('0') << rows[i] << "u,\n";
  inc << "};\n";

  std::ofstream csv(argv[3]);
  csv << "# version=" << kVersion << " generator_sha256=" << hash << "\n";
  csv << "I_mod27,J_mod27\n";
  int total = 0;
  for (int i = 0; i < kMod; ++i)
    for (int j = 0; j < kMod; ++j)
      if (rows[i] >> j & 1u) {
        csv << i << ',' << j << '\n';
        ++total;
      }
  std::cout << "eligible residue pairs: " << std::dec << total << " of " << kMod * kMod << '\n';
  return 0;
}
