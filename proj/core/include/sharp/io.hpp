#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "sharp/boolean.hpp"
#include "sharp/diagram.hpp"
#include "sharp/harness.hpp"
#include "sharp/hocolim.hpp"
#include "sharp/homotopy.hpp"
#include "sharp/lifting.hpp"
#include "sharp/sharp.hpp"

/// JSON file formats, digests and report records.
namespace sharp::io {

using Json = nlohmann::ordered_json;

/// Syntax or shape error. `where` is "file:line:col" for syntax errors and
/// "file:/json/pointer" otherwise.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string where, const std::string& message);
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

enum class FileKind { SimplicialSet, Map, Diagram, DiagramMap, Square, Presheaf };
/// By extension: .sset .smap .diag .dmap .square .bpsh.
std::optional<FileKind> kind_of(const std::filesystem::path& p);
std::string extension(FileKind k);
std::string to_string(FileKind k);

std::string read_file(const std::filesystem::path& p);
/// Parses JSON text, reporting syntax errors with line and column.
Json parse_json(std::string_view text, const std::string& source = "<input>");
/// Two-space indented with a trailing newline.
std::string dump(const Json& j);
void write_file(const std::filesystem::path& p, const Json& j);

std::string sha256_hex(std::string_view bytes);

/// [id, degeneracy values]
Json to_json(const FiniteSimplicialSet& x, const SimplexRef& s);
/// {"simplices": [{id, dim, faces: [[id, values], ...]}, ...]}
Json to_json(const FiniteSimplicialSet& x);
/// [[source id, target id, values], ...] over the nondegenerate simplices.
Json images_json(const SimplicialMap& f);
/// {"source", "target", "images"}
Json to_json(const SimplicialMap& f);
/// {"objects", "arrows": [{id, src, dst}], "composites": [[g, f, gf]]}
Json to_json(const FiniteCategory& c);
/// The category fields plus "on_objects" and "on_arrows".
Json to_json(const Diagram& d);
/// {"shape", "source", "target", "components"}; the diagrams carry only values.
Json to_json(const DiagramMap& f);
/// {"kind": "square", P, X, Y, B, top, left, right, bottom}
Json to_json(const Square& s);
/// {"kind": "presheaf-square", shape, A, B, C, D, top, left, right, bottom}
Json to_json(const PresheafSquare& s);
/// {"atoms", "values": [{element, value}], "restrictions": [{from, to, images}]}
Json to_json(const BooleanPresheaf& x);

/// Readers. `source` names the input in error messages. Broken simplicial
/// identities, naturality squares and functoriality surface as
/// InvariantError with the JSON location prefixed to every violation.
FiniteSimplicialSet sset_from_json(const Json& j, int dim_cap = kDefaultDimCap, const std::string& source = "<input>");
SimplicialMap map_from_json(const Json& j, int dim_cap = kDefaultDimCap, const std::string& source = "<input>");
FiniteCategory category_from_json(const Json& j, const std::string& source = "<input>");
Diagram diagram_from_json(const Json& j, int dim_cap = kDefaultDimCap, const std::string& source = "<input>");
DiagramMap diagram_map_from_json(const Json& j, int dim_cap = kDefaultDimCap, const std::string& source = "<input>");
Square square_from_json(const Json& j, int dim_cap = kDefaultDimCap, const std::string& source = "<input>");
PresheafSquare presheaf_square_from_json(const Json& j, int dim_cap = kDefaultDimCap, const std::string& source = "<input>");
BooleanPresheaf presheaf_from_json(const Json& j, int dim_cap = kDefaultDimCap, const std::string& source = "<input>");
bool is_presheaf_square(const Json& j);

FiniteSimplicialSet parse_sset(const std::filesystem::path& p, int dim_cap = kDefaultDimCap);
SimplicialMap parse_map(const std::filesystem::path& p, int dim_cap = kDefaultDimCap);
Diagram parse_diagram(const std::filesystem::path& p, int dim_cap = kDefaultDimCap);
DiagramMap parse_diagram_map(const std::filesystem::path& p, int dim_cap = kDefaultDimCap);
Square parse_square(const std::filesystem::path& p, int dim_cap = kDefaultDimCap);
PresheafSquare parse_presheaf_square(const std::filesystem::path& p, int dim_cap = kDefaultDimCap);
BooleanPresheaf parse_presheaf(const std::filesystem::path& p, int dim_cap = kDefaultDimCap);

// Evidence records.
Json to_json(const HomologyGroup& g);
Json to_json(const std::vector<HomologyGroup>& h);
Json to_json(const WeakEquivalenceCertificate& c);
Json to_json(const SharpnessReport& r);
Json to_json(const HomotopyCartesianVerdict& v);
Json to_json(const HarnessReport& r);
Json to_json(const LiftReport& r);
Json to_json(const IsoCheck& c);
Json to_json(const TildePullbackReport& r);
Json to_json(const BooleanAlgebra& alg, const SheafCheck& c);

enum class Status { Pass = 0, Fail = 1, Indeterminate = 2, Error = 3 };
std::string to_string(Status s);
Status status_of(Verdict v);
Status status_of(Sharpness s);
Status status_of(Cartesian c);
Status status_of(Outcome o);

struct VerdictReport {
  struct Input {
    std::string path;
    std::string sha256;
  };
  std::vector<std::string> command;
  std::vector<Input> inputs;
  Status status = Status::Pass;
  Json evidence = Json::object();
  std::optional<std::uint64_t> seed;
  /// Only reported when asked for; everything else is deterministic.
  std::optional<std::int64_t> elapsed_ms;
  /// Set instead of evidence for usage and parse errors.
  std::optional<std::string> error;

  Json to_json() const;
};

}  // namespace sharp::io
