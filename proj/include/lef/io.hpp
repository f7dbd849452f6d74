#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "lef/approx.hpp"
#include "lef/error.hpp"
#include "lef/fsg.hpp"
#include "lef/partial.hpp"
#include "lef/rewrite.hpp"

namespace lef {

  using Json = nlohmann::ordered_json;

  //! Schema violations throw SchemaError with a JSON pointer.
  Json read_json_file(std::string const& path);
  void write_json_file(std::string const& path, Json const& j);
  Json parse_json(std::string const& text);

  //! {"order": n, "labels": [...], "table": [[...]]}, rows are left factors.
  Json     to_json(MulTable const& t);
  MulTable table_from_json(Json const& j, std::string const& at = "");

  //! {"name": ..., "generators": [...], "relations": [["lhs", "rhs"], ...]}
  Json         to_json(Presentation const& p);
  Presentation presentation_from_json(Json const& j, std::string const& at = "");

  //! {"elements": [...], "products": {"x,y": "z", ...}}
  Json         to_json(PartialTable const& pt);
  PartialTable partial_from_json(Json const& j, std::string const& at = "");

  //! {"name", "alphabet", "order", "parameter_n", "schemas": [{"name", "lhs":
  //! [{"letter", "exp"}], "rhs": [...], "conditions": [...]}]}
  Json          to_json(RewriteSystem const& s);
  RewriteSystem system_from_json(Json const& j, std::string const& at = "");

  //! A pair over a word host: {"host", "table", "map": {"word": index}}.
  struct WordPairFile {
    std::string       host;  // preset name, or "free"
    std::vector<Word> elements;
    ApproxPair        pair;
  };
  Json         to_json(WordPairFile const& p);
  WordPairFile word_pair_from_json(Json const& j, std::string const& at = "");

  //! A wrap map over a word host: {"host", "subset": [...], "table", "map":
  //! {"label": "word"}} with one entry per table element.
  struct WordWrapFile {
    std::string       host;
    std::vector<Word> subset;
    WrapMap<Word>     wrap;
  };
  Json         to_json(WordWrapFile const& w);
  WordWrapFile word_wrap_from_json(Json const& j, std::string const& at = "");

  //! The host named in a pair or wrap file.
  WordHost word_host(std::string const& name, BfsBounds bounds = {});

}  // namespace lef
