// Copyright 2026 The Walras Authors
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

#include "walras/market_io.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "walras/errors.h"

namespace walras {
namespace {

using Json = nlohmann::ordered_json;

Rational ReadRational(const Json& j, std::string_view what) {
  if (j.is_string()) return Rational::Parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw InputError(std::string(what) + ": expected a \"p/q\" string");
}

std::vector<Rational> ReadRationals(const Json& j, std::string_view what) {
  if (!j.is_array()) throw InputError(std::string(what) + ": expected an array");
  std::vector<Rational> out;
  for (const Json& e : j) out.push_back(ReadRational(e, what));
  return out;
}

const Json& Field(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw InputError(std::string("missing field \"") + key + "\"");
  }
  return obj.at(key);
}

int ReadInt(const Json& j, std::string_view what) {
  if (!j.is_number_integer()) {
    throw InputError(std::string(what) + ": expected an integer");
  }
  const auto v = j.get<std::int64_t>();
  if (v < 0 || v > 1'000'000) throw InputError(std::string(what) + ": out of range");
  return static_cast<int>(v);
}

ItemSet ReadItems(const Json& j, int m, std::string_view what) {
  if (!j.is_array()) throw InputError(std::string(what) + ": expected an index list");
  ItemSet s;
  for (const Json& e : j) {
    const int item = ReadInt(e, what);
    if (item >= m) {
      throw InputError(std::string(what) + ": item index " + std::to_string(item) +
                       " out of range for m = " + std::to_string(m));
    }
    if (s.contains(item)) throw InputError(std::string(what) + ": repeated item");
    s = s.With(item);
  }
  return s;
}

std::vector<ItemSet> ReadBuckets(const Json& j, int m) {
  if (!j.is_array()) throw InputError("buckets: expected a list of index lists");
  std::vector<ItemSet> out;
  for (const Json& b : j) out.push_back(ReadItems(b, m, "bucket"));
  return out;
}

bool ReadUneven(const Json& j) {
  if (!j.contains("uneven")) return false;
  if (!j.at("uneven").is_boolean()) throw InputError("uneven: expected a boolean");
  return j.at("uneven").get<bool>();
}

Valuation ReadValuation(const Json& j, int m) {
  const Json& type_field = Field(j, "type");
  if (!type_field.is_string()) throw InputError("type: expected a string");
  const std::string type = type_field.get<std::string>();
  if (type == "additive") {
    return Valuation(m, Additive{ReadRationals(Field(j, "values"), "values")});
  }
  if (type == "unit_demand") {
    return Valuation(m, UnitDemand{ReadRationals(Field(j, "values"), "values")});
  }
  if (type == "budget_additive") {
    return Valuation(m, BudgetAdditive{ReadRationals(Field(j, "values"), "values"),
                                       ReadRational(Field(j, "budget"), "budget")});
  }
  if (type == "xos") {
    const Json& clauses = Field(j, "clauses");
    if (!clauses.is_array()) throw InputError("clauses: expected a list");
    XosExplicit x;
    for (const Json& c : clauses) x.clauses.push_back(ReadRationals(c, "clause"));
    return Valuation(m, std::move(x));
  }
  if (type == "single_minded") {
    return Valuation(m, SingleMinded{ReadItems(Field(j, "items"), m, "items"),
                                     ReadRational(Field(j, "value"), "value")});
  }
  if (type == "symmetric") {
    return Valuation(m, SymmetricTable{ReadRationals(Field(j, "by_size"), "by_size")});
  }
  if (type == "h_plus_eps") {
    return Valuation(
        m, HPlusEpsilon{ReadRational(Field(j, "epsilon"), "epsilon"),
                        std::make_shared<const Valuation>(
                            ReadValuation(Field(j, "inner"), m))});
  }
  if (type == "bucket_xos") {
    return Valuation(m, BucketXos{ReadBuckets(Field(j, "buckets"), m), ReadUneven(j)});
  }
  if (type == "bucket_unit") {
    return Valuation(m, BucketUnit{ReadBuckets(Field(j, "buckets"), m), ReadUneven(j)});
  }
  if (type == "explicit") {
    if (m > 20) throw CapExceeded("explicit: table valuations are limited to 20 items");
    return Valuation(m, ExplicitTable{ReadRationals(Field(j, "values"), "values")});
  }
  throw InputError("unknown valuation type \"" + type + "\"");
}

Json Str(const Rational& q) { return q.ToString(); }

Json Strs(const std::vector<Rational>& qs) {
  Json arr = Json::array();
  for (const Rational& q : qs) arr.push_back(Str(q));
  return arr;
}

Json Indices(ItemSet s) {
  Json arr = Json::array();
  s.ForEach([&](int j) { arr.push_back(j); });
  return arr;
}

Json BucketsJson(const std::vector<ItemSet>& buckets) {
  Json arr = Json::array();
  for (ItemSet b : buckets) arr.push_back(Indices(b));
  return arr;
}

Json WriteValuation(const Valuation& v) {
  Json j;
  j["type"] = std::string(KindName(v.kind()));
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Additive> || std::is_same_v<T, UnitDemand>) {
          j["values"] = Strs(s.values);
        } else if constexpr (std::is_same_v<T, BudgetAdditive>) {
          j["values"] = Strs(s.values);
          j["budget"] = Str(s.budget);
        } else if constexpr (std::is_same_v<T, XosExplicit>) {
          Json clauses = Json::array();
          for (const auto& c : s.clauses) clauses.push_back(Strs(c));
          j["clauses"] = std::move(clauses);
        } else if constexpr (std::is_same_v<T, SingleMinded>) {
          j["items"] = Indices(s.desired);
          j["value"] = Str(s.value);
        } else if constexpr (std::is_same_v<T, SymmetricTable>) {
          j["by_size"] = Strs(s.by_size);
        } else if constexpr (std::is_same_v<T, HPlusEpsilon>) {
          j["epsilon"] = Str(s.epsilon);
          j["inner"] = WriteValuation(*s.inner);
        } else if constexpr (std::is_same_v<T, BucketXos> ||
                             std::is_same_v<T, BucketUnit>) {
          j["buckets"] = BucketsJson(s.buckets);
          if (s.allow_uneven) j["uneven"] = true;
        } else if constexpr (std::is_same_v<T, ExplicitTable>) {
          j["values"] = Strs(s.values);
        }
      },
      v.spec());
  return j;
}

Json ParseJson(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Market ParseMarket(std::string_view text) {
  const Json doc = ParseJson(text);
  if (!doc.is_object()) throw InputError("market document must be an object");
  if (doc.contains("schema") &&
      (!doc.at("schema").is_number_integer() ||
       doc.at("schema").get<int>() != kMarketSchemaVersion)) {
    throw InputError("unsupported market schema version");
  }
  const int m = ReadInt(Field(doc, "m"), "m");
  if (m > kMaxItems) throw InputError("m exceeds 64 items");
  const Json& buyers = Field(doc, "buyers");
  if (!buyers.is_array()) throw InputError("buyers: expected a list");
  std::vector<Valuation> valuations;
  for (const Json& b : buyers) valuations.push_back(ReadValuation(b, m));
  return Market(m, std::move(valuations));
}

Market LoadMarket(const std::string& path) { return ParseMarket(ReadFile(path)); }

std::string RenderMarket(const Market& market) {
  Json doc;
  doc["schema"] = kMarketSchemaVersion;
  doc["m"] = market.num_items();
  Json buyers = Json::array();
  for (const Valuation& v : market.buyers()) buyers.push_back(WriteValuation(v));
  doc["buyers"] = std::move(buyers);
  return doc.dump(2) + "\n";
}

OutcomeDocument ParseOutcome(std::string_view text, const Market& market) {
  const Json doc = ParseJson(text);
  const int m = market.num_items();
  const Json& alloc = Field(doc, "allocation");
  if (!alloc.is_array() || static_cast<int>(alloc.size()) != market.num_buyers()) {
    throw InputError("allocation: expected one index list per buyer");
  }
  std::vector<ItemSet> bundles;
  for (const Json& b : alloc) bundles.push_back(ReadItems(b, m, "allocation"));
  OutcomeDocument out{Allocation(m, std::move(bundles)), std::nullopt};
  if (doc.contains("unsold") &&
      ReadItems(doc.at("unsold"), m, "unsold") != out.allocation.unsold()) {
    throw InputError("unsold list disagrees with the allocation");
  }
  if (doc.contains("prices")) {
    std::vector<Rational> prices = ReadRationals(doc.at("prices"), "prices");
    if (static_cast<int>(prices.size()) != m) {
      throw InputError("prices: expected " + std::to_string(m) + " entries");
    }
    out.prices = PriceVector(std::move(prices));
  }
  return out;
}

OutcomeDocument LoadOutcome(const std::string& path, const Market& market) {
  return ParseOutcome(ReadFile(path), market);
}

std::string RenderOutcome(const Allocation& allocation,
                          const std::optional<PriceVector>& prices) {
  Json doc;
  Json bundles = Json::array();
  for (ItemSet b : allocation.bundles()) bundles.push_back(Indices(b));
  doc["allocation"] = std::move(bundles);
  doc["unsold"] = Indices(allocation.unsold());
  if (prices) doc["prices"] = Strs(prices->values());
  return doc.dump(2) + "\n";
}

}  // namespace walras
