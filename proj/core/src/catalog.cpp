/*
 * Copyright 2026 The satmetric Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <string>
#include <vector>

#include "satmetric/instrument.hpp"

namespace satmetric {

namespace {

struct Entry {
  const char* key;
  const char* prompt;
  Dimension dimension;
  KanoCategory kano;
};

using D = Dimension;
using K = KanoCategory;

// Driver rows grouped by dimension. "technicians-sincere-interest" appears in
// the reliability questionnaire but has no Kano row of its own; it is
// categorized like employee attitude.
constexpr Entry kEntries[] = {
    {"employees-appearances", "Employees appearances", D::tangibles, K::delighter},
    {"visual-aspect-of-equipment", "Visual aspect of Equipment", D::tangibles, K::delighter},
    {"difficulty-to-fill-out-the-repair-order", "Difficulty to fill out the repair order",
     D::tangibles, K::must_be},
    {"timely-manner-to-fill-order", "Timely manner to fill order", D::tangibles, K::must_be},
    {"cleanliness-level-of-waiting-area", "Cleanliness Level of waiting area", D::tangibles,
     K::must_be},
    {"entertainment-in-waiting-area", "entertainment in waiting area", D::tangibles,
     K::delighter},
    {"comfortable-waiting-area", "Comfortable waiting area", D::tangibles, K::performance},

    {"error-free-service", "Error free service", D::reliability, K::must_be},
    {"delivering-service-right-at-the-first-time",
     "delivering service the service right at the first time", D::reliability, K::must_be},
    {"accuracy-level-of-diagnosing-and-repair", "Accuracy level of diagnosing and repairer",
     D::reliability, K::performance},
    {"accuracy-level-of-delivering-the-service", "Accuracy level of delivering the service",
     D::reliability, K::must_be},
    {"level-of-customer-privacy", "The level of customer privacy", D::reliability, K::must_be},
    {"technicians-sincere-interest",
     "Technicians showed sincere interest while solving the problem", D::reliability,
     K::performance},

    {"speed-level-of-response", "Speed level of response", D::responsiveness, K::performance},
    {"accuracy-level-of-response", "Accuracy level of response", D::responsiveness, K::must_be},
    {"employees-availability-to-assist-the-customer",
     "Employees availability to assist the customer", D::responsiveness, K::must_be},
    {"employees-attitude-toward-the-customers", "Employees attitude toward the customers",
     D::responsiveness, K::performance},

    {"employees-courtesy", "employees Courtesy", D::assurance, K::performance},
    {"trusty-employees", "Trusty Employees", D::assurance, K::must_be},
    {"knowledge-employees", "Knowledge employees", D::assurance, K::performance},
    {"competence-employees", "Competence employees", D::assurance, K::performance},
    {"customer-information-are-secure", "customer information are secure", D::assurance,
     K::must_be},
    {"payment-information-are-secure", "Payment information are secure", D::assurance,
     K::must_be},

    {"convenient-operating-hours", "convenient operating hours", D::empathy, K::performance},
    {"convenient-service-location", "convenient service location", D::empathy, K::must_be},
    {"personal-attention", "personal attention", D::empathy, K::delighter},
    {"difficulty-of-the-language-used-in-communication",
     "The difficulty of the language that is used in communication", D::empathy, K::must_be},
    {"understanding-customer-needs", "understanding customer needs", D::empathy,
     K::performance},
};

std::vector<Item> make_catalog() {
  std::vector<Item> out;
  int id = 1;
  for (const auto& e : kEntries) {
    out.push_back(Item{id++, e.prompt, e.dimension, e.kano, std::string(e.key)});
  }
  return out;
}

}  // namespace

const std::vector<Item>& master_catalog() {
  static const std::vector<Item> catalog = make_catalog();
  return catalog;
}

std::span<const std::string> xyz_case_study_keys() {
  static const std::vector<std::string> keys = {
      "delivering-service-right-at-the-first-time",
      "accuracy-level-of-delivering-the-service",
      "employees-attitude-toward-the-customers",
      "speed-level-of-response",
      "employees-availability-to-assist-the-customer",
      "customer-information-are-secure",
      "trusty-employees",
      "employees-courtesy",
      "knowledge-employees",
      "convenient-operating-hours",
      "convenient-service-location",
      "personal-attention",
      "difficulty-of-the-language-used-in-communication",
      "understanding-customer-needs",
      "employees-appearances",
      "comfortable-waiting-area",
      "visual-aspect-of-equipment",
  };
  return keys;
}

}  // namespace satmetric
