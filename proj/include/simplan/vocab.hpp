#pragma once

#include <string>

#include "simplan/graph.hpp"

/// Fixed IRI vocabulary of the simulation capability model: the CSS
/// capability pattern, the VDI 3633 simulation terms, DIN EN 61360 property
/// descriptions, the SiS selection-criteria terms and the ParX parameter
/// interdependency alignment.
namespace simplan::vocab {

namespace rdf {
inline const std::string ns = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline const std::string type = ns + "type";
}  // namespace rdf

namespace rdfs {
inline const std::string ns = "http://www.w3.org/2000/01/rdf-schema#";
inline const std::string subClassOf = ns + "subClassOf";
}  // namespace rdfs

namespace owl {
inline const std::string ns = "http://www.w3.org/2002/07/owl#";
inline const std::string equivalentClass = ns + "equivalentClass";
}  // namespace owl

namespace css {
inline const std::string ns = "http://www.w3id.org/hsu-aut/css#";
inline const std::string Resource = ns + "Resource";
inline const std::string Process = ns + "Process";
inline const std::string Capability = ns + "Capability";
inline const std::string providesCapability = ns + "providesCapability";
inline const std::string requiresCapability = ns + "requiresCapability";
inline const std::string executes = ns + "executes";
}  // namespace css

namespace vdi3633 {
inline const std::string ns = "http://www.w3id.org/hsu-aut/VDI3633#";
inline const std::string Simulation = ns + "Simulation";
inline const std::string Data = ns + "Data";
inline const std::string hasProcessQuantity = ns + "hasProcessQuantity";
inline const std::string hasResultsData = ns + "hasResultsData";
}  // namespace vdi3633

// The DIN EN 61360 pattern uses underscore local names
// (has_Instance_Description etc.); `value` is lowercase.
namespace dinen61360 {
inline const std::string ns = "http://www.w3id.org/hsu-aut/DINEN61360#";
inline const std::string DataElement = ns + "Data_Element";
inline const std::string TypeDescription = ns + "Type_Description";
inline const std::string InstanceDescription = ns + "Instance_Description";
inline const std::string hasDataElement = ns + "has_Data_Element";
inline const std::string hasTypeDescription = ns + "has_Type_Description";
inline const std::string hasInstanceDescription = ns + "has_Instance_Description";
inline const std::string value = ns + "value";
inline const std::string unitOfMeasure = ns + "Unit_of_Measure";
}  // namespace dinen61360

namespace sis {
inline const std::string ns = "http://www.w3id.org/hsu-aut/SiS#";
inline const std::string QualityCriteria = ns + "QualityCriteria";
inline const std::string hasQualityCriteria = ns + "hasQualityCriteria";
inline const std::string Influence = ns + "Influence";
inline const std::string SensitivityIndex = ns + "SensitivityIndex";
inline const std::string InfluenceScore = ns + "InfluenceScore";
inline const std::string Interdependency = ns + "Interdependency";
inline const std::string hasInfluence = ns + "hasInfluence";
inline const std::string hasInfluenceOn = ns + "hasInfluenceOn";
inline const std::string isInfluenceFor = ns + "isInfluenceFor";
}  // namespace sis

namespace parx {
inline const std::string ns = "http://www.w3id.org/hsu-aut/ParX#";
inline const std::string Interdependency = ns + "Interdependency";
inline const std::string hasApplication = ns + "hasApplication";
}  // namespace parx

namespace om {
inline const std::string ns = "http://openmath.org/vocab/math#";
}  // namespace om

/// Prefix table covering every namespace above (labels as used throughout
/// the instance files: rdf, rdfs, owl, xsd, CSS, VDI3633, DINEN61360, SiS,
/// ParX, OM).
PrefixMap default_prefixes();

}  // namespace simplan::vocab
