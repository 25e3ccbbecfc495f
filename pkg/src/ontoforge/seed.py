"""Hand-curated wind power plant seed ontology.

The seed covers the plant itself, its meteorological instrumentation,
turbine anatomy, the wind phenomenon, and the monitoring/forecast side.
It is the starting point a curation session extends with mined terms.
"""

from __future__ import annotations

from .ontology import Ontology, PropertyDef

# label -> part labels (whole has part)
_HAS: dict[str, tuple[str, ...]] = {
    "Wind Power Plant": (
        "Meteorological Tower",
        "Wind Turbine",
        "Monitoring and Control System",
        "Forecast System",
    ),
    "Meteorological Tower": ("Data Logger", "Sensor"),
    "Wind": (
        "Wind Speed",
        "Wind Direction",
        "Vertical Wind Component",
        "Horizontal Wind Component",
        "Wind Shear",
        "Turbulence",
    ),
    "Horizontal Wind Component": ("U-component", "V-component"),
    "Wind Turbine": ("Rotor", "Nacelle", "Tower"),
    "Rotor": ("Blade", "Hub"),
    "Nacelle": ("Gearbox", "Generator"),
    "Monitoring and Control System": ("Control System", "DAQ System", "Analysis System"),
}

# child label -> parent label
_IS_A: dict[str, str] = {
    "Humidity Sensor": "Sensor",
    "Pressure Sensor": "Sensor",
    "Temperature Sensor": "Sensor",
    "Solar Radiation Sensor": "Sensor",
    "Wind Profiler": "Sensor",
    "Wind Vane": "Sensor",
    "Anemometer": "Sensor",
    "Cup Anemometer": "Anemometer",
    "Propeller Anemometer": "Anemometer",
    "Sonic Anemometer": "Anemometer",
    "H-axis Turbine": "Wind Turbine",
    "V-axis Turbine": "Wind Turbine",
}

# classes not introduced as a part or a subclass above
_STANDALONE: tuple[str, ...] = (
    "Meteorological Data",
    "Wind",
    "Wind Power",
    "Turbine Status",
    "Measured Power",
    "Power Quality",
    "Numerical Weather Prediction",
    "Physical Model",
    "Statistical Model",
    "Forecast Power",
)

_SYNONYMS: dict[str, tuple[str, ...]] = {
    "Wind Power Plant": ("WPP", "Wind Plant", "Wind Energy Plant", "Wind Farm"),
    "Wind Power": (
        "Wind Power Generation",
        "Energy",
        "Generation",
        "Wind Energy",
        "Wind Generation",
        "Wind Generated Power",
        "Electricity Production",
    ),
    "Wind Turbine": ("Turbine", "Wind Turbine Generator", "WTG", "Generator"),
    "Wind Vane": ("Weather Vane", "Weather Cock"),
}

# label -> (property name, value kind, synonyms)
_PROPERTIES: dict[str, tuple[tuple[str, str, tuple[str, ...]], ...]] = {
    "Wind Power Plant": (
        ("name", "text", ()),
        ("owner", "text", ()),
        ("location", "text", ()),
        ("license date", "date", ()),
        ("number of turbines", "quantity", ()),
        (
            "installed capacity",
            "quantity",
            (
                "rated capacity",
                "nominal capacity",
                "maximum effect",
                "power capacity",
                "nameplate capacity",
                "wind power capacity",
            ),
        ),
        ("capacity factor", "quantity", ("utilisation rate",)),
        ("voltage level", "quantity", ()),
    ),
    "Wind Turbine": (
        ("model", "text", ()),
        ("hub height", "quantity", ()),
        ("swept area", "quantity", ()),
        ("rated power", "quantity", ()),
        ("power curve", "text", ()),
        ("cut-in wind speed", "quantity", ()),
        ("cut-out wind speed", "quantity", ()),
        ("rotor diameter", "quantity", ()),
        ("number of blades", "quantity", ()),
    ),
    "Wind Speed": (
        ("speed", "quantity", ()),
        ("height", "quantity", ()),
        ("date", "date", ()),
        ("wind power plant", "concept_reference", ()),
    ),
}

# kind -> (source label, target label)
_FUNCTIONAL: tuple[tuple[str, str, str], ...] = (
    ("generates", "Wind Turbine", "Wind Power"),
    ("causes", "Wind", "Wind Power"),
    ("utilizes", "Wind Turbine", "Wind"),
    ("measures", "Anemometer", "Wind Speed"),
    ("controls", "Control System", "Wind Power Plant"),
)


def seed_labels() -> list[str]:
    """All class labels of the seed, in insertion order."""
    labels: list[str] = []
    for whole, parts in _HAS.items():
        for label in (whole, *parts):
            if label not in labels:
                labels.append(label)
    for child, parent in _IS_A.items():
        for label in (parent, child):
            if label not in labels:
                labels.append(label)
    for label in _STANDALONE:
        if label not in labels:
            labels.append(label)
    return labels


def seed_wind_ontology() -> Ontology:
    """Build the full seed: 47 classes, synonym sets, typed properties,
    part-whole and subclass taxonomy, five functional relations."""
    onto = Ontology(root="wind_power_plant")
    label_to_id: dict[str, str] = {}
    for label in seed_labels():
        label_to_id[label] = onto.add_concept(label, _SYNONYMS.get(label, ()))
    for whole, parts in _HAS.items():
        for part in parts:
            onto.add_relation("has", label_to_id[whole], label_to_id[part])
    for child, parent in _IS_A.items():
        onto.add_relation("is_a", label_to_id[child], label_to_id[parent])
    for kind, source, target in _FUNCTIONAL:
        onto.add_relation(kind, label_to_id[source], label_to_id[target])
    for label, props in _PROPERTIES.items():
        for name, value_kind, synonyms in props:
            onto.add_property(
                label_to_id[label],
                PropertyDef(name=name, value_kind=value_kind, synonyms=list(synonyms)),
            )
    return onto
