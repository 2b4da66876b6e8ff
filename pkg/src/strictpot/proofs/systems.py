"""The eight systems as immutable schema inventories."""
from __future__ import annotations

from dataclasses import dataclass, field, replace

from . import schemas as S

CLASSICAL, INTUITIONISTIC = "classical", "intuitionistic"

# Pseudo-entries for the inventory listing; they are rules or the truth-table check, not schemas.
TAUT = "taut"
RULES = {
    "taut": "any classical propositional tautology (truth tables)",
    "MP": "from phi and phi -> psi infer psi",
    "Gen": "from phi infer forall x phi, x not free in any premise used",
    "NecD": "from a premise-free phi infer []D phi",
    "NecG": "from a premise-free phi infer []G phi",
}

INT_PROP = tuple(f"I{i}" for i in range(1, 11))
QUANT = ("UI", "EG", "Q-Dist", "Q-Exists", "Refl", "Leibniz")
MODAL_D = ("K-D", "T-D", "4-D", "Dual-D", "CBF-D")
MODAL_G = ("K-G", "T-G", "4-G", ".2-G", "Dual-G", "CBF-G", "Stb-G-atom")
INT_G = ("IK-box", "IK-dia", "IT-box", "IT-dia", "I4-box", "I4-dia", "IDia-or", "IDia-bot",
         "IDia-imp", "I.2", "CBF-G", "Stb-G-atom")
BRIDGE = ("Subsump", "Mixed.2")
MPL = ("UI-P", "EG-P", "Q-Dist-P", "Q-Exists-P", "P-Ext", "P-Choice")

STB_G = ("Stb-prec-G", "Stb-nprec-G")
STB_D = ("Stb-prec-D", "Stb-nprec-D")
INEXT_G = ("InExt-prec-G", "InExt-sub-G")
INEXT_D = ("InExt-prec-D", "InExt-sub-D")
DEC_OMNI = ("Dec-prec", "Omni-prec", "Omni-sub")
TPL = ("P-Comp",)
BPL = ("Empty", "P-Adj", "P-Union", "P-Sep")
I_BPL = ("Empty", "P-Adj", "P-Union", "Dec-P-Sep")

NAMES = ("I-FOL", "S4-FOL", "S4.2-I-FOL", "BM-FOL", "I-BPL", "S4-BPL", "S4.2-I-BPL", "BM-TPL")


@dataclass(frozen=True)
class SystemSpec:
    name: str
    base: str
    modalities: frozenset
    core: tuple  # schema ids, toggles not applied
    reverse_subsumption: bool = False
    id_eq: bool = True
    extra: tuple = field(default=())  # attached constructors, e.g. set-theoretic schemas

    @property
    def plural(self) -> bool:
        return self.name.endswith("PL")

    @property
    def schemas(self) -> tuple:
        ids = list(self.core)
        if self.base == INTUITIONISTIC and self.id_eq:
            ids.append("Dec-eq")
        if self.reverse_subsumption and {"D", "G"} <= self.modalities:
            ids.append("RS")
        ids += [e for e in self.extra if e not in ids]
        return tuple(ids)

    @property
    def rules(self) -> tuple:
        out = ["MP", "Gen"]
        if "D" in self.modalities:
            out.append("NecD")
        if "G" in self.modalities:
            out.append("NecG")
        return tuple(out)

    def allows(self, schema_id: str) -> bool:
        return schema_id in self.schemas

    def with_toggles(self, reverse_subsumption=None, id_eq=None) -> "SystemSpec":
        kw = {}
        if reverse_subsumption is not None:
            kw["reverse_subsumption"] = reverse_subsumption
        if id_eq is not None:
            kw["id_eq"] = id_eq
        return replace(self, **kw)

    def extend(self, *schema_ids: str, name: str | None = None) -> "SystemSpec":
        """A custom system with extra schemas attached (e.g. the set-theoretic constructors)."""
        for sid in schema_ids:
            S.get(sid)
        return replace(self, extra=self.extra + tuple(schema_ids), name=name or self.name)


def _fol(base, modalities):
    if base == CLASSICAL:
        ids = (TAUT,) + QUANT
    else:
        ids = INT_PROP + QUANT
    if base == CLASSICAL and "D" in modalities:
        ids += MODAL_D
    if base == CLASSICAL and "G" in modalities:
        ids += MODAL_G
    if base == INTUITIONISTIC and "G" in modalities:
        ids += INT_G
    if {"D", "G"} <= modalities:
        ids += BRIDGE
    return ids


def _build():
    out = {}
    fol = {
        "I-FOL": (INTUITIONISTIC, frozenset()),
        "S4-FOL": (CLASSICAL, frozenset("D")),
        "S4.2-I-FOL": (INTUITIONISTIC, frozenset("G")),
        "BM-FOL": (CLASSICAL, frozenset("DG")),
    }
    for name, (base, mods) in fol.items():
        out[name] = SystemSpec(name, base, mods, _fol(base, mods))
    plural = {
        "I-BPL": ("I-FOL", DEC_OMNI + I_BPL),
        "S4-BPL": ("S4-FOL", ("CBF-D-P",) + STB_D + INEXT_D + BPL),
        "S4.2-I-BPL": ("S4.2-I-FOL", ("CBF-G-P",) + STB_G + DEC_OMNI[:1] + INEXT_G + DEC_OMNI[1:] + I_BPL),
        "BM-TPL": ("BM-FOL", ("CBF-D-P", "CBF-G-P") + STB_G + STB_D + INEXT_G + INEXT_D + TPL),
    }
    for name, (parent, ids) in plural.items():
        p = out[parent]
        out[name] = SystemSpec(name, p.base, p.modalities, p.core + MPL + ids)
    return out


SYSTEMS = _build()


def system(name: str, reverse_subsumption: bool = False, id_eq: bool = True) -> SystemSpec:
    try:
        spec = SYSTEMS[name]
    except KeyError:
        raise ValueError(f"unknown system {name}; expected one of {', '.join(NAMES)}") from None
    return spec.with_toggles(reverse_subsumption, id_eq)


def axiom_inventory(spec: SystemSpec) -> list:
    """(id, display form) for every schema and rule of the system."""
    out = []
    for sid in spec.schemas:
        if sid == TAUT:
            out.append((TAUT, RULES[TAUT]))
        else:
            out.append((sid, S.get(sid).display))
    out += [(r, RULES[r]) for r in spec.rules]
    return out


def instantiate_schema(schema_id: str, args: dict):
    return S.get(schema_id).instantiate(args)
