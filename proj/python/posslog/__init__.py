"""Possibilistic reasoning over classical and paraconsistent propositional logic."""

try:
    from . import _posslog as _core  # installed layout: extension inside the package
except ImportError:  # pragma: no cover - build-tree layout: extension on sys.path
    import _posslog as _core

Defaults = _core.Defaults
Formula = _core.Formula
FormulaParseError = _core.FormulaParseError
InconsistentDefaults = _core.InconsistentDefaults
KB = _core.KB
ResourceLimit = _core.ResourceLimit
atoms = _core.atoms
c1_entails = _core.c1_entails
c1_valid = _core.c1_valid
classical_entails = _core.classical_entails
classical_satisfiable = _core.classical_satisfiable
expand_circ = _core.expand_circ
find_countermodel = _core.find_countermodel
fuse = _core.fuse
hilbert_derive = _core.hilbert_derive
parse = _core.parse
render = _core.render
z_rank = _core.z_rank

__all__ = [
    "Defaults",
    "Formula",
    "FormulaParseError",
    "InconsistentDefaults",
    "KB",
    "ResourceLimit",
    "atoms",
    "c1_entails",
    "c1_valid",
    "classical_entails",
    "classical_satisfiable",
    "expand_circ",
    "find_countermodel",
    "fuse",
    "hilbert_derive",
    "parse",
    "render",
    "z_rank",
]
